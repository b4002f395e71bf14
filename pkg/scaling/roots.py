"""
Zeros of the characteristic function P(Phi) = cos(Phi) + (x/Phi) sin(Phi)
that quantises the transverse modes of a strip with open boundaries.

Zeros are reported through Phi**2 so the single imaginary zero Phi_1 = i*y
that appears for x < -1 is an ordinary negative number.
"""
from dataclasses import dataclass, replace
from functools import lru_cache
import logging
import math

import numpy as np
from scipy.optimize import brentq

from config import ROOT_MAX_ITER, ROOT_TOL
from utils.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)


def parity(mu):
    """sigma_mu = (-1)**(mu + 1)."""
    if mu < 1:
        raise DomainError(f"mode index must be >= 1, got {mu}")
    return 1 if mu % 2 else -1


@dataclass(frozen=True)
class ScalingPoint:
    x: float
    rho: float

    def __post_init__(self):
        if not math.isfinite(self.x):
            raise DomainError(f"x must be finite, got {self.x}")
        if not (math.isfinite(self.rho) and self.rho > 0):
            raise DomainError(f"rho must be positive and finite, got {self.rho}")

    @property
    def x_volume(self):
        return self.x * math.sqrt(self.rho)

    @property
    def x_perp(self):
        return self.x * self.rho


@dataclass(frozen=True)
class ZeroRecord:
    mu: int
    sigma: int
    phi_sq: float
    gamma: float

    @property
    def is_imaginary(self):
        return self.phi_sq < 0

    @property
    def phi(self):
        """|Phi|; the zero itself is i*phi when is_imaginary."""
        return math.sqrt(abs(self.phi_sq))


def _sinc(phi):
    return float(np.sinc(phi / math.pi))


def _tanhc(y):
    return math.tanh(y) / y if y else 1.0


def _real_residual(phi, x):
    return math.cos(phi) + x * _sinc(phi)


def _imaginary_residual(y, x):
    # P(iy) / cosh(y), bounded for large y
    return 1.0 + x * _tanhc(y)


# log(DBL_MAX)
_LOG_MAX = math.log(np.finfo(float).max)


def eval_char_poly(phi_sq, x):
    """P(Phi) for Phi = sqrt(phi_sq); for phi_sq < 0 this is cosh(y) + x sinh(y)/y."""
    if phi_sq >= 0:
        phi = math.sqrt(phi_sq)
        return math.cos(phi) + x * _sinc(phi)
    y = math.sqrt(-phi_sq)
    scaled = _imaginary_residual(y, x)
    if y < 700.0 or scaled == 0.0:
        return math.cosh(y) * scaled
    # log cosh(y) without overflow
    log_size = y - math.log(2.0) + math.log1p(math.exp(-2.0 * y)) + math.log(abs(scaled))
    if log_size > _LOG_MAX:
        return math.copysign(math.inf, scaled)
    return math.copysign(math.exp(log_size), scaled)


def eval_char_poly_scaled(phi_sq, x):
    """P(Phi), divided by cosh(y) on the imaginary branch Phi = iy."""
    if phi_sq >= 0:
        return eval_char_poly(phi_sq, x)
    return _imaginary_residual(math.sqrt(-phi_sq), x)


def _solve(func, lo, hi, x, tol):
    try:
        root, result = brentq(
            func, lo, hi, args=(x,), xtol=tol, rtol=4.0 * np.finfo(float).eps,
            maxiter=ROOT_MAX_ITER, full_output=True, disp=False,
        )
    except ValueError as e:
        raise ConvergenceError(f"zero not bracketed: {e}", where=(lo, hi)) from e
    if not result.converged:
        raise ConvergenceError(
            f"zero search stopped after {result.iterations} iterations", where=(lo, hi)
        )
    return root


def gamma_of(zero, x):
    """Gamma = sqrt(x**2 + Phi**2), non-negative."""
    radicand = x * x + zero.phi_sq
    if radicand < -1e-12 * max(1.0, x * x):
        raise DomainError(f"x**2 + Phi**2 < 0 for mu={zero.mu} at x={x}")
    if zero.phi_sq < 0:
        # x**2 - y**2 cancels; on the zero |x| - y = 2y e^{-2y} / (1 - e^{-2y})
        y = math.sqrt(-zero.phi_sq)
        return math.sqrt((abs(x) + y) * 2.0 * y / -math.expm1(-2.0 * y)) * math.exp(-y)
    return math.sqrt(max(radicand, 0.0))


@lru_cache(maxsize=65536)
def find_zero(mu, x, tol=ROOT_TOL):
    """The mu-th zero of P at scaling variable x."""
    sigma = parity(mu)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x}")

    if x == 0:
        phi_sq = ((mu - 0.5) * math.pi) ** 2
    elif mu == 1 and x == -1:
        phi_sq = 0.0
    elif mu == 1 and x < -1:
        # y coth(y) = |x| has its root inside (0, |x|]
        y = _solve(_imaginary_residual, 0.0, -x, x, tol)
        phi_sq = -y * y
    elif x > 0:
        phi = _solve(_real_residual, (mu - 0.5) * math.pi, mu * math.pi, x, tol)
        phi_sq = phi * phi
    else:
        phi = _solve(_real_residual, (mu - 1) * math.pi, (mu - 0.5) * math.pi, x, tol)
        phi_sq = phi * phi

    zero = ZeroRecord(mu=mu, sigma=sigma, phi_sq=phi_sq, gamma=0.0)
    zero = replace(zero, gamma=gamma_of(zero, x))
    logger.debug("zero mu=%d x=%r: phi_sq=%r", mu, x, phi_sq)
    return zero


def find_zeros(count, x, tol=ROOT_TOL):
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    return [find_zero(mu, x, tol) for mu in range(1, count + 1)]


def crossover_scale(x):
    """Width of the structure that Gamma_1 imprints on integrands at the origin."""
    if x < -1:
        return min(1.0, find_zero(1, x).gamma)
    return 1.0


def _series_mul(a, b, degree):
    return np.convolve(a, b)[: degree + 1]


def _series_reciprocal(a, degree):
    out = np.zeros(degree + 1)
    out[0] = 1.0 / a[0]
    for k in range(1, degree + 1):
        out[k] = -np.dot(a[1 : k + 1], out[k - 1 :: -1]) / a[0]
    return out


def _series_arctan(z, degree):
    # z has no constant term
    out = np.zeros(degree + 1)
    z_sq = _series_mul(z, z, degree)
    power = z.copy()
    k = 0
    while 2 * k + 1 <= degree:
        out += (-1) ** k / (2 * k + 1) * power
        power = _series_mul(power, z_sq, degree)
        k += 1
    return out


def zero_series_coefficients(x, order):
    """
    Coefficients c_j of Phi**2 = Phi_0**2 + sum_j c_j Phi_0**(-j) after
    ``order`` steps of Delta <- arctan(x u / (1 + u Delta)), u = 1/Phi_0.
    """
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    degree = 2 * order + 1
    delta = np.zeros(degree + 1)
    for _ in range(order):
        denominator = np.zeros(degree + 1)
        denominator[0] = 1.0
        denominator[1:] = delta[:-1]
        reciprocal = _series_reciprocal(denominator, degree)
        z = np.zeros(degree + 1)
        z[1:] = x * reciprocal[:-1]
        delta = _series_arctan(z, degree)
    delta_sq = _series_mul(delta, delta, degree)
    return 2.0 * delta[1 : 2 * order] + delta_sq[: 2 * order - 1]


def zero_series_approx(mu, x, order):
    """Large-mu expansion of Phi_mu**2 in powers of 1/Phi_0, Phi_0 = (mu - 1/2) pi."""
    parity(mu)
    phi0 = (mu - 0.5) * math.pi
    coefficients = zero_series_coefficients(x, order)
    powers = phi0 ** -np.arange(coefficients.size, dtype=float)
    return phi0 * phi0 + math.fsum(coefficients * powers)
