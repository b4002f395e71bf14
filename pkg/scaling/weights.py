"""
Mode weights v_mu(x) entering the amplitudes of the residual free energy.

The contour route integrates log(1 + s**2/Gamma**2) against the counting
kernel in the variable s = sqrt(t**2 - x**2); the mode-independent part of
the integral is applied analytically through
(1/pi) int R(t) dt = (sign(x) - 1) / 2.
"""
from dataclasses import dataclass
from functools import lru_cache
import logging
import math

import numpy as np
from scipy import special

from scaling.roots import crossover_scale, find_zero, find_zeros, parity
from utils.errors import ConvergenceError, DomainError
from utils.quad import DEFAULT_SPEC, integrate_sqrt_singularity
from utils.specialfn import beta_continued, euler_beta

logger = logging.getLogger(__name__)

METHOD_CONTOUR = "contour"
METHOD_CLOSED = "closed_form_x0"
METHOD_SPECIAL = "special_x_neg1"
METHOD_ORACLE = "oracle_product"


@dataclass(frozen=True)
class WeightRecord:
    mu: int
    v: float
    method: str


def _sign(x):
    return (x > 0) - (x < 0)


def _kernel_parts(s, t, x):
    """2 e^{-t} (x - s**2) and the bracket (t + x) + (t - x) e^{-2t}."""
    decay = np.exp(-t)
    if x < 0:
        t_plus_x = s * s / (t - x)
    else:
        t_plus_x = t + x
    bracket = t_plus_x + (t - x) * decay * decay
    return 2.0 * decay * (x - s * s), bracket


def counting_integrand(t, x):
    """R(t) = (x + x**2 - t**2) / (sqrt(t**2 - x**2) (t cosh t + x sinh t)) for t > |x|."""
    t = np.asarray(t, dtype=float)
    if np.any(t <= abs(x)):
        raise DomainError(f"counting integrand needs t > |x| = {abs(x)}")
    s = np.sqrt((t - abs(x)) * (t + abs(x)))
    numerator, bracket = _kernel_parts(s, t, x)
    value = numerator / (s * bracket)
    return float(value) if value.ndim == 0 else value


def substituted_kernel(s, x):
    """R(t) dt/ds at t = sqrt(x**2 + s**2)."""
    s = np.asarray(s, dtype=float)
    t = np.sqrt(x * x + s * s)
    numerator, bracket = _kernel_parts(s, t, x)
    return numerator / (t * bracket)


def counting_integral(x, spec=DEFAULT_SPEC):
    """(1/pi) times the integral of R over (|x|, inf); equals (sign(x) - 1)/2."""
    value = integrate_sqrt_singularity(
        lambda s: substituted_kernel(s, x), abs(x), spec, scale=crossover_scale(x)
    )
    return value / math.pi


def _log_moment(x, gamma, spec):
    """(1/pi) int_0^inf log1p(s**2/Gamma**2) K(s) ds."""
    inverse_sq = 1.0 / (gamma * gamma)

    def integrand(s):
        return np.log1p(s * s * inverse_sq) * substituted_kernel(s, x)

    scale = min(crossover_scale(x), gamma)
    value = integrate_sqrt_singularity(integrand, abs(x), spec, scale=scale)
    return value / math.pi


@lru_cache(maxsize=65536)
def weight_v(mu, x, spec=DEFAULT_SPEC):
    """v_mu(x) through the contour integral; (mu, x) = (1, -1) is a separate route."""
    if mu == 1 and x == -1:
        raise DomainError("v_1(-1) is evaluated by weight_v_special_xneg1")
    zero = find_zero(mu, x)
    sigma = zero.sigma
    gamma = zero.gamma
    sigma_c = sigma * 0.5 * (_sign(x) - 1)

    if zero.phi_sq > 0:
        phi_factor = zero.phi_sq ** (-sigma_c)
    else:
        # only mu = 1 with x < -1, where -sigma*c = 1 and the phase is a sign
        phi_factor = zero.phi_sq
    prefactor = (
        4.0 * (gamma - x) * gamma ** (2.0 + 2.0 * sigma_c) * phi_factor
        / (x * (x + 1.0) + zero.phi_sq)
    )
    exponent = sigma * _log_moment(x, gamma, spec)
    value = prefactor * math.exp(exponent)
    logger.debug("weight mu=%d x=%r: v=%r", mu, x, value)
    return value


@lru_cache(maxsize=None)
def weight_v_special_xneg1(spec=DEFAULT_SPEC):
    """v_1(-1) = 12 exp[(1/pi) int log(t**2) R(t) dt] at x = -1."""
    return 12.0 * math.exp(_log_moment(-1.0, 1.0, spec))


def weight_v_closed_x0(mu):
    """v_mu(0) = 4 Phi**(1+sigma) [B(mu/2, 1/2) / (sqrt(2) pi)]**(2 sigma)."""
    sigma = parity(mu)
    phi = (mu - 0.5) * math.pi
    ratio = euler_beta(mu / 2.0, 0.5) / (math.sqrt(2.0) * math.pi)
    return 4.0 * phi ** (1 + sigma) * ratio ** (2 * sigma)


def weight(mu, x, spec=DEFAULT_SPEC):
    """Best available route for v_mu(x)."""
    if x == 0:
        return WeightRecord(mu, weight_v_closed_x0(mu), METHOD_CLOSED)
    if mu == 1 and x == -1:
        return WeightRecord(mu, weight_v_special_xneg1(spec), METHOD_SPECIAL)
    return WeightRecord(mu, weight_v(mu, x, spec), METHOD_CONTOUR)


def signed_root_weight(mu):
    """w_mu = sqrt(v_mu(0)) in its sign-carrying beta-function form."""
    sigma = parity(mu)
    return (
        math.sqrt(2.0) * sigma * (mu - 0.5) ** ((1 + sigma) // 2)
        * beta_continued(0.5 * (mu + (1 - sigma) // 2), 0.5 * sigma)
    )


def generating_coefficients(n_terms):
    """Taylor coefficients of (pi/sqrt 2) (1 - eta)**(-3/2) (1 + eta)**(1/2)."""
    k = np.arange(n_terms, dtype=float)
    growing = special.binom(-1.5, k) * (-1.0) ** k
    shrinking = special.binom(0.5, k)
    return math.pi / math.sqrt(2.0) * np.convolve(growing, shrinking)[:n_terms]


def weight_w_generating_check(eta, n_terms):
    """
    Largest discrepancy between w_mu and the generating function, both
    coefficient-wise and for the truncated sums at ``eta``.
    """
    if not abs(eta) < 1:
        raise DomainError(f"generating function needs |eta| < 1, got {eta}")
    expected = generating_coefficients(n_terms)
    actual = np.array([signed_root_weight(mu) for mu in range(1, n_terms + 1)])
    powers = eta ** np.arange(n_terms, dtype=float)
    coefficient_error = float(np.max(np.abs(expected - actual)))
    sum_error = abs(float(np.dot(expected - actual, powers)))
    return max(coefficient_error, sum_error)


def _richardson_tail(partial, n):
    """Average neighbouring partial sums, then remove the n**-3 term."""
    m = n // 2
    if m % 2:
        m -= 1
    averaged_n = 0.5 * (partial[n - 1] + partial[n - 2])
    averaged_m = 0.5 * (partial[m - 1] + partial[m - 2])
    return (n ** 3 * averaged_n - m ** 3 * averaged_m) / (n ** 3 - m ** 3), averaged_n


def oracle_product_p(mu, x, n_zeros):
    """p_mu = Phi_mu**2 prod_{nu != mu} (1 - Phi_mu**2/Phi_nu**2)**(-sigma_mu sigma_nu)."""
    if n_zeros < max(8, 4 * mu) or n_zeros % 2:
        raise DomainError(f"n_zeros must be even and at least max(8, 4 mu), got {n_zeros}")
    if x == -1:
        raise DomainError("the product is singular at x = -1 where Phi_1 = 0")
    zeros = find_zeros(n_zeros, x)
    target = zeros[mu - 1]
    phi_sq = np.array([z.phi_sq for z in zeros])
    sigmas = np.array([z.sigma for z in zeros], dtype=float)

    factors = 1.0 - target.phi_sq / phi_sq
    factors[mu - 1] = 1.0
    exponents = -target.sigma * sigmas
    exponents[mu - 1] = 0.0
    negative = int(np.sum((factors < 0) & (exponents != 0)))
    logs = exponents * np.log(np.abs(factors))
    partial = np.cumsum(logs)

    extrapolated, plain = _richardson_tail(partial, n_zeros)
    if abs(extrapolated - plain) > 1e-3:
        raise ConvergenceError(
            f"product for mu={mu} converges too slowly with {n_zeros} zeros", where=x
        )
    sign = (-1) ** negative * (1 if target.phi_sq > 0 else -1)
    return sign * abs(target.phi_sq) * math.exp(extrapolated)


def oracle_weight(mu, x, n_zeros=400):
    """v_mu from the product form; it carries a factor C**sigma_mu common to all mu."""
    zero = find_zero(mu, x)
    p = oracle_product_p(mu, x, n_zeros)
    sigma = zero.sigma
    v = p * sigma * (zero.gamma - sigma * x) ** sigma
    return WeightRecord(mu, v, METHOD_ORACLE)
