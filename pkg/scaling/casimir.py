"""
Casimir potential and force scaling functions of the open rectangle.

    Theta(x, rho)    = Theta^(oo)(x) + Theta_sc(x)/rho + Psi(x, rho)     rho >= 1
    vartheta(x, rho) = -Theta^(oo)(x) + psi(x, rho)                      rho >= 1

Aspect ratios below one are mapped through Theta(x, rho) = rho**-2 Theta(x rho, 1/rho).
The surface-corner part Theta_sc needs the volume potential at rho = 1,
which is assembled from the two integrals I1 and I2.
"""
from dataclasses import dataclass
from functools import lru_cache
import logging
import math

import numpy as np
from scipy.optimize import brentq

from config import DEFAULT_ORDER, MIN_RHO, PSI_CACHE_ORDER, XI_CUTOFF
from scaling.roots import ScalingPoint, crossover_scale
from scaling.sigma import Psi, psi_strip, sigma_series
from scaling.strip import theta_oo, vartheta_oo
from scaling.thermo_constants import CORNER_JUMP, CORNER_LOG_COEFFICIENT
from utils.errors import ConvergenceError, DomainError
from utils.quad import DEFAULT_SPEC, QuadratureSpec, integrate_finite, integrate_sqrt_singularity
from utils.specialfn import dilog, eisenstein_E2, log_dedekind_eta

logger = logging.getLogger(__name__)

Z_CRITICAL = math.sqrt(2.0) - 1.0

# psi(xi, 1) enters I2 only through an integral; 1e-10 is ample
_I2_REL_TOL = 1e-10
_I2_ABS_TOL = 1e-12

# Theta_sc(x -> -inf): the ordered phase enters through the low-temperature limit of I2
LOW_TEMPERATURE_LIMIT = -math.log(2.0)


@dataclass(frozen=True)
class CasimirSample:
    point: ScalingPoint
    theta_total: float
    vartheta_total: float
    theta_sc: float
    psi_val: float = None
    Psi_val: float = None


def _sign(x):
    return (x > 0) - (x < 0)


def _require_nonzero(x, what):
    if x == 0:
        raise DomainError(
            f"{what} diverges logarithmically at x = 0; use casimir_amplitude at criticality"
        )


def integral_I1(x_vol, spec=DEFAULT_SPEC):
    """-(1/2 pi) int_0^inf Li2(-r e^{-2 Omega}) / Omega ds, Omega = sqrt(x**2 + s**2)."""
    _require_nonzero(x_vol, "I1")
    x = x_vol

    def integrand(s):
        omega = np.sqrt(x * x + s * s)
        if x > 0:
            ratio = s * s / (omega + x) ** 2
        else:
            ratio = (omega - x) ** 2 / (s * s)
        return dilog(-ratio * np.exp(-2.0 * omega)) / omega

    value = integrate_sqrt_singularity(
        integrand, abs(x), spec.with_decay(0.5), scale=crossover_scale(x)
    )
    return -value / (2.0 * math.pi)


@lru_cache(maxsize=4096)
def _psi_rho1(xi, N, spec):
    return psi_strip(xi, 1.0, N, spec)


def psi_cache_info():
    return _psi_rho1.cache_info()


def _i2_spec(spec):
    return QuadratureSpec(
        rel_tol=max(spec.rel_tol, _I2_REL_TOL), abs_tol=max(spec.abs_tol, _I2_ABS_TOL)
    )


def integral_I2(x_vol, N=PSI_CACHE_ORDER, spec=DEFAULT_SPEC):
    """
    psi0 log(1 + x**-2) + 2 int_x^{sign(x) inf} [psi(xi,1) - psi0/(1 + xi**2)] dxi/xi,
    psi0 = psi(0, 1); beyond |xi| = cutoff only the subtracted term survives.
    For x < 0 the low-temperature limit adds -log 2.
    """
    _require_nonzero(x_vol, "I2")
    x = x_vol
    psi0 = _psi_rho1(0.0, N, spec)
    cutoff = max(XI_CUTOFF, abs(x) + 10.0)
    inner_spec = _i2_spec(spec)

    def integrand(xi):
        values = np.array([_psi_rho1(float(v), N, spec) for v in xi])
        return (values - psi0 / (1.0 + xi * xi)) / xi

    if x > 0:
        finite = integrate_finite(integrand, x, cutoff, inner_spec)
        limit = 0.0
    else:
        finite = -integrate_finite(integrand, -cutoff, x, inner_spec)
        limit = LOW_TEMPERATURE_LIMIT
    tail = -0.5 * psi0 * math.log1p(cutoff ** -2)
    return psi0 * math.log1p(x ** -2) + 2.0 * (finite + tail) + limit


def theta_volume_rho1(x_vol, N=PSI_CACHE_ORDER, spec=DEFAULT_SPEC):
    """Theta_o(x, 1) = I1 + I2."""
    return integral_I1(x_vol, spec) + integral_I2(x_vol, N, spec)


@lru_cache(maxsize=1024)
def theta_sc(x, N=PSI_CACHE_ORDER, spec=DEFAULT_SPEC):
    """Theta_sc(x) = -Theta^(oo)(x) + log Sigma(x, 1) + Theta_o(x, 1)."""
    _require_nonzero(x, "Theta_sc")
    logger.info("evaluating surface-corner part at x=%r", x)
    log_sigma = math.log(sigma_series(x, 1.0, N, spec).value)
    return -theta_oo(x, spec) + log_sigma + theta_volume_rho1(x, N, spec)


def theta_sc_singular_part(x):
    """-(1/8) log|x| - (3/4) log 2 sign(x), the small-x behaviour of Theta_sc."""
    _require_nonzero(x, "Theta_sc")
    return -CORNER_LOG_COEFFICIENT * math.log(abs(x)) - CORNER_JUMP * _sign(x)


def theta_total(x, rho, N=DEFAULT_ORDER, spec=DEFAULT_SPEC):
    _require_nonzero(x, "Theta")
    ScalingPoint(x, rho)
    if rho < 1:
        return theta_total(x * rho, 1.0 / rho, N, spec) / (rho * rho)
    return theta_oo(x, spec) + theta_sc(x, spec=spec) / rho + Psi(x, rho, N, spec)


def x_dPsi(x, rho, N=DEFAULT_ORDER, spec=DEFAULT_SPEC):
    """x dPsi/dx by central differences with one Richardson step."""
    if x == 0:
        return 0.0
    h = max(1e-4, 1e-4 * abs(x))

    def central(step):
        return (Psi(x + step, rho, N, spec) - Psi(x - step, rho, N, spec)) / (2.0 * step)

    coarse, fine = central(h), central(0.5 * h)
    derivative = (4.0 * fine - coarse) / 3.0
    if not math.isfinite(derivative):
        raise ConvergenceError("finite difference of Psi is not finite", where=(x, rho))
    return x * derivative


def x_theta_sc_prime(x, N=DEFAULT_ORDER, spec=DEFAULT_SPEC):
    """x Theta_sc'(x) = Theta^(oo) + vartheta^(oo) - 2 psi(x,1) - x dPsi(x,1)/dx; -1/8 at x = 0."""
    return (
        theta_oo(x, spec) + vartheta_oo(x, spec)
        - 2.0 * psi_strip(x, 1.0, N, spec) - x_dPsi(x, 1.0, N, spec)
    )


def vartheta_wide(x, rho, N=DEFAULT_ORDER, spec=DEFAULT_SPEC):
    """Force for rho >= 1."""
    return -theta_oo(x, spec) + psi_strip(x, rho, N, spec)


def vartheta_narrow(x, rho, N=DEFAULT_ORDER, spec=DEFAULT_SPEC):
    """Force for rho <= 1, written through x' = x rho and r = 1/rho."""
    ScalingPoint(x, rho)
    r = 1.0 / rho
    x_prime = x * rho
    strip_part = (
        vartheta_oo(x_prime, spec) - x_dPsi(x_prime, r, N, spec) - psi_strip(x_prime, r, N, spec)
    )
    return r * r * strip_part - r * x_theta_sc_prime(x_prime, N, spec)


def vartheta_total(x, rho, N=DEFAULT_ORDER, spec=DEFAULT_SPEC):
    ScalingPoint(x, rho)
    if rho >= 1:
        return vartheta_wide(x, rho, N, spec)
    return vartheta_narrow(x, rho, N, spec)


def sample(x, rho, N=DEFAULT_ORDER, spec=DEFAULT_SPEC):
    """All observables at one scaling point."""
    point = ScalingPoint(x, rho)
    psi_val = Psi_val = None
    if rho >= MIN_RHO:
        psi_val = psi_strip(x, rho, N, spec)
        Psi_val = Psi(x, rho, N, spec)
    return CasimirSample(
        point=point,
        theta_total=theta_total(x, rho, N, spec),
        vartheta_total=vartheta_total(x, rho, N, spec),
        theta_sc=theta_sc(x, spec=spec),
        psi_val=psi_val,
        Psi_val=Psi_val,
    )


def casimir_amplitude(rho, N=DEFAULT_ORDER):
    """Delta(rho) = rho Theta^(oo)(0) + rho Psi(0, rho) = (1/4) log eta(i rho)."""
    ScalingPoint(0.0, rho)
    closed = 0.25 * log_dedekind_eta(rho)
    if rho >= MIN_RHO:
        route = rho * theta_oo(0.0) + rho * Psi(0.0, rho, N)
        if abs(route - closed) > 1e-10:
            raise ConvergenceError(
                f"Casimir amplitude routes disagree by {abs(route - closed):.3e}", where=rho
            )
    return closed


def find_rho0(tol=1e-14):
    """Aspect ratio where the critical force changes sign: E_2(i rho0) = 0."""
    if tol < 1e-14:
        raise DomainError(f"tol must be >= 1e-14, got {tol}")
    lo, hi = 0.4, 0.7
    if eisenstein_E2(lo) * eisenstein_E2(hi) > 0:
        raise ConvergenceError("E_2 does not change sign on the bracket", where=(lo, hi))
    return brentq(eisenstein_E2, lo, hi, xtol=tol, maxiter=200)


def lattice_to_scaling(z, L, M):
    """x = 2M(1 - z/z_c), rho = L/M."""
    if not 0 < z < 1:
        raise DomainError(f"coupling z must lie in (0, 1), got {z}")
    if L < 1 or M < 1:
        raise DomainError(f"lattice sizes must be >= 1, got L={L}, M={M}")
    return ScalingPoint(x=2.0 * M * (1.0 - z / Z_CRITICAL), rho=L / M)
