"""
Casimir amplitude Theta^(oo)(x) and force amplitude vartheta^(oo)(x) of the
infinite strip with open boundaries.

With w = sqrt(omega**2 + x**2) and r = (w - x)/(w + x), evaluated as
omega**2/(w + x)**2 for x >= 0 and (w - x)**2/omega**2 for x < 0,

    Theta^(oo)    = -(1/2 pi) int_0^inf log(1 + r e^{-2w}) d omega
    vartheta^(oo) = -(1/pi)   int_0^inf w r e^{-2w} / (1 + r e^{-2w}) d omega
"""
import logging
import math

import numpy as np

from scaling.roots import crossover_scale
from utils.quad import DEFAULT_SPEC, integrate_multiscale

logger = logging.getLogger(__name__)

# e^{-2w} tail
_DECAY = 0.5


def _reflection_terms(omega, x):
    """(w, r e^{-2w}, e^{-2w}, 1/r)."""
    omega = np.asarray(omega, dtype=float)
    w = np.sqrt(omega * omega + x * x)
    if x >= 0:
        ratio = omega * omega / (w + x) ** 2
        inverse = (w + x) ** 2 / (omega * omega)
    else:
        ratio = (w - x) ** 2 / (omega * omega)
        inverse = omega * omega / (w - x) ** 2
    decay = np.exp(-2.0 * w)
    return w, ratio * decay, decay, inverse


def _integrate(integrand, x, spec):
    logger.debug("strip integral at x=%r", x)
    return integrate_multiscale(integrand, crossover_scale(x), spec.with_decay(_DECAY))


def theta_oo(x, spec=DEFAULT_SPEC):
    def integrand(omega):
        _, weight, _, _ = _reflection_terms(omega, x)
        return np.log1p(weight)

    return -_integrate(integrand, x, spec) / (2.0 * math.pi)


def theta_oo_derivative(x, spec=DEFAULT_SPEC):
    """d Theta^(oo)/dx from the differentiated integrand, using d(r e^{-2w})/dx = -2(1+x) r e^{-2w}/w."""
    def integrand(omega):
        w, _, decay, inverse = _reflection_terms(omega, x)
        # r e^{-2w} / (1 + r e^{-2w}) without forming r
        fraction = decay / (decay + inverse)
        return fraction / w

    return (1.0 + x) * _integrate(integrand, x, spec) / math.pi


def vartheta_oo(x, spec=DEFAULT_SPEC):
    """Equals Theta^(oo)(x) - x Theta^(oo)'(x)."""
    def integrand(omega):
        w, _, decay, inverse = _reflection_terms(omega, x)
        return w * decay / (decay + inverse)

    return -_integrate(integrand, x, spec) / math.pi
