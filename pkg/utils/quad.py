"""
Adaptive Gauss-Kronrod (G7/K15) quadrature on finite and semi-infinite
ranges, vectorised with numpy.

Every integrand is called with a 1-d float array of nodes and must return
an array of the same shape. The panel with the largest error estimate is
bisected until the summed estimate meets max(abs_tol, rel_tol*|I|).
"""
from dataclasses import dataclass, replace
import heapq
import logging
import math

import numpy as np

from config import ABS_TOL, DEFAULT_REL_TOL, MAX_DEPTH
from utils.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

# Kronrod abscissae on [0, 1]; odd positions are the 7-point Gauss nodes
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.0,
    0.129484966168869693270611432679082,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.concatenate([_WG[:-1], _WG[::-1]])

# Panels before giving up regardless of depth
_PANEL_LIMIT = 20000


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = ABS_TOL
    max_depth: int = MAX_DEPTH
    # e-folding length of the integrand tail, for semi-infinite ranges
    decay_scale: float = 1.0

    def __post_init__(self):
        if not self.rel_tol > 0 or not self.abs_tol > 0:
            raise DomainError("quadrature tolerances must be positive")
        if self.max_depth < 1:
            raise DomainError("max_depth must be at least 1")
        if not self.decay_scale > 0:
            raise DomainError("decay_scale must be positive")

    def with_decay(self, decay_scale):
        return replace(self, decay_scale=decay_scale)


DEFAULT_SPEC = QuadratureSpec()


def _evaluate(f, x):
    fx = np.asarray(f(x), dtype=float)
    if fx.shape != x.shape:
        fx = np.broadcast_to(fx, x.shape)
    if not np.all(np.isfinite(fx)):
        bad = x[~np.isfinite(fx)][0]
        raise DomainError(f"integrand is not finite at {bad!r}")
    return fx


def gauss_kronrod_panel(f, a, b):
    """Return (K15 estimate, error estimate) on [a, b]."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fx = _evaluate(f, center + half * NODES)
    resk = half * float(np.dot(KRONROD_WEIGHTS, fx))
    resg = half * float(np.dot(GAUSS_WEIGHTS, fx))
    mean = resk / (2.0 * half) if half else 0.0
    resasc = abs(half) * float(np.dot(KRONROD_WEIGHTS, np.abs(fx - mean)))
    err = abs(resk - resg)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    return resk, err


def integrate_finite(f, a, b, spec=DEFAULT_SPEC):
    """Integral of ``f`` over [a, b] with a < b (a == b gives 0)."""
    if a == b:
        return 0.0
    if not (math.isfinite(a) and math.isfinite(b)) or a > b:
        raise DomainError(f"invalid finite range [{a}, {b}]")

    value, err = gauss_kronrod_panel(f, a, b)
    # max-heap on panel error
    heap = [(-err, a, b, value, 0)]
    total, total_err = value, err
    panels = 1
    while total_err > max(spec.abs_tol, spec.rel_tol * abs(total)):
        neg_err, lo, hi, val, depth = heapq.heappop(heap)
        if depth >= spec.max_depth or panels >= _PANEL_LIMIT:
            raise ConvergenceError(
                f"quadrature did not converge: error {total_err:.3e} on [{a}, {b}]",
                where=(lo, hi),
            )
        mid = 0.5 * (lo + hi)
        left, left_err = gauss_kronrod_panel(f, lo, mid)
        right, right_err = gauss_kronrod_panel(f, mid, hi)
        heapq.heappush(heap, (-left_err, lo, mid, left, depth + 1))
        heapq.heappush(heap, (-right_err, mid, hi, right, depth + 1))
        panels += 1
        total += left + right - val
        total_err = max(0.0, total_err + left_err + right_err + neg_err)
    return math.fsum(item[3] for item in heap)


def _truncation_point(f, a, spec):
    """Upper limit beyond which the tail is below abs_tol / 10."""
    decay = spec.decay_scale
    probes = a + decay * np.array([0.0625, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0])
    magnitude = float(np.max(np.abs(_evaluate(f, probes))))
    if magnitude == 0.0:
        return a + 40.0 * decay
    upper = a + decay * max(1.0, math.log(10.0 * magnitude * decay / spec.abs_tol))
    # polynomial prefactors make the first guess short; walk out until the tail is small
    for _ in range(64):
        edge = _evaluate(f, np.array([upper, upper + decay]))
        if decay * float(np.max(np.abs(edge))) <= 0.1 * spec.abs_tol:
            return upper
        upper += decay * math.log(10.0)
    raise ConvergenceError("integrand does not decay on the configured scale", where=(a, upper))


def integrate_semi_infinite(f, a, spec=DEFAULT_SPEC):
    """Integral of ``f`` over [a, inf) for an exponentially decaying integrand."""
    if not math.isfinite(a):
        raise DomainError(f"lower limit must be finite, got {a}")
    upper = _truncation_point(f, a, spec)
    logger.debug("semi-infinite range [%g, inf) truncated at %g", a, upper)
    return integrate_finite(f, a, upper, spec)


def integrate_multiscale(f, scale=1.0, spec=DEFAULT_SPEC, breakpoints=()):
    """
    Integral of ``f`` over [0, inf) for integrands with structure of width
    ``scale`` at the origin (log endpoints, narrow Lorentzians).

    The range is split at scale*10**k below 1 and at ``breakpoints``; the
    first segment is integrated in u with s = u**2.
    """
    if not scale > 0:
        raise DomainError(f"scale must be positive, got {scale}")
    cuts = set(float(b) for b in breakpoints if 0.0 < b)
    point = min(scale, 1.0)
    while point < 1.0:
        cuts.add(point)
        point *= 10.0
    cuts.add(1.0)
    cuts = sorted(cuts)

    first = cuts[0]
    root = math.sqrt(first)
    pieces = [integrate_finite(lambda u: 2.0 * u * f(u * u), 0.0, root, spec)]
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        pieces.append(integrate_finite(f, lo, hi, spec))
    pieces.append(integrate_semi_infinite(f, cuts[-1], spec))
    return math.fsum(pieces)


def integrate_sqrt_singularity(g, x_abs, spec=DEFAULT_SPEC, scale=1.0):
    """
    Integral over t in [|x|, inf) of an integrand with a 1/sqrt(t**2 - x**2)
    endpoint, supplied already substituted: ``g`` is a function of s with
    t = sqrt(x**2 + s**2), so the result is the integral of g over [0, inf).
    s = |x| marks the change from quadratic to linear growth of t.
    """
    if x_abs < 0:
        raise DomainError(f"x_abs must be non-negative, got {x_abs}")
    breakpoints = (x_abs,) if x_abs > 1.0 else ()
    return integrate_multiscale(g, scale, spec, breakpoints)
