"""
Residual partition function Sigma(x, rho) of the open rectangle.

Sigma = 1 + sum_n sum_{s in S_n} a_s exp(-rho Gamma_s), where S_n collects the
sets of distinct mode indices with as many odd as even members and
sum_{mu in s} (mu - 1/2) = 2n. The same quantity is a Fredholm determinant
of the residual matrix restricted to the first ``modes`` odd and even zeros.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import logging
import math

import numpy as np

from config import MIN_RHO
from scaling.roots import find_zero, parity
from scaling.weights import signed_root_weight, weight
from utils.errors import ConvergenceError, DomainError
from utils.quad import DEFAULT_SPEC
from utils.specialfn import log_q_pochhammer

logger = logging.getLogger(__name__)

ROUTE_SERIES = "series"
ROUTE_DETERMINANT = "determinant"


@dataclass(frozen=True)
class SubsetTerm:
    s: tuple
    order: int
    a: float
    gamma_sum: float


@dataclass(frozen=True)
class SigmaResult:
    value: float
    order: int
    route: str
    error_bound: float


def _check_rho(rho):
    if not (math.isfinite(rho) and rho > 0):
        raise DomainError(f"rho must be positive, got {rho}")
    if rho < MIN_RHO:
        raise DomainError(
            f"rho={rho} is below {MIN_RHO}; evaluate at 1/rho through the exchange symmetry"
        )


def is_balanced(s):
    return len(set(s)) == len(s) and sum(parity(mu) for mu in s) == 0


def subset_order(s):
    """n with sum (mu - 1/2) = 2n."""
    weight_sum = sum(2 * mu - 1 for mu in s)
    if weight_sum % 4:
        raise DomainError(f"{s} has no integer order")
    return weight_sum // 4


@lru_cache(maxsize=None)
def enumerate_sets(n):
    """All balanced sets of order n as sorted tuples, in lexicographic order."""
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    found = []
    prefix = []

    def extend(start, remaining, balance):
        if remaining == 0:
            if balance == 0:
                found.append(tuple(prefix))
            return
        mu = start
        while 2 * mu - 1 <= remaining:
            prefix.append(mu)
            extend(mu + 1, remaining - (2 * mu - 1), balance + parity(mu))
            prefix.pop()
            mu += 1

    extend(1, 4 * n, 0)
    return tuple(sorted(found))


def balanced_subsets(n_max):
    """Every non-empty balanced subset of {1..n_max}, any order."""
    odd = [mu for mu in range(1, n_max + 1) if mu % 2]
    even = [mu for mu in range(1, n_max + 1) if not mu % 2]
    for k in range(1, min(len(odd), len(even)) + 1):
        for odd_part in combinations(odd, k):
            for even_part in combinations(even, k):
                yield tuple(sorted(odd_part + even_part))


def amplitude(s, x, spec=DEFAULT_SPEC):
    """a_s = prod_{mu<nu} (Phi_mu**2 - Phi_nu**2)**(2 sigma_mu sigma_nu) prod_mu v_mu."""
    s = tuple(sorted(s))
    if not s or not is_balanced(s):
        raise DomainError(f"{s} is not a balanced set of distinct modes")
    zeros = [find_zero(mu, x) for mu in s]
    log_a = math.fsum(math.log(weight(mu, x, spec).v) for mu in s)
    pair_logs = []
    for i, first in enumerate(zeros):
        for second in zeros[i + 1:]:
            gap = abs(first.phi_sq - second.phi_sq)
            pair_logs.append(2.0 * first.sigma * second.sigma * math.log(gap))
    log_a += math.fsum(pair_logs)
    gamma_sum = math.fsum(z.gamma for z in zeros)
    return SubsetTerm(s=s, order=subset_order(s), a=math.exp(log_a), gamma_sum=gamma_sum)


@lru_cache(maxsize=4096)
def series_terms(x, N, spec=DEFAULT_SPEC):
    """Amplitude terms of orders 1..N; within each order the smallest Gamma_s comes last."""
    if N < 1:
        raise DomainError(f"series order must be >= 1, got {N}")
    terms = []
    for n in range(1, N + 1):
        block = [amplitude(s, x, spec) for s in enumerate_sets(n)]
        block.sort(key=lambda term: -term.gamma_sum)
        terms.extend(block)
    return tuple(terms)


def _series_error_bound(rho, N):
    return 10.0 * math.exp(-2.0 * math.pi * rho * N)


def sigma_series(x, rho, N, spec=DEFAULT_SPEC):
    _check_rho(rho)
    terms = series_terms(x, N, spec)
    value = 1.0 + math.fsum(t.a * math.exp(-rho * t.gamma_sum) for t in terms)
    return SigmaResult(value, N, ROUTE_SERIES, _series_error_bound(rho, N))


def _mode_arrays(indices, x, spec):
    zeros = [find_zero(mu, x) for mu in indices]
    phi_sq = np.array([z.phi_sq for z in zeros])
    gamma = np.array([z.gamma for z in zeros])
    v = np.array([weight(mu, x, spec).v for mu in indices])
    return phi_sq, gamma, v


def sigma_det(x, rho, modes, spec=DEFAULT_SPEC, verify=False):
    """
    det(I + Y) with Y = -diag(e^{-rho Gamma_e} v_e) T_eo diag(e^{-rho Gamma_o} v_o) T_oe,
    T_{mu nu} = 1 / (Phi_nu**2 - Phi_mu**2), on the first ``modes`` even and odd zeros.
    """
    _check_rho(rho)
    if modes < 1:
        raise DomainError(f"modes must be >= 1, got {modes}")
    odd = [2 * k + 1 for k in range(modes)]
    even = [2 * k + 2 for k in range(modes)]
    phi_o, gamma_o, v_o = _mode_arrays(odd, x, spec)
    phi_e, gamma_e, v_e = _mode_arrays(even, x, spec)

    t_eo = 1.0 / (phi_o[np.newaxis, :] - phi_e[:, np.newaxis])
    t_oe = -t_eo.T
    left = (np.exp(-rho * gamma_e) * v_e)[:, np.newaxis] * t_eo
    right = (np.exp(-rho * gamma_o) * v_o)[:, np.newaxis] * t_oe
    residual = -left @ right
    value = float(np.linalg.det(np.eye(modes) + residual))

    result = SigmaResult(value, modes, ROUTE_DETERMINANT, _series_error_bound(rho, modes))
    if verify:
        series = sigma_series(x, rho, modes, spec)
        if abs(series.value - value) > series.error_bound:
            raise ConvergenceError(
                f"determinant with {modes} modes disagrees with the series by "
                f"{abs(series.value - value):.3e}",
                where=(x, rho),
            )
    return result


def sigma_det_symmetric_x0(rho, modes):
    """Sigma(0, rho) = det(1 + X^T X), X = e^{-rho Phi_e/2} w_e T_eo w_o e^{-rho Phi_o/2}."""
    _check_rho(rho)
    odd = np.array([2 * k + 1 for k in range(modes)])
    even = odd + 1
    phi_o = (odd - 0.5) * math.pi
    phi_e = (even - 0.5) * math.pi
    w_o = np.array([signed_root_weight(int(mu)) for mu in odd]) * np.exp(-0.5 * rho * phi_o)
    w_e = np.array([signed_root_weight(int(mu)) for mu in even]) * np.exp(-0.5 * rho * phi_e)
    t_eo = 1.0 / (phi_o[np.newaxis, :] ** 2 - phi_e[:, np.newaxis] ** 2)
    x_matrix = w_e[:, np.newaxis] * t_eo * w_o[np.newaxis, :]
    return float(np.linalg.det(np.eye(modes) + x_matrix.T @ x_matrix))


def sigma_critical_closed(rho):
    """Sigma(0, rho) = (q; q)_inf**(-1/4) with q = e^{-2 pi rho}."""
    return math.exp(-0.25 * log_q_pochhammer(rho))


def critical_coefficients(n_max):
    """[(n, c_n)] with c_n = sum_{s in S_n} a_s(0), the coefficient of e^{-2 pi n rho}."""
    coefficients = []
    for n in range(1, n_max + 1):
        total = math.fsum(amplitude(s, 0.0).a for s in enumerate_sets(n))
        coefficients.append((n, total))
    return coefficients


def rational_estimate(value, max_denominator=1 << 16):
    return Fraction(value).limit_denominator(max_denominator)


def Psi(x, rho, N, spec=DEFAULT_SPEC):
    """Psi = -log(Sigma) / rho."""
    return -math.log(sigma_series(x, rho, N, spec).value) / rho


def psi_strip(x, rho, N, spec=DEFAULT_SPEC):
    """psi = d log(Sigma)/d rho = -sum a_s Gamma_s e^{-rho Gamma_s} / Sigma."""
    _check_rho(rho)
    terms = series_terms(x, N, spec)
    boltzmann = [t.a * math.exp(-rho * t.gamma_sum) for t in terms]
    sigma = 1.0 + math.fsum(boltzmann)
    flux = math.fsum(b * t.gamma_sum for b, t in zip(boltzmann, terms))
    return -flux / sigma
