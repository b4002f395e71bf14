"""
Special functions: dilogarithm, Euler beta, divisor sums, q-series in
q = exp(-2*pi*rho), and the derivative of the Hurwitz zeta function at -1.
"""
from dataclasses import dataclass
from functools import lru_cache
import logging
import math
import threading

import numpy as np
from scipy import special

from utils.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

Q_SERIES_TOL = 1e-18
Q_SERIES_CAP = 5000

# Euler-Maclaurin defaults for zeta'(-1, a)
EM_TERMS = 12
EM_CORRECTIONS = 8


def dilog(z):
    """Li_2(z) for real z <= 1 (scalar or array)."""
    z = np.asarray(z, dtype=float)
    if np.any(z > 1.0):
        raise DomainError("dilog is real only for z <= 1")
    value = special.spence(1.0 - z)
    return float(value) if value.ndim == 0 else value


def euler_beta(a, b):
    if a <= 0 or b <= 0:
        raise DomainError(f"euler_beta needs positive arguments, got ({a}, {b})")
    return float(special.beta(a, b))


def beta_continued(a, b):
    """B(a, b) through the gamma function, valid for non-integer negative arguments."""
    return float(special.gamma(a) * special.gamma(b) / special.gamma(a + b))


class _DivisorSieve:
    """Growing table of sigma_1(n), shared between threads."""

    def __init__(self):
        self._lock = threading.Lock()
        self._table = np.zeros(1, dtype=np.int64)

    def table(self, n):
        with self._lock:
            if self._table.size <= n:
                size = max(n + 1, 2 * self._table.size)
                table = np.zeros(size, dtype=np.int64)
                for d in range(1, size):
                    table[d::d] += d
                self._table = table
                logger.debug("divisor sieve grown to %d entries", size)
            return self._table[: n + 1]


_SIEVE = _DivisorSieve()


def divisor_sigma(n):
    if n < 1:
        raise DomainError(f"divisor_sigma needs n >= 1, got {n}")
    return int(_SIEVE.table(n)[n])


def divisor_sigma_table(n):
    """Array of sigma_1(k) for k = 1..n."""
    return _SIEVE.table(n)[1:]


@dataclass(frozen=True)
class QSeriesContext:
    q: float
    n_terms: int

    @classmethod
    def for_rho(cls, rho, tol=Q_SERIES_TOL, cap=Q_SERIES_CAP):
        if not rho > 0:
            raise DomainError(f"rho must be positive, got {rho}")
        q = math.exp(-2.0 * math.pi * rho)
        n = 1
        while n < cap and n * n * q ** n >= tol:
            n += 1
        return cls(q=q, n_terms=n)

    def powers(self):
        return self.q ** np.arange(1, self.n_terms + 1, dtype=float)

    def tail_bound(self):
        """Bound on the neglected sum of sigma_1(n) q**n, using sigma_1(n) <= n**2."""
        n = self.n_terms + 1
        return n * n * self.q ** n / (1.0 - self.q) ** 3


def eisenstein_E2(rho):
    """E_2(i*rho) = 1 - 24 sum sigma_1(n) q**n."""
    ctx = QSeriesContext.for_rho(rho)
    sigma = divisor_sigma_table(ctx.n_terms).astype(float)
    return 1.0 - 24.0 * math.fsum(sigma * ctx.powers())


def log_q_pochhammer(rho, representation="product"):
    """log (q; q)_inf, as a sum of log(1 - q**j) or as -sum sigma_1(n) q**n / n."""
    ctx = QSeriesContext.for_rho(rho)
    powers = ctx.powers()
    if representation == "product":
        return math.fsum(np.log1p(-powers))
    if representation == "divisor":
        n = np.arange(1, ctx.n_terms + 1, dtype=float)
        sigma = divisor_sigma_table(ctx.n_terms).astype(float)
        return -math.fsum(sigma * powers / n)
    raise DomainError(f"unknown representation {representation!r}")


def log_dedekind_eta(rho):
    return -math.pi * rho / 12.0 + log_q_pochhammer(rho)


@lru_cache(maxsize=None)
def catalan_constant():
    return float((special.zeta(2.0, 0.25) - special.zeta(2.0, 0.75)) / 16.0)


@lru_cache(maxsize=None)
def _bernoulli_even(m):
    return special.bernoulli(2 * m)


def hurwitz_zeta_sderiv_neg1(a, terms=EM_TERMS, corrections=EM_CORRECTIONS):
    """
    d/ds zeta(s, a) at s = -1 for a > 0.

    Direct sum of the first ``terms`` summands of -sum (k+a) log(k+a), then
    the Euler-Maclaurin tail from N = terms + a.
    """
    if not a > 0:
        raise DomainError(f"hurwitz_zeta_sderiv_neg1 needs a > 0, got {a}")
    if terms < 1 or corrections < 2:
        raise DomainError("need at least one direct term and two corrections")

    direct = -math.fsum((k + a) * math.log(k + a) for k in range(terms))
    n = terms + a
    log_n = math.log(n)
    tail = [
        0.5 * n * n * log_n,
        -0.25 * n * n,
        -0.5 * n * log_n,
        (1.0 + log_n) / 12.0,
    ]
    bernoulli = _bernoulli_even(corrections)
    for j in range(2, corrections + 1):
        coefficient = bernoulli[2 * j] * math.factorial(2 * j - 3) / math.factorial(2 * j)
        tail.append(-coefficient * n ** (2 - 2 * j))

    value = direct + math.fsum(tail)
    if abs(tail[-1]) > 1e-13 * max(1.0, abs(value)):
        raise ConvergenceError("Euler-Maclaurin tail not converged", where=a)
    return value
