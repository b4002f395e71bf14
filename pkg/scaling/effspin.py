"""
Effective Ising model behind Sigma: spins s_mu in {0, 1} with couplings
K_{mu nu} = -sigma_mu sigma_nu log(v_mu v_nu / (Phi_mu**2 - Phi_nu**2)**2),
field -rho Gamma_mu, and the hard constraint sum_mu sigma_mu s_mu = 0.

The partition function over the first ``n_spins`` modes reproduces the
amplitude series restricted to sets inside {1..n_spins}.
"""
from dataclasses import dataclass
import logging
import math

import numpy as np

from scaling.roots import find_zeros
from scaling.sigma import amplitude, balanced_subsets
from scaling.weights import weight
from utils.errors import DomainError
from utils.quad import DEFAULT_SPEC
from utils.specialfn import euler_beta

logger = logging.getLogger(__name__)

MAX_SPINS = 24
_BLOCK_BITS = 16


@dataclass(frozen=True)
class EffectiveModel:
    x: float
    n_spins: int
    sigmas: np.ndarray
    gammas: np.ndarray
    couplings: np.ndarray

    def coupling(self, mu, nu):
        if mu == nu:
            raise DomainError("the coupling matrix has no diagonal")
        return float(self.couplings[mu - 1, nu - 1])


@dataclass(frozen=True)
class PartitionResult:
    z_eff: float
    magnetization: float
    expectations: np.ndarray


def build_model(x, n_spins, spec=DEFAULT_SPEC):
    if not 1 <= n_spins:
        raise DomainError(f"n_spins must be >= 1, got {n_spins}")
    zeros = find_zeros(n_spins, x)
    phi_sq = np.array([z.phi_sq for z in zeros])
    sigmas = np.array([z.sigma for z in zeros], dtype=float)
    gammas = np.array([z.gamma for z in zeros])
    log_v = np.array([math.log(weight(mu, x, spec).v) for mu in range(1, n_spins + 1)])

    gaps = np.abs(phi_sq[:, np.newaxis] - phi_sq[np.newaxis, :])
    np.fill_diagonal(gaps, 1.0)
    couplings = -np.outer(sigmas, sigmas) * (
        log_v[:, np.newaxis] + log_v[np.newaxis, :] - 2.0 * np.log(gaps)
    )
    np.fill_diagonal(couplings, 0.0)
    return EffectiveModel(x=x, n_spins=n_spins, sigmas=sigmas, gammas=gammas, couplings=couplings)


def _configurations(n, start, stop):
    masks = np.arange(start, stop, dtype=np.int64)
    return ((masks[:, np.newaxis] >> np.arange(n)) & 1).astype(float)


def _partition(model, rho):
    n = model.n_spins
    if n > MAX_SPINS:
        raise DomainError(f"exact enumeration is limited to {MAX_SPINS} spins, got {n}")
    if not rho > 0:
        raise DomainError(f"rho must be positive, got {rho}")
    total = 2 ** n
    block = 2 ** min(n, _BLOCK_BITS)
    z_parts, flux_parts = [], []
    spin_weights = np.zeros(n)
    for start in range(0, total, block):
        spins = _configurations(n, start, min(start + block, total))
        spins = spins[np.abs(spins @ model.sigmas) < 0.5]
        energy = 0.5 * np.sum((spins @ model.couplings) * spins, axis=1)
        field = spins @ model.gammas
        boltzmann = np.exp(energy - rho * field)
        z_parts.append(math.fsum(boltzmann))
        flux_parts.append(math.fsum(boltzmann * field))
        spin_weights += boltzmann @ spins
    z_eff = math.fsum(z_parts)
    magnetization = math.fsum(flux_parts) / z_eff
    return PartitionResult(z_eff, magnetization, spin_weights / z_eff)


def enumerate_partition(model, rho):
    """Z_eff by exact enumeration of the constrained configurations; the empty one contributes 1."""
    return _partition(model, rho).z_eff


def magnetization(model, rho):
    """<sum Gamma_mu s_mu>, equal to -psi(x, rho) in the limit of many spins."""
    return _partition(model, rho).magnetization


def spin_expectations(model, rho):
    return _partition(model, rho).expectations


def subset_series(x, rho, n_spins, spec=DEFAULT_SPEC):
    """1 + sum over balanced subsets of {1..n_spins} of a_s exp(-rho Gamma_s)."""
    terms = [amplitude(s, x, spec) for s in balanced_subsets(n_spins)]
    return 1.0 + math.fsum(t.a * math.exp(-rho * t.gamma_sum) for t in terms)


def coupling_asymptotic_near(mu, nu):
    """K for large mu, nu at x = 0: 2 sigma_mu sigma_nu log(pi |nu - mu| / 2)."""
    sign = 1 if (mu + nu) % 2 == 0 else -1
    return 2.0 * sign * math.log(math.pi * abs(nu - mu) / 2.0)


def coupling_asymptotic_far(mu, nu):
    """K for nu >> mu at x = 0."""
    sign = 1 if (mu + nu) % 2 == 0 else -1
    numerator = math.pi ** 1.5 * nu ** 1.5
    denominator = 2.0 ** 1.5 * (mu - 0.5) * euler_beta(mu / 2.0, 0.5)
    return 2.0 * sign * math.log(numerator / denominator)
