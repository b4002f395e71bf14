"""
Corner and surface free energies of the square-lattice Ising model near
T_c, as expansions in the reduced temperature tau.
"""
from dataclasses import dataclass, field
from functools import lru_cache
import math

from utils.errors import DomainError
from utils.specialfn import catalan_constant, hurwitz_zeta_sderiv_neg1

# Coefficients of the log and the sign jump of f_c near T_c; the excess free
# energy of the rectangle carries the same singularity at small x
CORNER_LOG_COEFFICIENT = 0.125
CORNER_JUMP = 0.75 * math.log(2.0)


@dataclass(frozen=True)
class ExpansionResult:
    tau: float
    value: float
    terms: dict = field(default_factory=dict)


def _sign(tau):
    return (tau > 0) - (tau < 0)


def _tau_log_tau(tau):
    return tau * math.log(abs(tau)) if tau else 0.0


def corner_constant():
    return -2.0 * catalan_constant() / math.pi + 9.0 / 16.0 * math.log(2.0)


def corner_free_energy(tau):
    """f_c(tau) = (1/8) log|tau| - 2C/pi + (9/16) log 2 + (3/4) log 2 sign(tau) + O(tau)."""
    if tau == 0:
        raise DomainError("the corner free energy diverges logarithmically at tau = 0")
    terms = {
        "log": CORNER_LOG_COEFFICIENT * math.log(abs(tau)),
        "constant": corner_constant(),
        "jump": CORNER_JUMP * _sign(tau),
    }
    return ExpansionResult(tau=tau, value=math.fsum(terms.values()), terms=terms)


@lru_cache(maxsize=None)
def surface_critical_value():
    """f_s(0) = -(3/4) log(sqrt 2 - 1) - 2 [zeta'(-1,1/8) + zeta'(-1,3/8) - zeta'(-1,5/8) - zeta'(-1,7/8)]."""
    bracket = math.fsum([
        hurwitz_zeta_sderiv_neg1(0.125),
        hurwitz_zeta_sderiv_neg1(0.375),
        -hurwitz_zeta_sderiv_neg1(0.625),
        -hurwitz_zeta_sderiv_neg1(0.875),
    ])
    return -0.75 * math.log(math.sqrt(2.0) - 1.0) - 2.0 * bracket


def surface_free_energy(tau):
    terms = {
        "critical": surface_critical_value(),
        "cusp": abs(tau) / 2.0,
        "linear": (0.25 - 3.0 * math.log(2.0) / (2.0 * math.pi) - 1.0 / math.pi) * tau,
        "log": _tau_log_tau(tau) / math.pi,
    }
    return ExpansionResult(tau=tau, value=math.fsum(terms.values()), terms=terms)
