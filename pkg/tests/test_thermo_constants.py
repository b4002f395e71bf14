import math

import pytest

from scaling import casimir
from scaling.thermo_constants import (
    CORNER_JUMP,
    CORNER_LOG_COEFFICIENT,
    corner_constant,
    corner_free_energy,
    surface_critical_value,
    surface_free_energy,
)
from utils.errors import DomainError
from utils.specialfn import catalan_constant, hurwitz_zeta_sderiv_neg1

LOG2 = math.log(2.0)


def test_corner_constant():
    expected = -2.0 * catalan_constant() / math.pi + 9.0 / 16.0 * LOG2
    assert corner_constant() == pytest.approx(expected, rel=1e-15)
    assert corner_constant() == pytest.approx(-0.1932265, abs=1e-7)


def test_corner_expansion_terms():
    tau = 1e-3
    result = corner_free_energy(tau)
    assert set(result.terms) == {"log", "constant", "jump"}
    expected = 0.125 * math.log(tau) - 2.0 * catalan_constant() / math.pi + (9.0 / 16.0 + 0.75) * LOG2
    assert result.value == pytest.approx(expected, rel=1e-14)
    assert result.tau == tau


def test_corner_jump():
    eps = 1e-6
    jump = corner_free_energy(eps).value - corner_free_energy(-eps).value
    assert jump == pytest.approx(1.5 * LOG2, rel=1e-14)
    assert corner_free_energy(-eps).terms["jump"] == -CORNER_JUMP


def test_corner_diverges_at_criticality():
    with pytest.raises(DomainError):
        corner_free_energy(0.0)


def test_surface_critical_value():
    assert surface_critical_value() == pytest.approx(0.1817314169844, abs=1e-12)
    assert -0.75 * math.log(math.sqrt(2.0) - 1.0) == pytest.approx(0.66099, abs=1e-5)
    upper = hurwitz_zeta_sderiv_neg1(0.125) + hurwitz_zeta_sderiv_neg1(0.375)
    lower = hurwitz_zeta_sderiv_neg1(0.625) + hurwitz_zeta_sderiv_neg1(0.875)
    assert upper - lower > 0


def test_surface_expansion():
    assert surface_free_energy(0.0).value == surface_critical_value()
    tau = 1e-4
    result = surface_free_energy(tau)
    assert result.terms["cusp"] == pytest.approx(5e-5)
    assert result.value == pytest.approx(math.fsum(result.terms.values()))


def test_surface_cusp():
    eps = 1e-5
    curvature = (
        surface_free_energy(eps).value
        + surface_free_energy(-eps).value
        - 2.0 * surface_free_energy(0.0).value
    ) / eps
    assert curvature == pytest.approx(1.0, rel=1e-6)


def test_corner_coefficients_match_small_x_law():
    assert CORNER_LOG_COEFFICIENT == 0.125
    assert CORNER_JUMP == pytest.approx(0.75 * LOG2)
    assert casimir.theta_sc_singular_part(0.5) == pytest.approx(
        -CORNER_LOG_COEFFICIENT * math.log(0.5) - CORNER_JUMP
    )
