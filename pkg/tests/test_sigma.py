import math
from fractions import Fraction

import pytest

from scaling.sigma import (
    ROUTE_DETERMINANT,
    ROUTE_SERIES,
    Psi,
    amplitude,
    balanced_subsets,
    critical_coefficients,
    enumerate_sets,
    is_balanced,
    psi_strip,
    rational_estimate,
    series_terms,
    sigma_critical_closed,
    sigma_det,
    sigma_det_symmetric_x0,
    sigma_series,
    subset_order,
)
from utils.errors import DomainError
from utils.specialfn import eisenstein_E2, log_q_pochhammer

# set -> (a_s, Gamma_s / 2 pi) at x = -1 and x = 1
AMPLITUDE_TABLE = {
    -1.0: {
        (1, 2): (0.41416034599, 0.89179907560),
        (2, 3): (0.58023590813, 1.97241431063),
        (1, 4): (0.02228040130, 1.90188245064),
        (3, 4): (0.48130844027, 2.98249768567),
        (2, 5): (0.05012321797, 2.97699865033),
        (1, 6): (0.00537233691, 2.90454040035),
        (4, 5): (0.47345042883, 3.98708202537),
        (3, 6): (0.04512462939, 3.98515563538),
        (2, 7): (0.01444309494, 3.97874169683),
        (1, 8): (0.00206454953, 3.90577401397),
        (1, 2, 3, 4): (0.31379568621, 3.87429676127),
    },
    1.0: {
        (1, 2): (0.15689480307, 1.15797017264),
        (2, 3): (0.27677728168, 2.07776833638),
        (1, 4): (0.01146254079, 2.13146302530),
        (3, 4): (0.31674195444, 3.05126118904),
        (2, 5): (0.02613926677, 3.06476730850),
        (1, 6): (0.00297985504, 3.12373747328),
        (4, 5): (0.34034540402, 4.03826016115),
        (3, 6): (0.03206462405, 4.04353563702),
        (2, 7): (0.00782432208, 4.05964386240),
        (1, 8): (0.00118447481, 4.12008924457),
        (1, 2, 3, 4): (0.07798039866, 4.20923136168),
    },
}

PARTITION_NUMBERS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

CRITICAL_COEFFICIENTS = [
    Fraction(1, 4),
    Fraction(13, 32),
    Fraction(55, 128),
    Fraction(1235, 2048),
    Fraction(4615, 8192),
]


def _table_series(x, rho):
    return 1.0 + math.fsum(
        a * math.exp(-rho * 2.0 * math.pi * g) for a, g in AMPLITUDE_TABLE[x].values()
    )


def test_enumerate_sets_small_orders():
    assert enumerate_sets(1) == ((1, 2),)
    assert enumerate_sets(4) == ((1, 2, 3, 4), (1, 8), (2, 7), (3, 6), (4, 5))


def test_enumerate_sets_counts_partitions():
    assert [len(enumerate_sets(n)) for n in range(1, 11)] == PARTITION_NUMBERS
    assert len(enumerate_sets(30)) == 5604


def test_enumerated_sets_are_balanced():
    for n in range(1, 9):
        for s in enumerate_sets(n):
            assert is_balanced(s)
            assert subset_order(s) == n
            assert list(s) == sorted(s)


def test_balanced_subsets():
    subsets = sorted(balanced_subsets(4))
    assert subsets == [(1, 2), (1, 2, 3, 4), (1, 4), (2, 3), (3, 4)]
    assert not is_balanced((1, 3))
    with pytest.raises(DomainError):
        subset_order((1, 3, 2))


@pytest.mark.parametrize("x", sorted(AMPLITUDE_TABLE))
def test_amplitude_table(x):
    for s, (a, gamma_over_2pi) in AMPLITUDE_TABLE[x].items():
        term = amplitude(s, x)
        assert term.a == pytest.approx(a, abs=1e-9)
        assert term.gamma_sum / (2.0 * math.pi) == pytest.approx(gamma_over_2pi, abs=1e-10)
        assert term.order == subset_order(s)


def test_amplitudes_at_criticality():
    assert amplitude((1, 2), 0.0).a == pytest.approx(0.25, rel=1e-14)
    assert amplitude((1, 2), 0.0).gamma_sum == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert amplitude((2, 3), 0.0).a == pytest.approx(25.0 / 64.0, rel=1e-14)
    assert amplitude((1, 4), 0.0).a == pytest.approx(1.0 / 64.0, rel=1e-14)


def test_amplitude_rejects_unbalanced_sets():
    with pytest.raises(DomainError):
        amplitude((1, 3), 0.0)
    with pytest.raises(DomainError):
        amplitude((), 0.0)


def test_critical_coefficients_are_rational():
    coefficients = critical_coefficients(5)
    assert [n for n, _ in coefficients] == [1, 2, 3, 4, 5]
    for (_, value), expected in zip(coefficients, CRITICAL_COEFFICIENTS):
        assert value == pytest.approx(float(expected), abs=1e-12)
        assert rational_estimate(value) == expected


def test_critical_series():
    rho = 1.0
    expected = 1.0 + math.fsum(
        float(c) * math.exp(-2.0 * math.pi * n * rho)
        for n, c in enumerate(CRITICAL_COEFFICIENTS, start=1)
    )
    result = sigma_series(0.0, rho, 5)
    assert result.value == pytest.approx(expected, rel=1e-14)
    assert result.route == ROUTE_SERIES
    assert result.order == 5


@pytest.mark.parametrize("rho", [0.6, 1.0, 2.0])
def test_critical_product_form(rho):
    closed = sigma_critical_closed(rho)
    assert sigma_series(0.0, rho, 8).value == pytest.approx(closed, abs=1e-12)
    assert sigma_det_symmetric_x0(rho, 8) == pytest.approx(closed, abs=1e-12)


@pytest.mark.parametrize("x", sorted(AMPLITUDE_TABLE))
def test_series_against_amplitude_table(x):
    assert sigma_series(x, 1.0, 4).value == pytest.approx(_table_series(x, 1.0), abs=1e-9)


def test_determinant_examples():
    value = sigma_det(0.0, 2.0, 4)
    assert value.route == ROUTE_DETERMINANT
    assert value.value == pytest.approx(1.0 + 0.25 * math.exp(-4.0 * math.pi), abs=1e-10)
    assert sigma_det(-1.0, 1.0, 8).value == pytest.approx(_table_series(-1.0, 1.0), abs=1e-9)


@pytest.mark.parametrize("x", [-2.0, -1.0, 0.0, 1.0, 2.0])
@pytest.mark.parametrize("rho", [0.7, 1.0, 2.0])
@pytest.mark.parametrize("modes", [4, 6, 8])
def test_route_equivalence(x, rho, modes):
    series = sigma_series(x, rho, modes)
    determinant = sigma_det(x, rho, modes)
    bound = max(series.error_bound, 1e-13)
    assert abs(series.value - determinant.value) < bound


def test_determinant_verification_passes():
    result = sigma_det(1.0, 1.0, 8, verify=True)
    assert result.value > 1.0


def test_series_terms_order_within_blocks():
    terms = series_terms(1.0, 4)
    for n in range(1, 5):
        block = [t.gamma_sum for t in terms if t.order == n]
        assert block == sorted(block, reverse=True)


def test_large_rho_limit():
    assert sigma_series(1.5, 40.0, 4).value == pytest.approx(1.0, abs=1e-50)
    assert Psi(1.5, 40.0, 4) == pytest.approx(0.0, abs=1e-50)
    assert psi_strip(1.5, 40.0, 4) == pytest.approx(0.0, abs=1e-50)


def test_potential_at_criticality():
    assert Psi(0.0, 1.0, 8) == pytest.approx(0.25 * log_q_pochhammer(1.0), abs=1e-14)
    sigma = sigma_series(0.0, 2.0, 8).value
    assert Psi(0.0, 2.0, 8) == pytest.approx(-0.5 * math.log(sigma), rel=1e-15)


def test_force_at_criticality():
    assert psi_strip(0.0, 1.0, 10) == pytest.approx(1.0 / 16.0 - math.pi / 48.0, abs=1e-9)
    for rho in (1.0, 1.5, 2.0):
        expected = math.pi / 48.0 * (eisenstein_E2(rho) - 1.0)
        assert psi_strip(0.0, rho, 10) == pytest.approx(expected, abs=1e-12)


def test_force_is_rho_derivative_of_potential():
    x, rho, h = 0.8, 1.3, 1e-4

    def rho_psi(r):
        return r * Psi(x, r, 8)

    numeric = (rho_psi(rho + h) - rho_psi(rho - h)) / (2.0 * h)
    assert psi_strip(x, rho, 8) == pytest.approx(numeric, abs=1e-9)


@pytest.mark.parametrize("call", [sigma_series, sigma_det])
def test_small_aspect_ratio_is_rejected(call):
    with pytest.raises(DomainError):
        call(0.0, 0.4, 4)
