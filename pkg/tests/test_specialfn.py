import math

import numpy as np
import pytest
from scipy.special import gamma as gamma_fn

from utils.errors import DomainError
from utils.specialfn import (
    QSeriesContext,
    beta_continued,
    catalan_constant,
    dilog,
    divisor_sigma,
    divisor_sigma_table,
    eisenstein_E2,
    euler_beta,
    hurwitz_zeta_sderiv_neg1,
    log_dedekind_eta,
    log_q_pochhammer,
)

RHO0 = 0.523521700017999266800
ZETA_PRIME_NEG1 = -0.16542114370045092


def test_dilog_classical_values():
    assert dilog(0.0) == 0.0
    assert dilog(1.0) == pytest.approx(math.pi ** 2 / 6.0, rel=1e-15)
    assert dilog(-1.0) == pytest.approx(-math.pi ** 2 / 12.0, rel=1e-15)
    assert dilog(0.5) == pytest.approx(math.pi ** 2 / 12.0 - 0.5 * math.log(2.0) ** 2, rel=1e-14)


def test_dilog_duplication():
    z = np.linspace(-1.0, 1.0, 41)
    assert np.allclose(dilog(z) + dilog(-z), 0.5 * dilog(z * z), rtol=0.0, atol=1e-13)


def test_dilog_rejects_branch_cut():
    with pytest.raises(DomainError):
        dilog(1.5)


def test_euler_beta():
    assert euler_beta(1.0, 1.0) == pytest.approx(1.0)
    assert euler_beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-15)
    assert euler_beta(1.0, 0.5) == pytest.approx(2.0, rel=1e-15)
    with pytest.raises(DomainError):
        euler_beta(0.0, 1.0)


def test_beta_continued_to_negative_arguments():
    # B(1, -1/2) = Gamma(1) Gamma(-1/2) / Gamma(1/2) = -2
    assert beta_continued(1.0, -0.5) == pytest.approx(-2.0, rel=1e-14)
    assert beta_continued(0.5, 0.5) == pytest.approx(math.pi, rel=1e-14)


def test_divisor_sigma_values():
    assert divisor_sigma(1) == 1
    assert divisor_sigma(6) == 12
    assert divisor_sigma(7) == 8
    assert list(divisor_sigma_table(8)) == [1, 3, 4, 7, 6, 12, 8, 15]
    with pytest.raises(DomainError):
        divisor_sigma(0)


def test_divisor_sigma_is_multiplicative():
    table = divisor_sigma_table(10_000)
    for m in range(2, 100):
        for n in range(m + 1, 10_000 // m + 1):
            if math.gcd(m, n) == 1:
                assert table[m * n - 1] == table[m - 1] * table[n - 1]


def test_q_series_context():
    ctx = QSeriesContext.for_rho(0.3)
    assert ctx.q == pytest.approx(math.exp(-0.6 * math.pi))
    assert ctx.tail_bound() < 1e-15
    with pytest.raises(DomainError):
        QSeriesContext.for_rho(0.0)


def test_eisenstein_limits_and_special_values():
    assert eisenstein_E2(10.0) == pytest.approx(1.0, abs=1e-15)
    assert eisenstein_E2(1.0) == pytest.approx(3.0 / math.pi, rel=1e-14)
    assert abs(eisenstein_E2(RHO0)) < 1e-12


def test_q_pochhammer_representations_agree():
    for rho in (0.5, 1.0, 2.0):
        product = log_q_pochhammer(rho, "product")
        divisor = log_q_pochhammer(rho, "divisor")
        assert product == pytest.approx(divisor, abs=1e-14)
    assert log_q_pochhammer(20.0) == pytest.approx(0.0, abs=1e-50)
    with pytest.raises(DomainError):
        log_q_pochhammer(1.0, "lattice")


def test_dedekind_eta():
    # eta(i) = Gamma(1/4) / (2 pi**(3/4))
    expected = math.log(gamma_fn(0.25) / (2.0 * math.pi ** 0.75))
    assert log_dedekind_eta(1.0) == pytest.approx(expected, rel=1e-14)
    assert log_dedekind_eta(8.0) == pytest.approx(-8.0 * math.pi / 12.0, abs=1e-15)


def test_catalan_constant():
    value = catalan_constant()
    assert value == pytest.approx(0.915965594177219, abs=1e-15)
    assert 0.9 < value < 0.92


def test_hurwitz_at_one_is_riemann():
    assert hurwitz_zeta_sderiv_neg1(1.0) == pytest.approx(ZETA_PRIME_NEG1, abs=1e-13)


def test_hurwitz_at_one_half():
    # zeta(s, 1/2) = (2**s - 1) zeta(s)
    expected = -math.log(2.0) / 24.0 - 0.5 * ZETA_PRIME_NEG1
    assert hurwitz_zeta_sderiv_neg1(0.5) == pytest.approx(expected, abs=1e-13)


@pytest.mark.parametrize("a", [0.125, 0.375, 0.625, 0.875])
def test_hurwitz_truncation_stability(a):
    default = hurwitz_zeta_sderiv_neg1(a)
    doubled = hurwitz_zeta_sderiv_neg1(a, terms=24)
    assert abs(default - doubled) < 1e-13


def test_hurwitz_rejects_non_positive_shift():
    with pytest.raises(DomainError):
        hurwitz_zeta_sderiv_neg1(0.0)
