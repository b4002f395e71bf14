import math

import numpy as np
import pytest

from scaling.roots import find_zero
from scaling.weights import (
    METHOD_CLOSED,
    METHOD_CONTOUR,
    METHOD_SPECIAL,
    counting_integral,
    counting_integrand,
    generating_coefficients,
    oracle_product_p,
    oracle_weight,
    signed_root_weight,
    weight,
    weight_v,
    weight_v_closed_x0,
    weight_v_special_xneg1,
    weight_w_generating_check,
)
from utils.errors import DomainError

V1_AT_MINUS_ONE = 6.39303337215


@pytest.mark.parametrize(
    "mu, expected",
    [
        (1, math.pi ** 2 / 2.0),
        (2, 2.0 * math.pi ** 2),
        (3, 25.0 * math.pi ** 2 / 8.0),
        (4, 9.0 * math.pi ** 2 / 2.0),
    ],
)
def test_closed_form_at_criticality(mu, expected):
    assert weight_v_closed_x0(mu) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("mu", range(1, 13))
def test_contour_matches_closed_form(mu):
    assert weight_v(mu, 0.0) == pytest.approx(weight_v_closed_x0(mu), rel=1e-11)


def test_special_value_at_minus_one():
    assert weight_v_special_xneg1() == pytest.approx(V1_AT_MINUS_ONE, abs=1e-10)


@pytest.mark.parametrize("eps", [1e-4, -1e-4])
def test_first_weight_is_continuous_at_minus_one(eps):
    assert weight_v(1, -1.0 + eps) == pytest.approx(V1_AT_MINUS_ONE, abs=1e-2)


def test_first_weight_converges_to_special_value():
    gaps = [abs(weight_v(1, -1.0 + eps) - V1_AT_MINUS_ONE) for eps in (1e-2, 1e-3, 1e-4)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_dispatch():
    assert weight(3, 0.0).method == METHOD_CLOSED
    assert weight(1, -1.0).method == METHOD_SPECIAL
    assert weight(1, -1.0).v == pytest.approx(V1_AT_MINUS_ONE, abs=1e-10)
    record = weight(2, 0.7)
    assert record.method == METHOD_CONTOUR
    assert record.v == weight_v(2, 0.7)
    with pytest.raises(DomainError):
        weight_v(1, -1.0)


def test_counting_integrand_at_criticality():
    t = np.linspace(0.1, 12.0, 25)
    assert np.allclose(counting_integrand(t, 0.0), -1.0 / np.cosh(t), rtol=1e-14)
    with pytest.raises(DomainError):
        counting_integrand(1.0, 2.0)


@pytest.mark.parametrize("x", [-4.0, -1.5, -0.5, 0.0, 0.5, 1.5, 4.0])
def test_counting_identity(x):
    expected = 0.5 * (np.sign(x) - 1.0)
    assert counting_integral(x) == pytest.approx(expected, abs=1e-10)


def test_signed_root_weights_square_to_closed_form():
    for mu in range(1, 11):
        assert signed_root_weight(mu) ** 2 == pytest.approx(weight_v_closed_x0(mu), rel=1e-13)
    assert [np.sign(signed_root_weight(mu)) for mu in range(1, 5)] == [1, 1, 1, 1]


def test_generating_function():
    assert generating_coefficients(1)[0] == pytest.approx(math.pi / math.sqrt(2.0))
    assert weight_w_generating_check(0.0, 1) < 1e-14
    assert weight_w_generating_check(0.3, 6) < 1e-10
    assert weight_w_generating_check(-0.5, 20) < 1e-9
    with pytest.raises(DomainError):
        weight_w_generating_check(1.0, 4)


@pytest.mark.parametrize("x", [-2.0, 0.0, 1.0])
def test_oracle_same_parity_ratios(x):
    contour = weight(3, x).v / weight(1, x).v
    oracle = oracle_weight(3, x).v / oracle_weight(1, x).v
    assert contour == pytest.approx(oracle, rel=1e-5)
    contour = weight(4, x).v / weight(2, x).v
    oracle = oracle_weight(4, x).v / oracle_weight(2, x).v
    assert contour == pytest.approx(oracle, rel=1e-5)


@pytest.mark.parametrize("x", [-2.0, 0.0, 1.0])
def test_oracle_opposite_parity_products(x):
    contour = weight(1, x).v * weight(2, x).v
    oracle = oracle_weight(1, x).v * oracle_weight(2, x).v
    assert contour == pytest.approx(oracle, rel=1e-5)


def test_oracle_reproduces_leading_amplitude():
    x = 1.0
    first, second = find_zero(1, x), find_zero(2, x)
    product = oracle_weight(1, x).v * oracle_weight(2, x).v
    amplitude = product / (first.phi_sq - second.phi_sq) ** 2
    assert amplitude == pytest.approx(0.15689480307, rel=1e-6)


def test_oracle_rejects_bad_truncation():
    with pytest.raises(DomainError):
        oracle_product_p(1, 1.0, 401)
    with pytest.raises(DomainError):
        oracle_product_p(5, 1.0, 12)
    with pytest.raises(DomainError):
        oracle_product_p(2, -1.0, 400)


@pytest.mark.parametrize("x", [-20.0, -10.0, -4.0, -1.5, -0.5, 0.5, 2.0, 10.0, 20.0])
def test_weights_are_positive(x):
    for mu in (1, 2, 3, 5, 8, 13, 21, 34, 40):
        assert weight(mu, x).v > 0
