import random
from fractions import Fraction

import pytest

from excedance.exact import factorial
from excedance.series import (
    Series,
    bernoulli_series,
    constant_series,
    egf_coeff,
    exp_linear,
    genocchi_series,
    phi_series,
    render_series,
    series_add,
    series_mul,
    series_reciprocal,
    series_scale,
    tanh_series,
)


def S(*coeffs):
    return Series(tuple(Fraction(c) for c in coeffs))


def test_series_validates_and_exposes_order():
    s = S(1, 2, 3)
    assert s.order == 2
    assert s.coeffs == (Fraction(1), Fraction(2), Fraction(3))
    with pytest.raises(ValueError):
        Series(())


def test_add_and_scale():
    assert series_add(S(1, 1), S(1, -1)) == S(2, 0)
    assert series_scale(0, tanh_series(6)) == constant_series(0, 6)
    assert series_scale(-1, tanh_series(6)).coeffs[1] == -1


def test_arithmetic_truncates_to_smaller_order():
    wide = exp_linear(1, 10)
    narrow = S(1, 1)
    assert series_add(wide, narrow).order == 1
    assert series_mul(wide, narrow).order == 1
    assert (wide - narrow).order == 1


def test_mul_examples():
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)  # (1+x)(1-x) = 1 - x^2
    assert series_mul(S(1, 1), S(1, -1)) == S(1, 0)  # same, truncated at order 1
    one = constant_series(1, 5)
    t = tanh_series(5)
    assert series_mul(t, one) == t


def test_exp_times_exp_inverse_is_one_convolution_oracle():
    # Oracle: expected coefficient k is the literal convolution
    # sum_j 1/j! * (-1)^(k-j)/(k-j)!, computed independently of series_mul.
    n = 12
    product = series_mul(exp_linear(1, n), exp_linear(-1, n))
    for k in range(n + 1):
        expected = sum(
            Fraction(1, factorial(j)) * Fraction((-1) ** (k - j), factorial(k - j))
            for j in range(k + 1)
        )
        assert product.coeffs[k] == expected
        assert expected == (1 if k == 0 else 0)


def test_reciprocal_geometric_series():
    rec = series_reciprocal(S(1, -1, 0, 0, 0, 0))
    assert rec.coeffs == tuple(Fraction(1) for _ in range(6))


def test_reciprocal_of_one_is_one():
    one = constant_series(1, 4)
    assert series_reciprocal(one) == one


def test_reciprocal_of_exp_is_exp_of_negated():
    assert series_reciprocal(exp_linear(1, 10)) == exp_linear(-1, 10)


def test_reciprocal_zero_constant_term_errors():
    with pytest.raises(ValueError):
        series_reciprocal(S(0, 1, 2))


def test_reciprocal_is_true_inverse_on_random_series():
    rng = random.Random(20260808)
    one = constant_series(1, 12)
    for _ in range(50):
        coeffs = [Fraction(rng.randint(1, 9), rng.randint(1, 9))]
        coeffs += [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(12)
        ]
        s = Series(tuple(coeffs))
        assert series_mul(s, series_reciprocal(s)) == one


@pytest.mark.parametrize(
    "a, k, expected",
    [(0, 0, 1), (0, 3, 0), (1, 3, Fraction(1, 6)), (-2, 2, 2)],
)
def test_exp_linear_coefficients(a, k, expected):
    assert exp_linear(a, 5).coeffs[k] == expected


def test_phi_constant_term_is_one():
    for t in (Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3)):
        assert phi_series(t, 6).coeffs[0] == 1


def test_phi_rejects_t_equal_one():
    with pytest.raises(ValueError):
        phi_series(1, 5)


def test_phi_at_minus_one_is_one_plus_tanh():
    lhs = phi_series(Fraction(-1), 8)
    rhs = series_add(constant_series(1, 8), tanh_series(8))
    assert lhs == rhs


def test_phi_egf_matches_exhaustive_count_at_two():
    # 3! * [x^3] phi(x,2) = 1*1 + 4*2 + 1*4 over the six length-3
    # permutations tallied by excedance count (1, 4, 1).
    assert egf_coeff(phi_series(2, 3), 3) == 13


def test_phi_satisfies_defining_relation():
    n = 12
    for t in (Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3)):
        phi = phi_series(t, n)
        denominator = constant_series(t, n) - exp_linear(t - 1, n)
        assert series_mul(phi, denominator) == constant_series(t - 1, n)


def test_tanh_low_order_coefficients():
    t = tanh_series(7)
    assert t.coeffs[0] == 0
    assert t.coeffs[1] == 1
    assert t.coeffs[2] == 0
    assert t.coeffs[3] == Fraction(-1, 3)
    assert t.coeffs[5] == Fraction(2, 15)
    assert t.coeffs[7] == Fraction(-17, 315)


def test_tanh_even_coefficients_vanish_to_order_20():
    t = tanh_series(20)
    for k in range(0, 21, 2):
        assert t.coeffs[k] == 0


def test_tanh_odd_egf_values_are_signed_positive_integers():
    t = tanh_series(15)
    for m in range(1, 16, 2):
        value = factorial(m) * t.coeffs[m] * (-1) ** ((m - 1) // 2)
        assert value.denominator == 1
        assert value > 0


def test_genocchi_series_first_values():
    g = genocchi_series(8)
    assert egf_coeff(g, 1) == 1
    assert egf_coeff(g, 2) == -1
    assert egf_coeff(g, 3) == 0
    assert egf_coeff(g, 6) == -3


def test_genocchi_series_integrality():
    g = genocchi_series(12)
    for n in range(1, 13):
        assert egf_coeff(g, n).denominator == 1


def test_bernoulli_series_values_and_parity():
    b = bernoulli_series(15)
    assert egf_coeff(b, 0) == 1
    assert egf_coeff(b, 1) == Fraction(-1, 2)
    assert egf_coeff(b, 2) == Fraction(1, 6)
    for n in range(3, 16, 2):
        assert egf_coeff(b, n) == 0


def test_egf_coeff_examples_and_bounds():
    assert egf_coeff(constant_series(1, 0), 0) == 1
    e = exp_linear(1, 9)
    for k in range(10):
        assert egf_coeff(e, k) == 1
    with pytest.raises(ValueError):
        egf_coeff(e, 10)
    with pytest.raises(ValueError):
        egf_coeff(e, -1)


def test_render_series_plain_text():
    assert render_series(S(1, -1)) == "1 + -1*x"
    assert render_series(tanh_series(3)) == "0 + 1*x + 0*x^2 + -1/3*x^3"
    assert render_series(constant_series(Fraction(1, 2), 0)) == "1/2"


def test_series_values_are_immutable_and_hashable():
    s = tanh_series(4)
    with pytest.raises(AttributeError):
        s.coeffs = ()
    assert hash(s) == hash(tanh_series(4))


def test_floats_are_refused_everywhere():
    with pytest.raises(TypeError):
        Series((0.5, 1))
    with pytest.raises(TypeError):
        series_scale(0.5, tanh_series(3))
    with pytest.raises(TypeError):
        exp_linear(0.5, 3)
    with pytest.raises(TypeError):
        phi_series(0.5, 3)
