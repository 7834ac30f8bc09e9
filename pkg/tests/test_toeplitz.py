import math
import random
from fractions import Fraction

import pytest
import scipy.special
from hypothesis import given, strategies as st

from hyperjack.exact import LaurentPoly, ParameterError, normalization_constant
from hyperjack.toeplitz import (
    ExactSymbol,
    ExpSymbol,
    NumericError,
    ToeplitzSpec,
    bessel_exponents,
    bessel_limit,
    binomial_exponents,
    binomial_limit,
    exponential_closed_form,
    exponential_symbol,
    fourier_coeffs,
    gamma_coefficient,
    geometric_closed_form,
    geometric_symbol,
    heine_szego_oracle,
    normalized_from_gamma,
    normalized_toeplitz_hdet,
    parse_symbol,
    power_minus_inverse_closed_form,
    power_minus_inverse_symbol,
    szego_exponent,
    szego_prediction,
    szego_trend,
    toeplitz_array,
    toeplitz_hdet,
    toeplitz_hpf_form,
    zeta,
    zeta_exponents,
    zeta_limit,
)

seeds = st.integers(0, 10_000)


def random_symbol(rng, lo=-2, hi=2):
    return ExactSymbol({k: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for k in range(lo, hi + 1)})


def symbolic_d():
    """``d(k)`` for ``|k| <= 2`` as independent polynomial indeterminates."""
    return {k: LaurentPoly.var(k + 2, 5) for k in range(-2, 3)}


def test_order_four_closed_forms_symbolic():
    d = symbolic_d()
    f = ExactSymbol(d)
    assert toeplitz_hdet(ToeplitzSpec(f, 1, 2)) == d[0]
    expected = d[2] * d[-2] - 4 * d[1] * d[-1] + 3 * d[0] * d[0]
    assert toeplitz_hdet(ToeplitzSpec(f, 2, 2)) == expected
    assert toeplitz_hdet(ToeplitzSpec(f, 2, 2), method="naive") == expected


def test_ones_window_vanishes():
    f = ExactSymbol({k: 1 for k in range(-2, 3)})
    assert toeplitz_hdet(ToeplitzSpec(f, 2, 2)) == 0
    assert toeplitz_hpf_form(ToeplitzSpec(f, 2, 2)) == 0


@pytest.mark.parametrize("n,m", [(n, m) for n in (1, 2, 3, 4) for m in (1, 2)] + [(2, 3)])
def test_constant_symbol(n, m):
    spec = ToeplitzSpec(ExactSymbol({0: 1}), n, m)
    assert toeplitz_hdet(spec) == normalization_constant(n, m)
    assert normalized_toeplitz_hdet(spec) == 1
    assert heine_szego_oracle(spec) == normalization_constant(n, m)


def test_value_for_two_by_two():
    assert toeplitz_hdet(ToeplitzSpec(ExactSymbol({0: 1}), 2, 2)) == 3


def test_z_plus_inverse():
    spec = ToeplitzSpec(ExactSymbol({1: 1, -1: 1}), 2, 1)
    assert toeplitz_hdet(spec) == heine_szego_oracle(spec) == -1


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)])
@given(seed=seeds)
def test_heine_szego_matches_hdet(n, m, seed):
    spec = ToeplitzSpec(random_symbol(random.Random(seed), -3, 3), n, m)
    assert toeplitz_hdet(spec) == heine_szego_oracle(spec)


@pytest.mark.parametrize("n", [1, 2, 3])
@given(seed=seeds)
def test_hpf_form_matches_hdet(n, seed):
    spec = ToeplitzSpec(random_symbol(random.Random(seed), -3, 3), n, 2)
    assert toeplitz_hpf_form(spec) == toeplitz_hdet(spec)


def test_hpf_form_order_four_small():
    d = symbolic_d()
    assert toeplitz_hpf_form(ToeplitzSpec(ExactSymbol(d), 1, 2)) == d[0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hpf_form_order_four_is_pfaffian(n):
    from hyperjack.hyper import pfaffian

    f = random_symbol(random.Random(n), -3, 3)
    size = 2 * n
    mat = [[(j - i) * f.d(2 * n + 1 - i - j) for j in range(1, size + 1)] for i in range(1, size + 1)]
    assert pfaffian(mat) == toeplitz_hdet(ToeplitzSpec(f, n, 2))


def test_hpf_form_needs_even_m():
    with pytest.raises(ParameterError):
        toeplitz_hpf_form(ToeplitzSpec(ExactSymbol({0: 1}), 2, 1))


def test_hpf_form_order_eight():
    f = random_symbol(random.Random(3), -2, 2)
    spec = ToeplitzSpec(f, 2, 4)
    assert toeplitz_hpf_form(spec) == toeplitz_hdet(spec)


@pytest.mark.parametrize("shift", [-2, -1, 1, 3])
def test_shift_identity(shift):
    f = random_symbol(random.Random(shift + 10), -3, 3)
    shifted = ToeplitzSpec(f, 3, 2, shift)
    plain = ToeplitzSpec(f.times_power(-shift), 3, 2)
    assert toeplitz_array(shifted).entries == toeplitz_array(plain).entries
    assert toeplitz_hdet(shifted) == heine_szego_oracle(shifted)
    assert toeplitz_hpf_form(shifted) == toeplitz_hdet(shifted)


@given(seed=seeds)
def test_window_independence(seed):
    rng = random.Random(seed)
    n, m = 2, 2
    f = random_symbol(rng, -2, 2)
    far = dict(f.coeffs)
    far[5], far[-7] = Fraction(rng.randint(1, 9)), Fraction(-3)
    assert toeplitz_hdet(ToeplitzSpec(f, n, m)) == toeplitz_hdet(ToeplitzSpec(ExactSymbol(far), n, m))


@pytest.mark.parametrize("a,n,m", [(1, 2, 1), (1, 2, 2), (1, 4, 1), (2, 3, 1), (1, 3, 1), (1, 3, 2), (2, 3, 2)])
def test_power_minus_inverse(a, n, m):
    f = power_minus_inverse_symbol(a)
    value = normalized_toeplitz_hdet(ToeplitzSpec(f, n, m))
    assert value == power_minus_inverse_closed_form(a, n, m)
    assert normalized_from_gamma(f, n, m, 1) == value


def test_power_minus_inverse_worked_value():
    assert power_minus_inverse_closed_form(1, 2, 2) == Fraction(4, 3)
    assert power_minus_inverse_closed_form(1, 3, 1) == 0


@pytest.mark.parametrize("n,m", [(n, m) for n in (1, 2, 3) for m in (1, 2)])
@pytest.mark.parametrize("s", [Fraction(1, 2), Fraction(-3), Fraction(2, 5)])
def test_geometric_symbol(n, m, s):
    spec = ToeplitzSpec(geometric_symbol(s, n, m), n, m)
    assert normalized_toeplitz_hdet(spec) == geometric_closed_form(n, m)


def test_geometric_determinant_vanishes():
    for n in (2, 3, 4):
        assert toeplitz_hdet(ToeplitzSpec(geometric_symbol(Fraction(1, 3), n, 1), n, 1)) == 0


@pytest.mark.parametrize("n,m", [(n, m) for n in (1, 2, 3) for m in (1, 2)])
def test_exponential_symbol(n, m):
    spec = ToeplitzSpec(exponential_symbol(n, m), n, m)
    assert normalized_toeplitz_hdet(spec) == exponential_closed_form(n, m)
    assert normalized_from_gamma(exponential_symbol(n, m), n, m, 1) == exponential_closed_form(n, m)


def test_exponential_worked_value():
    assert exponential_closed_form(2, 1) == Fraction(1, 2)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)])
@given(seed=seeds)
def test_gamma_path(n, m, seed):
    f = random_symbol(random.Random(seed), -1, 3)
    assert normalized_from_gamma(f, n, m, 1) == normalized_toeplitz_hdet(ToeplitzSpec(f, n, m))


def test_gamma_path_larger_R():
    f = random_symbol(random.Random(7), -2, 2)
    assert normalized_from_gamma(f, 2, 2, 2) == normalized_toeplitz_hdet(ToeplitzSpec(f, 2, 2))
    assert normalized_from_gamma(f, 2, 2, 3) == normalized_toeplitz_hdet(ToeplitzSpec(f, 2, 2))


def test_gamma_rejects_small_R():
    with pytest.raises(ParameterError):
        gamma_coefficient(ExactSymbol({-2: 1, 0: 1}), 2, 1, 1)


def test_oracle_rejects_exp_symbols():
    with pytest.raises(ParameterError):
        heine_szego_oracle(ToeplitzSpec(ExpSymbol({1: 0.5}), 2, 1))


def test_spec_validation():
    with pytest.raises(ParameterError):
        ToeplitzSpec(ExactSymbol({0: 1}), 0, 1)


# float path


def test_fourier_trivial_symbols():
    r = fourier_coeffs(ExpSymbol({}), 3)
    assert r.coeffs[0] == pytest.approx(1, abs=1e-15)
    assert all(abs(v) < 1e-15 for k, v in r.coeffs.items() if k)
    r = fourier_coeffs(ExpSymbol({1: 0.0, -1: -0.0}), 2)
    assert r.coeffs[0] == pytest.approx(1, abs=1e-15)


@pytest.mark.parametrize("x", [0.25, 0.5, 1.3])
def test_fourier_against_bessel(x):
    r = fourier_coeffs(ExpSymbol(bessel_exponents(x)), 6)
    for k in range(-6, 7):
        assert r.coeffs[k] == pytest.approx(scipy.special.jv(k, 2 * x), abs=1e-13)
    r = fourier_coeffs(ExpSymbol({1: x, -1: x}), 6)
    for k in range(-6, 7):
        assert r.coeffs[k] == pytest.approx(scipy.special.iv(k, 2 * x), abs=1e-13)
    assert r.error <= r.atol


def test_fourier_complex_symbol():
    r = fourier_coeffs(ExpSymbol({1: 0.3j}), 3)
    for k in range(0, 4):
        assert r.coeffs[k] == pytest.approx((0.3j) ** k / math.factorial(k), abs=1e-14)


def test_fourier_grid_checks():
    with pytest.raises(ValueError):
        fourier_coeffs(ExpSymbol({1: 0.5}), 4, grid=48)
    with pytest.raises(ValueError):
        fourier_coeffs(ExpSymbol({1: 0.5}), 40, grid=64)
    with pytest.raises(NumericError):
        fourier_coeffs(ExpSymbol({1: 40.0}), 2)


def test_float_hdet_matches_exact_on_polynomial_symbol():
    f = random_symbol(random.Random(1), -2, 2)
    spec = ToeplitzSpec(f, 3, 2)
    from hyperjack.hyper import hdet_numeric

    arr = toeplitz_array(spec).to_numpy(float).reshape((3,) * 4)
    assert hdet_numeric(arr) == pytest.approx(float(toeplitz_hdet(spec)), rel=1e-10)


def test_float_toeplitz_classical_case():
    x = 0.4
    spec = ToeplitzSpec(ExpSymbol({1: x, -1: x}), 3, 1)
    import numpy as np

    mat = [[scipy.special.iv(j - i, 2 * x) for j in range(3)] for i in range(3)]
    assert toeplitz_hdet(spec) == pytest.approx(np.linalg.det(mat), rel=1e-12)


def test_prediction_examples():
    assert szego_prediction(bessel_exponents(0.7), 5, 2) == pytest.approx(bessel_limit(0.7, 2), rel=1e-15)
    c = binomial_exponents(0.3, 0.4, 1.5, 2.0, 60)
    assert math.exp(szego_exponent(c, 3).real) == pytest.approx(binomial_limit(0.3, 0.4, 1.5, 2.0, 3), rel=1e-12)
    assert szego_prediction({0: 0.25}, 4, 1) == pytest.approx(math.e)


def test_zeta_values():
    assert zeta(2) == pytest.approx(math.pi**2 / 6, rel=1e-14)
    assert zeta(4) == pytest.approx(math.pi**4 / 90, rel=1e-14)
    assert zeta(3) == pytest.approx(1.2020569031595942, rel=1e-14)
    assert zeta(1.5) == pytest.approx(float(scipy.special.zeta(1.5)), rel=1e-12)


def test_zeta_limit_by_truncation():
    x, terms = 1.0, 4000
    approx = math.exp(szego_exponent(zeta_exponents(x, terms), 2).real)
    tail = terms ** (-2 * x) / (2 * x)
    assert abs(math.log(approx) - math.log(zeta_limit(x, 2))) <= tail / 2 * 1.01


def test_trend_classical_case():
    trend = szego_trend({1: 0.5, -1: 0.5}, 1, [4, 8, 12, 16, 20])
    assert trend.gaps[-1] < 1e-2
    assert trend.nonincreasing
    js = trend.to_json()
    assert js["atol"] == 1e-12 and len(js["rows"]) == 5


def test_trend_order_four():
    trend = szego_trend({1: 0.5, -1: 0.5}, 2, [2, 3, 4, 5, 6])
    assert trend.decreasing


def test_trend_bessel_and_binomial():
    assert szego_trend(bessel_exponents(0.3), 1, 8).nonincreasing
    assert szego_trend(binomial_exponents(0.2, 0.3, 1.0, 1.0, 25), 2, [2, 3, 4, 5]).decreasing


def test_trend_int_means_range():
    assert [r.n for r in szego_trend({1: 0.1}, 1, 3).rows] == [1, 2, 3]


def test_parse_symbol():
    f = parse_symbol("laurent:0=1,d(-1)=1/2, 2=-3")
    assert f.coeffs == {0: 1, -1: Fraction(1, 2), 2: -3}
    g = parse_symbol("exp:c(1)=0.5,-1=0.25")
    assert g.c == {1: 0.5, -1: 0.25} and g.is_real
    assert not parse_symbol("exp:c(1)=0.5j").is_real
    for bad in ["poly:0=1", "laurent:0=0.5", "laurent:x=1", "laurent:0=1,0=2"]:
        with pytest.raises(ValueError):
            parse_symbol(bad)


def test_symbol_json():
    assert ExactSymbol({-1: Fraction(1, 2)}).to_json() == {"kind": "laurent", "d": {"-1": {"num": "1", "den": "2"}}}
    assert ExpSymbol({1: 0.5}).to_json() == {"kind": "exp", "c": {"1": 0.5}}


def test_exp_symbol_accepts_rationals():
    a = parse_symbol("exp:c(1)=1/2,c(-1)=0.25")
    b = parse_symbol("exp:c(1)=0.5,c(-1)=1/4")
    assert a.c == b.c == {1: 0.5, -1: 0.25}
