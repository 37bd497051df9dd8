from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frobcover.polynomial import MPoly, Polynomial, TruncatedSeries, series_log_derivative

F = Fraction
coef = st.integers(-4, 4).map(Fraction)


def monic(coeffs):
    return Polynomial(list(coeffs) + [F(1)])


def test_linear_factor_geometric_series():
    beta = F(3, 2)
    s = series_log_derivative(Polynomial([-beta, F(1)]), 3)
    assert list(s.coeffs) == [1, beta, beta ** 2, beta ** 3]


def test_pure_power():
    s = series_log_derivative(Polynomial.monomial(4, F(1)), 5)
    assert list(s.coeffs) == [4, 0, 0, 0, 0, 0]


def test_two_roots_give_power_sums():
    p = Polynomial([F(-1), F(1)]) * Polynomial([F(-2), F(1)])
    s = series_log_derivative(p, 4)
    assert list(s.coeffs) == [2, 3, 5, 9, 17]


def test_zero_leading_coefficient_rejected():
    with pytest.raises(ValueError, match="non-invertible leading coefficient"):
        series_log_derivative(Polynomial([]), 3)


@given(st.lists(coef, min_size=1, max_size=3), st.lists(coef, min_size=1, max_size=3))
def test_log_derivative_is_additive(a, b):
    p, q = monic(a), monic(b)
    N = 6
    assert series_log_derivative(p * q, N) == series_log_derivative(p, N) + series_log_derivative(q, N)


@given(st.lists(coef, max_size=4), st.lists(coef, max_size=4), coef)
def test_polynomial_ring_laws(a, b, x):
    p, q = Polynomial(a, zero=F(0)), Polynomial(b, zero=F(0))
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert p.compose(q)(x) == p(q(x))


def test_derivative_and_degree():
    p = Polynomial([F(1), F(2), F(3)])
    assert p.degree == 2
    assert p.derivative() == Polynomial([F(2), F(6)])
    assert Polynomial([F(0), F(0)]).is_zero()
    assert Polynomial([]).degree == -1


def test_truncation_is_deterministic():
    s = TruncatedSeries([1, 2, 3, 4], 1)
    assert s.coeffs == (1, 2)
    assert (s + TruncatedSeries([1, 1, 1], 2)).order == 1


def test_mpoly_arithmetic():
    x, y = MPoly.variables(2)
    assert (x + y) ** 2 == x * x + x * y * 2 + y * y
    assert (x - x).is_constant()
    assert MPoly.const(2, 3).inverse() == MPoly.const(2, F(1, 3))
    with pytest.raises(ZeroDivisionError):
        x.inverse()
