from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from frobcover.determinant import ring_determinant
from frobcover.polynomial import MPoly
from oracles import leibniz_determinant


def test_one_by_one():
    assert ring_determinant([[7]]) == 7


def test_two_by_two_symbolic():
    a, b = MPoly.variables(2)
    one = MPoly.const(2, 1)
    assert ring_determinant([[a, one], [b, a]]) == a * a - b


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_kernel_theorem_matrix(n):
    (b,) = MPoly.variables(1)
    one = MPoly.const(1, 1)
    zero = one * 0
    M = [[-(b ** (i - j + 1)) if j <= i else (one * (i + 1) if j == i + 1 else zero)
          for j in range(n)] for i in range(n)]
    assert ring_determinant(M) == b ** n * ((-1) ** n * factorial(n))


def test_non_square_rejected():
    with pytest.raises(ValueError):
        ring_determinant([[1, 2]])
    with pytest.raises(ValueError):
        ring_determinant([])


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5),
                                min_size=n, max_size=n), min_size=n, max_size=n)))
def test_agrees_with_leibniz(M):
    assert ring_determinant(M) == leibniz_determinant(M)


def test_agrees_with_sympy():
    sympy = pytest.importorskip("sympy")
    M = [[Fraction(i * j + 1, i + 2) - j for j in range(5)] for i in range(5)]
    expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in M]).det()
    got = ring_determinant(M)
    assert sympy.Rational(got.numerator, got.denominator) == expected
