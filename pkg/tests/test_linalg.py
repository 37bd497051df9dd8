from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frobcover import linalg
from frobcover.scalars import ComplexField

ints = st.integers(-3, 3)


@given(st.lists(st.lists(ints, min_size=4, max_size=4), min_size=1, max_size=4))
def test_nullspace_vectors_are_killed_and_rank_nullity(A):
    A = [[Fraction(x) for x in r] for r in A]
    N = linalg.nullspace(A, 4)
    for v in N:
        assert all(x == 0 for x in linalg.matvec(A, v))
    assert linalg.rank(A) + len(N) == 4


def test_rank_matches_sympy():
    sympy = pytest.importorskip("sympy")
    A = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert linalg.rank([[Fraction(x) for x in r] for r in A]) == sympy.Matrix(A).rank()


def test_solve_and_identity():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    x = linalg.solve(A, [Fraction(3), Fraction(5)])
    assert linalg.matvec(A, x) == [3, 5]
    assert linalg.matmul(A, linalg.identity(2)) == A


def test_complex_rank_uses_tolerance():
    F = ComplexField(1e-9)
    A = [[1, 1j], [1 + 1e-12, 1j]]
    assert linalg.rank(A, F) == 1
