import random
from math import comb

import pytest

from frobcover.algebra import LinearMap, make_function_algebra
from frobcover.catalog import all_multisets, random_algebra, random_element
from frobcover.errors import CapExceeded
from frobcover.frobenius import is_frobenius
from frobcover.sympower import (
    check_induced_ring_hom,
    diagonal_map,
    induced_ring_hom,
    orbit_size,
    symmetric_power,
)
from frobcover.transfer import direct_image_of_map, sym_power_pullback


def test_dimension_of_square_of_two_points():
    assert symmetric_power(make_function_algebra(["a", "b"]), 2).dim == 3


@pytest.mark.parametrize("d,n", [(1, 1), (2, 2), (3, 3), (3, 2), (2, 3)])
def test_dimension_counts_multisets(d, n):
    X = [f"x{i}" for i in range(d)]
    S = symmetric_power(make_function_algebra(X), n)
    assert S.dim == comb(d + n - 1, n) == len(all_multisets(X, n))
    assert S.invariant_violation() is None


def test_first_power_is_the_algebra():
    rng = random.Random(2)
    A = random_algebra(rng, 3)
    S = symmetric_power(A, 1)
    assert S.dim == A.dim
    assert S.c == A.c
    assert diagonal_map(A, 1, S) == LinearMap.identity(S)


def test_cap():
    with pytest.raises(CapExceeded):
        symmetric_power(make_function_algebra([str(i) for i in range(6)]), 6, max_dim=50)


def test_orbit_size():
    assert orbit_size((0, 0, 1)) == 3
    assert orbit_size((0, 1, 2)) == 6


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_diagonal_is_universal_frobenius(seed, n):
    A = random_algebra(random.Random(seed), 3)
    S = symmetric_power(A, n)
    D = diagonal_map(A, n, S)
    assert D(A.unit) == S.unit * n
    assert is_frobenius(D, n)
    assert induced_ring_hom(D, n, S) == LinearMap.identity(S)


def test_induced_map_of_direct_image_is_pullback_along_t():
    X, Y = ["a", "b", "c"], ["u", "v"]
    CX, CY = make_function_algebra(X), make_function_algebra(Y)
    S = symmetric_power(CX, 3)
    rng = random.Random(5)
    fibres = all_multisets(X, 3)
    for _ in range(10):
        t = {y: rng.choice(fibres) for y in Y}
        f = direct_image_of_map(t, CX, CY)
        assert induced_ring_hom(f, 3, S) == sym_power_pullback(S, t, CY)
        assert check_induced_ring_hom(f, 3, S)


def test_factorisation_through_diagonal():
    rng = random.Random(9)
    X = ["a", "b"]
    CX, CY = make_function_algebra(X), make_function_algebra(["u"])
    f = direct_image_of_map({"u": all_multisets(X, 2)[1]}, CX, CY)
    S = symmetric_power(CX, 2)
    ft = induced_ring_hom(f, 2, S)
    D = diagonal_map(CX, 2, S)
    for _ in range(5):
        a = random_element(rng, CX)
        assert ft(D(a)) == f(a)


def test_non_frobenius_map_is_not_multiplicative():
    CX = make_function_algebra(["a", "b"])
    CY = make_function_algebra(["u"])
    f = LinearMap(CX, CY, [[3, -1]])  # f(1) = 2 but not a sum of evaluations
    assert not is_frobenius(f, 2)
    assert not check_induced_ring_hom(f, 2)
