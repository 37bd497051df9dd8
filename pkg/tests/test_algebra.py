from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from frobcover.algebra import (
    AlgebraMismatch,
    CommutativeAlgebra,
    LinearMap,
    change_basis,
    make_function_algebra,
    monogenic_algebra,
    mul,
    power,
    product_algebra,
    scalar_algebra,
)
from frobcover.scalars import QQ, ComplexField, field_from_name

small = st.integers(-5, 5)


def C(*pts):
    return make_function_algebra(list(pts))


def test_singleton_function_algebra():
    A = C("x")
    assert A.dim == 1
    assert A.unit.coords == (1,)


def test_two_point_function_algebra_products():
    A = C("x1", "x2")
    e1, e2 = A.basis_elements()
    assert e1 * e2 == A.zero
    assert e1 * e1 == e1
    assert A.unit.coords == (1, 1)


def test_three_point_invariants():
    assert C("x1", "x2", "x3").invariant_violation() is None


def test_empty_space_rejected():
    with pytest.raises(ValueError, match="empty space"):
        make_function_algebra([])


def test_pointwise_product():
    A = C("x1", "x2")
    assert mul(A.element([1, 2]), A.element([3, 4])).coords == (3, 8)


def test_unit_law_and_power():
    A = C("x1", "x2")
    a = A.element([2, 3])
    assert A.unit * a == a
    assert power(a, 0) == A.unit
    assert power(a, 1) == a
    assert power(a, 3).coords == (8, 27)
    assert a ** 3 == power(a, 3)


def test_mismatched_algebras_refuse_to_multiply():
    a = C("x").unit
    b = C("y", "z").unit
    with pytest.raises(AlgebraMismatch):
        mul(a, b)


def test_rejects_noncommutative_table():
    c = [[[1, 0], [0, 1]], [[1, 0], [0, 0]]]
    with pytest.raises(ValueError, match="commutativity"):
        CommutativeAlgebra(c, [1, 0])


def test_rejects_bad_unit():
    c = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    with pytest.raises(ValueError, match="unit"):
        CommutativeAlgebra(c, [1, 0])


def test_monogenic_dual_numbers():
    A = monogenic_algebra([0, 0, 1])  # Q[x]/(x^2)
    x = A.basis(1)
    assert x * x == A.zero
    assert not A.is_reduced()
    assert C("p", "q").is_reduced()


def test_monogenic_split_is_reduced():
    assert monogenic_algebra([-2, 1, 1]).is_reduced()  # (x - 1)(x + 2)


@given(st.lists(small, min_size=9, max_size=9))
def test_associativity_after_change_of_basis(entries):
    P = [entries[0:3], entries[3:6], entries[6:9]]
    from frobcover import linalg

    if linalg.rank(P) < 3:
        return
    A = change_basis(C("a", "b", "c"), P)
    assert A.invariant_violation() is None


@given(st.lists(small, min_size=9, max_size=9))
def test_random_triples_associate(coords):
    A = product_algebra(monogenic_algebra([1, 0, 1]), C("p"))
    a, b, c = (A.element(coords[i:i + 3]) for i in (0, 3, 6))
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


def test_scalars_lift_to_unit_multiples():
    A = monogenic_algebra([0, 0, 1])
    a = A.element([1, 2])
    assert a + 1 == A.element([2, 2])
    assert a * Fraction(1, 2) == A.element([Fraction(1, 2), 1])
    assert (a - a).is_zero()


def test_inverse_in_function_algebra():
    A = C("x", "y")
    a = A.element([2, -4])
    assert a * a.inverse() == A.unit


def test_linear_map_composition_and_ring_hom():
    A, B = C("x", "y"), C("u")
    ev = LinearMap(A, B, [[1, 0]])
    assert ev.is_ring_hom() is None
    two = LinearMap(A, B, [[1, 1]])
    assert two.is_ring_hom() == "unit"
    ident = LinearMap.identity(A)
    assert ev @ ident == ev
    assert (two - ev) == LinearMap(A, B, [[0, 1]])
    assert ev * 3 == LinearMap(A, B, [[3, 0]])


def test_linear_map_shape_checked():
    with pytest.raises(ValueError):
        LinearMap(C("x", "y"), C("u"), [[1, 0, 0]])


def test_scalar_algebra_is_one_dimensional():
    Q = scalar_algebra()
    assert Q.dim == 1 and Q.unit.scalar_value() == 1


def test_rational_field_refuses_floats():
    with pytest.raises(TypeError):
        QQ.coerce(0.5)
    assert QQ.coerce("3/4") == Fraction(3, 4)
    assert QQ.format(Fraction(3, 4)) == "3/4"


def test_complex_field_tolerance():
    F = ComplexField(1e-6)
    assert F.eq(1 + 1e-7, 1)
    assert not F.eq(1 + 1e-5, 1)
    assert F.coerce("1+2i") == 1 + 2j
    assert field_from_name("complex", 1e-3).epsilon == 1e-3
    with pytest.raises(ValueError):
        ComplexField(0.0 - 1)


def test_complex_backend_algebra():
    A = make_function_algebra(["x", "y"], field=ComplexField())
    a = A.element([1j, 2])
    assert (a * a).coords == (-1, 4)


def test_structure_constants_of_product_block_diagonal():
    A = product_algebra(C("x"), monogenic_algebra([0, 0, 1]))
    for i, j, k in product(range(3), repeat=3):
        if (i == 0) != (j == 0) and A.c[i][j][k] != 0:
            pytest.fail("cross terms between factors")
