import cmath
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frobcover.coverings import check_covering
from frobcover.errors import InputError
from frobcover.polycover import (
    PolynomialCovering,
    PolyTransfer,
    check_poly_transfer,
    fiber_shape,
    finite_model,
    poly_covering_numeric_check,
    poly_transfer,
    polynomial_fiber,
)
from frobcover.polynomial import Polynomial

from oracles import power_sums_from_roots


def test_square_fibres():
    pc = PolynomialCovering([0, 0, 1])
    assert fiber_shape(polynomial_fiber(pc, 0)) == [2]
    fib = polynomial_fiber(pc, 4)
    assert fiber_shape(fib) == [1, 1]
    assert sorted(z.real for z in fib.support) == [-2, 2]


def test_cubic_branch_point():
    pc = PolynomialCovering([0, -3, 0, 1])
    fib = polynomial_fiber(pc, 2)
    assert dict(fib.items()) == {complex(-1): 2, complex(2): 1}
    pts = fib.elements()
    assert abs(sum(pts)) < 1e-12
    assert abs(sum(z * z for z in pts) - 6) < 1e-9
    assert fiber_shape(polynomial_fiber(pc, -2)) == [2, 1]
    assert fiber_shape(polynomial_fiber(pc, 0)) == [1, 1, 1]


def test_triple_root():
    pc = PolynomialCovering([0, 0, 0, 1])
    assert dict(polynomial_fiber(pc, 0).items()) == {0j: 3}


def test_degree_validation():
    with pytest.raises(InputError):
        PolynomialCovering([3])
    with pytest.raises(InputError):
        PolynomialCovering([1, 1e-12], root_tol=1e-9)


def test_square_transfer_exact():
    w = Polynomial.monomial(1, Fraction(1))
    sums = poly_transfer([0, 0, 1], 4)
    assert sums[0] == Polynomial([Fraction(2)])
    assert sums[1].is_zero()
    assert sums[2] == w * 2
    assert sums[3].is_zero()
    assert sums[4] == w * w * 2


@pytest.mark.parametrize("coeffs", [[0, 0, 1], [1, 2, 1], [0, -3, 0, 1], [2, -1, 0, 0, 1], [0, 1]])
def test_symbolic_transfer_conditions(coeffs):
    p = Polynomial([Fraction(c) for c in coeffs])
    assert check_poly_transfer(PolyTransfer(p, 2 * p.degree))


def test_complex_coefficients():
    p = Polynomial([1j, 0, 1])
    assert check_poly_transfer(PolyTransfer(p, 4))


@pytest.mark.parametrize("coeffs", [[0, 0, 1], [0, -3, 0, 1], [1, 0, -2, 0, 1], [Fraction(1, 2), 1, 0, Fraction(-1, 3)]])
def test_numeric_against_symbolic(coeffs):
    pc = PolynomialCovering(coeffs)
    rng = random.Random(0)
    samples = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(20)]
    r = poly_covering_numeric_check(pc, samples)
    assert r, r.detail


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(-3, 3))
def test_power_sums_match_roots(roots, shift):
    # p(z) = prod (z - r) + shift, so the fibre over w = shift is the root list
    p = Polynomial([Fraction(1)])
    for r in roots:
        p = p * Polynomial([Fraction(-r), Fraction(1)])
    p = p + Polynomial([Fraction(shift)])
    pt = PolyTransfer(p, 5)
    for k in range(6):
        assert pt.tau_monomial(k)(Fraction(shift)) == power_sums_from_roots([Fraction(r) for r in roots], k)


def test_zero_tolerance_fails_gracefully():
    pc = PolynomialCovering([0, -3, 0, 1])
    samples = [cmath.exp(1j * k) * 3.7 for k in range(5)]
    r = poly_covering_numeric_check(pc, samples, tol=0.0)
    assert not r
    assert "tolerance" in r.detail


def test_finite_model_is_covering():
    pc = PolynomialCovering([0, -3, 0, 1])
    c = finite_model(pc, [2, -2, 0, 2])
    assert len(c.Y) == 3
    assert check_covering(c)
    assert len(c.X) == 2 + 2 + 3


def test_roots_numpy_agreement():
    pc = PolynomialCovering([5, -1, 2, 0, 1])
    w = 1 + 2j
    fib = polynomial_fiber(pc, w)
    ref = np.sort_complex(np.roots([1, 0, 2, -1, 5 - w]))
    got = np.sort_complex(np.array(fib.elements()))
    assert np.allclose(ref, got, atol=1e-9)
