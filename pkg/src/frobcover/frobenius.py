"""The forms Phi_n(f) attached to a linear map, and Frobenius n-homomorphisms.

For a linear map ``f: A -> B`` of commutative algebras, ``Phi_n(f)`` is the
symmetric n-linear map

    Phi_n(f)(a_1, ..., a_n) = sum over sigma in S_n of sign(sigma) *
        prod over cycles (i_1 ... i_m) of sigma of f(a_{i_1} ... a_{i_m}).

``f`` is a Frobenius n-homomorphism when ``f(1) = n`` and ``Phi_{n+1}(f)``
vanishes identically.  Three independent evaluators are provided (cycle sum,
recursion, determinant) and cross-checked in the test-suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import comb, factorial

from .algebra import AlgebraElement, LinearMap, power
from .determinant import ring_determinant
from .errors import CapExceeded
from .linalg import nullspace
from .polynomial import Polynomial, TruncatedSeries, series_log_derivative
from .report import failed, passed

CYCLE_SUM_CAP = 7
DEFAULT_MAX_TUPLES = 250_000


def cycles(perm):
    """Cycle decomposition of a permutation given as a tuple of images."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        out.append(tuple(cyc))
    return out


def phi_cycle_sum(f: LinearMap, args, cap=CYCLE_SUM_CAP):
    """Phi_n(f)(args) by literal enumeration of the symmetric group."""
    n = len(args)
    if n > cap:
        raise CapExceeded("factorial blow-up; use recursive engine", count=factorial(n))
    B = f.codomain
    if n == 0:
        return B.unit
    # f of the product over a subset only depends on the subset
    cache = {}

    def f_of(mask):
        v = cache.get(mask)
        if v is None:
            prod = None
            for i in range(n):
                if mask >> i & 1:
                    prod = args[i] if prod is None else prod * args[i]
            v = cache[mask] = f(prod)
        return v

    total = B.zero
    for perm in permutations(range(n)):
        cyc = cycles(perm)
        term = None
        for c in cyc:
            mask = 0
            for i in c:
                mask |= 1 << i
            v = f_of(mask)
            term = v if term is None else term * v
        if (n - len(cyc)) % 2:
            total = total - term
        else:
            total = total + term
    return total


def _multiset_key(items):
    return frozenset(Counter(a.coords for a in items).items())


def phi_recursive(f: LinearMap, n: int, args, memo=True):
    """Phi_n(f)(args) from Phi_1 = f and

        Phi_{k+1}(a_0, ..., a_k) = f(a_0) Phi_k(a_1, ..., a_k)
                                   - sum_r Phi_k(a_1, ..., a_0 a_r, ..., a_k).
    """
    args = tuple(args)
    if len(args) != n:
        raise ValueError(f"expected {n} arguments, got {len(args)}")
    for a in args:
        if a.algebra != f.domain:
            raise ValueError("argument outside the domain of f")
    table = {} if memo else None
    B = f.codomain

    def rec(items):
        k = len(items)
        if k == 0:
            return B.unit
        if k == 1:
            return f(items[0])
        if table is not None:
            key = _multiset_key(items)
            hit = table.get(key)
            if hit is not None:
                return hit
        a0, rest = items[0], items[1:]
        val = f(a0) * rec(rest)
        for r in range(len(rest)):
            val = val - rec(rest[:r] + (a0 * rest[r],) + rest[r + 1:])
        if table is not None:
            table[key] = val
        return val

    return rec(args)


def phi_diagonal_determinant(f: LinearMap, n: int, a: AlgebraElement):
    """Phi_n(f)(a, ..., a) as the determinant of the n x n matrix with
    ``f(a^{i-j+1})`` on and below the diagonal and ``1, 2, ..., n-1`` on the
    superdiagonal."""
    B = f.codomain
    if n == 0:
        return B.unit
    return phi_from_power_images([f(p) for p in _powers(a, n)], B.unit)


def phi_from_power_images(images, one):
    """The same determinant from ``images[k] = f(a^(k+1))`` in any commutative
    ring with identity ``one``."""
    n = len(images)
    if n == 0:
        return one
    zero = one * 0
    M = [[images[i - j] if j <= i else (one * (i + 1) if j == i + 1 else zero)
          for j in range(n)] for i in range(n)]
    return ring_determinant(M)


def _powers(a, n):
    out = []
    p = a
    for _ in range(n):
        out.append(p)
        p = p * a
    return out


class PhiTable:
    """Memoised Phi_k(f) on multisets of domain basis vectors.

    Products of basis vectors are expanded through the structure constants,
    so every recursive call again lands on a basis multiset.
    """

    def __init__(self, f: LinearMap):
        self.f = f
        self.A = f.domain
        self.B = f.codomain
        self._f_basis = [f.image_of_basis(i) for i in range(self.A.dim)]
        self._memo = {(): self.B.unit}

    def __call__(self, idx):
        idx = tuple(sorted(idx))
        memo = self._memo
        hit = memo.get(idx)
        if hit is not None:
            return hit
        if len(idx) == 1:
            val = self._f_basis[idx[0]]
        else:
            i0, rest = idx[0], idx[1:]
            val = self._f_basis[i0] * self(rest)
            table = self.A._table
            for r, ir in enumerate(rest):
                for m, coeff in table[i0][ir]:
                    sub = self(rest[:r] + (m,) + rest[r + 1:])
                    val = val - sub * coeff
        memo[idx] = val
        return val

    def evaluate(self, args):
        """Phi_k(f)(args) for arbitrary elements, by multilinear expansion."""
        total = self.B.zero
        supports = [[(i, c) for i, c in enumerate(a.coords) if c != 0] for a in args]

        def walk(pos, idx, coeff):
            nonlocal total
            if pos == len(args):
                total = total + self(idx) * coeff
                return
            for i, c in supports[pos]:
                walk(pos + 1, idx + (i,), coeff * c)

        walk(0, (), 1)
        return total


def phi_vanishes(f: LinearMap, m: int, max_tuples=DEFAULT_MAX_TUPLES, table=None):
    """Check Phi_m(f) == 0 on every multiset of m basis vectors.

    Symmetry and multilinearity make this equivalent to Phi_m(f) == 0.
    The witness is the lexicographically first failing index tuple.
    """
    d = f.domain.dim
    count = comb(d + m - 1, m)
    if count > max_tuples:
        raise CapExceeded(f"Phi_{m} sweep needs {count} basis tuples (cap {max_tuples})", count=count)
    table = table or PhiTable(f)
    for idx in combinations_with_replacement(range(d), m):
        v = table(idx)
        if not v.is_zero():
            return failed(f"phi_{m}_vanishes", list(idx), v)
    return passed(f"phi_{m}_vanishes", count)


def is_frobenius(f: LinearMap, n: int, max_tuples=DEFAULT_MAX_TUPLES):
    """Verify f(1) = n and Phi_{n+1}(f) == 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    A, B = f.domain, f.codomain
    f1 = f(A.unit)
    if f1 != B.scalar(n):
        return failed("is_frobenius", "f(1)", f1, detail=f"f(1) != {n}")
    r = phi_vanishes(f, n + 1, max_tuples=max_tuples)
    if not r.passed:
        return failed("is_frobenius", r.witness, r.value, detail=f"Phi_{n + 1}(f) nonzero")
    return passed("is_frobenius", n)


def scalar_target_unit_range(f: LinearMap, n: int):
    """For f into the one-dimensional algebra with Phi_{n+1}(f) == 0: f(1) in {0..n}."""
    B = f.codomain
    if B.dim != 1:
        raise ValueError("codomain must be the scalar algebra")
    s = f(f.domain.unit).scalar_value()
    ok = s is not None and B.field.exact and Fraction(s).denominator == 1 and 0 <= s <= n
    if not B.field.exact and s is not None:
        k = round(complex(s).real)
        ok = B.field.eq(s, k) and 0 <= k <= n
        s = k if ok else s
    if ok:
        return passed("unit_range", int(s))
    return failed("unit_range", "f(1)", s, detail=f"f(1) not an integer in 0..{n}")


# -- characteristic polynomial and the series identity ---------------------


@dataclass(frozen=True)
class CharPoly:
    determinant: Polynomial
    normalized: Polynomial
    ratio: object  # observed constant with determinant == ratio * normalized, or None


def char_poly(f: LinearMap, n: int, a: AlgebraElement, factorial_weights=True):
    """The degree-n polynomial det(M) in B[t] built from ``f(a^k)``.

    ``M`` is the (n+1) x (n+1) matrix whose first n rows are those of the
    Phi_n determinant with an extra superdiagonal ``n``, and whose last row is
    ``t^n, t^(n-1), ..., t, 1``.  ``normalized`` is
    ``sum_k (-1)^k Phi_k(f)(a)/w_k t^(n-k)`` with ``w_k = k!`` (set
    ``factorial_weights=False`` to use ``w_k = k``).
    """
    B = f.codomain
    det, normalized = char_poly_from_power_images([f(p) for p in _powers(a, n)], B.unit,
                                                  factorial_weights)
    return CharPoly(det, normalized, _proportionality(det, normalized))


def char_poly_from_power_images(images, one, factorial_weights=True):
    """``(det(M), normalized)`` from ``images[k] = f(a^(k+1))`` in any
    commutative ring with identity ``one``; works with indeterminate entries."""
    n = len(images)
    z = one * 0

    def const(x):
        return Polynomial([x], zero=z)

    M = []
    for i in range(n):
        row = []
        for j in range(n + 1):
            if j <= i:
                row.append(const(images[i - j]))
            elif j == i + 1:
                row.append(const(one * (i + 1)))
            else:
                row.append(Polynomial([], zero=z))
        M.append(row)
    M.append([Polynomial.monomial(n - j, one, zero=z) for j in range(n + 1)])
    det = ring_determinant(M)

    coeffs = [z] * (n + 1)
    for k in range(n + 1):
        w = factorial(k) if factorial_weights else max(k, 1)
        coeffs[n - k] = phi_from_power_images(images[:k], one) * Fraction((-1) ** k, w)
    return det, Polynomial(coeffs, zero=z)


def _proportionality(p, q):
    """Scalar c with p == c q, or None."""
    if q.is_zero():
        return None
    lead = q.leading.scalar_value()
    plead = p.leading.scalar_value() if not p.is_zero() else None
    if lead is None or plead is None or p.degree != q.degree:
        return None
    field = q.leading.algebra.field
    c = field.div(plead, lead)
    return c if p == q * c else None


def power_series_of(f: LinearMap, a: AlgebraElement, order: int):
    """``sum_{q=0}^{order} f(a^q) / t^(q+1)``."""
    coeffs = []
    p = a.algebra.unit
    for _ in range(order + 1):
        coeffs.append(f(p))
        p = p * a
    return TruncatedSeries(coeffs, order)


def series_identity_check(f: LinearMap, n: int, a: AlgebraElement, order=None):
    """Compare ``sum f(a^q)/t^(q+1)`` with ``d/dt log det(M)`` coefficientwise."""
    if order is None:
        order = 2 * n + 2
    if order < 2 * n + 2:
        raise ValueError("order must be at least 2n+2")
    lhs = power_series_of(f, a, order)
    rhs = series_log_derivative(char_poly(f, n, a).determinant, order)
    q = lhs.first_difference(rhs)
    if q is None:
        return passed("series_identity", order)
    return failed("series_identity", q, [lhs.coeffs[q], rhs.coeffs[q]],
                  detail=f"coefficient of 1/t^{q + 1} differs")


# -- Newton identities --------------------------------------------------------


def newton_transform(power_sums):
    """Elementary symmetric values e_1..e_n from power sums s_1..s_n via
    ``s_r - s_{r-1} e_1 + ... + (-1)^(r-1) s_1 e_(r-1) + (-1)^r r e_r = 0``."""
    s = list(power_sums)
    e = [1]
    for r in range(1, len(s) + 1):
        acc = s[r - 1]
        for i in range(1, r):
            term = s[r - i - 1] * e[i]
            acc = acc - term if i % 2 else acc + term
        e.append(acc * Fraction((-1) ** (r + 1), r))
    return e[1:]


def elementary_to_power_sums(elementary, count=None):
    """Inverse of :func:`newton_transform`; ``e_i = 0`` beyond the given list."""
    e = list(elementary)
    n = len(e)
    count = n if count is None else count
    s = []
    for r in range(1, count + 1):
        acc = None
        for i in range(1, min(r - 1, n) + 1):
            term = e[i - 1] * s[r - i - 1]
            term = term if i % 2 else -term
            acc = term if acc is None else acc + term
        if r <= n:
            last = e[r - 1] * r
            last = last if r % 2 else -last
            acc = last if acc is None else acc + last
        s.append(acc)
    return s


# -- Gugnin kernel --------------------------------------------------------------


def gugnin_kernel(f: LinearMap, n: int | None = None):
    """Basis of ``{a : f(a x) = 0 for all x}``."""
    A = f.domain
    rows = []
    for j in range(A.dim):
        ej = A.basis(j)
        cols = [f(A.basis(i) * ej).coords for i in range(A.dim)]
        for r in range(f.codomain.dim):
            rows.append([cols[i][r] for i in range(A.dim)])
    return [AlgebraElement(A, v) for v in nullspace(rows, A.dim, A.field)]


def power_condition(f: LinearMap, n: int, a: AlgebraElement) -> bool:
    """``f(a^r) = 0`` for ``1 <= r <= n``."""
    return all(f(power(a, r)).is_zero() for r in range(1, n + 1))
