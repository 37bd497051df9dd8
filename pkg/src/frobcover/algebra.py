"""Finite-dimensional commutative unital algebras given by structure constants.

An algebra of dimension ``d`` stores ``c[i][j][k]`` with
``e_i * e_j = sum_k c[i][j][k] e_k`` and a unit vector.  Elements are
immutable coordinate tuples bound to their algebra; linear maps are matrices
with one row per codomain basis vector.
"""

from __future__ import annotations

from itertools import product
from numbers import Number

from . import linalg
from .scalars import QQ


class AlgebraMismatch(ValueError):
    pass


class CommutativeAlgebra:
    def __init__(self, structure_constants, unit, labels=None, field=QQ, validate=True):
        d = len(structure_constants)
        if d == 0:
            raise ValueError("algebra must have positive dimension")
        self.field = field
        self.dim = d
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(d))
        if len(self.labels) != d:
            raise ValueError("label count does not match dimension")
        co = field.coerce
        try:
            self.c = tuple(
                tuple(tuple(co(structure_constants[i][j][k]) for k in range(d)) for j in range(d))
                for i in range(d)
            )
        except IndexError:
            raise ValueError("structure constants must form a d x d x d tensor") from None
        if len(unit) != d:
            raise ValueError("unit has wrong length")
        self.unit_coords = tuple(co(u) for u in unit)
        self._zero = co(0)
        self._table = [
            [tuple((k, v) for k, v in enumerate(self.c[i][j]) if v != 0) for j in range(d)]
            for i in range(d)
        ]
        if validate:
            bad = self.invariant_violation()
            if bad is not None:
                raise ValueError(f"not a commutative associative unital algebra: {bad}")

    # -- invariants ------------------------------------------------------

    def invariant_violation(self):
        """First failing structural law as a string, or ``None``."""
        d, c, eq = self.dim, self.c, self.field.eq
        for i, j, k in product(range(d), repeat=3):
            if not eq(c[i][j][k], c[j][i][k]):
                return f"commutativity fails at {(i, j, k)}"
        for i in range(d):
            e = self.basis(i)
            if self.unit * e != e:
                return f"unit law fails at basis {i}"
        for i, j, k in product(range(d), repeat=3):
            # (e_i e_j) e_k == e_i (e_j e_k)
            lhs = self.mul_coords(self._table_vec(i, j), self.basis(k).coords)
            rhs = self.mul_coords(self.basis(i).coords, self._table_vec(j, k))
            if any(not eq(x, y) for x, y in zip(lhs, rhs)):
                return f"associativity fails at {(i, j, k)}"
        return None

    def _table_vec(self, i, j):
        return self.c[i][j]

    # -- elements --------------------------------------------------------

    def element(self, coords):
        return AlgebraElement(self, coords)

    def basis(self, i):
        v = [self._zero] * self.dim
        v[i] = self.field.coerce(1)
        return AlgebraElement(self, v, _trusted=True)

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]

    @property
    def unit(self):
        return AlgebraElement(self, self.unit_coords, _trusted=True)

    @property
    def zero(self):
        return AlgebraElement(self, (self._zero,) * self.dim, _trusted=True)

    def scalar(self, s):
        s = self.field.coerce(s)
        return AlgebraElement(self, tuple(s * u for u in self.unit_coords), _trusted=True)

    def mul_coords(self, a, b):
        out = [self._zero] * self.dim
        table = self._table
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            row = table[i]
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                ab = ai * bj
                for k, v in row[j]:
                    out[k] += ab * v
        return out

    def left_mult_matrix(self, a):
        """Matrix of ``x -> a x`` (columns are ``a e_j``)."""
        cols = [self.mul_coords(a.coords, self.basis(j).coords) for j in range(self.dim)]
        return linalg.transpose(cols)

    def is_reduced(self) -> bool:
        """No nonzero nilpotents.

        In characteristic zero the nilradical of a commutative algebra is the
        radical of the trace form ``(x, y) -> Tr(L_{xy})``, so reducedness is
        equivalent to that form being nondegenerate.
        """
        d, c = self.dim, self.c
        tr = [sum(c[k][j][j] for j in range(d)) for k in range(d)]
        form = [[sum(c[i][j][k] * tr[k] for k in range(d)) for j in range(d)] for i in range(d)]
        return linalg.rank(form, self.field) == d

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, CommutativeAlgebra)
            and self.dim == other.dim
            and self.field == other.field
            and self.c == other.c
            and self.unit_coords == other.unit_coords
        )

    def __hash__(self):
        return hash((self.dim, self.labels))

    def __repr__(self):
        return f"<CommutativeAlgebra dim={self.dim} labels={list(self.labels)}>"


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords, _trusted=False):
        if not _trusted:
            if len(coords) != algebra.dim:
                raise ValueError(f"expected {algebra.dim} coordinates, got {len(coords)}")
            coords = tuple(algebra.field.coerce(x) for x in coords)
        self.algebra = algebra
        self.coords = tuple(coords)

    def _check(self, other):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch("elements live in different algebras")

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, Number):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.coords, other.coords)], _trusted=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, [a - b for a, b in zip(self.coords, other.coords)], _trusted=True)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.coords], _trusted=True)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords), _trusted=True)
        if isinstance(other, Number):
            s = self.algebra.field.coerce(other)
            return AlgebraElement(self.algebra, [s * a for a in self.coords], _trusted=True)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, Number):
            other = self.algebra.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra.dim != self.algebra.dim:
            return False
        eq = self.algebra.field.eq
        return all(eq(a, b) for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        z = self.algebra.field.is_zero
        return all(z(a) for a in self.coords)

    def inverse(self):
        A = self.algebra
        x = linalg.solve(A.left_mult_matrix(self), list(A.unit_coords), A.field)
        if x is None:
            raise ZeroDivisionError("element is not invertible")
        return AlgebraElement(A, x, _trusted=True)

    def scalar_value(self):
        """The scalar ``s`` with ``self == s * unit``, or ``None``."""
        A = self.algebra
        i = next(i for i, u in enumerate(A.unit_coords) if not A.field.is_zero(u))
        s = A.field.div(self.coords[i], A.unit_coords[i])
        return s if self == A.scalar(s) else None

    def __repr__(self):
        fmt = self.algebra.field.format
        return f"({', '.join(fmt(x) for x in self.coords)})"


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if not isinstance(a, AlgebraElement) or not isinstance(b, AlgebraElement):
        raise TypeError("mul expects algebra elements")
    return a * b


def power(a: AlgebraElement, k: int) -> AlgebraElement:
    if k < 0:
        raise ValueError("negative exponent")
    result = a.algebra.unit
    for _ in range(k):
        result = result * a
    return result


class LinearMap:
    """Linear map ``domain -> codomain``; ``matrix[row=codomain][col=domain]``."""

    def __init__(self, domain, codomain, matrix):
        co = codomain.field.coerce
        m = tuple(tuple(co(x) for x in row) for row in matrix)
        if len(m) != codomain.dim or any(len(row) != domain.dim for row in m):
            raise ValueError(
                f"matrix must be {codomain.dim}x{domain.dim}, got "
                f"{len(m)}x{len(m[0]) if m else 0}"
            )
        self.domain = domain
        self.codomain = codomain
        self.matrix = m

    @classmethod
    def from_images(cls, domain, codomain, images):
        """Build from the images of the domain basis vectors."""
        cols = [img.coords for img in images]
        return cls(domain, codomain, linalg.transpose(cols))

    @classmethod
    def identity(cls, A):
        return cls(A, A, linalg.identity(A.dim, A.field))

    @classmethod
    def zero(cls, A, B):
        return cls(A, B, linalg.zeros(B.dim, A.dim, B.field))

    def __call__(self, a):
        if a.algebra is not self.domain and a.algebra != self.domain:
            raise AlgebraMismatch("argument is not in the domain of the map")
        v = a.coords
        out = []
        for row in self.matrix:
            s = self.codomain._zero
            for m, x in zip(row, v):
                if m != 0 and x != 0:
                    s += m * x
            out.append(s)
        return AlgebraElement(self.codomain, out, _trusted=True)

    def image_of_basis(self, i):
        return AlgebraElement(self.codomain, [row[i] for row in self.matrix], _trusted=True)

    def __matmul__(self, other):
        """Composition: ``(self @ other)(a) == self(other(a))``."""
        if other.codomain != self.domain:
            raise AlgebraMismatch("cannot compose: middle algebras differ")
        return LinearMap(other.domain, self.codomain, linalg.matmul(self.matrix, other.matrix))

    def __add__(self, other):
        self._same_shape(other)
        return LinearMap(self.domain, self.codomain,
                         [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other):
        self._same_shape(other)
        return LinearMap(self.domain, self.codomain,
                         [[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __mul__(self, s):
        if not isinstance(s, Number):
            return NotImplemented
        s = self.codomain.field.coerce(s)
        return LinearMap(self.domain, self.codomain, [[s * a for a in r] for r in self.matrix])

    __rmul__ = __mul__

    def _same_shape(self, other):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise AlgebraMismatch("maps have different domain or codomain")

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.domain.dim != other.domain.dim or self.codomain.dim != other.codomain.dim:
            return False
        eq = self.codomain.field.eq
        return all(eq(a, b) for r, s in zip(self.matrix, other.matrix) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.matrix)

    def is_ring_hom(self, unital=True):
        """First basis pair ``(i, j)`` where multiplicativity fails, ``"unit"``, or ``None``."""
        A = self.domain
        if unital and self(A.unit) != self.codomain.unit:
            return "unit"
        imgs = [self.image_of_basis(i) for i in range(A.dim)]
        for i in range(A.dim):
            for j in range(i, A.dim):
                if self(A.basis(i) * A.basis(j)) != imgs[i] * imgs[j]:
                    return (i, j)
        return None

    def __repr__(self):
        return f"<LinearMap {self.domain.dim} -> {self.codomain.dim}>"


# -- constructors ------------------------------------------------------------


def make_function_algebra(points, field=QQ):
    """Algebra of functions on a finite set, in the basis of point indicators."""
    points = list(points)
    if not points:
        raise ValueError("empty space")
    if len(set(points)) != len(points):
        raise ValueError("duplicate points")
    d = len(points)
    one, z = field.coerce(1), field.coerce(0)
    c = [[[one if i == j == k else z for k in range(d)] for j in range(d)] for i in range(d)]
    A = CommutativeAlgebra(c, [one] * d, labels=[str(p) for p in points], field=field, validate=False)
    A.points = tuple(points)
    return A


def scalar_algebra(field=QQ):
    return CommutativeAlgebra([[[1]]], [1], labels=["1"], field=field, validate=False)


def monogenic_algebra(q, field=QQ, validate=True):
    """``F[x]/(q)`` for monic ``q`` (coefficients low to high) in the basis ``1, x, ..., x^{d-1}``."""
    q = [field.coerce(a) for a in q]
    d = len(q) - 1
    if d < 1 or q[-1] != 1:
        raise ValueError("q must be monic of positive degree")

    def reduce(v):
        v = list(v)
        for top in range(len(v) - 1, d - 1, -1):
            lead = v[top]
            if lead != 0:
                for k in range(d + 1):
                    v[top - d + k] -= lead * q[k]
        return v[:d]

    c = []
    for i in range(d):
        row = []
        for j in range(d):
            v = [field.coerce(0)] * (2 * d - 1)
            v[i + j] = field.coerce(1)
            row.append(reduce(v))
        c.append(row)
    unit = [field.coerce(1)] + [field.coerce(0)] * (d - 1)
    labels = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, d)]
    return CommutativeAlgebra(c, unit, labels=labels, field=field, validate=validate)


def product_algebra(A, B):
    """Direct product ``A x B`` with componentwise multiplication."""
    d = A.dim + B.dim
    z = A.field.coerce(0)
    c = [[[z] * d for _ in range(d)] for _ in range(d)]
    for i, j, k in product(range(A.dim), repeat=3):
        c[i][j][k] = A.c[i][j][k]
    o = A.dim
    for i, j, k in product(range(B.dim), repeat=3):
        c[o + i][o + j][o + k] = B.c[i][j][k]
    labels = [f"{x}@0" for x in A.labels] + [f"{x}@1" for x in B.labels]
    return CommutativeAlgebra(c, list(A.unit_coords) + list(B.unit_coords), labels=labels,
                              field=A.field, validate=False)


def change_basis(A, P):
    """Re-express ``A`` in the basis whose i-th vector is column i of ``P``."""
    F = A.field
    d = A.dim
    Pinv_aug, piv = linalg.rref([list(P[i]) + linalg.identity(d, F)[i] for i in range(d)], F)
    if piv != list(range(d)):
        raise ValueError("change of basis matrix is singular")
    Pinv = [row[d:] for row in Pinv_aug]
    cols = [[P[r][i] for r in range(d)] for i in range(d)]
    c = []
    for i in range(d):
        row = []
        for j in range(d):
            prod_old = A.mul_coords(cols[i], cols[j])
            row.append(linalg.matvec(Pinv, prod_old))
        c.append(row)
    unit = linalg.matvec(Pinv, list(A.unit_coords))
    return CommutativeAlgebra(c, unit, field=F, validate=False)
