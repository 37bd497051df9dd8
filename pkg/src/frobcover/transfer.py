"""Direct images, pullbacks and n-transfers.

For a ring homomorphism ``f: A -> B`` a linear ``tau: B -> A`` is an
n-transfer when (i) tau is a Frobenius n-homomorphism, (ii)
``tau(f(a) b) = a tau(b)`` and (iii) ``g = f tau - id`` is a Frobenius
(n-1)-homomorphism.  For a finite covering ``h: X -> Y`` with ``t`` the pair
``(h^*, t_!)`` is the motivating example.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import AlgebraElement, LinearMap, make_function_algebra
from .coverings import FiniteCovering, Multiset, check_covering
from .errors import InputError
from .frobenius import gugnin_kernel, is_frobenius
from .report import all_of, failed, passed


def _points(A):
    return getattr(A, "points", A.labels)


def direct_image_of_map(t, CX, CY):
    """``(t_! phi)(y) = sum over t(y) of phi``; matrix entry [y][x] = multiplicity."""
    X, Y = _points(CX), _points(CY)
    xi = {x: i for i, x in enumerate(X)}
    M = [[0] * len(X) for _ in Y]
    for r, y in enumerate(Y):
        for x, m in t[y].items():
            M[r][xi[x]] = m
    return LinearMap(CX, CY, M)


def direct_image(c: FiniteCovering, CX=None, CY=None):
    CX = CX or make_function_algebra(c.X)
    CY = CY or make_function_algebra(c.Y)
    return direct_image_of_map(c.t, CX, CY)


def pullback_along(h, CY, CX):
    """``h^* psi = psi o h`` as a map ``C(Y) -> C(X)``."""
    X, Y = _points(CX), _points(CY)
    yi = {y: i for i, y in enumerate(Y)}
    M = [[0] * len(Y) for _ in X]
    for r, x in enumerate(X):
        M[r][yi[h[x]]] = 1
    return LinearMap(CY, CX, M)


def pullback_hom(c: FiniteCovering, CX=None, CY=None):
    CX = CX or make_function_algebra(c.X)
    CY = CY or make_function_algebra(c.Y)
    return pullback_along(c.h, CY, CX)


@dataclass
class CoveringFunctionData:
    covering: FiniteCovering
    CX: object
    CY: object
    h_star: LinearMap
    t_shriek: LinearMap

    @classmethod
    def of(cls, c: FiniteCovering):
        CX, CY = make_function_algebra(c.X), make_function_algebra(c.Y)
        return cls(c, CX, CY, pullback_hom(c, CX, CY), direct_image(c, CX, CY))

    def transfer(self):
        return TransferTriple(self.h_star, self.t_shriek, self.covering.n)


class TransferTriple:
    """Ring homomorphism ``f: A -> B`` with candidate n-transfer ``tau: B -> A``."""

    def __init__(self, f: LinearMap, tau: LinearMap, n: int):
        if tau.domain != f.codomain or tau.codomain != f.domain:
            raise InputError("tau must map the codomain of f back to its domain")
        self.f = f
        self.tau = tau
        self.n = n

    @property
    def A(self):
        return self.f.domain

    @property
    def B(self):
        return self.f.codomain

    @property
    def g(self):
        return (self.f @ self.tau) - LinearMap.identity(self.B)

    def L_basis(self):
        """Basis of ``{b : g(b) = -b}``."""
        G = self.g + LinearMap.identity(self.B)
        return [AlgebraElement(self.B, v) for v in linalg.nullspace([list(r) for r in G.matrix], self.B.dim, self.B.field)]


def check_transfer(tt: TransferTriple, max_tuples=None):
    """All three transfer conditions; the witness names the first failing one."""
    return all_of("check_transfer", transfer_condition_results(tt, max_tuples), value=tt.n)


def transfer_condition_results(tt: TransferTriple, max_tuples=None):
    kw = {} if max_tuples is None else {"max_tuples": max_tuples}
    results = []
    bad = tt.f.is_ring_hom()
    results.append(passed("f_ring_hom") if bad is None else failed("f_ring_hom", bad))
    r1 = is_frobenius(tt.tau, tt.n, **kw)
    results.append(passed("transfer_i_frobenius") if r1 else
                   failed("transfer_i_frobenius", r1.witness, r1.value, r1.detail))
    results.append(_module_map(tt))
    r3 = is_frobenius(tt.g, tt.n - 1, **kw) if tt.n >= 1 else failed("g", "n < 1")
    results.append(passed("transfer_iii_g_frobenius") if r3 else
                   failed("transfer_iii_g_frobenius", r3.witness, r3.value, r3.detail))
    return results


def _module_map(tt):
    A, B = tt.A, tt.B
    for i in range(A.dim):
        fa = tt.f(A.basis(i))
        for j in range(B.dim):
            lhs = tt.tau(fa * B.basis(j))
            rhs = A.basis(i) * tt.tau.image_of_basis(j)
            if lhs != rhs:
                return failed("transfer_ii_module_map", [i, j], [lhs, rhs])
    return passed("transfer_ii_module_map")


def check_transfer_consequences(tt: TransferTriple):
    return all_of("transfer_consequences", transfer_consequence_results(tt))


def transfer_consequence_results(tt: TransferTriple):
    """tau f = n, g f = (n-1) f, tau g = (n-1) tau, ker tau = L, B = L + im f."""
    A, B, n = tt.A, tt.B, tt.n
    f, tau, g = tt.f, tt.tau, tt.g
    out = []
    out.append(_map_eq("tau_f_is_n", tau @ f, LinearMap.identity(A) * n))
    out.append(_map_eq("g_f", g @ f, f * (n - 1)))
    out.append(_map_eq("tau_g", tau @ g, tau * (n - 1)))
    L = tt.L_basis()
    ker = linalg.nullspace([list(r) for r in tau.matrix], B.dim, B.field)
    span_L = [list(v.coords) for v in L]
    same = (linalg.rank(span_L + ker, B.field) == len(L) == len(ker)) if (L or ker) else True
    out.append(passed("ker_tau_is_L", len(L)) if same else failed("ker_tau_is_L", [len(L), len(ker)]))
    im_f = linalg.column_space_basis([list(r) for r in f.matrix], B.field)
    total = linalg.rank(span_L + im_f, B.field) if (span_L or im_f) else 0
    ok = total == B.dim and len(L) + len(im_f) == B.dim
    out.append(passed("B_is_L_plus_im_f", [len(L), len(im_f)]) if ok else
               failed("B_is_L_plus_im_f", [len(L), len(im_f), total]))
    # tau is split by f/n
    split = tau @ (f * Fraction(1, n)) if n else None
    out.append(_map_eq("tau_split_by_f_over_n", split, LinearMap.identity(A)) if n else
               failed("tau_split_by_f_over_n", "n = 0"))
    if n == 2:
        out.append(_products_of_L_in_image(tt, L, im_f))
    return out


def _products_of_L_in_image(tt, L, im_f):
    B = tt.B
    r0 = linalg.rank(im_f, B.field) if im_f else 0
    for i, x in enumerate(L):
        for j, y in enumerate(L[i:], start=i):
            xy = list((x * y).coords)
            if linalg.rank(im_f + [xy], B.field) != r0:
                return failed("L_products_in_image_f", [i, j], x * y)
    return passed("L_products_in_image_f", len(L), detail="xy lies in the image of f for all x, y in L")


def _map_eq(name, lhs, rhs):
    for j in range(lhs.domain.dim):
        a, b = lhs.image_of_basis(j), rhs.image_of_basis(j)
        if a != b:
            return failed(name, j, [a, b])
    return passed(name)


def compose_transfers(tt1: TransferTriple, tt2: TransferTriple) -> TransferTriple:
    """``tau: B -> A`` for ``f``, ``sigma: C -> B`` for ``g`` give
    ``tau sigma: C -> A``, an nm-transfer for ``g f``."""
    if tt1.B != tt2.A:
        raise InputError("middle algebras do not match")
    return TransferTriple(tt2.f @ tt1.f, tt1.tau @ tt2.tau, tt1.n * tt2.n)


def kernel_triviality(tt: TransferTriple):
    """Gugnin kernel of tau is zero when both algebras are reduced."""
    for name, alg in (("A", tt.A), ("B", tt.B)):
        if not alg.is_reduced():
            return failed("kernel_triviality", f"{name} has nilpotents", detail="precondition fails")
    K = gugnin_kernel(tt.tau, tt.n)
    if K:
        return failed("kernel_triviality", K[0], len(K))
    return passed("kernel_triviality", 0)


class NotMultisetValued(InputError):
    pass


def frobenius_to_map(f: LinearMap, n: int, verify=False):
    """Read ``t(y)`` off a Frobenius n-homomorphism ``C(X) -> C(Y)``:
    the multiplicity of x in t(y) is ``f(delta_x)(y)``."""
    if verify:
        r = is_frobenius(f, n)
        if not r:
            raise NotMultisetValued(f"not a Frobenius {n}-homomorphism: {r.witness}")
    CX, CY = f.domain, f.codomain
    X, Y = _points(CX), _points(CY)
    field = CY.field
    t = {}
    for r, y in enumerate(Y):
        mult = {}
        for c, x in enumerate(X):
            v = f.matrix[r][c]
            if field.exact:
                if v.denominator != 1 or v < 0:
                    raise NotMultisetValued(f"not a multiset-valued Frobenius map: f(delta_{x})({y}) = {v}")
                k = int(v)
            else:
                k = round(complex(v).real)
                if abs(complex(v) - k) > 10 * field.epsilon or k < 0:
                    raise NotMultisetValued(f"not a multiset-valued Frobenius map: f(delta_{x})({y}) = {v}")
            if k:
                mult[x] = k
        ms = Multiset(mult)
        if ms.n != n:
            raise NotMultisetValued(f"t({y}) has {ms.n} points, expected {n}")
        t[y] = ms
    if direct_image_of_map(t, CX, CY) != f:
        raise AssertionError("direct image of the recovered map differs from f")
    return t


def theorem_5_2_roundtrip(h: dict, tau: LinearMap, n: int):
    """From a map h and an n-transfer for h^*, rebuild the covering (h, t)."""
    CX, CY = tau.domain, tau.codomain
    t = frobenius_to_map(tau, n)
    c = FiniteCovering(_points(CX), _points(CY), n, dict(h), t)
    r = check_covering(c)
    if not r:
        return None, failed("theorem_5_2_roundtrip", r.witness, r.value, r.detail)
    return c, passed("theorem_5_2_roundtrip", n)


def sym_power_pullback(S, t, CY):
    """Pullback along ``t: Y -> Sym^n(X)`` as a map ``S^n C(X) -> C(Y)``,
    using the identification of the orbit sum ``m_lambda`` with the indicator
    of the multiset ``lambda``."""
    X = _points(S.base)
    xi = {x: i for i, x in enumerate(X)}
    Y = _points(CY)
    M = [[0] * S.dim for _ in Y]
    for r, y in enumerate(Y):
        lam = tuple(sorted(xi[x] for x in t[y].elements()))
        M[r][S.index[lam]] = 1
    return LinearMap(S, CY, M)
