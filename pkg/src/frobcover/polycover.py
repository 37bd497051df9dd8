"""Polynomial self-coverings of the complex line.

A degree-n polynomial ``p`` gives an n-branched covering ``z -> p(z)`` with
``t(w)`` the roots of ``p(z) = w`` counted with multiplicity.  The fibres are
computed numerically; the transfer ``tau`` on ``C[z]`` is computed exactly from
the coefficients of ``p`` through Newton's identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .coverings import Multiset
from .errors import InputError, RootFindingError
from .frobenius import elementary_to_power_sums, phi_from_power_images
from .polynomial import Polynomial
from .report import CheckResult, failed, passed

DEFAULT_CLUSTER_RADIUS = 1e-6


@dataclass
class PolynomialCovering:
    """``coeffs`` low to high degree; roots closer than ``cluster_radius`` merge."""

    coeffs: list
    root_tol: float = 1e-9
    cluster_radius: float = DEFAULT_CLUSTER_RADIUS
    _c: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        c = [complex(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        if len(c) < 2:
            raise InputError("a polynomial covering needs degree at least 1")
        if abs(c[-1]) <= self.root_tol:
            raise InputError("leading coefficient is below the root tolerance")
        self._c = np.array(c, dtype=complex)

    @property
    def n(self) -> int:
        return len(self._c) - 1

    def __call__(self, z):
        return np.polyval(self._c[::-1], z)

    def exact_polynomial(self) -> Polynomial:
        return Polynomial([_exact(x) for x in self.coeffs])


def _exact(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            return complex(x.replace("i", "j"))
    return complex(x)


def _clusters(roots, radius):
    """Single-linkage clusters of the roots at the given radius."""
    roots = list(roots)
    parent = list(range(len(roots)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(roots)):
        for j in range(i):
            if abs(roots[i] - roots[j]) <= radius:
                parent[find(i)] = find(j)
    groups = {}
    for i, r in enumerate(roots):
        groups.setdefault(find(i), []).append(r)
    return list(groups.values())


def _polish(q, z, m, iterations=8):
    """Newton steps on the (m-1)th derivative, where an m-fold root is simple."""
    d = np.polyder(q, m - 1) if m > 1 else q
    dd = np.polyder(d)
    for _ in range(iterations):
        fd = np.polyval(dd, z)
        if fd == 0:
            break
        step = np.polyval(d, z) / fd
        z = z - step
        if abs(step) < 1e-16 * max(1.0, abs(z)):
            break
    return complex(z)


def _round(z, digits=12):
    re, im = round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0
    return complex(re, im)


def polynomial_fiber(pc: PolynomialCovering, w) -> Multiset:
    """Roots of ``p(z) = w`` with multiplicity, as a multiset of complex numbers."""
    q = pc._c[::-1].copy()
    q[-1] -= complex(w)
    try:
        roots = np.roots(q)
    except np.linalg.LinAlgError as exc:
        raise RootFindingError(f"eigenvalue solver failed: {exc}", residual=float("inf")) from exc
    if len(roots) != pc.n or not np.all(np.isfinite(roots)):
        raise RootFindingError("root finder returned an incomplete root list", residual=float("inf"))
    scale = np.sum(np.abs(q))
    mult = {}
    for group in _clusters(roots, pc.cluster_radius):
        m = len(group)
        z = _polish(q, complex(np.mean(group)), m)
        residual = abs(np.polyval(q, z)) / (scale * max(1.0, abs(z)) ** pc.n)
        if not np.isfinite(residual) or residual > 1e-6:
            raise RootFindingError(f"root near {z} did not converge", residual=float(residual))
        key = _round(z)
        mult[key] = mult.get(key, 0) + m
    return Multiset(mult)


def fiber_shape(ms: Multiset):
    """Multiplicities of a fibre, largest first."""
    return sorted((m for _, m in ms.items()), reverse=True)


# -- exact transfer on C[z] -------------------------------------------------------


class PolyTransfer:
    """The n-transfer ``tau: C[z] -> C[w]`` for the ring map ``w -> p(z)``.

    ``tau(z^k)`` is the k-th power sum of the roots of ``p(z) - w``, a polynomial
    in ``w``.  Nothing is solved numerically.
    """

    def __init__(self, p: Polynomial, degree_bound: int):
        if p.degree < 1:
            raise InputError("p must have degree at least 1")
        self.p = p
        self.n = p.degree
        zero = p.coeff(0) * 0
        self._zero = zero
        one = zero + 1
        lead = p.leading
        # coefficients of (p(z) - w) / lead as polynomials in w
        cw = []
        for k in range(self.n + 1):
            c = Polynomial([p.coeff(k) / lead], zero=zero)
            if k == 0:
                c = c - Polynomial([zero, one / lead], zero=zero)
            cw.append(c)
        e = [cw[self.n - k] * ((-1) ** k) for k in range(1, self.n + 1)]
        self._e = e
        self._one_w = Polynomial([one], zero=zero)
        self._sums = [self._one_w * self.n]
        self.degree_bound = degree_bound
        self._extend(degree_bound)

    def _extend(self, k):
        if k < len(self._sums):
            return
        self._sums = [self._one_w * self.n] + elementary_to_power_sums(self._e, k)

    def tau_monomial(self, k: int) -> Polynomial:
        self._extend(k)
        return self._sums[k]

    def images(self, D=None):
        D = self.degree_bound if D is None else D
        return [self.tau_monomial(k) for k in range(D + 1)]

    def tau(self, q: Polynomial) -> Polynomial:
        out = Polynomial([], zero=self._zero)
        for k in range(q.degree + 1):
            c = q.coeff(k)
            if c != 0:
                out = out + self.tau_monomial(k) * c
        return out

    def h_star(self, r: Polynomial) -> Polynomial:
        """``w -> p(z)``: substitute p into a polynomial in w."""
        return r.compose(self.p)

    def g(self, q: Polynomial) -> Polynomial:
        return self.h_star(self.tau(q)) - q

    def z(self, k=1):
        return Polynomial.monomial(k, self._zero + 1, zero=self._zero)


def poly_transfer(p, D: int):
    """``[tau(z^0), ..., tau(z^D)]`` as polynomials in ``w``."""
    if not isinstance(p, Polynomial):
        p = Polynomial([_exact(x) for x in p])
    return PolyTransfer(p, D).images()


def _phi_vanishes_at(fn, m, a, one):
    images = []
    power = a
    for _ in range(m):
        images.append(fn(power))
        power = power * a
    return phi_from_power_images(images, one).is_zero()


def check_poly_transfer(pt: PolyTransfer, test_elements=None) -> CheckResult:
    """Transfer conditions checked symbolically on sample elements of ``C[z]``.

    The Frobenius conditions are tested on the diagonal ``Phi(a, ..., a)`` for
    each test element; the module condition on ``p^j z^k``.
    """
    n = pt.n
    z = pt.z()
    one_z = z ** 0
    if test_elements is None:
        test_elements = [z, z ** 2, z + z ** 2 * 2, z ** 3 - z + 1]
    one_w = pt._one_w
    if pt.tau(one_z) != one_w * n:
        return failed("poly_transfer", "tau(1)", pt.tau(one_z))
    if pt.g(one_z) != one_z * (n - 1):
        return failed("poly_transfer", "g(1)", pt.g(one_z))
    for i, a in enumerate(test_elements):
        if not _phi_vanishes_at(pt.tau, n + 1, a, one_w):
            return failed("poly_transfer", ["transfer_i_frobenius", i])
        if not _phi_vanishes_at(pt.g, n, a, one_z):
            return failed("poly_transfer", ["transfer_iii_g_frobenius", i])
    w = pt.z()  # the same indeterminate, read as w
    for j in range(3):
        for k in range(pt.degree_bound + 1):
            lhs = pt.tau(pt.p ** j * pt.z(k))
            rhs = w ** j * pt.tau_monomial(k)
            if lhs != rhs:
                return failed("poly_transfer", ["transfer_ii_module_map", j, k])
    return passed("poly_transfer", n)


# -- numeric comparison -----------------------------------------------------------


def _to_complex_poly(r: Polynomial):
    return np.array([complex(r.coeff(k)) for k in range(r.degree, -1, -1)] or [0j])


def poly_covering_numeric_check(pc: PolynomialCovering, samples, D=None, tol=None) -> CheckResult:
    """Covering axioms and power sums at each sample ``w``, within tolerance.

    ``tol`` defaults to ``10 * pc.root_tol``; power sums use the relative
    scale ``max(1, |w|)^(k/n)``.
    """
    tol = 10 * pc.root_tol if tol is None else tol
    n = pc.n
    D = 2 * n if D is None else D
    pt = PolyTransfer(pc.exact_polynomial(), D)
    sums = [_to_complex_poly(pt.tau_monomial(k)) for k in range(D + 1)]
    worst = 0.0
    for w in samples:
        w = complex(w)
        fib = polynomial_fiber(pc, w)
        if fib.n != n:
            return failed("poly_covering_numeric", [_json_c(w), "total_multiplicity"], fib.n)
        for x, _ in fib.items():
            r = abs(pc(x) - w)
            worst = max(worst, r)
            if r > tol:
                return failed("poly_covering_numeric", [_json_c(w), "axiom_ii"], float(r),
                              detail=f"|p(x) - w| = {r:.3e} exceeds tolerance {tol:.3e}")
            back = polynomial_fiber(pc, pc(x))
            if not any(abs(x - y) <= pc.cluster_radius for y in back.support):
                return failed("poly_covering_numeric", [_json_c(w), "axiom_i"], _json_c(x))
        for k in range(D + 1):
            numeric = sum(m * x ** k for x, m in fib.items())
            symbolic = np.polyval(sums[k], w)
            scale = max(1.0, abs(w)) ** (k / n)
            err = abs(numeric - symbolic) / scale
            worst = max(worst, err)
            if err > tol:
                return failed("poly_covering_numeric", [_json_c(w), f"power_sum_{k}"], float(err),
                              detail=f"power sum deviation {err:.3e} exceeds tolerance {tol:.3e}")
    return passed("poly_covering_numeric", float(worst))


def _json_c(z):
    z = complex(z)
    return [z.real, z.imag]


def finite_model(pc: PolynomialCovering, samples):
    """The covering restricted to finitely many fibres, as JSON-ready data."""
    from .coverings import FiniteCovering

    Y, X, h, t = [], [], {}, {}
    for w in samples:
        wl = _label(complex(w))
        if wl in t:
            continue
        fib = polynomial_fiber(pc, w)
        Y.append(wl)
        mult = {}
        for x, m in fib.items():
            xl = f"{_label(x)}@{wl}"
            X.append(xl)
            h[xl] = wl
            mult[xl] = m
        t[wl] = Multiset(mult)
    return FiniteCovering(X, Y, pc.n, h, t)


def _label(z: complex) -> str:
    re, im = z.real + 0.0, z.imag + 0.0
    if abs(im) < 1e-12:
        return f"{re:.9g}"
    return f"{re:.9g}{im:+.9g}i"
