"""The acceptance suite: twelve property checks, each returning one
:class:`CheckResult`.  Everything random is drawn from a seeded generator, so a
fixed seed reproduces the report byte for byte."""

from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np

from . import linalg
from .algebra import LinearMap, change_basis, make_function_algebra, scalar_algebra
from .coverings import (
    Multiset,
    check_covering,
    check_resolution,
    compose_coverings,
    covering_isomorphic_via,
    minimal_branching_degree,
    resolve_covering,
)
from .catalog import (
    all_multisets,
    covering_catalog,
    example_interval_covering,
    group_quotient_examples,
    points,
    random_algebra,
    random_covering,
    random_element,
    random_invertible,
    random_map,
    trivial_examples,
)
from .frobenius import (
    char_poly_from_power_images,
    gugnin_kernel,
    is_frobenius,
    phi_cycle_sum,
    phi_diagonal_determinant,
    phi_from_power_images,
    phi_recursive,
    series_identity_check,
)
from .partitions import all_set_partitions, partition_adjacent
from .polycover import (
    PolynomialCovering,
    PolyTransfer,
    check_poly_transfer,
    fiber_shape,
    poly_covering_numeric_check,
    polynomial_fiber,
)
from .polynomial import MPoly, Polynomial
from .report import Report, failed, passed
from .scalars import DEFAULT_EPSILON
from .sympower import check_induced_ring_hom, diagonal_map, induced_ring_hom, symmetric_power
from .transfer import (
    CoveringFunctionData,
    check_transfer,
    check_transfer_consequences,
    direct_image,
    direct_image_of_map,
    frobenius_to_map,
    kernel_triviality,
    sym_power_pullback,
    theorem_5_2_roundtrip,
)


@dataclass
class SuiteConfig:
    seed: int = 0
    epsilon: float = DEFAULT_EPSILON
    max_n: int | None = None

    def cap(self, n):
        return n if self.max_n is None else min(n, self.max_n)


# 1 ----------------------------------------------------------------------------------


def engine_agreement(cfg: SuiteConfig, instances=100):
    """Cycle sum, recursion and determinant give identical Phi_n."""
    rng = random.Random(cfg.seed)
    count = 0
    for n in range(1, cfg.cap(5) + 1):
        for i in range(instances):
            A = random_algebra(rng, 4)
            B = random_algebra(rng, 3)
            f = random_map(rng, A, B)
            args = [random_element(rng, A) for _ in range(n)]
            cyc = phi_cycle_sum(f, args)
            rec = phi_recursive(f, n, args)
            if cyc != rec:
                return failed("c01_engine_agreement", {"n": n, "instance": i, "args": "general"}, [cyc, rec])
            a = args[0]
            diag = [phi_cycle_sum(f, [a] * n), phi_recursive(f, n, [a] * n), phi_diagonal_determinant(f, n, a)]
            if not diag[0] == diag[1] == diag[2]:
                return failed("c01_engine_agreement", {"n": n, "instance": i, "args": "diagonal"}, diag)
            count += 1
    return passed("c01_engine_agreement", count)


# 2 ----------------------------------------------------------------------------------


def unit_lemma(cfg: SuiteConfig, instances=100):
    """Phi_{n+1}(f)(a, 1, ..., 1) = f(a) prod_{j=1..n} (f(1) - j)."""
    rng = random.Random(cfg.seed + 1)
    count = 0
    for n in range(1, cfg.cap(4) + 1):
        for i in range(instances):
            A = random_algebra(rng, 4)
            B = random_algebra(rng, 3)
            f = random_map(rng, A, B)
            if is_frobenius(f, n):
                continue
            a = random_element(rng, A)
            lhs = phi_recursive(f, n + 1, [a] + [A.unit] * n)
            f1 = f(A.unit)
            rhs = f(a)
            for j in range(1, n + 1):
                rhs = rhs * (f1 - j)
            if lhs != rhs:
                return failed("c02_unit_lemma", {"n": n, "instance": i}, [lhs, rhs])
            count += 1
    return passed("c02_unit_lemma", count)


# 3 ----------------------------------------------------------------------------------


def induced_ring_hom_sweep(cfg: SuiteConfig, converse_instances=50):
    """Phi_n(t_!)/n! is a ring map S^n C(X) -> C(Y) through which t_! factors,
    for every multiset map with |X|, |Y| <= 3, n <= 3; conversely a map with
    f(1) = n and multiplicative Phi_n(f)/n! satisfies Phi_{n+1}(f) = 0."""
    count = 0
    for nx in range(1, 4):
        X = points("x", nx)
        CX = make_function_algebra(X)
        for n in range(1, cfg.cap(3) + 1):
            S = symmetric_power(CX, n)
            Delta = diagonal_map(CX, n, S)
            fibres = all_multisets(X, n)
            for ny in range(1, 4):
                Y = points("y", ny)
                CY = make_function_algebra(Y)
                for choice in product(fibres, repeat=ny):
                    t = dict(zip(Y, choice))
                    f = direct_image_of_map(t, CX, CY)
                    r = check_induced_ring_hom(f, n, S, Delta)
                    if not r:
                        return failed("c03_induced_ring_hom", {"t": t, "n": n}, r.witness)
                    if induced_ring_hom(f, n, S) != sym_power_pullback(S, t, CY):
                        return failed("c03_induced_ring_hom", {"t": t, "n": n, "pullback": True})
                    count += 1

    rng = random.Random(cfg.seed + 3)
    frob = nonfrob = 0
    for i in range(converse_instances):
        n = rng.randint(1, cfg.cap(3))
        perturb = i % 2 == 1
        d = rng.randint(2 if perturb else 1, 3)
        P = random_invertible(rng, d)
        C = make_function_algebra(points("p", d))
        A = change_basis(C, P)
        Y = points("y", rng.randint(1, 2))
        CY = make_function_algebra(Y)
        t = {y: Multiset([rng.choice(C.points) for _ in range(n)]) for y in Y}
        base = direct_image_of_map(t, C, CY)
        f = LinearMap(A, CY, linalg.matmul([list(r) for r in base.matrix], P))
        if perturb:
            # rank-one change v (x) lam with lam(1) = 0 keeps f(1) = n
            u = A.unit_coords
            k = next(j for j, v in enumerate(u) if v != 0)
            lam = [0] * d
            while not any(lam):
                lam = [rng.randint(-2, 2) for _ in range(d)]
                lam[k] -= sum(l * v for l, v in zip(lam, u)) / u[k]
            v = [0] * CY.dim
            while not any(v):
                v = [rng.randint(-2, 2) for _ in range(CY.dim)]
            f = f + LinearMap(A, CY, [[vi * lj for lj in lam] for vi in v])
        multiplicative = bool(check_induced_ring_hom(f, n))
        frobenius = bool(is_frobenius(f, n))
        if multiplicative != frobenius:
            return failed("c03_induced_ring_hom", {"converse_instance": i, "n": n},
                          {"multiplicative": multiplicative, "frobenius": frobenius})
        frob += frobenius
        nonfrob += not frobenius
    if not frob or not nonfrob:
        return failed("c03_induced_ring_hom", "converse sample is one-sided", [frob, nonfrob])
    return passed("c03_induced_ring_hom", {"multiset_maps": count, "converse_frobenius": frob,
                                           "converse_non_frobenius": nonfrob})


# 4 ----------------------------------------------------------------------------------


def composition_of_frobenius(cfg: SuiteConfig, trials=3):
    """g o f is Frobenius of degree nm for covering-derived f (n) and g (m), nm <= 6."""
    rng = random.Random(cfg.seed + 4)
    count = 0
    for n in range(1, 7):
        for m in range(1, 7):
            if n * m > cfg.cap(6):
                continue
            for trial in range(trials):
                Z = ["z1"] if n * m > 4 else ["z1", "z2"]
                outer = random_covering(rng, Z, m, prefix="y")
                inner = random_covering(rng, outer.X, n, prefix="x")
                f = direct_image(inner)
                g = direct_image(outer, f.codomain)
                gf = g @ f
                r = is_frobenius(gf, n * m)
                if not r:
                    return failed("c04_composition", {"n": n, "m": m, "trial": trial}, r.witness)
                if direct_image(compose_coverings(inner, outer), f.domain, g.codomain) != gf:
                    return failed("c04_composition", {"n": n, "m": m, "trial": trial, "composite": True})
                count += 1
    return passed("c04_composition", count)


# 5 ----------------------------------------------------------------------------------


def characteristic_polynomial(cfg: SuiteConfig):
    """det(M) = (-1)^n n! p(t) with indeterminate f(a^k) at n = 3, and the
    log-derivative series identity for covering-derived maps."""
    n = 3
    s = MPoly.variables(n)
    det, p = char_poly_from_power_images(s, MPoly.const(n, 1))
    c = (-1) ** n * factorial(n)
    if det != p * c:
        return failed("c05_char_poly", "symbolic", [str(det), str(p)])
    rng = random.Random(cfg.seed + 5)
    count = 0
    for name, cov in covering_catalog(cfg.seed, max_n=cfg.cap(4)).items():
        data = CoveringFunctionData.of(cov)
        f = data.t_shriek
        A = f.domain
        elements = [A.basis(i) for i in range(A.dim)] + [random_element(rng, A) for _ in range(2)]
        for j, a in enumerate(elements):
            r = series_identity_check(f, cov.n, a)
            if not r:
                return failed("c05_char_poly", {"covering": name, "element": j}, r.witness)
            count += 1
    return passed("c05_char_poly", {"symbolic_ratio": c, "series_checks": count})


# 6 ----------------------------------------------------------------------------------

EXAMPLE_FIBRES = {
    "y1": ["x11", "x12", "x13", "x13", "x13"],
    "y2": ["x21", "x21", "x22", "x23", "x23"],
    "y3": ["x31", "x31", "x31", "x32", "x33"],
}


def interval_example(cfg: SuiteConfig):
    """The five-sheet interval covering: printed fibres, axioms, transfer."""
    ic = example_interval_covering()
    cov = ic.covering
    for y, expected in EXAMPLE_FIBRES.items():
        if cov.t[y] != Multiset(expected):
            return failed("c06_interval_example", ["fibre", y], repr(cov.t[y]))
    r = check_covering(cov)
    if not r:
        return failed("c06_interval_example", r.witness, r.value)
    tt = CoveringFunctionData.of(cov).transfer()
    for r in (check_transfer(tt), check_transfer_consequences(tt)):
        if not r:
            return failed("c06_interval_example", [r.check, r.witness], r.value)
    m = minimal_branching_degree(ic)
    if m != 5:
        return failed("c06_interval_example", "minimal_degree", m)
    return passed("c06_interval_example", {"X": len(cov.X), "Y": len(cov.Y), "minimal_degree": m})


# 7 ----------------------------------------------------------------------------------


def adjacency_symmetry(cfg: SuiteConfig):
    """partition_adjacent(p, q) == partition_adjacent(q, p) for all pairs, n <= 5."""
    pairs = 0
    adjacent = 0
    for n in range(1, 6):
        parts = all_set_partitions(range(1, n + 1))
        for p in parts:
            for q in parts:
                a, b = partition_adjacent(p, q), partition_adjacent(q, p)
                if a != b:
                    return failed("c07_adjacency_symmetry", [repr(p), repr(q)], [a, b])
                pairs += 1
                adjacent += a
    return passed("c07_adjacency_symmetry", {"pairs": pairs, "adjacent": adjacent})


# 8 ----------------------------------------------------------------------------------


def resolution(cfg: SuiteConfig):
    """E/S_n <-> Y and E x_{S_n} [n] <-> X for the interval example, the group
    quotients and the trivial coverings."""
    cases = {"interval_example": example_interval_covering().covering}
    cases.update(group_quotient_examples())
    cases.update(trivial_examples())
    total = 0
    for name, cov in sorted(cases.items()):
        if cov.n > cfg.cap(cov.n):
            continue
        res = resolve_covering(cov)
        r = check_resolution(res)
        if not r:
            return failed("c08_resolution", [name, r.witness], r.value)
        if not covering_isomorphic_via(res):
            return failed("c08_resolution", [name, "reconstruction"])
        total += len(res.E)
    return passed("c08_resolution", {"coverings": len(cases), "labellings": total})


# 9 ----------------------------------------------------------------------------------


def roundtrips(cfg: SuiteConfig):
    """direct_image and frobenius_to_map are mutually inverse on every multiset
    map with |X|, |Y| <= 4, n <= 3; catalogue coverings give transfers that
    rebuild the covering."""
    count = 0
    frobenius_checked = 0
    for nx in range(1, 5):
        X = points("x", nx)
        CX = make_function_algebra(X)
        for n in range(1, cfg.cap(3) + 1):
            fibres = all_multisets(X, n)
            for ny in range(1, 5):
                Y = points("y", ny)
                CY = make_function_algebra(Y)
                for choice in product(fibres, repeat=ny):
                    t = dict(zip(Y, choice))
                    f = direct_image_of_map(t, CX, CY)
                    back = frobenius_to_map(f, n)
                    if back != t:
                        return failed("c09_roundtrips", {"t": t}, back)
                    if nx <= 3 and ny <= 3:
                        r = is_frobenius(f, n)
                        if not r:
                            return failed("c09_roundtrips", {"t": t, "frobenius": False}, r.witness)
                        frobenius_checked += 1
                    count += 1
    covers = 0
    for name, cov in covering_catalog(cfg.seed, max_n=cfg.cap(8)).items():
        data = CoveringFunctionData.of(cov)
        r = check_transfer(data.transfer())
        if not r:
            return failed("c09_roundtrips", [name, r.witness], r.value)
        rebuilt, r = theorem_5_2_roundtrip(cov.h, data.t_shriek, cov.n)
        if not r or rebuilt != cov:
            return failed("c09_roundtrips", [name, "rebuild"], r.witness)
        covers += 1
    return passed("c09_roundtrips", {"multiset_maps": count, "frobenius_checked": frobenius_checked,
                                     "coverings": covers})


# 10 ---------------------------------------------------------------------------------


def kernel_theorem(cfg: SuiteConfig):
    """Trivial Gugnin kernel for covering transfers; a Frobenius map that is
    not a transfer has kernel of dimension |X| - |S|; the determinant
    identity with indeterminate b."""
    covers = 0
    for name, cov in covering_catalog(cfg.seed, max_n=cfg.cap(8)).items():
        r = kernel_triviality(CoveringFunctionData.of(cov).transfer())
        if not r:
            return failed("c10_kernel", [name, r.witness], r.value)
        covers += 1
    counter = []
    for nx in range(2, 6):
        X = points("x", nx)
        CX = make_function_algebra(X)
        Q = scalar_algebra()
        for size in range(1, nx):
            f = LinearMap(CX, Q, [[1 if i < size else 0 for i in range(nx)]])
            if not is_frobenius(f, size):
                return failed("c10_kernel", ["evaluation_sum_not_frobenius", nx, size])
            k = len(gugnin_kernel(f, size))
            if k != nx - size or k == 0:
                return failed("c10_kernel", ["evaluation_sum_kernel", nx, size], k)
            counter.append(k)
    b = MPoly.variables(1)[0]
    one = MPoly.const(1, 1)
    for n in range(1, 6):
        det = phi_from_power_images([-(b ** r) for r in range(1, n + 1)], one)
        if det != b ** n * ((-1) ** n * factorial(n)):
            return failed("c10_kernel", ["determinant_identity", n], str(det))
    return passed("c10_kernel", {"transfers": covers, "non_transfer_kernels": counter})


# 11 ---------------------------------------------------------------------------------

QUADRATICS = [(0, 0), (1, 0), (-3, 2), (Fraction(1, 2), Fraction(-7, 3)), (Fraction(-5, 4), 6)]


def quadratic_transfer(cfg: SuiteConfig):
    """For p = z^2 + b z + c the map g = h^* tau - id is z -> -z - b."""
    for b, c in QUADRATICS:
        b, c = Fraction(b), Fraction(c)
        pt = PolyTransfer(Polynomial([c, b, Fraction(1)]), 6)
        z = pt.z()
        g = pt.g(z)
        if g != Polynomial([-b, Fraction(-1)]) or g.degree != 1:
            return failed("c11_quadratic_transfer", [str(b), str(c)], g)
        if pt.tau_monomial(0) != Polynomial([Fraction(2)]):
            return failed("c11_quadratic_transfer", [str(b), str(c), "tau(1)"], pt.tau_monomial(0))
        r = check_poly_transfer(pt)
        if not r:
            return failed("c11_quadratic_transfer", [str(b), str(c), r.witness])
    return passed("c11_quadratic_transfer", len(QUADRATICS))


# 12 ---------------------------------------------------------------------------------


def cubic_samples(seed, count=100):
    rng = np.random.default_rng(seed)
    k = count - 2
    radius = 4 * np.sqrt(rng.random(k))
    angle = 2 * np.pi * rng.random(k)
    return [2.0, -2.0] + [complex(z) for z in radius * np.exp(1j * angle)]


def numeric_cubic(cfg: SuiteConfig, power_sum_tol=1e-6):
    """p = z^3 - 3z at 100 samples including both critical values."""
    pc = PolynomialCovering([0, -3, 0, 1], root_tol=cfg.epsilon)
    samples = cubic_samples(cfg.seed)
    r = poly_covering_numeric_check(pc, samples, tol=min(10 * cfg.epsilon, power_sum_tol))
    if not r:
        return failed("c12_numeric_cubic", r.witness, r.value, r.detail)
    for w in (2, -2):
        shape = fiber_shape(polynomial_fiber(pc, w))
        if shape != [2, 1]:
            return failed("c12_numeric_cubic", ["branch_fibre", w], shape)
    return passed("c12_numeric_cubic", {"samples": len(samples), "max_deviation": float(f"{r.value:.3g}")})


CRITERIA = [
    engine_agreement,
    unit_lemma,
    induced_ring_hom_sweep,
    composition_of_frobenius,
    characteristic_polynomial,
    interval_example,
    adjacency_symmetry,
    resolution,
    roundtrips,
    kernel_theorem,
    quadratic_transfer,
    numeric_cubic,
]


def run_suite(cfg: SuiteConfig | None = None, only=None) -> Report:
    cfg = cfg or SuiteConfig()
    report = Report("acceptance")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for i, fn in enumerate(CRITERIA, start=1):
            if only is not None and i not in only:
                continue
            start = time.perf_counter()
            result = fn(cfg)
            report.add(result, time.perf_counter() - start)
    return report
