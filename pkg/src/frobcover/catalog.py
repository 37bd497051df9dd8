"""Reproducible sample data: random algebras and maps, and a catalogue of
finite coverings built with every constructor."""

from __future__ import annotations

import random
import warnings
from itertools import combinations_with_replacement

from . import linalg
from .algebra import (
    AlgebraElement,
    LinearMap,
    change_basis,
    make_function_algebra,
    monogenic_algebra,
    product_algebra,
)
from .coverings import (
    FiniteCovering,
    IntervalCoveringSpec,
    Multiset,
    build_interval_covering,
    compose_coverings,
    group_quotient_covering,
    identity_covering,
    pullback_covering,
    subgroup_quotient_covering,
    trivial_covering,
)
from .groups import PermutationGroup
from .partitions import SetPartition
from .scalars import QQ

EXAMPLE_PARTITIONS = [
    [["a"], ["b"], ["c", "d", "e"]],
    [["a", "b"], ["c"], ["d", "e"]],
    [["a", "b", "c"], ["d"], ["e"]],
]


def example_interval_spec() -> IntervalCoveringSpec:
    """Five sheets branched over two points: {a},{b},{cde} | {ab},{c},{de} | {abc},{d},{e}."""
    return IntervalCoveringSpec(5, [SetPartition(p) for p in EXAMPLE_PARTITIONS])


def example_interval_covering():
    return build_interval_covering(example_interval_spec())


# -- random algebras and maps ------------------------------------------------------


def random_invertible(rng: random.Random, d, lo=-2, hi=2):
    while True:
        P = [[rng.randint(lo, hi) for _ in range(d)] for _ in range(d)]
        if linalg.rank(P, QQ) == d:
            return P


def random_algebra(rng: random.Random, max_dim=4):
    """A rational algebra of dimension at most ``max_dim``: a function algebra
    in a random basis, a monogenic algebra ``Q[x]/(q)`` (possibly with
    nilpotents) or a product of two such."""
    d = rng.randint(1, max_dim)
    kind = rng.choice(["function", "monogenic", "product"] if d > 1 else ["function", "monogenic"])
    if kind == "function":
        C = make_function_algebra([f"p{i}" for i in range(d)])
        return change_basis(C, random_invertible(rng, d))
    if kind == "monogenic":
        q = [rng.randint(-2, 2) for _ in range(d)] + [1]
        return monogenic_algebra(q)
    k = rng.randint(1, d - 1)
    return product_algebra(random_algebra(rng, k), random_algebra(rng, d - k))


def random_element(rng: random.Random, A, lo=-2, hi=2):
    return AlgebraElement(A, [rng.randint(lo, hi) for _ in range(A.dim)])


def random_map(rng: random.Random, A, B, lo=-2, hi=2):
    return LinearMap(A, B, [[rng.randint(lo, hi) for _ in range(A.dim)] for _ in range(B.dim)])


def with_unit_value(f: LinearMap, n):
    """Adjust one column so that ``f(1) = n``."""
    A, B = f.domain, f.codomain
    u = A.unit_coords
    i = next(k for k, v in enumerate(u) if v != 0)
    fix = (B.scalar(n) - f(A.unit)) * (1 / u[i])
    M = [list(r) for r in f.matrix]
    for r in range(B.dim):
        M[r][i] += fix.coords[r]
    return LinearMap(A, B, M)


# -- coverings -----------------------------------------------------------------------


def random_covering(rng: random.Random, Y, n, prefix="x"):
    """Over each y a random branching pattern: a random composition of n
    into sheet multiplicities."""
    X, h, t = [], {}, {}
    for y in Y:
        mults = []
        left = n
        while left:
            m = rng.randint(1, left)
            mults.append(m)
            left -= m
        mult = {}
        for j, m in enumerate(mults):
            x = f"{prefix}{y}.{j}"
            X.append(x)
            h[x] = y
            mult[x] = m
        t[y] = Multiset(mult)
    return FiniteCovering(X, list(Y), n, h, t)


GROUP_EXAMPLES = {
    "C2_on_2": (["1", "2"], [["2", "1"]]),
    "C2_on_3": (["1", "2", "3"], [["2", "1", "3"]]),
    "C3_on_3": (["1", "2", "3"], [["2", "3", "1"]]),
    "S3_on_3": (["1", "2", "3"], [["2", "1", "3"], ["2", "3", "1"]]),
    "C4_on_4": (["1", "2", "3", "4"], [["2", "3", "4", "1"]]),
    "V4_on_4": (["1", "2", "3", "4"], [["2", "1", "4", "3"], ["3", "4", "1", "2"]]),
    "C2xC2_on_4": (["1", "2", "3", "4"], [["2", "1", "3", "4"], ["1", "2", "4", "3"]]),
    "D4_on_4": (["1", "2", "3", "4"], [["2", "3", "4", "1"], ["4", "3", "2", "1"]]),
    "C5_on_5": (["1", "2", "3", "4", "5"], [["2", "3", "4", "5", "1"]]),
    "C6_on_5": (["1", "2", "3", "4", "5"], [["2", "3", "1", "5", "4"]]),
    "S3_on_5": (["1", "2", "3", "4", "5"], [["2", "1", "3", "4", "5"], ["2", "3", "1", "4", "5"]]),
    "S2xS2_on_5": (["1", "2", "3", "4", "5"], [["2", "1", "3", "4", "5"], ["1", "2", "3", "5", "4"]]),
}


def example_group(name) -> PermutationGroup:
    points, gens = GROUP_EXAMPLES[name]
    return PermutationGroup.from_generators(points, [dict(zip(points, g)) for g in gens])


def group_quotient_examples():
    return {name: group_quotient_covering(example_group(name)) for name in GROUP_EXAMPLES}


def non_effective_example():
    """C2 acting trivially on two points: t(x) = [x, x]."""
    G = PermutationGroup(["p", "q"], [(0, 1), (0, 1)])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return group_quotient_covering(G)


def subgroup_quotient_examples():
    out = {}
    G = example_group("S3_on_3")
    H = PermutationGroup.from_generators(G.points, [{"1": "2", "2": "1"}])
    out["S3/C2_on_3"] = subgroup_quotient_covering(G, H)
    G = example_group("D4_on_4")
    H = PermutationGroup.from_generators(G.points, [{"1": "3", "3": "1"}])
    out["D4/C2_on_4"] = subgroup_quotient_covering(G, H)
    H = PermutationGroup.from_generators(G.points, [{"1": "3", "2": "4", "3": "1", "4": "2"}])
    out["D4/C2center_on_4"] = subgroup_quotient_covering(G, H)
    G = example_group("S3_on_5")
    H = PermutationGroup.from_generators(G.points, [{"1": "2", "2": "3", "3": "1"}])
    out["S3/C3_on_5"] = subgroup_quotient_covering(G, H)
    return out


def trivial_examples():
    out = {}
    for k in (1, 2, 3):
        for n in (1, 2, 3):
            out[f"trivial_{k}x{n}"] = trivial_covering([f"y{i}" for i in range(1, k + 1)], n)
    out["identity_3"] = identity_covering(["u", "v", "w"])
    return out


def covering_catalog(seed=0, max_n=None):
    """Named coverings from every constructor, each with ``n <= max_n``."""
    rng = random.Random(seed)
    cat = {}
    cat.update(trivial_examples())
    cat.update(group_quotient_examples())
    cat["non_effective_C2"] = non_effective_example()
    cat.update(subgroup_quotient_examples())
    ic = example_interval_covering()
    cat["interval_example"] = ic.covering
    cat["pullback_interval_to_ends"] = pullback_covering(ic.covering, ["s", "u"], {"s": "y1", "u": "b2"})
    cat["pullback_C3_constant"] = pullback_covering(cat["C3_on_3"], ["p", "q"], {"p": "[1,2,3]", "q": "[1,2,3]"})
    outer = cat["C2_on_2"]
    inner = random_covering(rng, outer.X, 2, prefix="i")
    cat["composite_2x2"] = compose_coverings(inner, outer)
    cat["composite_3x1"] = compose_coverings(cat["C3_on_3"], identity_covering(cat["C3_on_3"].Y))
    for n in (1, 2, 3, 4):
        cat[f"random_{n}"] = random_covering(rng, ["y1", "y2", "y3"], n)
    if max_n is not None:
        cat = {k: c for k, c in cat.items() if c.n <= max_n}
    return cat


# -- multiset maps ---------------------------------------------------------------------


def all_multisets(X, n):
    return [Multiset(list(c)) for c in combinations_with_replacement(X, n)]


def points(prefix, k):
    return [f"{prefix}{i}" for i in range(1, k + 1)]
