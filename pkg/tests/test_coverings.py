import random
import warnings

import pytest

from frobcover.catalog import (
    covering_catalog,
    example_group,
    example_interval_covering,
    example_interval_spec,
    non_effective_example,
    random_covering,
)
from frobcover.coverings import (
    FiniteCovering,
    IncompatibleSpec,
    IntervalCoveringSpec,
    Multiset,
    build_interval_covering,
    check_covering,
    check_resolution,
    compose_coverings,
    covering_isomorphic_via,
    group_quotient_covering,
    identity_covering,
    minimal_branching_degree,
    pullback_covering,
    resolution_size,
    resolve_covering,
    subgroup_quotient_covering,
    trivial_covering,
)
from frobcover.errors import CapExceeded, InputError
from frobcover.groups import PermutationGroup
from frobcover.partitions import SetPartition

from oracles import labellings_bruteforce

CATALOG = covering_catalog()


def test_multiset_basics():
    m = Multiset(["a", "a", "b"])
    assert m.n == 3 and m.mult("a") == 2 and m.mult("z") == 0
    assert m + Multiset(["b"]) == Multiset({"a": 2, "b": 2})
    assert m.pushforward({"a": "y", "b": "y"}) == Multiset({"y": 3})
    assert sorted(m.elements()) == ["a", "a", "b"]


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalogue_satisfies_axioms(name):
    assert check_covering(CATALOG[name])


def test_axiom_failures_have_witnesses():
    c = FiniteCovering(["x1", "x2"], ["y"], 2, {"x1": "y", "x2": "y"}, {"y": Multiset(["x1", "x1"])})
    r = check_covering(c)
    assert not r and r.witness == ["axiom_i", "x2"]
    c = FiniteCovering(["x1"], ["y"], 2, {"x1": "y"}, {"y": Multiset(["x1"])})
    r = check_covering(c)
    assert not r and r.witness == ["axiom_ii", "y"]


def test_malformed_covering_rejected():
    with pytest.raises(InputError):
        FiniteCovering(["x"], ["y"], 1, {}, {"y": Multiset(["x"])})
    with pytest.raises(InputError):
        FiniteCovering(["x"], ["y"], 1, {"x": "y"}, {"y": Multiset(["w"])})


def test_group_quotient_fibres():
    c = group_quotient_covering(example_group("S3_on_3"))
    assert c.n == 6 and len(c.Y) == 1
    assert c.t[c.Y[0]] == Multiset({"1": 2, "2": 2, "3": 2})
    c = group_quotient_covering(example_group("C2_on_3"))
    # the fixed point carries the whole stabiliser
    assert c.t["[3]"] == Multiset({"3": 2})


def test_non_effective_action_warns_but_covers():
    G = PermutationGroup(["p", "q"], [(0, 1), (0, 1)])
    with pytest.warns(UserWarning):
        c = group_quotient_covering(G)
    assert check_covering(c)
    assert c.t["[p]"] == Multiset({"p": 2})
    assert non_effective_example().notes


def test_subgroup_quotient():
    G = example_group("S3_on_3")
    H = PermutationGroup.from_generators(G.points, [{"1": "2", "2": "1"}])
    c = subgroup_quotient_covering(G, H)
    assert c.n == 3
    assert check_covering(c)
    assert c.t["[1,2,3]"] == Multiset({"[1,2]": 2, "[3]": 1})


def test_subgroup_must_be_subgroup():
    G = example_group("C3_on_3")
    H = PermutationGroup.from_generators(G.points, [{"1": "2", "2": "1"}])
    with pytest.raises(InputError):
        subgroup_quotient_covering(G, H)


def test_interval_example():
    ic = example_interval_covering()
    c = ic.covering
    assert len(c.X) == 13 and len(c.Y) == 5
    assert c.Y == ("y1", "b1", "y2", "b2", "y3")
    assert sorted(m for _, m in c.t["b1"].items()) == [2, 3]
    assert sorted(m for _, m in c.t["b2"].items()) == [2, 3]
    assert check_covering(c)
    assert minimal_branching_degree(ic) == 5


def test_interval_minimal_degree_can_be_smaller():
    spec = IntervalCoveringSpec(4, [SetPartition([("a", "b"), ("c", "d")]), SetPartition([("a", "b", "c", "d")])])
    ic = build_interval_covering(spec)
    assert check_covering(ic.covering)
    assert minimal_branching_degree(ic) == 2


def test_incompatible_spec():
    spec = IntervalCoveringSpec(4, [SetPartition([("a", "b"), ("c", "d")]), SetPartition([("a", "c"), ("b", "d")])])
    with pytest.raises(IncompatibleSpec) as info:
        build_interval_covering(spec)
    assert info.value.pair == (1, 2)


def test_interval_dot_mentions_every_sheet():
    ic = example_interval_covering()
    dot = ic.to_dot()
    assert dot.startswith("graph")
    for x in ic.covering.X:
        assert f'"{x}"' in dot


def test_spec_validation():
    with pytest.raises(InputError):
        IntervalCoveringSpec(4, [SetPartition([("a", "b", "c")])])
    with pytest.raises(InputError):
        IntervalCoveringSpec(3, [SetPartition([("a",), ("b", "c")])] * 2, breakpoints=[0.5, 0.2])
    assert example_interval_spec().k == 2


def test_pullback():
    c = example_interval_covering().covering
    pb = pullback_covering(c, ["s", "u"], {"s": "b1", "u": "b1"})
    assert check_covering(pb)
    assert pb.n == 5 and len(pb.X) == 2 * len(c.fiber("b1"))
    assert pb.t["s"] == Multiset({f"(s,{x})": m for x, m in c.t["b1"].items()})
    with pytest.raises(InputError):
        pullback_covering(c, ["s"], {"s": "nowhere"})


def test_pullback_along_identity_is_relabelling():
    c = CATALOG["random_3"]
    pb = pullback_covering(c, c.Y, {y: y for y in c.Y})
    assert len(pb.X) == len(c.X) and pb.n == c.n


def test_composition_degrees_multiply():
    rng = random.Random(4)
    for _ in range(10):
        outer = random_covering(rng, ["u", "v"], rng.randint(1, 3), prefix="m")
        inner = random_covering(rng, outer.X, rng.randint(1, 3), prefix="i")
        c = compose_coverings(inner, outer)
        assert c.n == inner.n * outer.n
        assert check_covering(c)


def test_compose_with_identity():
    c = CATALOG["C3_on_3"]
    assert compose_coverings(c, identity_covering(c.Y)) == c
    assert compose_coverings(identity_covering(c.X), c) == c


def test_composition_requires_matching_spaces():
    with pytest.raises(InputError):
        compose_coverings(trivial_covering(["a"], 2), trivial_covering(["b"], 2))


def _small(c):
    return len(c.X) ** c.n <= 50_000


@pytest.mark.parametrize("name", sorted(n for n, c in CATALOG.items() if _small(c)))
def test_resolution_matches_bruteforce(name):
    c = CATALOG[name]
    res = resolve_covering(c)
    assert sorted(res.E) == labellings_bruteforce(c)
    assert len(res.E) == resolution_size(c)
    assert check_resolution(res)
    assert covering_isomorphic_via(res)


def test_resolution_of_trivial_two_sheets():
    res = resolve_covering(trivial_covering(["y"], 2))
    assert len(res.E) == 2
    assert len(set(res.orbit_of.values())) == 1


def test_resolution_of_double_point():
    c = FiniteCovering(["x"], ["y"], 2, {"x": "y"}, {"y": Multiset({"x": 2})})
    res = resolve_covering(c)
    assert res.E == [("x", "x")]
    assert check_resolution(res) and covering_isomorphic_via(res)


def test_resolution_cap():
    with pytest.raises(CapExceeded):
        resolve_covering(trivial_covering(["y"], 5), max_size=10)


def test_non_effective_resolution():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        c = non_effective_example()
    res = resolve_covering(c)
    assert check_resolution(res)
    assert covering_isomorphic_via(res)
