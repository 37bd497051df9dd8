from itertools import product

import pytest
from hypothesis import given, strategies as st

from frobcover.errors import InputError
from frobcover.groups import PermutationGroup, compose, inverse
from frobcover.partitions import SetPartition, all_set_partitions, bell, join, partition_adjacent, refines


def P(s):
    return SetPartition([tuple(b) for b in s.split("|")])


def test_bell_numbers():
    assert [bell(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    for n in range(1, 6):
        assert len(all_set_partitions(range(n))) == bell(n)


def test_partition_validation():
    with pytest.raises(InputError):
        SetPartition([("a",), ("a", "b")])
    with pytest.raises(InputError):
        SetPartition([("a",)], ground=("a", "b"))


def test_equality_ignores_order():
    assert P("ab|c") == P("c|ba")
    assert hash(P("ab|c")) == hash(P("c|ba"))


def test_adjacency_examples():
    assert partition_adjacent(P("a|b|cde"), P("ab|c|de"))
    assert partition_adjacent(P("ab|c|de"), P("abc|d|e"))
    assert not partition_adjacent(P("ab|c"), P("a|bc"))
    assert not partition_adjacent(P("ab|cd"), P("ac|bd"))


def test_refinement_implies_adjacency():
    parts = all_set_partitions("abcd")
    for p, q in product(parts, repeat=2):
        if refines(p, q):
            assert partition_adjacent(p, q) and partition_adjacent(q, p)


def test_adjacency_symmetric_exhaustively():
    for n in range(1, 5):
        parts = all_set_partitions(range(n))
        for p, q in product(parts, repeat=2):
            assert partition_adjacent(p, q) == partition_adjacent(q, p)


partitions5 = all_set_partitions("abcde")


@given(st.sampled_from(partitions5), st.sampled_from(partitions5))
def test_join_is_least_upper_bound(p, q):
    J = join(p, q)
    assert refines(p, J) and refines(q, J)
    assert join(q, p) == J
    for r in partitions5:
        if refines(p, r) and refines(q, r):
            assert refines(J, r)


def test_join_example():
    assert join(P("a|b|cde"), P("ab|c|de")) == P("ab|cde")


def test_group_closure_orders():
    pts = [1, 2, 3, 4]
    assert PermutationGroup.from_generators(pts, [{1: 2, 2: 3, 3: 4, 4: 1}]).order == 4
    D4 = PermutationGroup.from_generators(pts, [{1: 2, 2: 3, 3: 4, 4: 1}, {1: 4, 4: 1, 2: 3, 3: 2}])
    assert D4.order == 8
    assert PermutationGroup.symmetric(pts).order == 24


def test_group_rejects_non_closed_lists():
    with pytest.raises(ValueError):
        PermutationGroup([1, 2, 3], [(0, 1, 2), (1, 2, 0)])


def test_compose_and_inverse():
    g, h = (1, 2, 0), (1, 0, 2)
    assert compose(g, inverse(g)) == (0, 1, 2)
    assert compose(g, h) == tuple(g[h[i]] for i in range(3))


def test_orbits_and_cosets():
    S3 = PermutationGroup.symmetric("abc")
    H = PermutationGroup.from_generators("abc", [{"a": "b", "b": "a"}])
    assert S3.orbits() == [("a", "b", "c")]
    assert H.orbits() == [("a", "b"), ("c",)]
    reps = H.right_coset_representatives(S3)
    assert len(reps) == 3
    cosets = {frozenset(compose(h, g) for h in H.elements) for g in reps}
    assert len(cosets) == 3


def test_non_effective_group():
    G = PermutationGroup(["p", "q"], [(0, 1), (0, 1)])
    assert G.order == 2 and not G.is_effective()
