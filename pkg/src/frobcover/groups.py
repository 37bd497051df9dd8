"""Finite permutation groups acting on labelled point sets."""

from __future__ import annotations

from collections import Counter


def compose(g, h):
    """``(g h)(i) = g(h(i))``."""
    return tuple(g[i] for i in h)


def inverse(g):
    inv = [0] * len(g)
    for i, gi in enumerate(g):
        inv[gi] = i
    return tuple(inv)


class PermutationGroup:
    """A finite group acting on ``points``.

    ``elements`` lists the image of every group element as a tuple of point
    indices.  A permutation may appear more than once: that models a group
    whose action has a kernel (a non-effective action), where every element of
    the kernel acts as the identity.
    """

    def __init__(self, points, elements):
        self.points = tuple(points)
        self.index = {p: i for i, p in enumerate(self.points)}
        if len(self.index) != len(self.points):
            raise ValueError("duplicate points")
        self.elements = [tuple(g) for g in elements]
        N = len(self.points)
        for g in self.elements:
            if sorted(g) != list(range(N)):
                raise ValueError(f"{g} is not a permutation of {N} points")
        perms = set(self.elements)
        counts = Counter(self.elements)
        if len(set(counts.values())) != 1:
            raise ValueError("each permutation must occur equally often")
        ident = tuple(range(N))
        if ident not in perms:
            raise ValueError("group must contain the identity")
        for g in perms:
            for h in perms:
                if compose(g, h) not in perms:
                    raise ValueError("element list is not closed under composition")

    @classmethod
    def from_generators(cls, points, generators):
        """Closure of generators given as ``{point: image}`` dicts or index tuples."""
        points = tuple(points)
        index = {p: i for i, p in enumerate(points)}
        gens = []
        for g in generators:
            if isinstance(g, dict):
                gens.append(tuple(index[g.get(p, p)] for p in points))
            else:
                gens.append(tuple(g))
        ident = tuple(range(len(points)))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = compose(g, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return cls(points, sorted(seen))

    @classmethod
    def symmetric(cls, points):
        from itertools import permutations

        return cls(points, sorted(permutations(range(len(points)))))

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_effective(self) -> bool:
        return len(set(self.elements)) == len(self.elements)

    def act(self, g, p):
        return self.points[g[self.index[p]]]

    def orbit(self, p):
        i = self.index[p]
        idx = sorted({g[i] for g in self.elements})
        return tuple(self.points[j] for j in idx)

    def orbits(self):
        seen = set()
        out = []
        for p in self.points:
            if p not in seen:
                o = self.orbit(p)
                seen.update(o)
                out.append(o)
        return out

    def is_subgroup_of(self, G) -> bool:
        return self.points == G.points and set(self.elements) <= set(G.elements)

    def right_coset_representatives(self, G):
        """``g_1..g_k`` with ``G`` the disjoint union of the cosets ``H g_i``."""
        H = set(self.elements)
        reps, covered = [], set()
        for g in G.elements:
            if g in covered:
                continue
            reps.append(g)
            covered.update(compose(h, g) for h in H)
        return reps

    def __repr__(self):
        return f"<PermutationGroup order={self.order} on {len(self.points)} points>"


def orbit_label(orbit):
    return "[" + ",".join(str(p) for p in orbit) + "]"
