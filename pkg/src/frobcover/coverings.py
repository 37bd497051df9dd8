"""Finite models of n-branched coverings.

A covering is a map ``h: X -> Y`` of finite sets together with
``t: Y -> Sym^n(X)`` such that

* (i)  every ``x`` occurs in ``t(h(x))``;
* (ii) pushing ``t(y)`` forward along ``h`` gives ``y`` with multiplicity n.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod

from .errors import CapExceeded, InputError
from .groups import PermutationGroup, compose, orbit_label
from .partitions import join, partition_adjacent
from .report import failed, passed


def _sort_key(x):
    if isinstance(x, complex):
        return (0, x.real, x.imag, "")
    if isinstance(x, (int, float)):
        return (0, float(x), 0.0, "")
    return (1, 0.0, 0.0, str(x))


class Multiset:
    """A point of Sym^n(X): finitely many points with positive multiplicities."""

    __slots__ = ("_items",)

    def __init__(self, mult=None):
        c = Counter()
        if mult is not None:
            if isinstance(mult, dict):
                for x, m in mult.items():
                    if m < 0 or int(m) != m:
                        raise InputError(f"multiplicity of {x!r} must be a non-negative integer")
                    if m:
                        c[x] += int(m)
            else:
                c.update(mult)
        self._items = tuple(sorted(c.items(), key=lambda kv: _sort_key(kv[0])))

    @classmethod
    def from_list(cls, xs):
        return cls(list(xs))

    @property
    def n(self) -> int:
        return sum(m for _, m in self._items)

    def mult(self, x) -> int:
        for y, m in self._items:
            if y == x:
                return m
        return 0

    def items(self):
        return self._items

    @property
    def support(self):
        return tuple(x for x, _ in self._items)

    def elements(self):
        return [x for x, m in self._items for _ in range(m)]

    def pushforward(self, h):
        c = Counter()
        for x, m in self._items:
            c[h(x) if callable(h) else h[x]] += m
        return Multiset(dict(c))

    def __add__(self, other):
        return Multiset(dict(Counter(dict(self._items)) + Counter(dict(other._items))))

    def scaled(self, k):
        return Multiset({x: m * k for x, m in self._items})

    def as_dict(self):
        return dict(self._items)

    def __eq__(self, other):
        return isinstance(other, Multiset) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __len__(self):
        return self.n

    def __repr__(self):
        return "[" + ",".join(str(x) for x in self.elements()) + "]"


@dataclass
class FiniteCovering:
    X: tuple
    Y: tuple
    n: int
    h: dict
    t: dict
    notes: list = field(default_factory=list)

    def __post_init__(self):
        self.X = tuple(self.X)
        self.Y = tuple(self.Y)
        if len(set(self.X)) != len(self.X) or len(set(self.Y)) != len(self.Y):
            raise InputError("duplicate labels in X or Y")
        Xs, Ys = set(self.X), set(self.Y)
        if set(self.h) != Xs:
            raise InputError("h must be defined on exactly X")
        if not set(self.h.values()) <= Ys:
            raise InputError("h takes values outside Y")
        if set(self.t) != Ys:
            raise InputError("t must be defined on exactly Y")
        self.t = {y: m if isinstance(m, Multiset) else Multiset(m) for y, m in self.t.items()}
        for y, m in self.t.items():
            if not set(m.support) <= Xs:
                raise InputError(f"t({y}) has points outside X")

    def fiber(self, y):
        return tuple(x for x in self.X if self.h[x] == y)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteCovering)
            and set(self.X) == set(other.X)
            and set(self.Y) == set(other.Y)
            and self.n == other.n
            and self.h == other.h
            and self.t == other.t
        )


def check_covering(c: FiniteCovering):
    """Verify both covering axioms; witness names the first violating point."""
    for x in c.X:
        if c.t[c.h[x]].mult(x) < 1:
            return failed("check_covering", ["axiom_i", x], c.t[c.h[x]],
                          detail=f"{x} does not occur in t(h({x}))")
    for y in c.Y:
        pushed = c.t[y].pushforward(c.h)
        if pushed != Multiset({y: c.n}):
            return failed("check_covering", ["axiom_ii", y], pushed,
                          detail=f"h_*(t({y})) is not {c.n}*{y}")
    return passed("check_covering", c.n)


def trivial_covering(Y, n):
    """``Y x {1..n} -> Y`` with ``t(y) = [(y,1), ..., (y,n)]``."""
    X = [f"({y},{i})" for y in Y for i in range(1, n + 1)]
    h = {f"({y},{i})": y for y in Y for i in range(1, n + 1)}
    t = {y: Multiset([f"({y},{i})" for i in range(1, n + 1)]) for y in Y}
    return FiniteCovering(X, Y, n, h, t)


def identity_covering(points):
    return FiniteCovering(points, points, 1, {p: p for p in points}, {p: Multiset([p]) for p in points})


# -- group quotients --------------------------------------------------------------


def group_quotient_covering(G: PermutationGroup):
    """``X -> X/G`` with ``t(orbit) = [g x0 : g in G]`` (multiplicity = stabiliser order)."""
    notes = []
    if not G.is_effective():
        msg = "group action is not effective; the covering axioms still hold"
        warnings.warn(msg, stacklevel=2)
        notes.append(msg)
    orbits = G.orbits()
    Y = [orbit_label(o) for o in orbits]
    h = {p: orbit_label(o) for o in orbits for p in o}
    t = {}
    for o in orbits:
        x0 = o[0]
        t[orbit_label(o)] = Multiset([G.act(g, x0) for g in G.elements])
    return FiniteCovering(G.points, Y, G.order, h, t, notes=notes)


def subgroup_quotient_covering(G: PermutationGroup, H: PermutationGroup):
    """``X/H -> X/G`` with ``t(Gx) = [H g_i x]`` over right coset representatives."""
    if not H.is_subgroup_of(G):
        raise InputError("H is not a subgroup of G")
    if G.order % H.order:
        raise InputError("subgroup order does not divide group order")
    reps = H.right_coset_representatives(G)
    n = len(reps)
    h_orbit = {p: orbit_label(o) for o in H.orbits() for p in o}
    g_orbit = {p: orbit_label(o) for o in G.orbits() for p in o}
    X = [orbit_label(o) for o in H.orbits()]
    Y = [orbit_label(o) for o in G.orbits()]
    h = {orbit_label(o): g_orbit[o[0]] for o in H.orbits()}
    t = {}
    for o in G.orbits():
        values = {Multiset([h_orbit[G.act(g, x)] for g in reps]) for x in o}
        if len(values) != 1:
            raise AssertionError("t(Gx) depends on the choice of x")
        t[orbit_label(o)] = values.pop()
    # a different set of representatives gives the same multisets
    alt = [compose(H.elements[-1], g) for g in reps]
    for o in G.orbits():
        if Multiset([h_orbit[G.act(g, o[0])] for g in alt]) != t[orbit_label(o)]:
            raise AssertionError("t depends on the coset representatives")
    return FiniteCovering(X, Y, n, h, t)


# -- interval coverings --------------------------------------------------------------


@dataclass
class IntervalCoveringSpec:
    n: int
    partitions: list
    breakpoints: list | None = None

    def __post_init__(self):
        if not self.partitions:
            raise InputError("need at least one partition")
        ground = self.partitions[0].ground
        if len(ground) != self.n:
            raise InputError(f"partitions are of a {len(ground)}-element set, expected n={self.n}")
        for p in self.partitions:
            if set(p.ground) != set(ground):
                raise InputError("all partitions must share one ground set")
        if self.breakpoints is not None:
            b = list(self.breakpoints)
            if len(b) != self.k or not all(0 < x < 1 for x in b) or b != sorted(set(b)):
                raise InputError("breakpoints must be k increasing values in (0,1)")

    @property
    def k(self) -> int:
        return len(self.partitions) - 1

    def first_incompatible(self):
        """Index r (1-based) of the first non-adjacent pair phi(r), phi(r+1), or None."""
        for r in range(self.k):
            p, q = self.partitions[r], self.partitions[r + 1]
            # adjacency is symmetric; both directions are required regardless
            if not (partition_adjacent(p, q) and partition_adjacent(q, p)):
                return r + 1
        return None


class IncompatibleSpec(InputError):
    def __init__(self, r, p, q):
        super().__init__(f"phi({r}) = {p} and phi({r + 1}) = {q} are not adjacent")
        self.pair = (r, r + 1)


def _sheet(prefix, r, j):
    return f"{prefix}{r}{j}" if r < 10 and j < 10 else f"{prefix}{r}_{j}"


@dataclass
class IntervalCovering:
    spec: IntervalCoveringSpec
    covering: FiniteCovering
    blocks: dict  # sheet label -> block (tuple of ground elements)
    edges: list  # (segment sheet, branch sheet)
    segments: list
    branch_points: list

    def to_dot(self) -> str:
        c = self.covering
        lines = ["graph interval_covering {", "  rankdir=LR;", "  node [shape=point];"]
        for y in c.Y:
            lines.append(f'  subgraph "cluster_{y}" {{')
            lines.append(f'    label="{y}";')
            for x in c.fiber(y):
                block = "".join(map(str, self.blocks[x]))
                shape = "circle" if y in self.branch_points else "point"
                lines.append(f'    "{x}" [shape={shape}, xlabel="{x}:{block}"];')
            lines.append("  }")
        for a, b in self.edges:
            lines.append(f'  "{a}" -- "{b}";')
        base = [f'"base:{y}"' for y in c.Y]
        for y in c.Y:
            lines.append(f'  "base:{y}" [shape=plaintext, label="{y}"];')
        if len(base) > 1:
            lines.append("  " + " -- ".join(base) + ";")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_interval_covering(spec: IntervalCoveringSpec) -> IntervalCovering:
    """Finite model over the path ``y1, b1, y2, ..., bk, y(k+1)``.

    Sheets over segment ``y_r`` are the blocks of phi(r); sheets over the
    branch point ``b_r`` are the blocks of the join of phi(r) and phi(r+1).
    Each sheet occurs in ``t`` with multiplicity equal to its block size.
    """
    bad = spec.first_incompatible()
    if bad is not None:
        raise IncompatibleSpec(bad, spec.partitions[bad - 1], spec.partitions[bad])
    X, h, t, blocks, edges = [], {}, {}, {}, []
    segments, branch_points, Y = [], [], []
    seg_sheets = []
    for r, p in enumerate(spec.partitions, start=1):
        y = f"y{r}"
        segments.append(y)
        sheets = {}
        mult = {}
        for j, b in enumerate(p.blocks, start=1):
            x = _sheet("x", r, j)
            X.append(x)
            h[x] = y
            blocks[x] = b
            mult[x] = len(b)
            sheets[frozenset(b)] = x
        t[y] = Multiset(mult)
        seg_sheets.append(sheets)
    for r in range(1, spec.k + 1):
        bpt = f"b{r}"
        branch_points.append(bpt)
        J = join(spec.partitions[r - 1], spec.partitions[r])
        mult = {}
        for j, b in enumerate(J.blocks, start=1):
            z = _sheet("z", r, j)
            X.append(z)
            h[z] = bpt
            blocks[z] = b
            mult[z] = len(b)
            Bset = frozenset(b)
            for side in (seg_sheets[r - 1], seg_sheets[r]):
                for blk, x in side.items():
                    if blk <= Bset:
                        edges.append((x, z))
        t[bpt] = Multiset(mult)
    for r in range(1, spec.k + 2):
        Y.append(f"y{r}")
        if r <= spec.k:
            Y.append(f"b{r}")
    cov = FiniteCovering(X, Y, spec.n, h, t)
    return IntervalCovering(spec, cov, blocks, edges, segments, branch_points)


def _compositions(total, parts):
    """Ordered ways to write ``total`` as ``parts`` positive integers."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def minimal_branching_degree(ic: IntervalCovering):
    """Smallest n admitting sheet multiplicities compatible with the gluing.

    Every sheet needs multiplicity >= 1, and at a branch sheet the
    multiplicities of the segment sheets glued to it from the left and from
    the right must both add up to its own (continuity of t at the branch
    point).  Searched exhaustively for n = 1, 2, ...
    """
    spec = ic.spec
    seg = []
    for r in range(1, spec.k + 2):
        seg.append([x for x in ic.covering.fiber(f"y{r}")])
    left = {}
    right = {}
    for x, z in ic.edges:
        r = int(ic.covering.h[x][1:])
        b = int(ic.covering.h[z][1:])
        (left if r == b else right).setdefault(z, []).append(x)

    def extend(r, m):
        if r == spec.k + 1:
            return True
        bpt = f"b{r}"
        zs = ic.covering.fiber(bpt)
        mz = {z: sum(m[x] for x in left[z]) for z in zs}
        choices = [list(_compositions(mz[z], len(right[z]))) for z in zs]

        def pick(i, acc):
            if i == len(zs):
                return extend(r + 1, acc)
            for comp in choices[i]:
                nxt = dict(acc)
                nxt.update(zip(right[zs[i]], comp))
                if pick(i + 1, nxt):
                    return True
            return False

        return pick(0, m)

    for n in range(1, spec.n + 1):
        for comp in _compositions(n, len(seg[0])):
            if extend(1, dict(zip(seg[0], comp))):
                return n
    return spec.n


# -- pullbacks and compositions ----------------------------------------------------


def pullback_covering(c: FiniteCovering, Z, phi) -> FiniteCovering:
    """Induced covering over ``Z`` along ``phi: Z -> Y``."""
    Z = tuple(Z)
    phi = dict(phi) if not callable(phi) else {z: phi(z) for z in Z}
    if set(phi) != set(Z) or not set(phi.values()) <= set(c.Y):
        raise InputError("phi must map Z into Y")
    X, h, t = [], {}, {}
    for z in Z:
        y = phi[z]
        for x in c.X:
            if c.h[x] == y:
                label = f"({z},{x})"
                X.append(label)
                h[label] = z
        t[z] = Multiset({f"({z},{x})": m for x, m in c.t[y].items()})
    return FiniteCovering(X, Z, c.n, h, t)


def compose_coverings(inner: FiniteCovering, outer: FiniteCovering) -> FiniteCovering:
    """``X -> Y -> Z``: ``u(z) = concatenation of s(y) over y in t(z)``."""
    if set(inner.Y) != set(outer.X):
        raise InputError("middle spaces do not match")
    h = {x: outer.h[inner.h[x]] for x in inner.X}
    u = {}
    for z in outer.Y:
        acc = Counter()
        for y, m in outer.t[z].items():
            for x, k in inner.t[y].items():
                acc[x] += m * k
        u[z] = Multiset(dict(acc))
    return FiniteCovering(inner.X, outer.Y, inner.n * outer.n, h, u)


def concatenate_multiset_maps(s: dict, t: dict):
    """Pointwise concatenation ``y -> s(y) + t(y)``."""
    if set(s) != set(t):
        raise InputError("maps have different domains")
    return {y: s[y] + t[y] for y in s}


# -- resolution by labellings ----------------------------------------------------------

DEFAULT_RESOLUTION_CAP = 200_000


@dataclass
class ResolutionSpace:
    covering: FiniteCovering
    n: int
    E: list  # labellings psi, tuples of length n
    orbit_of: dict  # psi -> orbit id
    pair_orbit_of: dict  # (psi, i) -> orbit id
    base_map: dict  # orbit id -> y
    total_map: dict  # pair orbit id -> x

    def reconstruct(self) -> FiniteCovering:
        """The covering ``E x_{S_n} [n] -> E/S_n`` with t([psi]) = [[psi,i] : i]."""
        Xo = sorted(set(self.pair_orbit_of.values()))
        Yo = sorted(set(self.orbit_of.values()))
        X = [f"P{k}" for k in Xo]
        Y = [f"O{k}" for k in Yo]
        h = {}
        for (psi, i), k in self.pair_orbit_of.items():
            h[f"P{k}"] = f"O{self.orbit_of[psi]}"
        t = {}
        reps = {}
        for psi, k in self.orbit_of.items():
            reps.setdefault(k, psi)
        for k, psi in reps.items():
            t[f"O{k}"] = Multiset([f"P{self.pair_orbit_of[(psi, i)]}" for i in range(self.n)])
        return FiniteCovering(X, Y, self.n, h, t)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _arrangements(ms: Multiset):
    from .sympower import distinct_permutations

    order = {x: i for i, x in enumerate(ms.support)}
    word = [order[x] for x in ms.elements()]
    sup = ms.support
    return [tuple(sup[i] for i in w) for w in distinct_permutations(word)]


def resolution_size(c: FiniteCovering) -> int:
    return sum(factorial(c.n) // prod(factorial(m) for _, m in c.t[y].items()) for y in c.Y)


def resolve_covering(c: FiniteCovering, max_size=DEFAULT_RESOLUTION_CAP):
    """Build E = {psi: [n] -> X : h psi constant, psi an epimorphism onto t(h psi(1))}
    with the precomposition action of S_n, and its two quotients."""
    size = resolution_size(c) * c.n
    if size > max_size:
        raise CapExceeded(f"resolution needs {size} labelled points (cap {max_size})", count=size)
    n = c.n
    E = []
    for y in c.Y:
        E.extend(_arrangements(c.t[y]))
    gens = [tuple(range(i)) + (i + 1, i) + tuple(range(i + 2, n)) for i in range(n - 1)]

    uf = _UnionFind(E)
    pairs = [(psi, i) for psi in E for i in range(n)]
    uf2 = _UnionFind(pairs)
    for psi in E:
        for s in gens:
            moved = tuple(psi[s[i]] for i in range(n))  # psi o s
            uf.union(psi, moved)
            for i in range(n):
                uf2.union((psi, i), (moved, s[i]))  # s is an involution: s^-1(i) = s(i)
    roots = {}
    orbit_of = {psi: roots.setdefault(uf.find(psi), len(roots)) for psi in E}
    roots2 = {}
    pair_orbit_of = {p: roots2.setdefault(uf2.find(p), len(roots2)) for p in pairs}
    base_map = {}
    total_map = {}
    for psi in E:
        base_map.setdefault(orbit_of[psi], set()).add(c.h[psi[0]])
    for p, k in pair_orbit_of.items():
        total_map.setdefault(k, set()).add(p[0][p[1]])
    return ResolutionSpace(c, n, E, orbit_of, pair_orbit_of, base_map, total_map)


def check_resolution(res: ResolutionSpace):
    """E/S_n <-> Y and E x_{S_n} [n] <-> X, compatibly with the projections."""
    c = res.covering
    for k, ys in res.base_map.items():
        if len(ys) != 1:
            return failed("resolution", ["orbit_not_over_one_point", k], sorted(ys))
    images = [next(iter(v)) for v in res.base_map.values()]
    if sorted(images, key=str) != sorted(c.Y, key=str):
        return failed("resolution", "E/S_n -> Y not bijective", sorted(images, key=str))
    for k, xs in res.total_map.items():
        if len(xs) != 1:
            return failed("resolution", ["pair_orbit_not_single_point", k], sorted(xs, key=str))
    ximages = [next(iter(v)) for v in res.total_map.values()]
    if sorted(ximages, key=str) != sorted(c.X, key=str):
        return failed("resolution", "E x_{S_n} [n] -> X not bijective", len(ximages))
    for (psi, i), k in res.pair_orbit_of.items():
        y = next(iter(res.base_map[res.orbit_of[psi]]))
        if c.h[psi[i]] != y:
            return failed("resolution", ["projection_mismatch", list(psi), i])
    return passed("resolution", len(res.E))


def covering_isomorphic_via(res: ResolutionSpace) -> bool:
    """Reconstructed covering equals the original after relabelling through
    the two bijections."""
    c = res.covering
    rc = res.reconstruct()
    xmap = {f"P{k}": next(iter(v)) for k, v in res.total_map.items()}
    ymap = {f"O{k}": next(iter(v)) for k, v in res.base_map.items()}
    if len(set(xmap.values())) != len(xmap) or len(set(ymap.values())) != len(ymap):
        return False
    if any(ymap[rc.h[x]] != c.h[xmap[x]] for x in rc.X):
        return False
    return all(rc.t[y].pushforward(xmap) == c.t[ymap[y]] for y in rc.Y) and rc.n == c.n

