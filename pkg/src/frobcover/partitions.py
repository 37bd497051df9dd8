"""Set partitions, adjacency, joins."""

from __future__ import annotations

from .errors import InputError


class SetPartition:
    """Blocks of a finite ground set.  Block order is kept for labelling;
    equality ignores it."""

    __slots__ = ("ground", "blocks", "_key")

    def __init__(self, blocks, ground=None):
        blocks = tuple(tuple(b) for b in blocks)
        if any(len(b) == 0 for b in blocks):
            raise InputError("empty block in set partition")
        flat = [x for b in blocks for x in b]
        if len(set(flat)) != len(flat):
            raise InputError("blocks of a set partition must be disjoint")
        if ground is None:
            ground = tuple(sorted(flat, key=str))
        ground = tuple(ground)
        if set(flat) != set(ground):
            raise InputError("blocks must cover the ground set exactly")
        self.ground = ground
        self.blocks = blocks
        self._key = frozenset(frozenset(b) for b in blocks)

    @property
    def n_parts(self) -> int:
        return len(self.blocks)

    def block_of(self, x):
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "{" + "},{".join("".join(map(str, b)) for b in self.blocks) + "}"


def _same_ground(p1, p2):
    if set(p1.ground) != set(p2.ground):
        raise InputError("partitions have different ground sets")


def partition_adjacent(p1: SetPartition, p2: SetPartition) -> bool:
    """Each block of ``p1`` is a union of blocks of ``p2`` or lies inside one block of ``p2``."""
    _same_ground(p1, p2)
    p2_sets = [frozenset(b) for b in p2.blocks]
    for a in p1.blocks:
        A = frozenset(a)
        touching = [B for B in p2_sets if A & B]
        is_union = all(B <= A for B in touching)
        inside_one = len(touching) == 1 and A <= touching[0]
        if not (is_union or inside_one):
            return False
    return True


def join(p1: SetPartition, p2: SetPartition) -> SetPartition:
    """Finest partition coarser than both.  Blocks ordered by first ground element."""
    _same_ground(p1, p2)
    parent = {x: x for x in p1.ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in (p1, p2):
        for b in p.blocks:
            for x in b[1:]:
                ra, rb = find(b[0]), find(x)
                if ra != rb:
                    parent[rb] = ra
    groups = {}
    for x in p1.ground:
        groups.setdefault(find(x), []).append(x)
    return SetPartition(list(groups.values()), ground=p1.ground)


def refines(p1: SetPartition, p2: SetPartition) -> bool:
    """Every block of ``p1`` lies in a block of ``p2``."""
    _same_ground(p1, p2)
    sets = [frozenset(b) for b in p2.blocks]
    return all(any(frozenset(a) <= B for B in sets) for a in p1.blocks)


def all_set_partitions(ground):
    """Every set partition of ``ground`` (Bell(n) of them)."""
    ground = tuple(ground)
    out = []

    def walk(i, blocks):
        if i == len(ground):
            out.append(SetPartition([tuple(b) for b in blocks], ground=ground))
            return
        x = ground[i]
        for b in blocks:
            b.append(x)
            walk(i + 1, blocks)
            b.pop()
        blocks.append([x])
        walk(i + 1, blocks)
        blocks.pop()

    walk(0, [])
    return out


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]
