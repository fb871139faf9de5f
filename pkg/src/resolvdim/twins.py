"""Twin vertices: equal-neighborhood and equal-skeleton partitions.

Two vertices are twins when N[u] = N[v] or N(u) = N(v).  The package
computes that partition directly from neighborhoods and, separately, the
partition by equal skeleton mask; `partitions_coincide` compares the two
as set families.  On the component graphs the two coincide everywhere
except q=2, n=2, where the two unit vectors e1, e2 share the open
neighborhood {e1+e2} but have different skeletons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import AlreadyMember, NotMember, NotTwins
from .graph import ComponentGraph


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertex ids into classes.

    Classes are ordered by minimum member id, members ascending.  Each
    class carries the skeleton mask of its smallest member.
    """

    classes: tuple[tuple[int, ...], ...]
    skeletons: tuple[int, ...]

    def class_of(self, v: int) -> int:
        for i, cls in enumerate(self.classes):
            if v in cls:
                return i
        raise NotMember(f"vertex {v} not covered by the partition")

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def twin_classes_from_adjacency(adj: np.ndarray) -> list[list[int]]:
    """0-based twin classes of an adjacency matrix.

    Vertices are merged when their open-neighborhood rows match or their
    closed-neighborhood rows match.
    """
    n = adj.shape[0]
    uf = _UnionFind(n)
    closed = adj.copy()
    np.fill_diagonal(closed, True)
    for rows in (adj, closed):
        seen: dict[bytes, int] = {}
        for i in range(n):
            key = rows[i].tobytes()
            if key in seen:
                uf.union(seen[key], i)
            else:
                seen[key] = i
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def partition_by_neighborhood(g: ComponentGraph) -> TwinPartition:
    """Classes of the twin relation N[u]=N[v] or N(u)=N(v)."""
    classes0 = twin_classes_from_adjacency(g.adjacency_matrix())
    classes = tuple(tuple(i + 1 for i in c) for c in classes0)
    skeletons = tuple(g.skeleton(c[0]) for c in classes)
    return TwinPartition(classes=classes, skeletons=skeletons)


def partition_by_skeleton(g: ComponentGraph) -> TwinPartition:
    """Classes of the equal-skeleton relation, keyed by mask."""
    by_mask: dict[int, list[int]] = {}
    for v in g.vertex_ids():
        by_mask.setdefault(g.skeleton(v), []).append(v)
    classes = tuple(sorted((tuple(sorted(c)) for c in by_mask.values()),
                           key=lambda c: c[0]))
    skeletons = tuple(g.skeleton(c[0]) for c in classes)
    return TwinPartition(classes=classes, skeletons=skeletons)


def partitions_coincide(g: ComponentGraph) -> bool:
    """True iff the neighborhood and skeleton partitions are identical."""
    a = {frozenset(c) for c in partition_by_neighborhood(g).classes}
    b = {frozenset(c) for c in partition_by_skeleton(g).classes}
    return a == b


def are_twins(g: ComponentGraph, u: int, v: int) -> bool:
    if u == v:
        return True
    nu, nv = g.open_neighborhood(u), g.open_neighborhood(v)
    if nu == nv:
        return True
    nu.add(u)
    nv.add(v)
    return nu == nv


def twin_swap(g: ComponentGraph, w: Iterable[int], u: int, v: int) -> tuple[int, ...]:
    """Replace member u of w by its twin v; returns the swapped set sorted.

    Whenever w resolves the graph the swapped set does too, because twins
    are at equal distance from every other vertex.
    """
    wset = set(w)
    for x in wset | {u, v}:
        g.check_vertex(x)
    if u not in wset:
        raise NotMember(f"vertex {u} is not in the set")
    if v in wset:
        raise AlreadyMember(f"vertex {v} is already in the set")
    if not are_twins(g, u, v):
        raise NotTwins(f"vertices {u} and {v} are not twins")
    wset.discard(u)
    wset.add(v)
    return tuple(sorted(wset))


def twin_lower_bound(classes: Sequence[Sequence[int]]) -> int:
    """Every resolving set needs all but one member of each twin class."""
    return sum(len(c) - 1 for c in classes)
