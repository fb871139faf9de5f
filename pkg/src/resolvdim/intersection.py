"""Intersection graphs of finite set families.

An intersection graph has one vertex per family member and an edge where
two members share an element.  For q=2 the component graph of GF(2)^n is
exactly the intersection graph of the nonempty subsets of {1..n}: the
vector with support {i1..ik} maps to the subset {i1..ik}, and sharing a
nonzero coordinate is sharing an element.  `powerset_matches_component_graph`
checks that identification edge by edge.

`as_intersection_family` realizes an arbitrary simple graph as an
intersection graph: each vertex becomes the set of its incident edge
tokens plus one private token, so adjacency is exactly set intersection.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from . import resolving, twins
from .errors import BadParameters, EmptyMember, OutOfRange
from .graph import ComponentGraph
from .resolving import DEFAULT_BUDGET


class SetFamily:
    """An indexed family of non-empty sets over an ordered ground set."""

    def __init__(self, members: Iterable[Iterable], ground: Sequence | None = None):
        mem = tuple(frozenset(m) for m in members)
        for i, m in enumerate(mem):
            if not m:
                raise EmptyMember(f"member {i} is empty")
        if ground is None:
            ground = sorted(set().union(*mem)) if mem else []
        ground_set = set(ground)
        for i, m in enumerate(mem):
            if not m <= ground_set:
                raise BadParameters(f"member {i} uses tokens outside the ground set")
        self.ground = tuple(ground)
        self.members = mem

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SetFamily)
                and self.members == other.members
                and self.ground == other.ground)

    def __repr__(self) -> str:
        return f"SetFamily({len(self.members)} members over {len(self.ground)} tokens)"


class PlainGraph:
    """A simple undirected graph on vertices 0..vertex_count-1."""

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise BadParameters("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise BadParameters(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise OutOfRange(f"edge ({u},{v}) outside 0..{vertex_count - 1}")
            canon.add((min(u, v), max(u, v)))
        self.vertex_count = vertex_count
        self.edges = frozenset(canon)
        self._neighbors: list[set[int]] | None = None
        self._dist: np.ndarray | None = None

    def neighbors(self) -> list[set[int]]:
        if self._neighbors is None:
            nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
            for u, v in self.edges:
                nbrs[u].add(v)
                nbrs[v].add(u)
            self._neighbors = nbrs
        return self._neighbors

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def vertex_ids(self) -> range:
        return range(self.vertex_count)

    def distance_matrix(self) -> np.ndarray:
        """BFS distances; unreachable pairs get vertex_count + 1."""
        if self._dist is None:
            n = self.vertex_count
            sentinel = n + 1
            dist = np.full((n, n), sentinel, dtype=np.int16)
            nbrs = self.neighbors()
            for s in range(n):
                dist[s, s] = 0
                queue = deque([s])
                while queue:
                    u = queue.popleft()
                    for v in nbrs[u]:
                        if dist[s, v] == sentinel:
                            dist[s, v] = dist[s, u] + 1
                            queue.append(v)
            self._dist = dist
        return self._dist

    def adjacency_matrix(self) -> np.ndarray:
        n = self.vertex_count
        adj = np.zeros((n, n), dtype=bool)
        for u, v in self.edges:
            adj[u, v] = adj[v, u] = True
        return adj

    def __eq__(self, other) -> bool:
        return (isinstance(other, PlainGraph)
                and self.vertex_count == other.vertex_count
                and self.edges == other.edges)

    def __repr__(self) -> str:
        return f"PlainGraph({self.vertex_count} vertices, {len(self.edges)} edges)"


def intersection_graph(fam: SetFamily) -> PlainGraph:
    """Graph on member indices with edges between intersecting members."""
    k = len(fam.members)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)
             if fam.members[i] & fam.members[j]]
    return PlainGraph(k, edges)


def powerset_family(n: int) -> SetFamily:
    """All nonempty subsets of {1..n}, in ascending mask order."""
    if not (1 <= n <= 16):
        raise BadParameters(f"need 1 <= n <= 16, got n={n}")
    members = []
    for mask in range(1, 1 << n):
        members.append({i + 1 for i in range(n) if (mask >> i) & 1})
    return SetFamily(members, ground=range(1, n + 1))


def powerset_matches_component_graph(n: int) -> bool:
    """Edge-for-edge check of the support identification at q=2.

    Vertex id m of the component graph corresponds to family member m
    (1-based), since both are indexed by the same support mask.
    """
    g = ComponentGraph(2, n)
    pg = intersection_graph(powerset_family(n))
    if g.vertex_count != pg.vertex_count:
        return False
    component_edges = {(u, v) for u, v in g.edges()}
    family_edges = {(u + 1, v + 1) for u, v in pg.edges}
    return component_edges == family_edges


def as_intersection_family(pg: PlainGraph) -> SetFamily:
    """Realize a simple graph as an intersection family.

    Member for vertex v: its incident edge tokens plus a private token,
    so two members intersect exactly when the vertices are adjacent.  The
    construction is verified internally before returning.
    """
    edge_token = {e: f"e{e[0]}-{e[1]}" for e in sorted(pg.edges)}
    members = []
    for v in pg.vertex_ids():
        tokens = {edge_token[e] for e in pg.edges if v in e}
        tokens.add(f"p{v}")
        members.append(tokens)
    ground = [edge_token[e] for e in sorted(pg.edges)] + \
             [f"p{v}" for v in pg.vertex_ids()]
    fam = SetFamily(members, ground=ground)
    assert intersection_graph(fam) == pg, "realization failed to round-trip"
    return fam


def component_graph_as_plain(g: ComponentGraph) -> PlainGraph:
    """Re-index a component graph to a 0-based plain graph."""
    return PlainGraph(g.vertex_count, [(u - 1, v - 1) for u, v in g.edges()])


def powerset_intersection_dimension(n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Metric dimension of the powerset intersection graph, by search."""
    if n < 2:
        raise BadParameters(f"need n >= 2, got n={n}")
    pg = intersection_graph(powerset_family(n))
    classes = twins.twin_classes_from_adjacency(pg.adjacency_matrix())
    k, _ = resolving.find_min_resolving_for_matrix(
        pg.distance_matrix(), classes, budget)
    return k


def family_to_text(fam: SetFamily) -> str:
    """One member per line, tokens comma-separated, deterministic order."""
    lines = []
    for m in fam.members:
        lines.append(",".join(str(t) for t in sorted(m, key=str)))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_family(text: str) -> SetFamily:
    """Parse the member-per-line format; `#` starts a comment line."""
    members = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t.strip() for t in line.split(",")]
        if any(not t for t in tokens):
            raise EmptyMember(f"line {lineno}: empty token")
        members.append(set(tokens))
    return SetFamily(members)
