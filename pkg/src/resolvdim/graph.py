"""The nonzero component graph of GF(q)^n.

Vertices are the nonzero vectors, identified by their base-q ids; two
vertices are adjacent when their coefficient expansions share a position
with nonzero coefficient, i.e. when their skeleton masks intersect.  The
graph is kept implicit: adjacency and distance are computed from the
precomputed skeleton table, never from a materialized edge list.

The distance closed form (0 for equal vertices, 1 for intersecting
skeletons, else 2) is backed by the breadth-first-search oracle
`bfs_distances`, which the test suite compares against it pair by pair.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator

import numpy as np

from . import field, vectorspace
from .errors import BadParameters, InstanceTooLarge, OutOfRange
from .vectorspace import DEFAULT_VERTEX_CAP

# Hard guard for O(N^2) dense structures (distance/adjacency matrices).
MATRIX_CAP = 4096


class ComponentGraph:
    """Implicit nonzero component graph on q^n - 1 vertices.

    Immutable after construction; all queries are pure and thread-safe.
    The lazily built dense matrices are idempotent caches.
    """

    def __init__(self, q: int, n: int, vertex_cap: int = DEFAULT_VERTEX_CAP):
        field.validate_order(q)
        if n < 1:
            raise BadParameters(f"dimension n={n} must be >= 1")
        count = vectorspace.vertex_count(q, n)
        if count > vertex_cap:
            raise InstanceTooLarge(
                f"q^n-1 = {count} exceeds the vertex cap {vertex_cap}"
            )
        self.q = q
        self.n = n
        self.vertex_count = count
        skeletons = [0] * (count + 1)
        full = (1 << n) - 1
        for vid in range(1, count + 1):
            skeletons[vid] = vectorspace.skeleton_of_id(vid, q, n)
        self._skeletons = skeletons
        self._full_mask = full
        self._dist: np.ndarray | None = None
        self._adj: np.ndarray | None = None

    # -- basic queries --

    def check_vertex(self, u: int) -> None:
        if not (1 <= u <= self.vertex_count):
            raise OutOfRange(f"vertex id {u} outside 1..{self.vertex_count}")

    def skeleton(self, u: int) -> int:
        self.check_vertex(u)
        return self._skeletons[u]

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return u != v and (self._skeletons[u] & self._skeletons[v]) != 0

    def distance(self, u: int, v: int) -> int:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            return 0
        if self._skeletons[u] & self._skeletons[v]:
            return 1
        return 2

    def open_neighborhood(self, u: int) -> set[int]:
        self.check_vertex(u)
        su = self._skeletons[u]
        return {v for v in self.vertex_ids() if v != u and (self._skeletons[v] & su)}

    def closed_neighborhood(self, u: int) -> set[int]:
        nbhd = self.open_neighborhood(u)
        nbhd.add(u)
        return nbhd

    def vertex_ids(self) -> range:
        return range(1, self.vertex_count + 1)

    def label(self, u: int) -> str:
        return vectorspace.vertex_text(u, self.q, self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, ascending."""
        sk = self._skeletons
        for u in self.vertex_ids():
            su = sk[u]
            for v in range(u + 1, self.vertex_count + 1):
                if su & sk[v]:
                    yield (u, v)

    # -- dense views (desk scale only) --

    def skeleton_array(self) -> np.ndarray:
        return np.asarray(self._skeletons[1:], dtype=np.int64)

    def adjacency_matrix(self) -> np.ndarray:
        """Boolean adjacency matrix indexed 0..N-1 (vertex id minus 1)."""
        if self._adj is None:
            n = self.vertex_count
            if n > MATRIX_CAP:
                raise InstanceTooLarge(
                    f"dense adjacency needs N <= {MATRIX_CAP}, got {n}"
                )
            masks = self.skeleton_array()
            adj = (masks[:, None] & masks[None, :]) != 0
            np.fill_diagonal(adj, False)
            self._adj = adj
        return self._adj

    def distance_matrix(self) -> np.ndarray:
        """int16 distance matrix indexed 0..N-1 (vertex id minus 1)."""
        if self._dist is None:
            adj = self.adjacency_matrix()
            dist = np.where(adj, np.int16(1), np.int16(2))
            np.fill_diagonal(dist, 0)
            self._dist = dist
        return self._dist

    def __repr__(self) -> str:
        return f"ComponentGraph(q={self.q}, n={self.n}, vertices={self.vertex_count})"


def order_formula(q: int, n: int) -> int:
    """Number of vertices, q^n - 1."""
    if q < 2 or n < 1:
        raise BadParameters(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    return q ** n - 1


def size_formula(q: int, n: int) -> int:
    """Number of edges, (q^2n - q^n + 1 - (2q-1)^n) / 2, in exact integers."""
    if q < 2 or n < 1:
        raise BadParameters(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    numerator = q ** (2 * n) - q ** n + 1 - (2 * q - 1) ** n
    half, rem = divmod(numerator, 2)
    assert rem == 0, "edge-count numerator must be even"
    return half


def size_bruteforce(g: ComponentGraph) -> int:
    """Count adjacent unordered pairs by a full double loop (oracle)."""
    sk = g._skeletons
    count = 0
    for u in g.vertex_ids():
        su = sk[u]
        for v in range(u + 1, g.vertex_count + 1):
            if su & sk[v]:
                count += 1
    return count


def is_complete(g: ComponentGraph) -> bool:
    """True iff every pair of vertices is adjacent (checked, not assumed)."""
    sk = g._skeletons
    for u in g.vertex_ids():
        su = sk[u]
        for v in range(u + 1, g.vertex_count + 1):
            if not (su & sk[v]):
                return False
    return True


def bfs_distances(g: ComponentGraph, source: int) -> list[int]:
    """Breadth-first-search distances from source; index by vertex id.

    Entry 0 is unused (-1).  Serves as the independent oracle for the
    closed-form distance.
    """
    g.check_vertex(source)
    dist = [-1] * (g.vertex_count + 1)
    dist[source] = 0
    queue = deque([source])
    sk = g._skeletons
    while queue:
        u = queue.popleft()
        su = sk[u]
        du = dist[u]
        for v in g.vertex_ids():
            if dist[v] < 0 and v != u and (su & sk[v]):
                dist[v] = du + 1
                queue.append(v)
    return dist


def to_dot(g: ComponentGraph) -> str:
    """Graphviz DOT export with vertex labels in the text form."""
    lines = ["graph gv {"]
    for u in g.vertex_ids():
        lines.append(f'  {u} [label="{g.label(u)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: ComponentGraph) -> str:
    """Edge-list export: one `<id> <id>` line per edge, ids ascending in
    the line, lines sorted lexicographically as strings."""
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines.sort()
    return "\n".join(lines) + ("\n" if lines else "")
