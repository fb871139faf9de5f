"""Resolving sets, metric dimension and minimal-set enumeration.

The representation of a vertex with respect to an ordered set W is the
tuple of its distances to the members of W; W resolves the graph when all
representations are distinct.  The metric dimension comes from two
independent routes: a closed-form case formula, and an exhaustive
increasing-size subset search over the distance matrix.  The search
starts at the twin lower bound (every resolving set must contain all but
one member of each twin class) and enumerates k-subsets in lexicographic
order, so the returned witness is the lexicographically least minimum
resolving set and is identical across batch sizes and worker counts.

Budgets are counted in candidate subsets evaluated, never wall time.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice, product
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import twins as twins_mod
from . import vectorspace
from .errors import BadParameters, BudgetExceeded, EmptySet, NotResolving
from .graph import ComponentGraph

DEFAULT_BUDGET = 1_000_000

_BATCH = 8192
_MASK_TABLE_MAX_N = 20


@dataclass(frozen=True)
class ResolvingReport:
    """Outcome of a resolving check for one candidate set."""

    W: tuple[int, ...]
    is_resolving: bool
    is_minimal: bool
    colliding_pair: tuple[int, int] | None = None
    redundant_vertex: int | None = None


# ---------------------------------------------------------------------------
# single-set checks
# ---------------------------------------------------------------------------

def representation(g: ComponentGraph, v: int, w: Sequence[int]) -> tuple[int, ...]:
    """Distance tuple of v to the ordered set w."""
    members = tuple(w)
    if not members:
        raise EmptySet("representation needs a non-empty ordered set")
    return tuple(g.distance(v, x) for x in members)


def _collision(g: ComponentGraph, members: tuple[int, ...]) -> tuple[int, int] | None:
    """Lexicographically least pair of vertices with equal representations."""
    table = sorted((tuple(g.distance(v, x) for x in members), v)
                   for v in g.vertex_ids())
    best: tuple[int, int] | None = None
    i = 0
    while i < len(table) - 1:
        if table[i][0] == table[i + 1][0]:
            j = i + 1
            while j < len(table) and table[j][0] == table[i][0]:
                j += 1
            group = sorted(v for _, v in table[i:j])
            pair = (group[0], group[1])
            if best is None or pair < best:
                best = pair
            i = j
        else:
            i += 1
    return best


def is_resolving(g: ComponentGraph, w: Iterable[int]) -> ResolvingReport:
    """Full report: resolving status, least collision, minimality."""
    members = tuple(w)
    if len(set(members)) != len(members):
        raise BadParameters("candidate set contains duplicate vertices")
    for x in members:
        g.check_vertex(x)
    if not members:
        resolving = g.vertex_count == 1
        pair = None if resolving else (1, 2)
        return ResolvingReport(W=members, is_resolving=resolving,
                               is_minimal=resolving, colliding_pair=pair)
    pair = _collision(g, members)
    if pair is not None:
        return ResolvingReport(W=members, is_resolving=False, is_minimal=False,
                               colliding_pair=pair)
    redundant = None
    for drop in sorted(members):
        rest = tuple(x for x in members if x != drop)
        if _resolves(g, rest):
            redundant = drop
            break
    return ResolvingReport(W=members, is_resolving=True,
                           is_minimal=redundant is None,
                           redundant_vertex=redundant)


def _resolves(g: ComponentGraph, members: tuple[int, ...]) -> bool:
    if not members:
        return g.vertex_count == 1
    seen = set()
    for v in g.vertex_ids():
        rep = tuple(g.distance(v, x) for x in members)
        if rep in seen:
            return False
        seen.add(rep)
    return True


def is_minimal(g: ComponentGraph, w: Iterable[int]) -> bool:
    """True iff w resolves and no single removal still resolves.

    Single removals suffice: supersets of resolving sets resolve, so a
    resolving proper subset implies a resolving (k-1)-subset.
    """
    members = tuple(w)
    if not _resolves(g, members):
        raise NotResolving("the candidate set does not resolve the graph")
    return all(not _resolves(g, tuple(x for x in members if x != drop))
               for drop in members)


# ---------------------------------------------------------------------------
# closed-form dimension and canonical construction
# ---------------------------------------------------------------------------

def metric_dimension_formula(q: int, n: int) -> int:
    """Case formula for the metric dimension of the component graph.

    q=2: 0 for n=1 (single vertex, empty set resolves), 1 for n=2, else n.
    q>=3: sum over k of C(n,k)*((q-1)^k - 1), the twin-class bound, which
    is attained.
    """
    if q < 2 or n < 1:
        raise BadParameters(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    if q == 2:
        if n == 1:
            return 0
        if n == 2:
            return 1
        return n
    return sum(comb(n, k) * ((q - 1) ** k - 1) for k in range(1, n + 1))


def canonical_metric_basis(q: int, n: int) -> tuple[int, ...]:
    """Constructive minimum resolving set.

    q=2: empty for n=1, {e1} for n=2, the unit vectors for n>=3.
    q>=3: all but the largest-id member of every skeleton class.
    """
    if q == 2:
        if n == 1:
            return ()
        if n == 2:
            return (1,)
        return tuple(2 ** i for i in range(n))
    out: list[int] = []
    for mask in range(1, 1 << n):
        support = [i for i in range(n) if (mask >> i) & 1]
        members = []
        for values in product(range(1, q), repeat=len(support)):
            coeffs = [0] * n
            for pos, val in zip(support, values):
                coeffs[pos] = val
            members.append(vectorspace.encode(coeffs, q))
        members.sort()
        out.extend(members[:-1])
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# batched subset engine over a distance matrix (0-based indices)
# ---------------------------------------------------------------------------

class _Budget:
    def __init__(self, budget: int):
        self.budget = budget
        self.evaluated = 0

    @property
    def left(self) -> int:
        return self.budget - self.evaluated

    def charge(self, amount: int) -> None:
        self.evaluated += amount


def _iter_comb_batches(n: int, k: int, limit: int) -> Iterator[np.ndarray]:
    """Yield (B, k) index arrays in lexicographic order, at most limit rows."""
    it = combinations(range(n), k)
    remaining = limit
    while remaining > 0:
        chunk = list(islice(it, min(_BATCH, remaining)))
        if not chunk:
            return
        remaining -= len(chunk)
        yield np.asarray(chunk, dtype=np.intp)


def _resolving_batch(dist64: np.ndarray, cols: np.ndarray, base: int) -> np.ndarray:
    """Boolean resolving status for a batch of candidate column sets."""
    n = dist64.shape[0]
    b, k = cols.shape
    base = max(base, 2)
    group = 1
    while base ** (group + 1) < 2 ** 62:
        group += 1
    if k <= group:
        codes = np.zeros((n, b), dtype=np.int64)
        for j in range(k):
            codes *= base
            codes += dist64[:, cols[:, j]]
        codes.sort(axis=0)
        return ~np.any(codes[1:] == codes[:-1], axis=0)
    # wide-set fallback: exact per-candidate duplicate detection
    dist16 = dist64.astype(np.int16)
    out = np.empty(b, dtype=bool)
    for i in range(b):
        sub = dist16[:, cols[i]]
        out[i] = len({row.tobytes() for row in sub}) == n
    return out


def find_min_resolving_for_matrix(
    dist: np.ndarray,
    twin_classes: Sequence[Sequence[int]],
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, tuple[int, ...]]:
    """Smallest k with a resolving k-subset of matrix columns, plus the
    lexicographically least witness (0-based indices).

    Enumeration starts at the twin lower bound and walks k upward; the
    budget counts candidate subsets evaluated.
    """
    n = dist.shape[0]
    if n == 1:
        return 0, ()
    dist64 = dist.astype(np.int64)
    base = int(dist64.max()) + 1
    tracker = _Budget(budget)
    start_k = max(1, twins_mod.twin_lower_bound(twin_classes))
    for k in range(start_k, n + 1):
        complete = comb(n, k) <= tracker.left
        for cols in _iter_comb_batches(n, k, tracker.left):
            tracker.charge(len(cols))
            hits = _resolving_batch(dist64, cols, base)
            if hits.any():
                first = int(np.argmax(hits))
                return k, tuple(int(c) for c in cols[first])
        if not complete:
            raise BudgetExceeded(
                f"search stopped after {tracker.evaluated} subset evaluations",
                evaluated=tracker.evaluated, budget=budget,
                lower_bound=k, upper_bound=n)
        if tracker.left == 0:
            raise BudgetExceeded(
                f"budget spent after finishing level k={k}",
                evaluated=tracker.evaluated, budget=budget,
                lower_bound=k + 1, upper_bound=n)
    raise AssertionError("the full vertex set always resolves")


def resolving_status_by_mask(dist: np.ndarray, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Resolving status of every subset, indexed by bit mask of columns.

    Needs 2^N evaluations; refuses when that exceeds the budget or N is
    beyond the table guard.
    """
    n = dist.shape[0]
    if n > _MASK_TABLE_MAX_N or (1 << n) > budget:
        raise BudgetExceeded(
            f"full subset table needs 2^{n} evaluations, over the budget {budget}",
            evaluated=0, budget=budget)
    dist64 = dist.astype(np.int64)
    base = int(dist64.max()) + 1
    status = np.zeros(1 << n, dtype=bool)
    status[0] = n == 1
    for k in range(1, n + 1):
        for cols in _iter_comb_batches(n, k, comb(n, k)):
            hits = _resolving_batch(dist64, cols, base)
            masks = (np.int64(1) << cols).sum(axis=1)
            status[masks] = hits
    return status


def minimal_status_by_mask(status: np.ndarray, n: int) -> np.ndarray:
    """Minimal-resolving status for every subset mask, from the full table."""
    minimal = status.copy()
    all_masks = np.arange(1 << n, dtype=np.int64)
    for b in range(n):
        with_bit = all_masks[((all_masks >> b) & 1) == 1]
        minimal[with_bit] &= ~status[with_bit ^ (1 << b)]
    return minimal


def all_resolving_k_subsets(
    dist: np.ndarray, k: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """Every resolving k-subset of matrix columns, lexicographic order."""
    n = dist.shape[0]
    if k == 0:
        return [()] if n == 1 else []
    total = comb(n, k)
    if total > budget:
        raise BudgetExceeded(
            f"scanning C({n},{k}) = {total} subsets exceeds the budget {budget}",
            evaluated=0, budget=budget)
    dist64 = dist.astype(np.int64)
    base = int(dist64.max()) + 1
    found: list[tuple[int, ...]] = []
    for cols in _iter_comb_batches(n, k, total):
        hits = _resolving_batch(dist64, cols, base)
        for row in cols[hits]:
            found.append(tuple(int(c) for c in row))
    return found


# ---------------------------------------------------------------------------
# component-graph front ends
# ---------------------------------------------------------------------------

def metric_dimension_search(
    g: ComponentGraph, budget: int = DEFAULT_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Exhaustive-search metric dimension with its least witness (ids)."""
    if g.vertex_count == 1:
        return 0, ()
    classes = twins_mod.partition_by_neighborhood(g).classes
    classes0 = [[v - 1 for v in c] for c in classes]
    k, cols = find_min_resolving_for_matrix(g.distance_matrix(), classes0, budget)
    return k, tuple(c + 1 for c in cols)


def enumerate_minimum_resolving_sets(
    g: ComponentGraph, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """All minimum resolving sets, lexicographic order (ids)."""
    k, _ = metric_dimension_search(g, budget)
    subsets = all_resolving_k_subsets(g.distance_matrix(), k, budget)
    return [tuple(c + 1 for c in cols) for cols in subsets]


def enumerate_minimal_resolving_sets(
    g: ComponentGraph,
    size_cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[int, ...]]:
    """All minimal resolving sets of size <= size_cap, lexicographic order.

    Uses the full 2^N subset table when it fits the budget, otherwise an
    increasing-k scan with explicit single-removal minimality checks.
    """
    n = g.vertex_count
    cap = n if size_cap is None else min(size_cap, n)
    if cap < 0:
        raise BadParameters("size cap must be non-negative")
    dist = g.distance_matrix()
    if n <= _MASK_TABLE_MAX_N and (1 << n) <= budget:
        status = resolving_status_by_mask(dist, budget)
        minimal = minimal_status_by_mask(status, n)
        out = []
        for mask in np.flatnonzero(minimal):
            members = tuple(i + 1 for i in range(n) if (int(mask) >> i) & 1)
            if len(members) <= cap:
                out.append(members)
        out.sort()
        return out
    tracker = _Budget(budget)
    out = []
    for k in range(0, cap + 1):
        level = comb(n, k)
        if level > tracker.left:
            raise BudgetExceeded(
                f"level k={k} needs {level} evaluations, budget exhausted",
                evaluated=tracker.evaluated, budget=budget)
        subsets = all_resolving_k_subsets(dist, k, level)
        tracker.charge(level)
        for cols in subsets:
            members = tuple(c + 1 for c in cols)
            removals = [tuple(x for x in members if x != drop) for drop in members]
            if len(removals) > tracker.left:
                raise BudgetExceeded(
                    "minimality checks exhausted the budget",
                    evaluated=tracker.evaluated, budget=budget)
            tracker.charge(len(removals))
            if all(not _resolves(g, rest) for rest in removals):
                out.append(members)
    out.sort()
    return out


def twin_lower_bound(g: ComponentGraph) -> int:
    """Sum of (class size - 1) over the twin classes."""
    return twins_mod.twin_lower_bound(twins_mod.partition_by_neighborhood(g).classes)
