"""Exchange property for minimal resolving sets.

The property: for any minimal resolving sets W1, W2 and any r in W1 there
is some s in W2 such that (W2 minus s) plus r is again a minimal resolving
set.  The definition-level check enumerates every minimal resolving set
via a full subset table and tests the quantifier over all ordered pairs;
when it fails, a concrete violating triple (W1, r, W2) is returned and
re-validated before being reported.

Two helper constructions give explicit oversized minimal sets at q=2: the
set of vertices avoiding one fixed coordinate, and for n=3 a hand-picked
four-element minimal set.  Either witnesses two minimal sizes, which is a
sufficient (not necessary) condition for the property to fail.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import resolving
from .errors import BadParameters, BudgetExceeded
from .resolving import DEFAULT_BUDGET


@dataclass(frozen=True)
class ExchangeViolation:
    """A triple violating the definition: no s in w2 makes the swap minimal."""

    w1: tuple[int, ...]
    r: int
    w2: tuple[int, ...]


@dataclass(frozen=True)
class ExchangeReport:
    holds: bool
    method: str  # "definition-check" or "theorem-citation"
    minimal_set_sizes: tuple[int, ...]
    witness: ExchangeViolation | None = None


def _minimal_masks(g, budget: int) -> tuple[list[int], np.ndarray, list[int]]:
    """Sorted minimal-set masks, the minimal-status table and the id map."""
    dist = g.distance_matrix()
    n = g.vertex_count
    status = resolving.resolving_status_by_mask(dist, budget)
    minimal = resolving.minimal_status_by_mask(status, n)
    ids = list(g.vertex_ids())
    masks = [int(m) for m in np.flatnonzero(minimal)]
    members = {m: tuple(i for i in range(n) if (m >> i) & 1) for m in masks}
    masks.sort(key=lambda m: members[m])
    return masks, minimal, ids


def has_exchange_property(g, budget: int = DEFAULT_BUDGET,
                          allow_theorem: bool = False) -> ExchangeReport:
    """Definition-level exchange verdict for a graph with a distance matrix.

    Works on component graphs and plain graphs alike.  When the full
    subset table does not fit the budget, a theorem citation (holds) is
    returned only for component graphs with q >= 3 and only when
    allow_theorem is set; otherwise BudgetExceeded propagates.
    """
    try:
        masks, minimal, ids = _minimal_masks(g, budget)
    except BudgetExceeded:
        if allow_theorem and getattr(g, "q", 0) >= 3:
            return ExchangeReport(holds=True, method="theorem-citation",
                                  minimal_set_sizes=())
        raise
    member_map = {m: tuple(i for i in range(g.vertex_count) if (m >> i) & 1)
                  for m in masks}
    sizes = tuple(sorted(len(member_map[m]) for m in masks))
    universe = sorted({i for m in masks for i in member_map[m]})
    for mask2 in masks:
        w2 = member_map[mask2]
        for r in universe:
            if (mask2 >> r) & 1:
                continue
            swapped_ok = any(minimal[(mask2 ^ (1 << s)) | (1 << r)] for s in w2)
            if not swapped_ok:
                w1_mask = next(m for m in masks if (m >> r) & 1)
                violation = ExchangeViolation(
                    w1=tuple(ids[i] for i in member_map[w1_mask]),
                    r=ids[r],
                    w2=tuple(ids[i] for i in w2))
                return ExchangeReport(holds=False, method="definition-check",
                                      minimal_set_sizes=sizes, witness=violation)
    return ExchangeReport(holds=True, method="definition-check",
                          minimal_set_sizes=sizes)


def minimal_sets_of_distinct_sizes(
    g, budget: int = DEFAULT_BUDGET
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two minimal resolving sets of different sizes, if any exist.

    Finding a pair proves the exchange property fails; finding none is
    inconclusive.  Returns the lexicographically least set of the smallest
    size paired with the least set of the next size up.
    """
    masks, _, ids = _minimal_masks(g, budget)
    member_map = {m: tuple(ids[i] for i in range(g.vertex_count) if (m >> i) & 1)
                  for m in masks}
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for m in masks:
        by_size.setdefault(len(member_map[m]), []).append(member_map[m])
    if len(by_size) < 2:
        return None
    small, bigger = sorted(by_size)[:2]
    return (min(by_size[small]), min(by_size[bigger]))


def coordinate_avoiding_set(q: int, n: int) -> tuple[int, ...]:
    """q=2 only: all vertices whose skeleton omits basis index n-1.

    There are 2^(n-1) - 1 of them and they form a minimal resolving set,
    strictly larger than the metric dimension once n >= 4.
    """
    if q != 2:
        raise BadParameters(f"construction defined only for q=2, got q={q}")
    if n < 3:
        raise BadParameters(f"construction needs n >= 3, got n={n}")
    bit = 1 << (n - 2)
    return tuple(m for m in range(1, 1 << n) if not (m & bit))


def oversized_minimal_resolving_set(q: int, n: int) -> tuple[int, ...]:
    """q=2, n>=3: a minimal resolving set larger than the metric dimension.

    n=3 uses the explicit four-element set {e1, e1+e2, e2+e3, e1+e2+e3};
    n>=4 uses the coordinate-avoiding construction.
    """
    if q != 2 or n < 3:
        raise BadParameters(f"defined only for q=2 and n >= 3, got q={q}, n={n}")
    if n == 3:
        return (1, 3, 6, 7)
    return coordinate_avoiding_set(q, n)
