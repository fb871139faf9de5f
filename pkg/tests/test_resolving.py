import random
from itertools import combinations

import pytest

from resolvdim import resolving
from resolvdim.errors import (BadParameters, BudgetExceeded, EmptySet,
                              NotResolving)
from resolvdim.graph import ComponentGraph, bfs_distances


def test_representation_examples(g23):
    w = (1, 4, 5)  # e1, e3, e1+e3
    assert resolving.representation(g23, 2, w) == (2, 2, 2)
    assert resolving.representation(g23, 7, w) == (1, 1, 1)
    assert resolving.representation(g23, 4, w) == (2, 0, 1)


def test_representation_matches_bfs(g23):
    w = (1, 4, 5)
    for v in g23.vertex_ids():
        oracle = tuple(bfs_distances(g23, v)[x] for x in w)
        assert resolving.representation(g23, v, w) == oracle


def test_representation_rejects_empty(g23):
    with pytest.raises(EmptySet):
        resolving.representation(g23, 1, ())


def test_is_resolving_examples(g22, g23):
    assert resolving.is_resolving(g22, (1,)).is_resolving
    assert resolving.is_resolving(g23, (1, 2, 4)).is_resolving
    rep = resolving.is_resolving(g23, (1, 2))
    assert not rep.is_resolving
    assert rep.colliding_pair == (3, 7)


def test_is_resolving_report_invariants(g23):
    rep = resolving.is_resolving(g23, (1, 2, 4))
    assert rep.colliding_pair is None and rep.redundant_vertex is None
    rep = resolving.is_resolving(g23, (1, 2))
    assert rep.colliding_pair is not None and not rep.is_minimal


def test_empty_set_resolves_only_the_single_vertex():
    assert resolving.is_resolving(ComponentGraph(2, 1), ()).is_resolving
    rep = resolving.is_resolving(ComponentGraph(2, 2), ())
    assert not rep.is_resolving and rep.colliding_pair == (1, 2)


def test_duplicates_rejected(g23):
    with pytest.raises(BadParameters):
        resolving.is_resolving(g23, (1, 1, 2))


def test_is_minimal_examples(g23):
    assert resolving.is_minimal(g23, (1, 3, 6, 7))
    assert resolving.is_minimal(g23, (1, 4, 5))
    assert not resolving.is_minimal(g23, tuple(range(1, 8)))
    rep = resolving.is_resolving(g23, tuple(range(1, 8)))
    assert rep.is_resolving and not rep.is_minimal
    assert rep.redundant_vertex == 1


def test_is_minimal_requires_resolving(g23):
    with pytest.raises(NotResolving):
        resolving.is_minimal(g23, (1, 2))


def test_formula_values():
    assert resolving.metric_dimension_formula(2, 1) == 0
    assert resolving.metric_dimension_formula(2, 2) == 1
    assert resolving.metric_dimension_formula(2, 3) == 3
    assert resolving.metric_dimension_formula(2, 7) == 7
    assert resolving.metric_dimension_formula(3, 2) == 5
    assert resolving.metric_dimension_formula(3, 3) == 19
    assert resolving.metric_dimension_formula(4, 2) == 12
    # dimension one: complete graph on q-1 vertices
    assert resolving.metric_dimension_formula(5, 1) == 3
    with pytest.raises(BadParameters):
        resolving.metric_dimension_formula(1, 1)


def test_search_small_instances(g22, g32):
    assert resolving.metric_dimension_search(g22) == (1, (1,))
    assert resolving.metric_dimension_search(g32) == (5, (1, 3, 4, 5, 7))
    assert resolving.metric_dimension_search(ComponentGraph(2, 1)) == (0, ())
    assert resolving.metric_dimension_search(ComponentGraph(3, 1)) == (1, (1,))


def test_search_q2_n4(g24):
    k, witness = resolving.metric_dimension_search(g24)
    assert k == 4
    assert witness == (1, 2, 4, 8)
    # independent confirmation that no smaller set resolves
    for size in (1, 2, 3):
        for subset in combinations(g24.vertex_ids(), size):
            assert not resolving.is_resolving(g24, subset).is_resolving


def test_search_is_deterministic(g32):
    assert resolving.metric_dimension_search(g32) == \
        resolving.metric_dimension_search(g32)


def test_search_budget_exceeded(g33):
    with pytest.raises(BudgetExceeded) as err:
        resolving.metric_dimension_search(g33, budget=100)
    assert err.value.lower_bound == 19
    assert err.value.upper_bound == 26


def test_canonical_basis_examples():
    assert resolving.canonical_metric_basis(2, 2) == (1,)
    assert resolving.canonical_metric_basis(2, 3) == (1, 2, 4)
    assert resolving.canonical_metric_basis(2, 1) == ()
    assert resolving.canonical_metric_basis(3, 2) == (1, 3, 4, 5, 7)


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5),
                                 (3, 1), (3, 2), (3, 3), (4, 2), (5, 2), (7, 1)])
def test_canonical_basis_resolves_minimally(q, n):
    g = ComponentGraph(q, n)
    basis = resolving.canonical_metric_basis(q, n)
    assert len(basis) == resolving.metric_dimension_formula(q, n)
    rep = resolving.is_resolving(g, basis)
    assert rep.is_resolving and rep.is_minimal


def test_enumerate_minimal_examples(g22, g23):
    assert resolving.enumerate_minimal_resolving_sets(g22) == [(1,), (2,)]
    capped = resolving.enumerate_minimal_resolving_sets(g23, size_cap=4)
    sizes = {len(w) for w in capped}
    assert sizes == {3, 4}
    assert resolving.enumerate_minimal_resolving_sets(g23, size_cap=2) == []
    assert capped == sorted(capped)


def test_enumerate_minimal_all_verify(g23):
    for w in resolving.enumerate_minimal_resolving_sets(g23):
        assert resolving.is_minimal(g23, w)


def test_enumerate_minimal_per_k_path_agrees(g23):
    # force the combination path by shrinking the budget below 2^7
    table = resolving.enumerate_minimal_resolving_sets(g23, size_cap=3)
    per_k = resolving.enumerate_minimal_resolving_sets(g23, size_cap=3, budget=120)
    assert table == per_k


def test_minimum_sets(g32):
    mins = resolving.enumerate_minimum_resolving_sets(g32)
    assert len(mins) == 16
    assert all(len(w) == 5 for w in mins)
    assert mins[0] == (1, 3, 4, 5, 7)


def test_monotonicity_random_supersets(g32):
    rng = random.Random("monotone")
    ids = list(g32.vertex_ids())
    for _ in range(50):
        w = set(resolving.canonical_metric_basis(3, 2))
        for _ in range(rng.randrange(0, 4)):
            w.add(rng.choice(ids))
        assert resolving.is_resolving(g32, sorted(w)).is_resolving


def test_mask_table_consistency(g23):
    # the vectorized full-subset table agrees with the direct checker
    status = resolving.resolving_status_by_mask(g23.distance_matrix())
    for mask in range(1 << 7):
        members = tuple(i + 1 for i in range(7) if (mask >> i) & 1)
        assert status[mask] == resolving.is_resolving(g23, members).is_resolving
