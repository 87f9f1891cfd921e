import itertools
import random

import pytest
from hypothesis import given, strategies as st

from sphere_morse.reeb import (
    ReebGraph,
    betti,
    enumerate_optimal_reeb,
    generate_reeb_graphs,
    optimal_reeb_ordered,
    reeb_canonical,
    shape_canonical,
    sphere_graph,
    torus_graph,
    validate_reeb,
)
from sphere_morse.strata import ValidationError


def test_betti_small_graphs():
    assert betti(sphere_graph()) == 0
    assert betti(torus_graph()) == 1
    for r in enumerate_optimal_reeb(2):
        assert betti(r) == 2


def test_betti_disconnected():
    r = ReebGraph.from_pairs((0, 1, 2, 3), [(0, 1), (2, 3)])
    with pytest.raises(ValidationError):
        betti(r)


def test_validate_torus_ok():
    assert validate_reeb(torus_graph()) == []


def test_validate_degree_two():
    r = ReebGraph.from_pairs((0, 1, 2), [(0, 1), (1, 2)])
    assert any("invalid vertex degree" in p for p in validate_reeb(r))


def test_validate_edge_against_order():
    r = ReebGraph.from_pairs((0, 1), [(1, 0)])
    assert any("edge against value order" in p for p in validate_reeb(r))


def test_validate_bad_saddle():
    # three outgoing edges from the minimum
    r = ReebGraph.from_pairs((0, 1, 2, 3), [(0, 1), (0, 2), (0, 3)])
    assert validate_reeb(r)


@pytest.mark.parametrize("genus, count", [(0, 1), (1, 1), (2, 3)])
def test_optimal_counts(genus, count):
    got = enumerate_optimal_reeb(genus)
    assert len(got) == count
    for r in got:
        assert validate_reeb(r) == []
        assert betti(r) == genus
        assert len(r.minima()) == 1 and len(r.maxima()) == 1
        assert len(r.edges) == len(r.order) - 1 + betti(r)


def test_genus_two_count_under_both_conventions():
    # Value order of the saddles does not change the genus-2 count.
    assert len(optimal_reeb_ordered(2)) == 3


def test_optimal_range():
    with pytest.raises(ValueError):
        enumerate_optimal_reeb(4)


def _brute_graphs(n, b):
    """Edge multisets over upward pairs, filtered by the invariants."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = n - 1 + b
    out = set()
    for combo in itertools.combinations_with_replacement(pairs, m):
        r = ReebGraph.from_pairs(range(n), combo)
        if not validate_reeb(r):
            out.add(reeb_canonical(r))
    return out


@pytest.mark.parametrize("n, b", [(2, 0), (4, 0), (4, 1), (6, 2), (5, 1)])
def test_generator_matches_brute_force(n, b):
    got = {reeb_canonical(r) for r in generate_reeb_graphs(range(n), b)}
    assert got == _brute_graphs(n, b)


def test_generated_edges_go_upward():
    for n, b in [(4, 1), (6, 2), (4, 0)]:
        for r in generate_reeb_graphs(range(n), b):
            for _, s, t in r.edges:
                assert r.rank(s) < r.rank(t)
            assert len(r.minima()) >= 1 and len(r.maxima()) >= 1


def test_canonical_ignores_edge_ids():
    r = torus_graph()
    shuffled = ReebGraph(r.order, tuple((10 - e, s, t) for e, s, t in reversed(r.edges)))
    assert reeb_canonical(shuffled) == reeb_canonical(r)
    assert reeb_canonical(r) != reeb_canonical(sphere_graph())


def test_canonical_figure_graph_two_id_schemes():
    a = ReebGraph.from_pairs((0, 1, 2, 3, 4, 5), [(0, 1), (1, 2), (1, 2), (2, 3), (3, 4), (3, 4), (4, 5)])
    b = ReebGraph(
        ("a", "b", "c", "d", "e", "f"),
        tuple(
            (k, s, t)
            for k, (s, t) in zip(
                (7, 3, 9, 1, 4, 2, 8),
                [("a", "b"), ("b", "c"), ("b", "c"), ("c", "d"), ("d", "e"), ("d", "e"), ("e", "f")],
            )
        ),
    )
    assert reeb_canonical(a) == reeb_canonical(b)


def test_genus_two_graphs_pairwise_distinct():
    keys = [shape_canonical(r) for r in enumerate_optimal_reeb(2)]
    assert len(set(keys)) == 3
    assert len({reeb_canonical(r) for r in enumerate_optimal_reeb(2)}) == 3


@given(st.integers(0, 2), st.randoms(use_true_random=False))
def test_canonical_relabel_invariance(genus, rnd):
    for r in enumerate_optimal_reeb(genus):
        labels = sorted(rnd.sample(range(1000), len(r.order)))
        moved = r.relabel_vertices(dict(zip(r.order, labels)))
        perm = list(range(len(r.edges)))
        rnd.shuffle(perm)
        moved = ReebGraph(moved.order, tuple((perm[e], s, t) for e, s, t in moved.edges))
        assert reeb_canonical(moved) == reeb_canonical(r)
        assert shape_canonical(moved) == shape_canonical(r)
