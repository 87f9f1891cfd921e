"""Self-check suites run by ``sphere-morse check``."""
from __future__ import annotations

import itertools

from . import catalog, document
from .distinguish import distinct_decorations, stratum_cycle
from .reeb import betti, enumerate_optimal_reeb, torus_graph, validate_reeb
from .strata import (
    closure_surfaces,
    enumerate_pairings,
    enumerate_trees,
    feasible_stratifications,
    four_edge_trees,
    min_critical_points,
    named_stratifications,
    stratification_name,
)


def _tree_census():
    got = [len(enumerate_trees(n)) for n in range(1, 5)]
    return got == [1, 1, 2, 3], f"trees with 1..4 edges: {got}"


def _coloring_census():
    got = {k: len(enumerate_pairings(t)) for k, t in four_edge_trees().items()}
    return got == {"T1": 1, "T2": 2, "T3": 3}, f"colorings: {got}"


def _lower_bounds():
    expect = {"single-curve": 4, "T1": 6, "T2-A": 6, "T2-B": 4, "T3-A": 8, "T3-B": 4, "T3-C": 6}
    got = {k: min_critical_points(ct) for k, ct in named_stratifications().items()}
    return got == expect, " ".join(f"{k}={got[k]}" for k in sorted(got))


def _feasibility():
    got = sorted(stratification_name(ct) for ct in feasible_stratifications(4))
    return got == ["T2-B", "T3-B", "single-curve"], f"feasible with 4 points: {got}"


def _closures():
    ok = all(
        2 * p.genus + p.boundaries == ct.tree.degree(p.vertex)
        for ct in named_stratifications().values()
        for p in closure_surfaces(ct)
    )
    return ok, "2*genus + boundaries = degree at every vertex"


def _optimal_reeb():
    got = [len(enumerate_optimal_reeb(g)) for g in range(3)]
    ok = got == [1, 1, 3] and all(
        not validate_reeb(r) and betti(r) == g
        for g in range(3)
        for r in enumerate_optimal_reeb(g)
    )
    return ok, f"optimal Reeb graphs for genus 0..2: {got}"


def _torus_pairs():
    r = torus_graph()
    n = sum(
        len(distinct_decorations(r, [("pair", pair)]))
        for pair in itertools.combinations(range(4), 2)
    )
    return n == 7, f"torus decorations by one two-point curve: {n}"


def _cycle_law():
    r = torus_graph()
    bad = 0
    for perm in itertools.permutations((1, 2, 3)):
        cyc = (0,) + perm
        dgs = distinct_decorations(r, [("circle", cyc)])
        if cyc in ((0, 2, 1, 3), (0, 3, 1, 2)):
            bad += not dgs or any(stratum_cycle(d, 0) != (0, 2, 1, 3) for d in dgs)
        else:
            bad += bool(dgs)
    return bad == 0, "four-point curves only in cyclic order p0 p2 p1 p3"


def _round_trip():
    entries = catalog.build_catalog(1) + catalog.build_catalog(2)
    doc = document.make_document(1, 4, entries)
    again = document.loads(document.dumps(doc))
    return again == doc and not document.stale_keys(again), "JSON catalog round trip"


SUITES = (
    ("strata/tree-census", _tree_census),
    ("strata/coloring-census", _coloring_census),
    ("strata/closures", _closures),
    ("strata/lower-bounds", _lower_bounds),
    ("strata/feasibility", _feasibility),
    ("reeb/optimal-graphs", _optimal_reeb),
    ("distinguish/torus-pairs", _torus_pairs),
    ("distinguish/cycle-law", _cycle_law),
    ("cli/json-round-trip", _round_trip),
)


def run_suites() -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in SUITES:
        try:
            ok, detail = fn()
        except Exception as exc:  # reported, not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, bool(ok), detail))
    return out
