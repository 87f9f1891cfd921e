import itertools
import random

import pytest

from sphere_morse.distinguish import (
    CycleOrderError,
    DistinguishingGraph,
    MonotonePath,
    PathDecoration,
    cycle_is_admissible,
    dg_canonical,
    dg_equivalent,
    distinct_decorations,
    enumerate_decorations,
    monotone_paths,
    relabel,
    require_valid,
    stratum_cycle,
    validate_distinguishing,
)
from sphere_morse.reeb import torus_graph
from sphere_morse.strata import ValidationError

TORUS = torus_graph()


def _dg(paths, strata, parts):
    dec = PathDecoration(tuple(MonotonePath(*p) for p in paths), tuple(strata))
    return DistinguishingGraph(TORUS, dec, tuple(parts))


def meridian():
    # curve through the bottom and top, one arc on each side of the hole
    return _dg(
        [((0, 1, 3), 0, 3), ((0, 2, 3), 0, 3)],
        [(0, 1)],
        [(1, ((1, (0,)), (2, (1,)))), (2, ((1, (0,)), (2, (1,))))],
    )


def test_meridian_valid():
    assert validate_distinguishing(meridian()) == []
    assert stratum_cycle(meridian(), 0) == (0, 3)


def test_parallel_arcs_sharing_a_slot_rejected():
    dg = _dg(
        [((1,), 1, 2), ((1,), 1, 2)],
        [(0, 1)],
        [(1, ((1, (0, 1)), (2, ()))), (2, ((1, (0, 1)), (2, ())))],
    )
    problems = validate_distinguishing(dg)
    assert any("share a subset" in p for p in problems)
    with pytest.raises(ValidationError):
        require_valid(dg)


def test_forced_slot_violation():
    dg = _dg(
        [((0, 1, 3), 0, 3), ((0, 2, 3), 0, 3)],
        [(0, 1)],
        [(1, ((1, (1,)), (2, (0,)))), (2, ((1, (0,)), (2, (1,))))],
    )
    assert any("sits in slot" in p for p in validate_distinguishing(dg))


def test_endpoint_paths_come_first():
    dg = _dg(
        [((0, 1, 3), 0, 3), ((1,), 1, 2)],
        [(0,), (1,)],
        [(1, ((1, (0, 1)), (2, ()))), (2, ((1, (0, 1)), (2, ())))],
    )
    assert any("precede" in p for p in validate_distinguishing(dg))


def test_missing_partition():
    dg = _dg([((0, 1, 3), 0, 3), ((0, 2, 3), 0, 3)], [(0, 1)], [(1, ((1, (0,)), (2, (1,))))])
    assert validate_distinguishing(dg)


def test_monotone_paths():
    assert sorted(monotone_paths(TORUS, 0, 3)) == [(0, 1, 3), (0, 2, 3)]
    assert monotone_paths(TORUS, 2, 1) == []


@pytest.mark.parametrize(
    "values, ok",
    [
        ((0, 2, 1, 3), True),
        ((0, 3, 1, 2), True),
        ((0, 1, 2, 3), False),
        ((0, 1, 3, 2), False),
        ((0, 1), True),
        ((0, 0), False),
        ((0, 1, 2), False),
    ],
)
def test_cycle_is_admissible(values, ok):
    assert cycle_is_admissible(values) is ok


def test_stratum_cycle_normalizes():
    dgs = distinct_decorations(TORUS, [("circle", (0, 3, 1, 2))])
    assert dgs
    for dg in dgs:
        assert stratum_cycle(dg, 0) == (0, 2, 1, 3)
        assert stratum_cycle(dg, dg.decoration.strata[0]) == (0, 2, 1, 3)
    with pytest.raises(KeyError):
        stratum_cycle(dgs[0], 5)


def test_stratum_cycle_rejects_bad_order():
    # arcs of the circle p0 p1 p2 p3, each along the lower hole edge
    dg = _dg(
        [((0,), 0, 1), ((1,), 1, 2), ((3,), 2, 3), ((0, 1, 3), 0, 3)],
        [(0, 1, 2, 3)],
        [],
    )
    with pytest.raises(CycleOrderError):
        stratum_cycle(dg, 0)
    assert validate_distinguishing(dg)


def _pair_counts():
    return {
        pair: len(distinct_decorations(TORUS, [("pair", pair)]))
        for pair in itertools.combinations(range(4), 2)
    }


def test_torus_pair_census():
    counts = _pair_counts()
    assert counts == {(0, 1): 1, (0, 2): 1, (0, 3): 2, (1, 2): 1, (1, 3): 1, (2, 3): 1}
    assert sum(counts.values()) == 7


def test_torus_circle_census():
    assert len(distinct_decorations(TORUS, [("circle", (0, 2, 1, 3))])) == 2
    for perm in itertools.permutations((1, 2, 3)):
        if perm not in ((2, 1, 3), (3, 1, 2)):
            assert list(enumerate_decorations(TORUS, [("circle", (0,) + perm)])) == []


def test_pair_plus_segment_census():
    got = distinct_decorations(TORUS, [("pair", (0, 3)), ("segment", (1, 2))])
    assert all(validate_distinguishing(d) == [] for d in got)
    assert len(got) >= 1


def _all_torus_decorations():
    out = []
    for pair in itertools.combinations(range(4), 2):
        out += list(enumerate_decorations(TORUS, [("pair", pair)]))
    out += list(enumerate_decorations(TORUS, [("circle", (0, 2, 1, 3))]))
    return out


def _random_relabel(dg, rng):
    r = dg.reeb
    labels = sorted(rng.sample(range(100), len(r.order)))
    vm = dict(zip(r.order, labels))
    eids = [e for e, _, _ in r.edges]
    new = rng.sample(range(50), len(eids))
    em = dict(zip(eids, new))
    n = len(dg.decoration.paths)
    pp = dict(zip(range(n), rng.sample(range(n), n)))
    return relabel(dg, vm, em, pp)


def test_canonical_invariant_under_random_relabeling():
    rng = random.Random(11)
    pool = _all_torus_decorations()
    for _ in range(300):
        dg = rng.choice(pool)
        moved = _random_relabel(dg, rng)
        assert validate_distinguishing(moved) == []
        assert dg_canonical(moved) == dg_canonical(dg)
        assert dg_equivalent(dg, moved)


def test_canonical_agrees_with_direct_search():
    pool = _all_torus_decorations()
    rng = random.Random(3)
    for _ in range(200):
        a, b = rng.choice(pool), rng.choice(pool)
        assert (dg_canonical(a) == dg_canonical(b)) == dg_equivalent(a, b)


def test_mirror_identifies_circle_decorations():
    raw = list(enumerate_decorations(TORUS, [("circle", (0, 2, 1, 3))]))
    with_mirror = {dg_canonical(d) for d in raw}
    without = {dg_canonical(d, mirrors=(False,)) for d in raw}
    assert (len(with_mirror), len(without)) == (2, 3)


def test_relabel_must_preserve_order():
    with pytest.raises(ValueError):
        relabel(meridian(), {0: 3, 1: 1, 2: 2, 3: 0})


def test_different_curves_not_equivalent():
    a = distinct_decorations(TORUS, [("pair", (0, 1))])[0]
    b = distinct_decorations(TORUS, [("pair", (2, 3))])[0]
    assert dg_canonical(a) != dg_canonical(b)
    assert not dg_equivalent(a, b)
