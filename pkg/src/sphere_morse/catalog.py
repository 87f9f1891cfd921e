"""Catalogs of simple Morse functions with few critical points on immersed
spheres without triple points.

Two independent routes produce the catalogs:

* ``build_single_curve_catalog`` / ``build_two_curve_catalog`` write every
  structure down by hand, case by case;
* ``enumerate_structures`` generates all candidates for a stratification
  and keeps one per equivalence class.

``cross_validate`` compares the two by canonical key.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Iterator, Sequence

from .distinguish import (
    DistinguishingGraph,
    MonotonePath,
    PathDecoration,
    _normal_cycle,
    cycle_is_admissible,
    dg_canonical,
    enumerate_decorations,
    stratum_cycle,
    validate_distinguishing,
)
from .reeb import ReebGraph, betti, generate_reeb_graphs
from .strata import (
    ColoredTree,
    ValidationError,
    canonical_labelings,
    closure_surface,
    named_stratifications,
    point_distributions,
    stratification_name,
)

SCHEMA_NOTE = (
    "T2-B count: a summary figure of 7 structures disagrees with the "
    "case-by-case count of 8; this catalog uses 8 (8 + 3 = 11)"
)


@dataclass(frozen=True)
class MorseStructure:
    stratification: ColoredTree
    # rank -> ('curve', block index) or ('vertex', tree vertex)
    points: tuple[tuple[int, tuple[str, int]], ...]
    # per block: its ranks in cyclic order along the curve
    curve_orders: tuple[tuple[int, ...], ...]
    # per tree vertex: distinguishing graph of the closure, or None when the
    # piece carries no interior points and is fixed by its boundary data
    pieces: tuple[tuple[int, DistinguishingGraph | None], ...]
    # per block: (tree vertex, stratum index in that piece's decoration)
    gluings: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]

    def piece(self, v: int) -> DistinguishingGraph | None:
        return dict(self.pieces)[v]

    def ranks_on_curve(self, b: int) -> tuple[int, ...]:
        return tuple(sorted(r for r, loc in self.points if loc == ("curve", b)))

    def interior_ranks(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(r for r, loc in self.points if loc == ("vertex", v)))


@dataclass(frozen=True)
class CatalogEntry:
    structure: MorseStructure
    key: str
    case_label: str


# ---------------------------------------------------------------------------
# piece bookkeeping shared by both routes


def curve_pieces(ct: ColoredTree, b: int) -> tuple[int, ...]:
    """Tree vertices whose closure contains double curve ``b``."""
    return tuple(sorted({x for e in ct.pairing[b] for x in e}))


def is_determined_piece(ct: ColoredTree, v: int, n_interior: int) -> bool:
    """Genus-0 pieces with several boundary circles and no interior points.

    On disks with a two-point boundary and on cylinders the boundary values
    fix the function inside; only the cylinder-like ones lack a valid Reeb
    graph of their own and are stored without a decoration.
    """
    sp = closure_surface(ct, v)
    return sp.genus == 0 and n_interior == 0 and sp.boundaries >= 2


def piece_strata_spec(ct: ColoredTree, v: int, curve_orders) -> list[tuple[int, tuple[str, tuple]]]:
    """(block, (kind, points)) for every curve visible on the closure of ``v``."""
    out = []
    for b in ct.full_blocks(v):
        order = curve_orders[b]
        kind = "pair" if len(order) == 2 else "circle"
        out.append((b, (kind, tuple(sorted(order)) if kind == "pair" else tuple(order))))
    for b in ct.half_blocks(v):
        order = curve_orders[b]
        kind = "segment" if len(order) == 2 else "circle"
        out.append((b, (kind, tuple(sorted(order)) if kind == "segment" else tuple(order))))
    return sorted(out)


def validate_structure(s: MorseStructure, budget: int = 4) -> list[str]:
    ct = s.stratification
    out = []
    ranks = sorted(r for r, _ in s.points)
    if ranks != list(range(budget)):
        out.append(f"critical values must be ranks 0..{budget - 1}")
    for b in range(len(ct.pairing)):
        on = s.ranks_on_curve(b)
        if len(on) < 2 or len(on) % 2:
            out.append(f"curve {b} carries {len(on)} points")
        order = s.curve_orders[b]
        if sorted(order) != list(on):
            out.append(f"curve {b}: cyclic order disagrees with its points")
        elif not cycle_is_admissible(order):
            out.append(f"curve {b}: inadmissible cyclic order {order}")
    glue = dict(s.gluings)
    for v, dg in s.pieces:
        sp = closure_surface(ct, v)
        interior = s.interior_ranks(v)
        if dg is None:
            if not is_determined_piece(ct, v, len(interior)):
                out.append(f"piece {v} needs a distinguishing graph")
            continue
        problems = validate_distinguishing(dg)
        out += [f"piece {v}: {p}" for p in problems]
        if problems:
            continue
        if betti(dg.reeb) != sp.genus:
            out.append(f"piece {v}: Betti number {betti(dg.reeb)} != genus {sp.genus}")
        expected = set(interior)
        for b, _ in piece_strata_spec(ct, v, s.curve_orders):
            expected |= set(s.curve_orders[b])
        if set(dg.reeb.order) != expected:
            out.append(f"piece {v}: Reeb vertices {dg.reeb.order} != points {sorted(expected)}")
    for b in range(len(ct.pairing)):
        where = dict(glue.get(b, ()))
        if set(where) != set(curve_pieces(ct, b)):
            out.append(f"curve {b}: gluing does not list every incident piece")
            continue
        for v, k in where.items():
            dg = s.piece(v)
            if dg is None:
                continue
            if not 0 <= k < len(dg.decoration.strata):
                out.append(f"curve {b}: stratum {k} missing on piece {v}")
                continue
            cyc = stratum_cycle(dg, k)
            if sorted(cyc) != sorted(s.curve_orders[b]):
                out.append(f"curve {b}: piece {v} shows points {cyc}")
            elif len(cyc) == 4 and _normal_cycle(cyc) != _normal_cycle(s.curve_orders[b]):
                out.append(f"curve {b}: piece {v} shows another cyclic order")
    return out


# ---------------------------------------------------------------------------
# canonical key


@lru_cache(maxsize=None)
def _labelings(ct: ColoredTree):
    return canonical_labelings(ct)


def structure_canonical(s: MorseStructure, budget: int = 4) -> str:
    """Key equal for equivalent structures.

    Minimizes over colour-preserving relabelings of the tree (all bijections
    attaining the colored tree's minimal form) and over the orientation of
    the sphere, which acts on every piece at once.
    """
    problems = validate_structure(s, budget)
    if problems:
        raise ValidationError("; ".join(problems))
    ct = s.stratification
    ct_serial, perms = _labelings(ct)
    piece_keys = {
        m: {
            v: "determined" if dg is None else dg_canonical(dg, compress=False, mirrors=(m,))
            for v, dg in s.pieces
        }
        for m in (False, True)
    }
    best = None
    for perm in perms:
        blocks = []
        for b, blk in enumerate(ct.pairing):
            edges = tuple(sorted(tuple(sorted((perm[x], perm[y]))) for x, y in blk))
            blocks.append((edges, _normal_cycle(s.curve_orders[b])))
        interior = tuple(
            sorted((perm[v], s.interior_ranks(v)) for v in ct.tree.vertices)
        )
        for m in (False, True):
            pieces = tuple(sorted((perm[v], piece_keys[m][v]) for v, _ in s.pieces))
            cand = (ct_serial, tuple(sorted(blocks)), interior, pieces)
            if best is None or cand < best:
                best = cand
    return repr(best)


def structures_equivalent(a: MorseStructure, b: MorseStructure) -> bool:
    return structure_canonical(a) == structure_canonical(b)


def relabel_structure(s: MorseStructure, mapping: dict[int, int]) -> MorseStructure:
    """Rename tree vertices; blocks are re-indexed to the new sorted pairing."""
    ct = s.stratification.relabel(mapping)
    old_to_new = {}
    for b, blk in enumerate(s.stratification.pairing):
        mapped = tuple(sorted(tuple(sorted((mapping[x], mapping[y]))) for x, y in blk))
        old_to_new[b] = ct.pairing.index(mapped)
    points = tuple(
        sorted(
            (r, ("curve", old_to_new[i]) if kind == "curve" else ("vertex", mapping[i]))
            for r, (kind, i) in s.points
        )
    )
    orders = [None] * len(ct.pairing)
    for b, o in enumerate(s.curve_orders):
        orders[old_to_new[b]] = o
    pieces = tuple(sorted((mapping[v], dg) for v, dg in s.pieces))
    gluings = tuple(
        sorted(
            (old_to_new[b], tuple(sorted((mapping[v], k) for v, k in where)))
            for b, where in s.gluings
        )
    )
    return MorseStructure(ct, points, tuple(orders), pieces, gluings)


def make_entry(s: MorseStructure, label: str, budget: int = 4) -> CatalogEntry:
    return CatalogEntry(s, structure_canonical(s, budget), label)


# ---------------------------------------------------------------------------
# route 2: exhaustive generation


def _rank_assignments(ct: ColoredTree, pb) -> Iterator[tuple[tuple[int, tuple[str, int]], ...]]:
    slots: list[tuple[str, int]] = []
    for b, n in enumerate(pb.per_curve):
        slots += [("curve", b)] * n
    for v, n in pb.per_vertex_interior:
        slots += [("vertex", v)] * n
    seen = set()
    for perm in itertools.permutations(slots):
        if perm in seen:
            continue
        seen.add(perm)
        yield tuple(enumerate(perm))


def candidate_cycles(ranks: Sequence[int]) -> list[tuple[int, ...]]:
    """All cyclic orders of ``ranks`` up to rotation and reflection."""
    ranks = sorted(ranks)
    first, rest = ranks[0], ranks[1:]
    out = set()
    for p in itertools.permutations(rest):
        out.add(_normal_cycle((first,) + p))
    return sorted(out)


@dataclass
class EnumerationStats:
    cycles_checked: int = 0
    cycles_rejected: int = 0
    admitted_cycles: set = field(default_factory=set)
    candidates: int = 0


def _piece_options(ct, v, points, orders, budget, stats):
    """(dg or None, {block: stratum index}) alternatives for one piece."""
    interior = sorted(r for r, loc in points if loc == ("vertex", v))
    if is_determined_piece(ct, v, len(interior)):
        return [(None, {})]
    spec = piece_strata_spec(ct, v, orders)
    verts = set(interior)
    for b, _ in spec:
        verts |= set(orders[b])
    if len(verts) > budget + 2:
        raise ValidationError(f"piece {v} exceeds the generator bound of {budget + 2} vertices")
    genus = closure_surface(ct, v).genus
    found: dict[str, DistinguishingGraph] = {}
    for r in generate_reeb_graphs(sorted(verts), genus):
        for dg in enumerate_decorations(r, [s for _, s in spec]):
            stats.candidates += 1
            found.setdefault(dg_canonical(dg, compress=False, mirrors=(False,)), dg)
    index = {b: k for k, (b, _) in enumerate(spec)}
    return [(found[k], index) for k in sorted(found)]


def enumerate_structures(
    ct: ColoredTree, budget: int = 4, stats: EnumerationStats | None = None
) -> list[CatalogEntry]:
    """Generate every structure on ``ct`` with ``budget`` critical points.

    Point distributions, rank placements, admissible cyclic orders, Reeb
    graphs of every piece and all their valid decorations are enumerated;
    one entry per canonical key is kept, sorted by key.
    """
    stats = stats if stats is not None else EnumerationStats()
    name = stratification_name(ct)
    found: dict[str, MorseStructure] = {}
    for pb in point_distributions(ct, budget):
        for points in _rank_assignments(ct, pb):
            per_curve = [
                sorted(r for r, loc in points if loc == ("curve", b))
                for b in range(len(ct.pairing))
            ]
            cycle_choices = []
            for ranks in per_curve:
                ok = []
                for cyc in candidate_cycles(ranks):
                    stats.cycles_checked += 1
                    if cycle_is_admissible(cyc):
                        ok.append(cyc)
                        if len(cyc) == 4:
                            stats.admitted_cycles.add(cyc)
                    else:
                        stats.cycles_rejected += 1
                cycle_choices.append(ok)
            for orders in itertools.product(*cycle_choices):
                options = [
                    _piece_options(ct, v, points, orders, budget, stats)
                    for v in ct.tree.vertices
                ]
                for combo in itertools.product(*options):
                    pieces = tuple(zip(ct.tree.vertices, (dg for dg, _ in combo)))
                    index = dict(zip(ct.tree.vertices, (ix for _, ix in combo)))
                    gluings = tuple(
                        (b, tuple((v, index[v].get(b, 0)) for v in curve_pieces(ct, b)))
                        for b in range(len(ct.pairing))
                    )
                    s = MorseStructure(ct, tuple(sorted(points)), tuple(orders), pieces, gluings)
                    found.setdefault(structure_canonical(s, budget), s)
    return [
        CatalogEntry(found[k], k, f"{name}/generated-{i + 1:02d}")
        for i, k in enumerate(sorted(found))
    ]


# ---------------------------------------------------------------------------
# route 1: the case analysis, written out structure by structure
#
# Torus edges: 0 = p0->p1, 1 and 2 = the two p1->p2 edges, 3 = p2->p3.


def _torus() -> ReebGraph:
    return ReebGraph.from_pairs((0, 1, 2, 3), [(0, 1), (1, 2), (1, 2), (2, 3)])


def _dg(reeb, paths, strata, slots) -> DistinguishingGraph:
    mp = tuple(MonotonePath(tuple(es), a, b) for es, a, b in paths)
    parts = tuple(
        (v, tuple((e, tuple(seq)) for e, seq in sorted(sl.items())))
        for v, sl in sorted(slots.items())
    )
    return DistinguishingGraph(reeb, PathDecoration(mp, tuple(strata)), parts)


# (label, blue pair paths a and b, slots at p1, slots at p2); path 0 = a, 1 = b
_TORUS_PAIRS = {
    "pair-(p0,p1)": ((0, 1), [[0], [0]], {1: [0], 2: [1]}, {1: [], 2: []}),
    "pair-(p0,p2)": ((0, 2), [[0, 1], [0, 2]], {1: [0], 2: [1]}, {1: [0], 2: [1]}),
    "pair-(p0,p3)a": ((0, 3), [[0, 1, 3], [0, 1, 3]], {1: [0, 1], 2: []}, {1: [0, 1], 2: []}),
    "pair-(p0,p3)b": ((0, 3), [[0, 1, 3], [0, 2, 3]], {1: [0], 2: [1]}, {1: [0], 2: [1]}),
    "pair-(p1,p2)": ((1, 2), [[1], [2]], {1: [0], 2: [1]}, {1: [0], 2: [1]}),
    "pair-(p1,p3)": ((1, 3), [[1, 3], [2, 3]], {1: [0], 2: [1]}, {1: [0], 2: [1]}),
    "pair-(p2,p3)": ((2, 3), [[3], [3]], {1: [], 2: []}, {1: [0], 2: [1]}),
}


def torus_pair_case(label: str) -> DistinguishingGraph:
    """One of the seven decorations of the torus by a two-point curve."""
    (lo, hi), (pa, pb), s1, s2 = _TORUS_PAIRS[label]
    return _dg(_torus(), [(pa, lo, hi), (pb, lo, hi)], [(0, 1)], {1: s1, 2: s2})


# T2-B: the pair plus the folded second curve (path 2) joining the two
# remaining critical points
_T2B_SEGMENTS = {
    "case-1": ("pair-(p0,p1)", [3], {1: [0], 2: [1]}, {1: [2], 2: []}),
    "case-2": ("pair-(p0,p2)", [1, 3], {1: [2, 0], 2: [1]}, {1: [0, 2], 2: [1]}),
    "case-3a/path-choice-1": ("pair-(p0,p3)a", [1], {1: [2, 0, 1], 2: []}, {1: [2, 0, 1], 2: []}),
    "case-3a/path-choice-2": ("pair-(p0,p3)a", [2], {1: [0, 1], 2: [2]}, {1: [0, 1], 2: [2]}),
    "case-3b": ("pair-(p0,p3)b", [1], {1: [2, 0], 2: [1]}, {1: [2, 0], 2: [1]}),
    "case-4": ("pair-(p1,p2)", [0, 1, 3], {1: [0, 2], 2: [1]}, {1: [0, 2], 2: [1]}),
    "case-5": ("pair-(p1,p3)", [0, 1], {1: [0, 2], 2: [1]}, {1: [2, 0], 2: [1]}),
    "case-6": ("pair-(p2,p3)", [0], {1: [2], 2: []}, {1: [0], 2: [1]}),
}


def torus_hole_case(label: str) -> DistinguishingGraph:
    pair_label, seg, s1, s2 = _T2B_SEGMENTS[label]
    (lo, hi), (pa, pb), _, _ = _TORUS_PAIRS[pair_label]
    rest = tuple(x for x in range(4) if x not in (lo, hi))
    paths = [(pa, lo, hi), (pb, lo, hi), (seg, rest[0], rest[1])]
    return _dg(_torus(), paths, [(0, 1), (2,)], {1: s1, 2: s2})


def disk_segment(lo: int, hi: int) -> DistinguishingGraph:
    """Disk bounded by a two-point curve, boundary folded to one segment."""
    r = ReebGraph.from_pairs((lo, hi), [(lo, hi)])
    return _dg(r, [([0], lo, hi)], [(0,)], {})


# four-point curve, cyclic order p0, p2, p1, p3; arcs in that cyclic order:
# 0 = p0-p2, 1 = p1-p2, 2 = p1-p3, 3 = p0-p3
_LOOP_ARCS = ((0, 2), (1, 2), (1, 3), (0, 3))


def disk_four(shape: str) -> DistinguishingGraph:
    """Disk bounded by the four-point curve: Reeb graph 'Y' or inverted 'A'."""
    if shape == "Y":
        r = ReebGraph.from_pairs((0, 1, 2, 3), [(0, 1), (1, 2), (1, 3)])
        paths = [[0, 1], [1], [2], [0, 2]]
        slots = {1: {1: [1, 0], 2: [2, 3]}}
    else:
        r = ReebGraph.from_pairs((0, 1, 2, 3), [(0, 2), (1, 2), (2, 3)])
        paths = [[0], [1], [1, 2], [0, 2]]
        slots = {2: {0: [0, 3], 1: [1, 2]}}
    return _dg(r, [(p, a, b) for p, (a, b) in zip(paths, _LOOP_ARCS)], [(0, 1, 2, 3)], slots)


def torus_loop(variant: int) -> DistinguishingGraph:
    """Torus carrying the four-point curve.

    The arcs at p1 and at p2 leave through different loops, so the p1-p2 arc
    and the other two middle arcs occupy opposite edges; the p0-p3 arc runs
    beside the p1-p2 arc (variant 1) or beside the other two (variant 2).
    """
    if variant == 1:
        paths = [[0, 2], [1], [2, 3], [0, 1, 3]]
        s1 = {1: [1, 3], 2: [2, 0]}
        s2 = {1: [1, 3], 2: [0, 2]}
    else:
        paths = [[0, 2], [1], [2, 3], [0, 2, 3]]
        s1 = {1: [1], 2: [2, 0, 3]}
        s2 = {1: [1], 2: [0, 3, 2]}
    return _dg(
        _torus(),
        [(p, a, b) for p, (a, b) in zip(paths, _LOOP_ARCS)],
        [(0, 1, 2, 3)],
        {1: s1, 2: s2},
    )


def _structure(ct, points, orders, pieces: dict) -> MorseStructure:
    gl = []
    for b in range(len(ct.pairing)):
        where = []
        for v in curve_pieces(ct, b):
            dg = pieces[v]
            k = 0
            if dg is not None:
                for k, st in enumerate(dg.decoration.strata):
                    if sorted(stratum_cycle(dg, st)) == sorted(orders[b]):
                        break
            where.append((v, k))
        gl.append((b, tuple(where)))
    return MorseStructure(
        ct,
        tuple(sorted(points)),
        tuple(tuple(o) for o in orders),
        tuple(sorted(pieces.items())),
        tuple(gl),
    )


def _single_curve_tree() -> tuple[ColoredTree, int, tuple[int, int]]:
    ct = named_stratifications()["single-curve"]
    center = next(v for v in ct.tree.vertices if ct.tree.degree(v) == 2)
    leaves = ct.tree.leaves()
    return ct, center, leaves


def build_single_curve_catalog() -> list[CatalogEntry]:
    """The 7 + 6 = 13 structures with one double curve."""
    ct, center, (la, lb) = _single_curve_tree()
    out = []
    for label, ((lo, hi), *_rest) in _TORUS_PAIRS.items():
        rest = [x for x in range(4) if x not in (lo, hi)]
        points = [(lo, ("curve", 0)), (hi, ("curve", 0))] + [
            (x, ("vertex", center)) for x in rest
        ]
        pieces = {
            center: torus_pair_case(label),
            la: disk_segment(lo, hi),
            lb: disk_segment(lo, hi),
        }
        s = _structure(ct, points, [(lo, hi)], pieces)
        out.append(make_entry(s, f"single-curve/two-points/{label}"))
    for shapes in (("Y", "Y"), ("Y", "A"), ("A", "A")):
        for variant in (1, 2):
            points = [(x, ("curve", 0)) for x in range(4)]
            pieces = {
                center: torus_loop(variant),
                la: disk_four(shapes[0]),
                lb: disk_four(shapes[1]),
            }
            s = _structure(ct, points, [(0, 2, 1, 3)], pieces)
            out.append(
                make_entry(s, f"single-curve/four-points/disks-{''.join(shapes)}/loop-{variant}")
            )
    return out


def build_two_curve_catalog() -> list[CatalogEntry]:
    """The 8 + 3 = 11 structures with two double curves.

    T1, T2-A, T3-A and T3-C need more than four critical points and
    contribute nothing.
    """
    named = named_stratifications()
    out = []

    ct = named["T2-B"]
    hub = next(v for v in ct.tree.vertices if ct.tree.degree(v) == 3)
    blue = ct.full_blocks(hub)[0]
    red = 1 - blue
    for label, (pair_label, *_rest) in _T2B_SEGMENTS.items():
        (lo, hi) = _TORUS_PAIRS[pair_label][0]
        rest = tuple(x for x in range(4) if x not in (lo, hi))
        orders = [None, None]
        orders[blue], orders[red] = (lo, hi), rest
        points = [(x, ("curve", blue)) for x in (lo, hi)] + [
            (x, ("curve", red)) for x in rest
        ]
        pieces = {}
        for v in ct.tree.vertices:
            if v == hub:
                pieces[v] = torus_hole_case(label)
            elif ct.tree.degree(v) == 1:
                b = ct.block_of(ct.tree.incident(v)[0])
                pieces[v] = disk_segment(*orders[b])
            else:
                pieces[v] = None
        out.append(make_entry(_structure(ct, points, orders, pieces), f"T2-B/{label}"))

    ct = named["T3-B"]
    patterns = {"alternate": ((0, 2), (1, 3)), "stacked": ((0, 1), (2, 3)), "nested": ((0, 3), (1, 2))}
    for label, orders in patterns.items():
        points = [(x, ("curve", b)) for b, o in enumerate(orders) for x in o]
        pieces = {}
        for v in ct.tree.vertices:
            if ct.tree.degree(v) == 1:
                b = ct.block_of(ct.tree.incident(v)[0])
                pieces[v] = disk_segment(*orders[b])
            else:
                pieces[v] = None
        out.append(make_entry(_structure(ct, points, list(orders), pieces), f"T3-B/{label}"))
    return out


def build_catalog(double_curves: int) -> list[CatalogEntry]:
    if double_curves == 1:
        return build_single_curve_catalog()
    if double_curves == 2:
        return build_two_curve_catalog()
    raise ValueError("with four critical points there are at most two double curves")


# ---------------------------------------------------------------------------
# cross validation


@dataclass
class CrossReport:
    budget: int
    rows: list[dict]
    notes: list[str]

    @property
    def ok(self) -> bool:
        return all(not r["missing"] and not r["extra"] for r in self.rows)

    def summary(self) -> str:
        parts = [f"{r['constructed']}/{r['generated']}" for r in self.rows]
        return ", ".join(parts)

    def lines(self) -> list[str]:
        out = []
        for r in self.rows:
            status = "PASS" if not r["missing"] and not r["extra"] else "FAIL"
            out.append(
                f"{status} {r['class']}: constructed {r['constructed']}, generated {r['generated']}"
            )
            for k in r["missing"]:
                out.append(f"  only generated: {k}")
            for k in r["extra"]:
                out.append(f"  only constructed: {k}")
        out += [f"note: {n}" for n in self.notes]
        return out


def _curve_count(ct: ColoredTree) -> int:
    return len(ct.pairing)


def generated_catalog(double_curves: int, budget: int = 4) -> list[CatalogEntry]:
    from .strata import all_stratifications

    out = []
    for ct in all_stratifications():
        if _curve_count(ct) == double_curves:
            out.extend(enumerate_structures(ct, budget))
    return sorted(out, key=lambda e: e.key)


def cross_validate(budget: int = 4, constructed: dict[int, list[CatalogEntry]] | None = None) -> CrossReport:
    """Compare hand-built catalogs with the exhaustive generator by key."""
    if budget != 4:
        raise ValueError("only the four-point catalogs are constructed by hand")
    rows = []
    for n in (1, 2):
        built = constructed[n] if constructed and n in constructed else build_catalog(n)
        gen = generated_catalog(n, budget)
        bk = {e.key for e in built}
        gk = {e.key for e in gen}
        rows.append(
            {
                "class": "single curve" if n == 1 else "two curves",
                "constructed": len(bk),
                "generated": len(gk),
                "missing": sorted(gk - bk),
                "extra": sorted(bk - gk),
            }
        )
    return CrossReport(budget, rows, [SCHEMA_NOTE])
