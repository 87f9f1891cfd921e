"""Distinguishing graphs: Reeb graphs decorated with the images of double
curves.

A 1-stratum is cut by its critical points into monotone arcs; each arc is a
monotone path in the Reeb graph. A two-point circle gives a *pair* of paths
with common endpoints, a four-point circle gives a *circle* of four arcs, and
a boundary circle folded onto itself gives a single unpaired *segment*.

At every saddle the paths through it are split into two ordered slots, one
per co-directional edge (the two loops of the critical figure-eight). Within
a slot, paths that start or end at the saddle sit at the cut point and are
listed first as an unordered group; paths crossing the saddle follow in
their order along the loop.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from .reeb import ReebGraph, validate_reeb
from .strata import ValidationError


class CycleOrderError(ValidationError):
    """A circle's critical points are in an impossible cyclic order."""


@dataclass(frozen=True)
class MonotonePath:
    edges: tuple[int, ...]
    start: Hashable
    end: Hashable


@dataclass(frozen=True)
class PathDecoration:
    paths: tuple[MonotonePath, ...]
    # one tuple of path indices per stratum image: length 1 (segment),
    # 2 (pair of arcs) or 4 (arcs of a four-point circle, in cyclic order)
    strata: tuple[tuple[int, ...], ...]

    @property
    def pairing(self) -> tuple[tuple[int, int], ...]:
        return tuple(s for s in self.strata if len(s) == 2)

    @property
    def unpaired(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.strata if len(s) == 1)

    @property
    def circles(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s for s in self.strata if len(s) == 4)


Slot = tuple[int, tuple[int, ...]]  # (co-directional edge id, path indices)


@dataclass(frozen=True)
class DistinguishingGraph:
    reeb: ReebGraph
    decoration: PathDecoration
    partitions: tuple[tuple[Hashable, tuple[Slot, Slot]], ...]

    def slots(self, v) -> tuple[Slot, Slot]:
        for w, s in self.partitions:
            if w == v:
                return s
        raise KeyError(v)


# ---------------------------------------------------------------------------
# local geometry of paths at a vertex


def _vertices_of(r: ReebGraph, p: MonotonePath) -> list:
    out = [p.start]
    for eid in p.edges:
        out.append(r.edge(eid)[2])
    return out


def _uses(r: ReebGraph, p: MonotonePath, v) -> tuple[int | None, int | None]:
    """(incoming edge, outgoing edge) of ``p`` at ``v``; None where absent."""
    inc = out = None
    for eid in p.edges:
        _, s, t = r.edge(eid)
        if t == v:
            inc = eid
        if s == v:
            out = eid
    return inc, out


def touches(r: ReebGraph, p: MonotonePath, v) -> bool:
    return v == p.start or v == p.end or any(r.edge(e)[2] == v for e in p.edges)


def is_terminator(p: MonotonePath, v) -> bool:
    return v == p.start or v == p.end


def forced_slot(r: ReebGraph, p: MonotonePath, v) -> int | None:
    """Edge of the slot ``p`` must occupy at saddle ``v``; None if either works."""
    side = r.doubled_side(v)
    inc, out = _uses(r, p, v)
    for e in (inc, out):
        if e is not None and e in side:
            return e
    return None


def meeting_pairs(dec: PathDecoration) -> list[tuple[int, int, str]]:
    """Arcs of one circle that meet at a common critical point.

    Yields (path a, path b, 'start'|'end').
    """
    out = []
    for s in dec.strata:
        if len(s) == 2:
            out.append((s[0], s[1], "start"))
            out.append((s[0], s[1], "end"))
        elif len(s) == 4:
            for i in range(4):
                a, b = s[i], s[(i + 1) % 4]
                pa, pb = dec.paths[a], dec.paths[b]
                where = "start" if pa.start == pb.start else "end"
                out.append((a, b, where))
    return out


def _is_rotation(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = list(b) + list(b)
    return any(doubled[i : i + len(a)] == list(a) for i in range(len(b)))


def cycle_is_admissible(values: Sequence) -> bool:
    """Every point of the cyclic sequence is a local min or max, alternating.

    This is exactly the condition for the listed points to be all the
    critical points of a function restricted to a circle.
    """
    n = len(values)
    if n < 2 or n % 2 or len(set(values)) != n:
        return False
    if n == 2:
        return True
    kinds = []
    for i in range(n):
        a, b, c = values[i - 1], values[i], values[(i + 1) % n]
        if b < a and b < c:
            kinds.append("min")
        elif b > a and b > c:
            kinds.append("max")
        else:
            return False
    return all(kinds[i] != kinds[i - 1] for i in range(n))


# ---------------------------------------------------------------------------
# validation


def _path_problems(r: ReebGraph, i: int, p: MonotonePath) -> list[str]:
    out = []
    if not p.edges:
        return [f"path {i} is empty"]
    ids = {e for e, _, _ in r.edges}
    if any(e not in ids for e in p.edges):
        return [f"path {i} uses an unknown edge"]
    first, last = r.edge(p.edges[0]), r.edge(p.edges[-1])
    if first[1] != p.start or last[2] != p.end:
        out.append(f"path {i} endpoints disagree with its edges")
    for a, b in zip(p.edges, p.edges[1:]):
        if r.edge(a)[2] != r.edge(b)[1]:
            out.append(f"path {i} is not monotone/connected at edge {b}")
    return out


def _stratum_problems(dec: PathDecoration) -> list[str]:
    out = []
    used = [i for s in dec.strata for i in s]
    if sorted(used) != list(range(len(dec.paths))):
        out.append("strata do not partition the path indices")
        return out
    for s in dec.strata:
        ps = [dec.paths[i] for i in s]
        if len(s) == 2:
            if (ps[0].start, ps[0].end) != (ps[1].start, ps[1].end):
                out.append(f"pair {s} has different endpoints")
        elif len(s) == 4:
            for k in range(4):
                a, b = ps[k], ps[(k + 1) % 4]
                if a.start != b.start and a.end != b.end:
                    out.append(f"circle {s}: arcs {s[k]} and {s[(k + 1) % 4]} do not meet")
        elif len(s) != 1:
            out.append(f"stratum {s} has unsupported size {len(s)}")
    return out


def _induced(dg: DistinguishingGraph, v, eid: int) -> tuple[list[int], bool, bool]:
    """Order of the paths using edge ``eid`` as seen from saddle ``v``.

    Returns (sequence, anchored, has_terminator); anchored means the sequence
    is a linear order starting at the cut point of the loop belonging to
    ``eid``.
    """
    r = dg.reeb
    slots = dict(dg.slots(v))
    paths = dg.decoration.paths
    if eid in slots:
        seq = [i for i in slots[eid] if eid in paths[i].edges]
        anchored = True
    else:
        seq = [i for e in sorted(slots) for i in slots[e] if eid in paths[i].edges]
        anchored = False
    term = any(is_terminator(paths[i], v) for i in seq)
    return seq, anchored, term


def validate_distinguishing(dg: DistinguishingGraph) -> list[str]:
    """Every violated invariant of the decoration; an empty list means valid."""
    r = dg.reeb
    problems = [f"reeb: {p}" for p in validate_reeb(r)]
    if problems:
        return problems
    dec = dg.decoration
    for i, p in enumerate(dec.paths):
        problems += _path_problems(r, i, p)
    problems += _stratum_problems(dec)
    if problems:
        return problems
    for s in dec.circles:
        try:
            stratum_cycle(dg, s)
        except CycleOrderError as exc:
            problems.append(str(exc))

    saddles = set(r.saddles())
    given = [v for v, _ in dg.partitions]
    if sorted(given, key=r.rank) != sorted(saddles, key=r.rank) or len(given) != len(
        set(given)
    ):
        problems.append("partitions must cover exactly the degree-3 vertices")
        return problems

    slot_of: dict[tuple, int] = {}
    for v, slots in dg.partitions:
        side = set(r.doubled_side(v))
        if {e for e, _ in slots} != side or len(slots) != 2:
            problems.append(f"slots at {v} are not the co-directional edges")
            continue
        placed = [i for _, seq in slots for i in seq]
        touching = [i for i, p in enumerate(dec.paths) if touches(r, p, v)]
        if sorted(placed) != touching:
            problems.append(f"slots at {v} do not hold each path through it exactly once")
            continue
        for eid, seq in slots:
            flags = [is_terminator(dec.paths[i], v) for i in seq]
            if flags != sorted(flags, reverse=True):
                problems.append(f"slot {eid} at {v}: endpoint paths must precede crossing paths")
            for i in seq:
                slot_of[(v, i)] = eid
                need = forced_slot(r, dec.paths[i], v)
                if need is not None and need != eid:
                    problems.append(
                        f"path {i} uses edge {need} at {v} but sits in slot {eid}"
                    )
    for a, b, where in meeting_pairs(dec):
        v = getattr(dec.paths[a], where)
        if v in saddles and slot_of.get((v, a)) == slot_of.get((v, b)):
            problems.append(
                f"paths {a} and {b} meet at {v} but share a subset"
            )
    for eid, s, t in r.edges:
        if s in saddles and t in saddles:
            lo, lo_anchor, lo_term = _induced(dg, s, eid)
            hi, hi_anchor, hi_term = _induced(dg, t, eid)
            linear = lo_anchor and hi_anchor and not lo_term and not hi_term
            ok = lo == hi if linear else _is_rotation(lo, hi)
            if not ok:
                problems.append(f"orders induced on edge {eid} at {s} and {t} differ")
    return problems


def require_valid(dg: DistinguishingGraph) -> None:
    problems = validate_distinguishing(dg)
    if problems:
        raise ValidationError("; ".join(problems))


def stratum_cycle(dg: DistinguishingGraph, block) -> tuple:
    """Cyclic order of the critical points along one stratum image.

    ``block`` is a stratum (tuple of path indices) or its position in
    ``dg.decoration.strata``.
    """
    strata = dg.decoration.strata
    if isinstance(block, int):
        if not 0 <= block < len(strata):
            raise KeyError(block)
        block = strata[block]
    block = tuple(block)
    if block not in strata:
        raise KeyError(block)
    paths = [dg.decoration.paths[i] for i in block]
    if len(block) <= 2:
        return (paths[0].start, paths[0].end)
    cyc = []
    for k in range(len(paths)):
        a, b = paths[k], paths[(k + 1) % len(paths)]
        cyc.append(a.end if a.end == b.end else a.start)
    rank = dg.reeb.rank
    if not cycle_is_admissible([rank(v) for v in cyc]):
        raise CycleOrderError(
            f"critical points {tuple(cyc)} cannot occur in this cyclic order"
        )
    return _normal_cycle(cyc, key=rank)


def _normal_cycle(cyc: Sequence, key=lambda x: x) -> tuple:
    """Rotation/reflection representative starting at the smallest point."""
    n = len(cyc)
    cands = []
    for seq in (list(cyc), list(reversed(cyc))):
        for i in range(n):
            rot = seq[i:] + seq[:i]
            cands.append(tuple(rot))
    return min(cands, key=lambda c: [key(x) for x in c])


# ---------------------------------------------------------------------------
# canonical forms


def _parallel_groups(r: ReebGraph) -> list[list[int]]:
    groups: dict[tuple, list[int]] = {}
    for e, s, t in r.edges:
        groups.setdefault((s, t), []).append(e)
    return [sorted(g) for _, g in sorted(groups.items(), key=lambda kv: (r.rank(kv[0][0]), r.rank(kv[0][1])))]


def _edge_maps(r: ReebGraph, vname) -> Iterator[dict[int, tuple]]:
    groups = _parallel_groups(r)
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        m = {}
        for g, perm in zip(groups, choice):
            for k, e in enumerate(perm):
                _, s, t = r.edge(e)
                m[e] = (vname(s), vname(t), k)
        yield m


def _path_maps(dg: DistinguishingGraph, vname) -> Iterator[dict[int, int]]:
    dec = dg.decoration
    size = {i: len(s) for s in dec.strata for i in s}
    sig = {
        i: (vname(p.start), vname(p.end), size[i]) for i, p in enumerate(dec.paths)
    }
    groups: dict[tuple, list[int]] = {}
    for i in range(len(dec.paths)):
        groups.setdefault(sig[i], []).append(i)
    keys = sorted(groups)
    slots_base = []
    start = 0
    for k in keys:
        slots_base.append(list(range(start, start + len(groups[k]))))
        start += len(groups[k])
    for choice in itertools.product(*(itertools.permutations(b) for b in slots_base)):
        m = {}
        for k, perm in zip(keys, choice):
            for old, new in zip(groups[k], perm):
                m[old] = new
        yield m


def _serialize(dg: DistinguishingGraph, vname, em, pm, mirror: bool) -> tuple:
    r = dg.reeb
    dec = dg.decoration
    paths = [None] * len(dec.paths)
    for i, p in enumerate(dec.paths):
        paths[pm[i]] = tuple(em[e] for e in p.edges)
    strata = []
    for s in dec.strata:
        mapped = [pm[i] for i in s]
        if len(s) == 2:
            strata.append(("P", tuple(sorted(mapped))))
        elif len(s) == 4:
            strata.append(("C", _normal_cycle(mapped)))
        else:
            strata.append(("S", tuple(mapped)))
    parts = []
    for v, slots in dg.partitions:
        ss = []
        for eid, seq in slots:
            term = tuple(sorted(pm[i] for i in seq if is_terminator(dec.paths[i], v)))
            cross = [pm[i] for i in seq if not is_terminator(dec.paths[i], v)]
            if mirror:
                cross.reverse()
            ss.append((em[eid], term, tuple(cross)))
        parts.append((vname(v), tuple(sorted(ss))))
    edges = tuple(sorted(em.values()))
    return (
        tuple(vname(v) for v in r.order),
        edges,
        tuple(paths),
        tuple(sorted(strata)),
        tuple(sorted(parts)),
    )


def _vname(dg: DistinguishingGraph, compress: bool):
    if compress:
        pos = {v: i for i, v in enumerate(dg.reeb.order)}
        return pos.__getitem__
    return lambda v: v


def dg_canonical(
    dg: DistinguishingGraph, *, compress: bool = True, mirrors: Iterable[bool] = (False, True)
) -> str:
    """Minimal serialization over all relabelings of edges and paths.

    With ``compress`` the vertices are named by value rank, so graphs on
    different vertex ids compare; without it the vertex ids themselves are
    kept (used when pieces of one structure share global ranks).
    """
    require_valid(dg)
    vname = _vname(dg, compress)
    best = None
    for mirror in mirrors:
        for em in _edge_maps(dg.reeb, vname):
            for pm in _path_maps(dg, vname):
                s = _serialize(dg, vname, em, pm, mirror)
                if best is None or s < best:
                    best = s
    return repr(best)


def dg_equivalent(a: DistinguishingGraph, b: DistinguishingGraph) -> bool:
    """Search for an isomorphism from ``b`` onto ``a`` directly."""
    require_valid(a)
    require_valid(b)
    if len(a.reeb.order) != len(b.reeb.order):
        return False
    va, vb = _vname(a, True), _vname(b, True)
    # any single labeling of a is a valid target; b is searched exhaustively
    target = _serialize(a, va, next(_edge_maps(a.reeb, va)), next(_path_maps(a, va)), False)
    if len(a.decoration.paths) != len(b.decoration.paths):
        return False
    for mirror in (False, True):
        for em in _edge_maps(b.reeb, vb):
            for pm in _path_maps(b, vb):
                if _serialize(b, vb, em, pm, mirror) == target:
                    return True
    return False


def relabel(dg: DistinguishingGraph, vertex_map=None, edge_map=None, path_perm=None) -> DistinguishingGraph:
    """Rename vertices (order-preserving), edges and path indices."""
    r = dg.reeb
    vm = vertex_map or {v: v for v in r.order}
    emap = edge_map or {e: e for e, _, _ in r.edges}
    n = len(dg.decoration.paths)
    pp = path_perm or {i: i for i in range(n)}
    order = tuple(sorted((vm[v] for v in r.order)))
    if [vm[v] for v in r.order] != sorted(vm[v] for v in r.order):
        raise ValueError("vertex map must preserve the value order")
    reeb = ReebGraph(order, tuple(sorted((emap[e], vm[s], vm[t]) for e, s, t in r.edges)))
    paths = [None] * n
    for i, p in enumerate(dg.decoration.paths):
        paths[pp[i]] = MonotonePath(tuple(emap[e] for e in p.edges), vm[p.start], vm[p.end])
    strata = tuple(tuple(pp[i] for i in s) for s in dg.decoration.strata)
    parts = tuple(
        (vm[v], tuple((emap[e], tuple(pp[i] for i in seq)) for e, seq in slots))
        for v, slots in dg.partitions
    )
    return DistinguishingGraph(reeb, PathDecoration(tuple(paths), strata), parts)


def strip(dg: DistinguishingGraph) -> ReebGraph:
    return dg.reeb


# ---------------------------------------------------------------------------
# exhaustive generation


def monotone_paths(r: ReebGraph, a, b) -> list[tuple[int, ...]]:
    """All upward edge sequences from ``a`` to ``b``."""
    out = []

    def rec(v, acc):
        if v == b and acc:
            out.append(tuple(acc))
            return
        for e in r.out_edges(v):
            t = r.edge(e)[2]
            if r.rank(t) <= r.rank(b):
                rec(t, acc + [e])

    if r.rank(a) < r.rank(b):
        rec(a, [])
    return sorted(out)


def arcs_of(kind: str, points: Sequence) -> list[tuple]:
    """Arc endpoints (lower, upper) for a stratum image.

    ``kind`` is 'pair', 'segment' or 'circle'; a circle lists its points in
    cyclic order along the curve.
    """
    if kind == "segment":
        return [tuple(points)]
    if kind == "pair":
        return [tuple(points), tuple(points)]
    if kind == "circle":
        n = len(points)
        arcs = []
        for k in range(n):
            a, b = points[k], points[(k + 1) % n]
            arcs.append((a, b) if a < b else (b, a))
        return arcs
    raise ValueError(kind)


def _slot_options(r: ReebGraph, paths: list[MonotonePath], v) -> Iterator[tuple[Slot, Slot]]:
    side = sorted(r.doubled_side(v))
    touching = [i for i, p in enumerate(paths) if touches(r, p, v)]
    forced = {i: forced_slot(r, paths[i], v) for i in touching}
    free = [i for i in touching if forced[i] is None]
    for choice in itertools.product(side, repeat=len(free)):
        where = dict(forced)
        where.update(zip(free, choice))
        per_slot = []
        for eid in side:
            members = [i for i in touching if where[i] == eid]
            term = sorted(i for i in members if is_terminator(paths[i], v))
            cross = [i for i in members if not is_terminator(paths[i], v)]
            per_slot.append([(eid, tuple(term) + c) for c in itertools.permutations(cross)])
        for a in per_slot[0]:
            for b in per_slot[1]:
                yield (a, b)


def enumerate_decorations(r: ReebGraph, strata_spec: Sequence[tuple[str, tuple]]) -> Iterator[DistinguishingGraph]:
    """Every valid decoration of ``r`` by the given stratum images.

    ``strata_spec`` holds (kind, points) items as accepted by ``arcs_of``.
    Raw candidates, not deduplicated.
    """
    arcs: list[tuple] = []
    strata: list[tuple[int, ...]] = []
    for kind, pts in strata_spec:
        first = len(arcs)
        arcs.extend(arcs_of(kind, pts))
        strata.append(tuple(range(first, len(arcs))))
    choices = [monotone_paths(r, a, b) for a, b in arcs]
    saddles = r.saddles()
    for combo in itertools.product(*choices):
        paths = [MonotonePath(es, a, b) for es, (a, b) in zip(combo, arcs)]
        dec = PathDecoration(tuple(paths), tuple(strata))
        per_vertex = [list(_slot_options(r, paths, v)) for v in saddles]
        for parts in itertools.product(*per_vertex):
            dg = DistinguishingGraph(r, dec, tuple(zip(saddles, parts)))
            if not validate_distinguishing(dg):
                yield dg


def distinct_decorations(r: ReebGraph, strata_spec) -> list[DistinguishingGraph]:
    """Valid decorations up to equivalence, sorted by canonical key."""
    found: dict[str, DistinguishingGraph] = {}
    for dg in enumerate_decorations(r, strata_spec):
        found.setdefault(dg_canonical(dg), dg)
    return [found[k] for k in sorted(found)]
