"""Reeb graphs of simple Morse functions.

Vertices are critical points listed in increasing order of critical value;
edges are directed upward. Parallel edges are allowed (the torus graph has a
doubled edge between its two saddles).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterator

from .strata import ValidationError

EdgeRec = tuple[int, Hashable, Hashable]  # (edge id, source, target)


@dataclass(frozen=True)
class ReebGraph:
    order: tuple  # vertex ids, increasing critical value
    edges: tuple[EdgeRec, ...]

    @classmethod
    def from_pairs(cls, order, pairs) -> "ReebGraph":
        """Build from (source, target) pairs; edge ids are list positions."""
        return cls(tuple(order), tuple((i, s, t) for i, (s, t) in enumerate(pairs)))

    @property
    def vertices(self) -> tuple:
        return self.order

    def rank(self, v) -> int:
        return self.order.index(v)

    def edge(self, eid: int) -> EdgeRec:
        for e in self.edges:
            if e[0] == eid:
                return e
        raise KeyError(eid)

    def in_edges(self, v) -> tuple[int, ...]:
        return tuple(e for e, _, t in self.edges if t == v)

    def out_edges(self, v) -> tuple[int, ...]:
        return tuple(e for e, s, _ in self.edges if s == v)

    def degree(self, v) -> int:
        return len(self.in_edges(v)) + len(self.out_edges(v))

    def minima(self) -> tuple:
        return tuple(v for v in self.order if not self.in_edges(v))

    def maxima(self) -> tuple:
        return tuple(v for v in self.order if not self.out_edges(v))

    def saddles(self) -> tuple:
        return tuple(v for v in self.order if self.degree(v) == 3)

    def doubled_side(self, v) -> tuple[int, ...]:
        """The two co-directional edges at a degree-3 vertex."""
        ins, outs = self.in_edges(v), self.out_edges(v)
        return ins if len(ins) == 2 else outs

    def is_connected(self) -> bool:
        if not self.order:
            return False
        adj = {v: set() for v in self.order}
        for _, s, t in self.edges:
            if s in adj and t in adj:
                adj[s].add(t)
                adj[t].add(s)
        seen = {self.order[0]}
        stack = [self.order[0]]
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        return len(seen) == len(self.order)

    def relabel_vertices(self, mapping) -> "ReebGraph":
        order = sorted((mapping[v] for v in self.order))
        return ReebGraph(
            tuple(order), tuple((e, mapping[s], mapping[t]) for e, s, t in self.edges)
        )


def validate_reeb(r: ReebGraph) -> list[str]:
    """All invariant violations of ``r``; an empty list means valid."""
    out = []
    if len(set(r.order)) != len(r.order):
        out.append("duplicate vertex in value order")
    ids = [e for e, _, _ in r.edges]
    if len(set(ids)) != len(ids):
        out.append("duplicate edge id")
    pos = {v: i for i, v in enumerate(r.order)}
    for e, s, t in r.edges:
        if s not in pos or t not in pos:
            out.append(f"edge {e} has unknown endpoint")
        elif pos[s] >= pos[t]:
            out.append(f"edge against value order: {e} ({s} -> {t})")
    if not r.is_connected():
        out.append("not connected")
    for v in r.order:
        ins, outs = len(r.in_edges(v)), len(r.out_edges(v))
        if ins + outs not in (1, 3):
            out.append(f"invalid vertex degree at {v}: {ins + outs}")
        elif ins + outs == 3 and (ins, outs) not in ((1, 2), (2, 1)):
            out.append(f"invalid saddle split at {v}: in {ins}, out {outs}")
    return out


def require_valid(r: ReebGraph) -> None:
    problems = validate_reeb(r)
    if problems:
        raise ValidationError("; ".join(problems))


def betti(r: ReebGraph) -> int:
    """First Betti number |E| - |V| + 1 of a connected graph."""
    if not r.is_connected():
        raise ValidationError("Betti number requested for a disconnected graph")
    return len(r.edges) - len(r.order) + 1


def reeb_canonical(r: ReebGraph) -> str:
    """Key under order-preserving isomorphism.

    The value order pins the vertex bijection, so only the multiset of
    (source rank, target rank) pairs remains.
    """
    require_valid(r)
    pos = {v: i for i, v in enumerate(r.order)}
    pairs = sorted((pos[s], pos[t]) for _, s, t in r.edges)
    return repr((len(r.order), tuple(pairs)))


def shape_canonical(r: ReebGraph) -> str:
    """Key under direction-preserving isomorphism, ignoring the value order."""
    require_valid(r)
    n = len(r.order)
    pos = {v: i for i, v in enumerate(r.order)}
    pairs = [(pos[s], pos[t]) for _, s, t in r.edges]
    best = None
    for perm in itertools.permutations(range(n)):
        s = tuple(sorted((perm[a], perm[b]) for a, b in pairs))
        if best is None or s < best:
            best = s
    return repr((n, best))


# (in, out) degree options for a vertex of a simple Morse function's Reeb graph
_VERTEX_TYPES = ((0, 1), (1, 0), (1, 2), (2, 1))


def generate_reeb_graphs(order, n_betti: int) -> Iterator[ReebGraph]:
    """Every valid Reeb graph on the ordered vertices with the given Betti number.

    Vertices are visited in value order; each consumes incoming stubs left
    open by earlier vertices and opens its own outgoing stubs.
    """
    order = tuple(order)
    n = len(order)
    target_edges = n - 1 + n_betti
    seen: set = set()

    def rec(i: int, stubs: Counter, pairs: list):
        if i == n:
            if not +stubs:
                key = tuple(sorted(pairs))
                if key in seen:
                    return
                seen.add(key)
                r = ReebGraph.from_pairs(order, [(order[a], order[b]) for a, b in key])
                if len(r.edges) == target_edges and not validate_reeb(r):
                    yield r
            return
        for ins, outs in _VERTEX_TYPES:
            if ins == 0 and i == n - 1:
                continue
            sources = sorted((+stubs).elements())
            for chosen in set(itertools.combinations(sources, ins)):
                nxt = stubs.copy()
                nxt.subtract(chosen)
                nxt[i] += outs
                if len(pairs) + ins > target_edges:
                    continue
                yield from rec(i + 1, nxt, pairs + [(s, i) for s in chosen])

    yield from rec(0, Counter(), [])


@lru_cache(maxsize=None)
def enumerate_optimal_reeb(genus: int) -> tuple[ReebGraph, ...]:
    """Optimal Reeb graphs of a closed orientable surface of the given genus.

    Optimal: one minimum, one maximum and 2*genus saddles. Classes are taken
    up to direction-preserving isomorphism (the value order of the saddles is
    not part of the shape).
    """
    if not 0 <= genus <= 3:
        raise ValueError(f"genus must be in 0..3, got {genus}")
    classes: dict[str, ReebGraph] = {}
    for r in generate_reeb_graphs(range(2 + 2 * genus), genus):
        if len(r.minima()) == 1 and len(r.maxima()) == 1:
            classes.setdefault(shape_canonical(r), r)
    return tuple(classes[k] for k in sorted(classes))


def optimal_reeb_ordered(genus: int) -> tuple[ReebGraph, ...]:
    """Optimal Reeb graphs distinguished up to order-preserving isomorphism."""
    if not 0 <= genus <= 3:
        raise ValueError(f"genus must be in 0..3, got {genus}")
    out = {}
    for r in generate_reeb_graphs(range(2 + 2 * genus), genus):
        if len(r.minima()) == 1 and len(r.maxima()) == 1:
            out.setdefault(reeb_canonical(r), r)
    return tuple(out[k] for k in sorted(out))


def torus_graph() -> ReebGraph:
    """p0 -> p1, two parallel edges p1 -> p2, p2 -> p3."""
    return ReebGraph.from_pairs((0, 1, 2, 3), [(0, 1), (1, 2), (1, 2), (2, 3)])


def sphere_graph() -> ReebGraph:
    return ReebGraph.from_pairs((0, 1), [(0, 1)])
