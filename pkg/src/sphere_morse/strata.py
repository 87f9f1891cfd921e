"""Dual trees of sphere stratifications, their edge-pair colorings, and
critical-point lower bounds.

A stratification of the sphere by the preimage of the double curves is
encoded by its dual tree: one vertex per 2-stratum, one edge per preimage
circle. Two circles that map onto the same double curve are grouped into a
block of the pairing.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

Edge = tuple[int, int]
Block = tuple[Edge, Edge]


class ValidationError(ValueError):
    """Raised when an object violates its structural invariants."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tree:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        edges = tuple(sorted(_norm_edge(u, v) for u, v in self.edges))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        problems = tree_violations(verts, edges)
        if problems:
            raise ValidationError("; ".join(problems))

    @classmethod
    def from_edges(cls, edges, vertices=None) -> "Tree":
        edges = [tuple(e) for e in edges]
        if vertices is None:
            vertices = sorted({x for e in edges for x in e}) or [0]
        return cls(tuple(vertices), tuple(edges))

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def incident(self, v: int) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if v in e)

    def neighbors(self, v: int) -> list[int]:
        return [e[0] if e[1] == v else e[1] for e in self.edges if v in e]

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if self.degree(v) == 1)

    def relabel(self, mapping: dict[int, int]) -> "Tree":
        return Tree(
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[u], mapping[v]) for u, v in self.edges),
        )


def tree_violations(vertices, edges) -> list[str]:
    out = []
    vs = set(vertices)
    if not vs:
        out.append("empty vertex set")
        return out
    if len(set(edges)) != len(edges):
        out.append("parallel edges")
    for u, v in edges:
        if u == v:
            out.append(f"self-loop at {u}")
        if u not in vs or v not in vs:
            out.append(f"edge ({u}, {v}) has unknown endpoint")
    if len(edges) != len(vs) - 1:
        out.append("edge count is not |V| - 1")
    # connectivity
    adj: dict[int, set[int]] = {v: set() for v in vs}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].add(v)
            adj[v].add(u)
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    if seen != vs:
        out.append("not connected")
    return out


@dataclass(frozen=True)
class ColoredTree:
    """A dual tree with its edges partitioned into 2-element blocks.

    Each block is one double curve of the immersed sphere.
    """

    tree: Tree
    pairing: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(
            sorted(tuple(sorted(_norm_edge(*e) for e in b)) for b in self.pairing)
        )
        object.__setattr__(self, "pairing", blocks)
        seen = [e for b in blocks for e in b]
        if any(len(b) != 2 for b in blocks):
            raise ValidationError("every block must have exactly 2 edges")
        if sorted(seen) != list(self.tree.edges):
            raise ValidationError("pairing is not a partition of the edge set")

    def block_of(self, edge: Edge) -> int:
        edge = _norm_edge(*edge)
        for i, b in enumerate(self.pairing):
            if edge in b:
                return i
        raise KeyError(edge)

    def full_blocks(self, v: int) -> tuple[int, ...]:
        """Blocks with both edges incident to ``v``."""
        return tuple(i for i, b in enumerate(self.pairing) if all(v in e for e in b))

    def half_blocks(self, v: int) -> tuple[int, ...]:
        """Blocks with exactly one edge incident to ``v`` (boundary circles)."""
        return tuple(
            i for i, b in enumerate(self.pairing) if sum(v in e for e in b) == 1
        )

    def relabel(self, mapping: dict[int, int]) -> "ColoredTree":
        return ColoredTree(
            self.tree.relabel(mapping),
            tuple(
                tuple((mapping[u], mapping[v]) for u, v in b) for b in self.pairing
            ),
        )


@dataclass(frozen=True)
class SurfacePiece:
    vertex: int
    genus: int
    boundaries: int

    @property
    def closed(self) -> bool:
        return self.boundaries == 0

    def name(self) -> str:
        if self.genus == 0:
            return {1: "disk", 2: "cylinder"}.get(
                self.boundaries, f"sphere with {self.boundaries} holes"
            )
        base = "torus" if self.genus == 1 else f"genus-{self.genus} surface"
        if self.boundaries == 0:
            return base
        if self.boundaries == 1:
            return f"{base} with a hole"
        return f"{base} with {self.boundaries} holes"


@dataclass(frozen=True)
class PointBudget:
    """Distribution of critical points over double curves and 2-strata.

    ``per_curve`` is indexed by block position in the colored tree's pairing;
    ``per_vertex_interior`` maps tree vertices to interior critical points.
    """

    per_curve: tuple[int, ...]
    per_vertex_interior: tuple[tuple[int, int], ...] = field(default=())

    @property
    def total(self) -> int:
        return sum(self.per_curve) + sum(n for _, n in self.per_vertex_interior)

    def interior(self, v: int) -> int:
        return dict(self.per_vertex_interior).get(v, 0)


# ---------------------------------------------------------------------------
# tree canonical form and enumeration


def _ahu(tree: Tree, root: int, parent: int | None) -> str:
    kids = sorted(_ahu(tree, c, root) for c in tree.neighbors(root) if c != parent)
    return "(" + "".join(kids) + ")"


def _centers(tree: Tree) -> list[int]:
    remaining = set(tree.vertices)
    deg = {v: tree.degree(v) for v in remaining}
    layer = [v for v in remaining if deg[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for leaf in layer:
            remaining.discard(leaf)
            for n in tree.neighbors(leaf):
                if n in remaining:
                    deg[n] -= 1
                    if deg[n] == 1:
                        nxt.append(n)
        layer = nxt
    return sorted(remaining)


def tree_canonical(t: Tree) -> str:
    """Isomorphism-invariant key of a free tree (center-rooted AHU string)."""
    problems = tree_violations(t.vertices, t.edges)
    if problems:
        raise ValidationError("; ".join(problems))
    centers = _centers(t)
    if len(centers) == 1:
        return _ahu(t, centers[0], None)
    a, b = centers
    # bicentral: root at the central edge
    sa, sb = sorted((_ahu(t, a, b), _ahu(t, b, a)))
    return "[" + sa + sb + "]"


def _standard_form(t: Tree) -> Tree:
    """Relabel vertices 0..n-1 in BFS order from the canonical root."""
    root = _centers(t)[0]
    order = [root]
    for v in order:
        order.extend(
            sorted(
                (c for c in t.neighbors(v) if c not in order),
                key=lambda c: _ahu(t, c, v),
            )
        )
    return t.relabel({v: i for i, v in enumerate(order)})


@lru_cache(maxsize=None)
def enumerate_trees(n_edges: int) -> tuple[Tree, ...]:
    """One tree per isomorphism class with ``n_edges`` edges, sorted by key."""
    if not 1 <= n_edges <= 8:
        raise ValueError(f"n_edges must be in 1..8, got {n_edges}")
    level = {tree_canonical(Tree((0,), ())): Tree((0,), ())}
    for _ in range(n_edges):
        nxt: dict[str, Tree] = {}
        for t in level.values():
            new = len(t.vertices)
            for v in t.vertices:
                grown = Tree(t.vertices + (new,), t.edges + ((v, new),))
                nxt.setdefault(tree_canonical(grown), grown)
        level = nxt
    return tuple(_standard_form(level[k]) for k in sorted(level))


def four_edge_trees() -> dict[str, Tree]:
    """The three trees with four edges under the names T1 (star), T2, T3 (chain)."""
    out = {}
    for t in enumerate_trees(4):
        degs = sorted(t.degree(v) for v in t.vertices)
        name = {4: "T1", 3: "T2", 2: "T3"}[degs[-1]]
        out[name] = t
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# pairings


def _perfect_matchings(items: list) -> Iterator[list[tuple]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for m in _perfect_matchings(rest[:i] + rest[i + 1 :]):
            yield [(first, other)] + m


def _colored_serial(ct: ColoredTree, perm: dict[int, int]):
    edges = tuple(sorted(_norm_edge(perm[u], perm[v]) for u, v in ct.tree.edges))
    blocks = tuple(
        sorted(
            tuple(sorted(_norm_edge(perm[u], perm[v]) for u, v in b))
            for b in ct.pairing
        )
    )
    return (len(ct.tree.vertices), edges, blocks)


def canonical_labelings(ct: ColoredTree) -> tuple[tuple, list[dict[int, int]]]:
    """Lexicographically minimal serialization over all vertex bijections.

    Returns the minimal serialization and every bijection attaining it; two
    attaining bijections differ by a color-preserving automorphism.
    """
    vs = ct.tree.vertices
    best = None
    winners: list[dict[int, int]] = []
    for image in itertools.permutations(range(len(vs))):
        perm = dict(zip(vs, image))
        s = _colored_serial(ct, perm)
        if best is None or s < best:
            best, winners = s, [perm]
        elif s == best:
            winners.append(perm)
    return best, winners


def colored_tree_canonical(ct: ColoredTree) -> str:
    return repr(canonical_labelings(ct)[0])


def tree_automorphisms(t: Tree) -> list[dict[int, int]]:
    vs = t.vertices
    edges = set(t.edges)
    out = []
    for image in itertools.permutations(vs):
        perm = dict(zip(vs, image))
        if all(_norm_edge(perm[u], perm[v]) in edges for u, v in t.edges):
            out.append(perm)
    return out


def enumerate_pairings(t: Tree) -> tuple[ColoredTree, ...]:
    """Edge pairings of ``t`` up to automorphisms of ``t``."""
    if len(t.edges) % 2:
        raise ValidationError("a tree with an odd number of edges has no pairing")
    found: dict[str, ColoredTree] = {}
    for m in _perfect_matchings(list(t.edges)):
        ct = ColoredTree(t, tuple(m))
        found.setdefault(colored_tree_canonical(ct), ct)
    return tuple(found[k] for k in sorted(found))


# ---------------------------------------------------------------------------
# closures and lower bounds


def closure_surface(ct: ColoredTree, v: int) -> SurfacePiece:
    if v not in ct.tree.vertices:
        raise KeyError(f"unknown vertex {v}")
    genus = len(ct.full_blocks(v))
    return SurfacePiece(v, genus, ct.tree.degree(v) - 2 * genus)


def closure_surfaces(ct: ColoredTree) -> tuple[SurfacePiece, ...]:
    return tuple(closure_surface(ct, v) for v in ct.tree.vertices)


def _constraints(ct: ColoredTree):
    """(vertex, fully incident blocks, demand) for every closed closure."""
    out = []
    for piece in closure_surfaces(ct):
        if piece.closed:
            out.append(
                (piece.vertex, ct.full_blocks(piece.vertex), 2 + 2 * piece.genus)
            )
    return out


def _satisfies(ct: ColoredTree, budget: PointBudget) -> bool:
    if len(budget.per_curve) != len(ct.pairing):
        return False
    if any(c < 2 or c % 2 for c in budget.per_curve):
        return False
    if any(n < 0 for _, n in budget.per_vertex_interior):
        return False
    for v, blocks, demand in _constraints(ct):
        if budget.interior(v) + sum(budget.per_curve[b] for b in blocks) < demand:
            return False
    return True


def min_critical_points(ct: ColoredTree) -> int:
    """Exact minimum of the point-count integer program.

    Each block needs an even number >= 2 of points; a vertex whose closure is
    closed of genus g needs at least 2 + 2g points among its interior and its
    fully incident curves.
    """
    curves = [2] * len(ct.pairing)
    interior = {}
    best = None
    cons = _constraints(ct)
    hi = max([d for _, _, d in cons], default=2)
    for extra in itertools.product(range(0, hi + 1, 2), repeat=len(curves)):
        cs = [c + e for c, e in zip(curves, extra)]
        total = sum(cs)
        for v, blocks, demand in cons:
            have = sum(cs[b] for b in blocks)
            interior[v] = max(0, demand - have)
        total += sum(interior.values())
        if best is None or total < best:
            best = total
        interior.clear()
    return best


def point_distributions(ct: ColoredTree, budget: int) -> list[PointBudget]:
    """Every admissible point distribution using exactly ``budget`` points."""
    nb = len(ct.pairing)
    vs = ct.tree.vertices
    out = []
    for cs in itertools.product(range(2, budget + 1, 2), repeat=nb):
        rest = budget - sum(cs)
        if rest < 0:
            continue
        for inner in _compositions(rest, len(vs)):
            pb = PointBudget(
                tuple(cs), tuple((v, n) for v, n in zip(vs, inner) if n)
            )
            if _satisfies(ct, pb):
                out.append(pb)
    return sorted(out, key=lambda p: (p.per_curve, p.per_vertex_interior))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def all_stratifications() -> list[ColoredTree]:
    """Colored trees with one or two double curves (2 or 4 edges)."""
    out = []
    for n in (2, 4):
        for t in enumerate_trees(n):
            out.extend(enumerate_pairings(t))
    return out


def feasible_stratifications(budget: int) -> list[ColoredTree]:
    if budget < 2:
        raise ValueError("budget must be at least 2")
    return [ct for ct in all_stratifications() if min_critical_points(ct) <= budget]


# ---------------------------------------------------------------------------
# named stratifications


def stratification_name(ct: ColoredTree) -> str:
    """Human name: 'single-curve', 'T1', 'T2-A', 'T2-B', 'T3-A', 'T3-B', 'T3-C'."""
    if len(ct.tree.edges) == 2:
        return "single-curve"
    degs = sorted(ct.tree.degree(v) for v in ct.tree.vertices)
    pieces = closure_surfaces(ct)
    closed = sorted(p.genus for p in pieces if p.closed)
    if degs[-1] == 4:
        return "T1"
    if degs[-1] == 3:
        return "T2-A" if closed else "T2-B"
    if closed == [1, 1]:
        return "T3-A"
    if closed == [1]:
        return "T3-C"
    return "T3-B"


def named_stratifications() -> dict[str, ColoredTree]:
    return {stratification_name(ct): ct for ct in all_stratifications()}
