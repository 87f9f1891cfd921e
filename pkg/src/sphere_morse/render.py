"""Graphviz DOT text for trees, Reeb graphs and catalog structures.

Output is deterministic; diagrams are drawn bottom-to-top so the function
grows upward.
"""
from __future__ import annotations

from .catalog import MorseStructure
from .distinguish import DistinguishingGraph
from .reeb import ReebGraph
from .strata import ColoredTree, Tree, closure_surface

_COLORS = ("blue", "red", "darkgreen", "orange")


def _q(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def tree_dot(t: Tree | ColoredTree, name: str = "tree") -> str:
    ct = t if isinstance(t, ColoredTree) else None
    tree = ct.tree if ct else t
    lines = [f"digraph {_q(name)} {{", "  edge [dir=none];"]
    for v in tree.vertices:
        label = f"v{v}"
        if ct:
            label += f"\\n{closure_surface(ct, v).name()}"
        lines.append(f"  v{v} [label={_q(label)}];")
    for u, v in tree.edges:
        attrs = ""
        if ct:
            b = ct.block_of((u, v))
            attrs = f" [color={_COLORS[b % len(_COLORS)]}, label={_q(f'curve {b}')}]"
        lines.append(f"  v{u} -> v{v}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _reeb_body(r: ReebGraph, prefix: str, dg: DistinguishingGraph | None, indent: str) -> list[str]:
    lines = []
    for v in r.order:
        lines.append(f"{indent}{prefix}{v} [label={_q(f'p{v}')}];")
    for e, s, t in r.edges:
        label = f"e{e}"
        if dg is not None:
            users = [str(i) for i, p in enumerate(dg.decoration.paths) if e in p.edges]
            if users:
                label += " | paths " + ",".join(users)
        lines.append(f"{indent}{prefix}{s} -> {prefix}{t} [label={_q(label)}];")
    if dg is not None:
        for v, slots in dg.partitions:
            parts = "; ".join(f"e{e}: {list(seq)}" for e, seq in slots)
            lines.append(
                f"{indent}{prefix}{v}_slots [shape=note, label={_q(parts)}];"
            )
            lines.append(f"{indent}{prefix}{v}_slots -> {prefix}{v} [style=dotted, arrowhead=none];")
    return lines


def reeb_dot(r: ReebGraph, name: str = "reeb") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;"]
    lines += _reeb_body(r, "p", None, "  ")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dg_dot(dg: DistinguishingGraph, name: str = "distinguishing") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;"]
    lines += _reeb_body(dg.reeb, "p", dg, "  ")
    lines.append("}")
    return "\n".join(lines) + "\n"


def structure_dot(s: MorseStructure, name: str = "structure") -> str:
    ct = s.stratification
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  compound=true;"]
    for v, dg in s.pieces:
        sp = closure_surface(ct, v)
        lines.append(f"  subgraph cluster_v{v} {{")
        lines.append(f"    label={_q(f'v{v}: {sp.name()}')};")
        if dg is None:
            lines.append(f"    v{v}_fixed [shape=box, label={_q('fixed by boundary')}];")
        else:
            lines += _reeb_body(dg.reeb, f"v{v}_p", dg, "    ")
        lines.append("  }")
    for b, order in enumerate(s.curve_orders):
        cyc = " ".join(f"p{x}" for x in order)
        lines.append(
            f"  curve{b} [shape=ellipse, color={_COLORS[b % len(_COLORS)]}, label={_q(f'curve {b}: ({cyc})')}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
