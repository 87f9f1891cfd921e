"""JSON catalog documents.

Schema version "1.0". Parsing is strict: unknown or missing fields raise
``SchemaError``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .catalog import CatalogEntry, MorseStructure, structure_canonical
from .distinguish import DistinguishingGraph, MonotonePath, PathDecoration
from .reeb import ReebGraph
from .strata import (
    ColoredTree,
    Tree,
    ValidationError,
    all_stratifications,
    closure_surfaces,
    colored_tree_canonical,
    min_critical_points,
    stratification_name,
)

VERSION = "1.0"


class SchemaError(ValidationError):
    pass


def _fields(obj: Any, required: set[str], where: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    keys = set(obj)
    if keys - required:
        raise SchemaError(f"{where}: unknown fields {sorted(keys - required)}")
    if required - keys:
        raise SchemaError(f"{where}: missing fields {sorted(required - keys)}")
    return obj


# -- colored trees ------------------------------------------------------------


def ct_to_json(ct: ColoredTree) -> dict:
    return {
        "vertices": list(ct.tree.vertices),
        "edges": [list(e) for e in ct.tree.edges],
        "pairing": [[list(e) for e in b] for b in ct.pairing],
    }


def ct_from_json(d: dict) -> ColoredTree:
    d = _fields(d, {"vertices", "edges", "pairing"}, "stratification")
    tree = Tree(tuple(d["vertices"]), tuple(tuple(e) for e in d["edges"]))
    return ColoredTree(tree, tuple(tuple(tuple(e) for e in b) for b in d["pairing"]))


# -- distinguishing graphs ----------------------------------------------------


def dg_to_json(dg: DistinguishingGraph) -> dict:
    return {
        "order": list(dg.reeb.order),
        "edges": [list(e) for e in dg.reeb.edges],
        "paths": [
            {"edges": list(p.edges), "start": p.start, "end": p.end}
            for p in dg.decoration.paths
        ],
        "strata": [list(s) for s in dg.decoration.strata],
        "partitions": [
            {"vertex": v, "slots": [{"edge": e, "paths": list(seq)} for e, seq in slots]}
            for v, slots in dg.partitions
        ],
    }


def dg_from_json(d: dict) -> DistinguishingGraph:
    d = _fields(d, {"order", "edges", "paths", "strata", "partitions"}, "piece")
    reeb = ReebGraph(tuple(d["order"]), tuple(tuple(e) for e in d["edges"]))
    paths = []
    for p in d["paths"]:
        p = _fields(p, {"edges", "start", "end"}, "path")
        paths.append(MonotonePath(tuple(p["edges"]), p["start"], p["end"]))
    parts = []
    for part in d["partitions"]:
        part = _fields(part, {"vertex", "slots"}, "partition")
        slots = []
        for sl in part["slots"]:
            sl = _fields(sl, {"edge", "paths"}, "slot")
            slots.append((sl["edge"], tuple(sl["paths"])))
        parts.append((part["vertex"], tuple(slots)))
    dec = PathDecoration(tuple(paths), tuple(tuple(s) for s in d["strata"]))
    return DistinguishingGraph(reeb, dec, tuple(parts))


# -- structures -----------------------------------------------------------------


def structure_to_json(s: MorseStructure) -> dict:
    return {
        "stratification": ct_to_json(s.stratification),
        "points": [[r, kind, i] for r, (kind, i) in s.points],
        "curve_orders": [list(o) for o in s.curve_orders],
        "pieces": [
            {"vertex": v, "dg": None if dg is None else dg_to_json(dg)} for v, dg in s.pieces
        ],
        "gluings": [
            {"curve": b, "pieces": [list(x) for x in where]} for b, where in s.gluings
        ],
    }


def structure_from_json(d: dict) -> MorseStructure:
    d = _fields(d, {"stratification", "points", "curve_orders", "pieces", "gluings"}, "structure")
    pieces = []
    for p in d["pieces"]:
        p = _fields(p, {"vertex", "dg"}, "piece entry")
        pieces.append((p["vertex"], None if p["dg"] is None else dg_from_json(p["dg"])))
    gluings = []
    for g in d["gluings"]:
        g = _fields(g, {"curve", "pieces"}, "gluing")
        gluings.append((g["curve"], tuple(tuple(x) for x in g["pieces"])))
    return MorseStructure(
        ct_from_json(d["stratification"]),
        tuple((r, (kind, i)) for r, kind, i in d["points"]),
        tuple(tuple(o) for o in d["curve_orders"]),
        tuple(pieces),
        tuple(gluings),
    )


# -- documents ------------------------------------------------------------------


@dataclass(frozen=True)
class StratificationRecord:
    name: str
    tree_key: str
    stratification: ColoredTree
    pieces: tuple[tuple[int, int, int], ...]  # (vertex, genus, boundaries)
    min_critical_points: int
    feasible: bool


@dataclass(frozen=True)
class CatalogDocument:
    version: str
    budget: int
    double_curves: int
    stratifications: tuple[StratificationRecord, ...]
    entries: tuple[CatalogEntry, ...]
    notes: tuple[str, ...] = ()


def stratification_records(double_curves: int, budget: int) -> tuple[StratificationRecord, ...]:
    out = []
    for ct in all_stratifications():
        if len(ct.pairing) != double_curves:
            continue
        m = min_critical_points(ct)
        out.append(
            StratificationRecord(
                stratification_name(ct),
                colored_tree_canonical(ct),
                ct,
                tuple((p.vertex, p.genus, p.boundaries) for p in closure_surfaces(ct)),
                m,
                m <= budget,
            )
        )
    return tuple(sorted(out, key=lambda r: r.name))


def make_document(double_curves, budget, entries, notes=()) -> CatalogDocument:
    return CatalogDocument(
        VERSION,
        budget,
        double_curves,
        stratification_records(double_curves, budget),
        tuple(sorted(entries, key=lambda e: e.key)),
        tuple(notes),
    )


def to_json(doc: CatalogDocument) -> dict:
    return {
        "version": doc.version,
        "budget": doc.budget,
        "double_curves": doc.double_curves,
        "stratifications": [
            {
                "name": r.name,
                "tree_key": r.tree_key,
                "stratification": ct_to_json(r.stratification),
                "pieces": [list(p) for p in r.pieces],
                "min_critical_points": r.min_critical_points,
                "feasible": r.feasible,
            }
            for r in doc.stratifications
        ],
        "entries": [
            {"case_label": e.case_label, "key": e.key, "structure": structure_to_json(e.structure)}
            for e in doc.entries
        ],
        "total": len(doc.entries),
        "notes": list(doc.notes),
    }


def from_json(d: dict) -> CatalogDocument:
    d = _fields(
        d,
        {"version", "budget", "double_curves", "stratifications", "entries", "total", "notes"},
        "document",
    )
    if d["version"] != VERSION:
        raise SchemaError(f"unsupported schema version {d['version']!r}")
    recs = []
    for r in d["stratifications"]:
        r = _fields(
            r,
            {"name", "tree_key", "stratification", "pieces", "min_critical_points", "feasible"},
            "stratification record",
        )
        recs.append(
            StratificationRecord(
                r["name"],
                r["tree_key"],
                ct_from_json(r["stratification"]),
                tuple(tuple(p) for p in r["pieces"]),
                r["min_critical_points"],
                r["feasible"],
            )
        )
    entries = []
    for e in d["entries"]:
        e = _fields(e, {"case_label", "key", "structure"}, "entry")
        entries.append(CatalogEntry(structure_from_json(e["structure"]), e["key"], e["case_label"]))
    if d["total"] != len(entries):
        raise SchemaError("total does not match the number of entries")
    return CatalogDocument(
        d["version"], d["budget"], d["double_curves"], tuple(recs), tuple(entries), tuple(d["notes"])
    )


def dumps(doc: CatalogDocument) -> str:
    return json.dumps(to_json(doc), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> CatalogDocument:
    return from_json(json.loads(text))


def stale_keys(doc: CatalogDocument) -> list[str]:
    """Case labels whose stored key differs from a freshly computed one."""
    out = []
    for e in doc.entries:
        try:
            fresh = structure_canonical(e.structure, doc.budget)
        except ValidationError:
            fresh = None
        if fresh != e.key:
            out.append(e.case_label)
    return out
