"""Command-line interface.

    sphere-morse classify --double-curves {1,2} [--budget N] [--format text|json]
    sphere-morse render {tree,reeb,structure} ID [--out FILE]
    sphere-morse ids {tree,reeb,structure}
    sphere-morse check [--catalog FILE]

Exit status: 0 success, 1 check or lookup failure, 2 usage error.
Relative ``--out`` paths are resolved against $SPHERE_MORSE_OUT when set.
"""
from __future__ import annotations

import argparse
import hashlib
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import catalog, document, render
from .checks import run_suites
from .reeb import enumerate_optimal_reeb, reeb_canonical, torus_graph
from .strata import (
    ValidationError,
    all_stratifications,
    colored_tree_canonical,
    enumerate_trees,
    stratification_name,
    tree_canonical,
    four_edge_trees,
)

OUT_ENV = "SPHERE_MORSE_OUT"


def short_id(key: str) -> str:
    return hashlib.sha256(key.encode()).hexdigest()[:12]


def _generated(double_curves: int, budget: int, jobs: int) -> list[catalog.CatalogEntry]:
    cts = [ct for ct in all_stratifications() if len(ct.pairing) == double_curves]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(catalog.enumerate_structures, cts, [budget] * len(cts)))
    else:
        parts = [catalog.enumerate_structures(ct, budget) for ct in cts]
    return sorted((e for p in parts for e in p), key=lambda e: e.key)


def cmd_classify(args) -> int:
    budget = args.budget
    generated = _generated(args.double_curves, budget, args.jobs)
    notes = []
    if budget == 4:
        built = catalog.build_catalog(args.double_curves)
        if {e.key for e in built} != {e.key for e in generated}:
            report = catalog.cross_validate(4)
            print("\n".join(report.lines()), file=sys.stderr)
            return 1
        entries = built
        if args.double_curves == 2:
            notes.append(catalog.SCHEMA_NOTE)
    else:
        entries = generated
        notes.append(f"budget {budget}: generated only, unverified")
    doc = document.make_document(args.double_curves, budget, entries, notes)
    if args.format == "json":
        text = document.dumps(doc)
    else:
        lines = [f"double curves: {args.double_curves}, critical points: {budget}"]
        for r in doc.stratifications:
            flag = "feasible" if r.feasible else "excluded"
            lines.append(f"stratification {r.name}: at least {r.min_critical_points} points, {flag}")
        counts: dict[str, int] = {}
        for e in doc.entries:
            counts[stratification_name(e.structure.stratification)] = (
                counts.get(stratification_name(e.structure.stratification), 0) + 1
            )
        for name in sorted(counts):
            lines.append(f"structures on {name}: {counts[name]}")
        for e in sorted(doc.entries, key=lambda e: e.case_label):
            lines.append(f"  {short_id(e.key)}  {e.case_label}")
        lines += [f"note: {n}" for n in notes]
        lines.append(f"total: {len(doc.entries)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def registry(target: str) -> dict[str, tuple[str, object]]:
    """id -> (label, object) for everything ``render`` can draw."""
    out: dict[str, tuple[str, object]] = {}
    if target == "tree":
        for n in range(1, 5):
            for t in enumerate_trees(n):
                out[short_id(tree_canonical(t))] = (f"tree with {n} edge{'s' if n > 1 else ''}", t)
        for name, t in four_edge_trees().items():
            out[name] = (name, t)
        for ct in all_stratifications():
            name = stratification_name(ct)
            out[short_id(colored_tree_canonical(ct))] = (name, ct)
            out[name] = (name, ct)
    elif target == "reeb":
        for g in range(3):
            for i, r in enumerate(enumerate_optimal_reeb(g)):
                out[short_id(reeb_canonical(r))] = (f"optimal genus {g} #{i + 1}", r)
        out["torus"] = ("torus", torus_graph())
    elif target == "structure":
        for e in catalog.build_catalog(1) + catalog.build_catalog(2):
            out[short_id(e.key)] = (e.case_label, e)
            out[e.case_label] = (e.case_label, e)
    return out


def _resolve(target: str, ident: str):
    reg = registry(target)
    if ident in reg:
        return reg[ident]
    hid = short_id(ident)
    return reg.get(hid)


def cmd_render(args) -> int:
    found = _resolve(args.target, args.id)
    if found is None:
        print(f"error: unknown {args.target} id {args.id!r}", file=sys.stderr)
        return 1
    label, obj = found
    if args.target == "tree":
        text = render.tree_dot(obj, label)
    elif args.target == "reeb":
        text = render.reeb_dot(obj, label)
    else:
        text = render.structure_dot(obj.structure, label)
    _emit(text, args.out)
    return 0


def cmd_ids(args) -> int:
    reg = registry(args.target)
    for ident in sorted(reg):
        print(f"{ident}\t{reg[ident][0]}")
    return 0


def cmd_check(args) -> int:
    lines = []
    ok = True
    for name, passed, detail in run_suites():
        ok &= passed
        lines.append(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    report = catalog.cross_validate(4)
    ok &= report.ok
    lines += report.lines()
    lines.append(f"cross-validation: {report.summary()}")
    if args.catalog:
        try:
            doc = document.loads(Path(args.catalog).read_text())
        except (OSError, ValueError) as exc:
            lines.append(f"FAIL catalog file: {exc}")
            ok = False
        else:
            fresh = {e.key for e in catalog.build_catalog(doc.double_curves)}
            stored = {e.key for e in doc.entries}
            stale = document.stale_keys(doc)
            good = stored == fresh and not stale
            ok &= good
            lines.append(
                f"{'PASS' if good else 'FAIL'} catalog file: {len(stored)} entries, expected {len(fresh)}"
            )
            for k in sorted(fresh - stored):
                lines.append(f"  missing: {short_id(k)}")
            for k in sorted(stored - fresh):
                lines.append(f"  unexpected: {short_id(k)}")
            for label in stale:
                lines.append(f"  stale key: {label}")
    lines.append("result: " + ("ok" if ok else "FAILED"))
    print("\n".join(lines))
    return 0 if ok else 1


def _emit(text: str, out: str | None) -> None:
    if not out:
        sys.stdout.write(text)
        return
    path = Path(out)
    base = os.environ.get(OUT_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sphere-morse", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="catalog of structures")
    c.add_argument("--double-curves", type=int, choices=(1, 2), required=True)
    c.add_argument("--budget", type=int, default=4)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--out")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("render", help="DOT diagram of a tree, Reeb graph or structure")
    r.add_argument("target", choices=("tree", "reeb", "structure"))
    r.add_argument("id")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)

    i = sub.add_parser("ids", help="list renderable ids")
    i.add_argument("target", choices=("tree", "reeb", "structure"))
    i.set_defaults(func=cmd_ids)

    k = sub.add_parser("check", help="run the self-checks and cross-validation")
    k.add_argument("--catalog", help="also verify a JSON catalog file")
    k.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", 4) < 2:
        build_parser().error("--budget must be at least 2")
    if getattr(args, "jobs", 1) < 1:
        build_parser().error("--jobs must be positive")
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
