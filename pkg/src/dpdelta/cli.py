"""Command-line front end.

Subcommands: list / compute / dump-profile / table / verify.  Exit codes:
0 success, 1 verification failure, 2 usage or lookup error.  A catalog
file or directory can replace the builtins via --catalog or the
DELTA_CATALOG environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .data import builtin_models
from .delta import ERRATUM, FAIL, global_delta, local_delta, verify_table
from .invariants import flag_profile, s_divisor
from .model import CatalogError, SurfaceModel, load_catalog
from .rational import render_rational

FORMATS = ("plain", "markdown", "json")


class UsageError(Exception):
    pass


def _load_models(args) -> list[SurfaceModel]:
    path = args.catalog or os.environ.get("DELTA_CATALOG")
    if not path:
        return builtin_models()
    try:
        return load_catalog(path)
    except (CatalogError, OSError) as exc:
        raise UsageError(f"cannot load catalog {path}: {exc}")


def _find(models: list[SurfaceModel], name: str) -> SurfaceModel:
    for m in models:
        if m.name == name:
            return m
    raise UsageError(f"unknown model {name!r}")


def _emit_table(rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
        return
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns}
    if fmt == "markdown":
        print("| " + " | ".join(c.ljust(widths[c]) for c in columns) + " |")
        print("|" + "|".join("-" * (widths[c] + 2) for c in columns) + "|")
        for r in rows:
            print("| " + " | ".join(str(r[c]).ljust(widths[c]) for c in columns) + " |")
    else:
        print("  ".join(c.ljust(widths[c]) for c in columns))
        for r in rows:
            print("  ".join(str(r[c]).ljust(widths[c]) for c in columns))


def cmd_list(args) -> int:
    models = [m for m in _load_models(args) if m.role == "base"]
    if args.degree is not None:
        models = [m for m in models if m.degree == args.degree]
    rows = [
        {
            "model": m.name,
            "degree": render_rational(m.degree),
            "singularities": m.singularities or "smooth",
            "lines": m.line_count(),
            "expected_delta": render_rational(m.expected_global_delta)
            if m.expected_global_delta is not None
            else "",
        }
        for m in sorted(models, key=lambda m: (-m.degree, m.name))
    ]
    _emit_table(rows, ["model", "degree", "singularities", "lines", "expected_delta"], args.format)
    return 0


def cmd_compute(args) -> int:
    models = _load_models(args)
    catalog = {m.name: m for m in models}
    model = _find(models, args.model)
    if args.point:
        for pt in model.points:
            if pt.label == args.point:
                result = local_delta(model, pt)
                break
        else:
            raise UsageError(f"model {model.name!r} has no point {args.point!r}")
    else:
        result = global_delta(model, catalog)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "model": model.name,
                    "point": args.point,
                    "lower": render_rational(result.lower),
                    "upper": render_rational(result.upper),
                    "exact": result.exact,
                    "witness": result.witness,
                }
            )
        )
    else:
        print(result.describe() + ("" if args.point else f"  [witness {result.witness}]"))
    return 0


def cmd_dump_profile(args) -> int:
    models = _load_models(args)
    model = _find(models, args.model)
    if args.flag not in model.curve_names():
        raise UsageError(f"model {model.name!r} has no flag {args.flag!r}")
    profile = flag_profile(model, args.flag)
    s_val = s_divisor(model, args.flag)
    if args.format == "json":
        out = {
            "model": model.name,
            "flag": args.flag,
            "tau": render_rational(profile.tau),
            "S": render_rational(s_val),
            "segments": [
                {
                    "interval": [render_rational(seg.v_lo), render_rational(seg.v_hi)],
                    "support": {
                        model.curves[i - 1].name: str(seg.coeff[i]) for i in seg.support
                    },
                    "volume": str(seg.psq),
                }
                for seg in profile.segments
            ],
        }
        print(json.dumps(out, indent=2))
        return 0
    print(f"{model.name}, flag {args.flag}: tau = {render_rational(profile.tau)}, "
          f"S = {render_rational(s_val)}")
    for seg in profile.segments:
        names = {model.curves[i - 1].name: str(seg.coeff[i]) for i in seg.support}
        support = ", ".join(f"{n}: {c}" for n, c in names.items()) or "(empty)"
        print(
            f"  [{render_rational(seg.v_lo)}, {render_rational(seg.v_hi)}]  "
            f"volume = {seg.psq}  negative part: {support}"
        )
    return 0


def cmd_table(args) -> int:
    models = [m for m in _load_models(args) if m.role == "base"]
    catalog = {m.name: m for m in _load_models(args)}
    if args.degree is not None:
        models = [m for m in models if m.degree == args.degree]
    rows = []
    for m in sorted(models, key=lambda m: (-m.degree, m.name)):
        result = global_delta(m, catalog)
        rows.append(
            {
                "degree": render_rational(m.degree),
                "lines": m.line_count(),
                "singularities": m.singularities or "smooth",
                "delta": result.describe(),
                "model": m.name,
            }
        )
    _emit_table(rows, ["degree", "lines", "singularities", "delta", "model"], args.format)
    return 0


def cmd_verify(args) -> int:
    models = _load_models(args)
    report = verify_table(models)  # validates structure, then recomputes
    counts = report.counts()
    if args.format == "json":
        print(
            json.dumps(
                {
                    "rows": [r.__dict__ for r in report.rows],
                    "counts": counts,
                    "ok": report.ok,
                },
                indent=2,
            )
        )
    else:
        for r in report.rows:
            if r.status == FAIL or args.all or r.status == ERRATUM:
                line = f"{r.status:8s} {r.model:28s} {r.item:16s} expected {r.expected}  computed {r.computed}"
                if r.note:
                    line += f"  ({r.note})"
                print(line)
        print(
            f"verify: {counts.get('PASS', 0)} pass, {counts.get('FAIL', 0)} fail, "
            f"{counts.get('ERRATUM', 0)} errata over {len(models)} models"
        )
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpdelta",
        description="Exact delta-invariants of Du Val del Pezzo surfaces of degree >= 4",
    )
    parser.add_argument("--catalog", help="path to a catalog JSON file or directory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list base models")
    p.add_argument("--degree", type=int)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("compute", help="compute a global or local delta")
    p.add_argument("model")
    p.add_argument("--point", help="point label for a local value")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("dump-profile", help="print the segment structure of a flag ray")
    p.add_argument("model")
    p.add_argument("flag")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_dump_profile)

    p = sub.add_parser("table", help="recompute the delta table")
    p.add_argument("--degree", type=int)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="validate the catalog and check all expectations")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--all", action="store_true", help="print passing rows too")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
