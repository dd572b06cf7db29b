"""Command-line surface.

Subcommands: validate, bogomolov, schur, curly, cpcheck, catalog,
reproduce.  Sources are file paths or ``catalog:<key>`` references.

Exit codes form a stable contract:
  0  success
  1  parse error / unknown catalog id
  2  invalid algebra (identity violations) or non-central ideal
  3  route disagreement under --route both
  4  --route hopf requested for a non-nilpotent algebra
  5  reproduce found rows contradicting the expected results
  6  cpcheck certified a non-liftable commuting pair
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalog as catalog_mod
from . import report as report_mod
from .formats import (
    FormatError,
    algebra_to_text,
    dumps_canonical,
    load_algebra,
    report_to_json,
)
from .hopf import hopf_bogomolov, hopf_schur
from .scalars import format_scalar
from .superlie import GradedSubspace, SuperAlgebra, lower_central_series, validate
from .wedge import (
    NotCentralError,
    SaturationConfig,
    bogomolov,
    cp_check_central_extension,
    curly_square,
    exterior_product,
    schur_multiplier,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_DISAGREE = 3
EXIT_NOT_NILPOTENT = 4
EXIT_MISMATCH = 5
EXIT_CP_NO = 6


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_source(source: str) -> SuperAlgebra:
    if source.startswith("catalog:"):
        try:
            algebra = catalog_mod.resolve(source[len("catalog:"):])
        except (catalog_mod.UnknownEntryError, catalog_mod.ParameterError) as exc:
            raise CliFailure(EXIT_PARSE, f"catalog: {exc}")
    else:
        try:
            algebra = load_algebra(source)
        except OSError as exc:
            raise CliFailure(EXIT_PARSE, f"cannot read {source}: {exc}")
        except FormatError as exc:
            raise CliFailure(EXIT_PARSE, f"parse error{exc.location_text()}: {exc}")
    violations = validate(algebra)
    if violations:
        lines = [v.describe(algebra.basis_names) for v in violations]
        raise CliFailure(
            EXIT_INVALID,
            f"invalid algebra {algebra.name}:\n  " + "\n  ".join(lines),
        )
    return algebra


def _cfg(args) -> SaturationConfig:
    return SaturationConfig(
        seed=args.seed, batch=args.batch, stable_rounds=args.stable_rounds
    )


def _add_cfg_flags(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, default=SaturationConfig().seed)
    p.add_argument("--batch", type=int, default=None)
    p.add_argument("--stable-rounds", dest="stable_rounds", type=int, default=3)


def _is_nilpotent(algebra: SuperAlgebra) -> bool:
    return lower_central_series(algebra)[1] is not None


def _print_report(report, algebra):
    d = report.dims
    print(f"algebra          {report.algebra}")
    print(f"route            {report.route}")
    print(f"dim L            ({algebra.even_dim}|{algebra.odd_dim})")
    print(f"dim L^2          {d['derived']}")
    print(f"dim exterior sq  {d['exterior_square']}")
    print(f"dim multiplier   {d['schur']}")
    print(f"dim m0 found     {d['m0_found']}")
    print(f"B0 bound         {d['b0_bound']}")
    print(f"status           {report.status_text()}")
    print(f"witnesses        {len(report.witnesses)}")
    print(f"seed             {report.seed}")
    print(f"rounds stable    {report.rounds_stable}")


def cmd_validate(args) -> int:
    try:
        algebra = load_algebra(args.path)
    except OSError as exc:
        raise CliFailure(EXIT_PARSE, f"cannot read {args.path}: {exc}")
    except FormatError as exc:
        raise CliFailure(EXIT_PARSE, f"parse error{exc.location_text()}: {exc}")
    violations = validate(algebra)
    if violations:
        print(f"invalid algebra {algebra.name}:")
        for v in violations:
            print("  " + v.describe(algebra.basis_names))
        return EXIT_INVALID
    print("OK")
    return EXIT_OK


def cmd_bogomolov(args) -> int:
    algebra = _load_source(args.source)
    cfg = _cfg(args)
    route = args.route
    nil = _is_nilpotent(algebra)
    if route == "hopf" and not nil:
        raise CliFailure(
            EXIT_NOT_NILPOTENT,
            f"{algebra.name} is not nilpotent; the hopf route needs a nilpotent input",
        )
    reports = {}
    if route in ("wedge", "both"):
        reports["wedge"] = bogomolov(algebra, cfg)
    if route == "hopf" or (route == "both" and nil):
        reports["hopf"] = hopf_bogomolov(algebra, cfg)
    shown = reports.get("wedge") or reports["hopf"]
    _print_report(shown, algebra)
    agree = True
    if len(reports) == 2:
        w, h = reports["wedge"], reports["hopf"]
        agree = (
            w.dims["schur"] == h.dims["schur"]
            and w.dims["b0_bound"] == h.dims["b0_bound"]
            and w.status == h.status
        )
        print(f"hopf route       schur={h.dims['schur']} "
              f"B0={h.dims['b0_bound']} {h.status_text()}")
        print(f"routes agree     {'yes' if agree else 'NO'}")
    if args.json:
        if len(reports) == 2:
            payload = {
                "algebra": shown.algebra,
                "route": "both",
                "agree": agree,
                "wedge": report_to_json(reports["wedge"], algebra),
                "hopf": report_to_json(reports["hopf"], algebra),
            }
        else:
            payload = report_to_json(shown, algebra)
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps_canonical(payload))
    if not agree:
        raise CliFailure(EXIT_DISAGREE, "route disagreement: wedge and hopf differ")
    return EXIT_OK


def cmd_schur(args) -> int:
    algebra = _load_source(args.source)
    route = args.route
    nil = _is_nilpotent(algebra)
    if route == "hopf" and not nil:
        raise CliFailure(
            EXIT_NOT_NILPOTENT,
            f"{algebra.name} is not nilpotent; the hopf route needs a nilpotent input",
        )
    dims = {}
    if route in ("wedge", "both"):
        full = GradedSubspace.full(algebra)
        W = exterior_product(algebra, full, full)
        dims["wedge"] = schur_multiplier(W).dim
    if route == "hopf" or (route == "both" and nil):
        dims["hopf"] = hopf_schur(algebra)
    for name, value in dims.items():
        print(f"dim multiplier ({name})  {value}")
    if len(dims) == 2 and dims["wedge"] != dims["hopf"]:
        raise CliFailure(EXIT_DISAGREE, "route disagreement on the multiplier dimension")
    return EXIT_OK


def cmd_curly(args) -> int:
    algebra = _load_source(args.source)
    rep = curly_square(algebra, _cfg(args))
    print(f"algebra          {rep.algebra}")
    print(f"dim curly square {rep.dim}")
    print(f"B0 bound         {rep.b0_bound}")
    print(f"status           {rep.status}")
    return EXIT_OK


def cmd_cpcheck(args) -> int:
    algebra = _load_source(args.source)
    names = list(algebra.basis_names)
    vectors = []
    for sym in args.ideal:
        if sym not in names:
            raise CliFailure(EXIT_PARSE, f"unknown basis symbol {sym!r}")
        vectors.append(algebra.basis_vector(names.index(sym)))
    ideal = GradedSubspace.from_homogeneous_vectors(algebra, vectors)
    try:
        rep = cp_check_central_extension(algebra, ideal, _cfg(args))
    except NotCentralError as exc:
        print(f"not central: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(f"status  {rep.status}")
    if rep.witness is not None:
        x, y, img = rep.witness
        print(f"witness x       ({', '.join(format_scalar(c) for c in x)})")
        print(f"witness y       ({', '.join(format_scalar(c) for c in y)})")
        print(f"bracket(x,y)    ({', '.join(format_scalar(c) for c in img)})")
        return EXIT_CP_NO
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for entry in catalog_mod.entries():
            expected = "B0=0" if entry.expected_trivial else "B0!=0"
            params = ""
            if entry.param_names:
                params = " params(" + ",".join(entry.param_names) + ")"
            note = f"  [{entry.notes}]" if entry.notes else ""
            print(f"{entry.key:42s} {expected}/{entry.source}{params}{note}")
        return EXIT_OK
    # export
    try:
        algebra = catalog_mod.resolve(args.id)
    except (catalog_mod.UnknownEntryError, catalog_mod.ParameterError) as exc:
        raise CliFailure(EXIT_PARSE, f"catalog: {exc}")
    text = algebra_to_text(algebra)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    cfg = _cfg(args)
    rows = report_mod.reproduce_table(
        args.table, cfg, max_m=args.max_m, max_n=args.max_n
    )
    print(report_mod.rows_markdown(rows))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report_mod.rows_json(rows, args.table))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report_mod.rows_csv(rows))
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
        path = os.path.join(args.figures, f"reproduce_{args.table}.png")
        report_mod.render_figure(rows, args.table, path)
        print(f"figure written to {path}")
    bad = [r for r in rows if not r.ok]
    if bad:
        print(f"{len(bad)} mismatching row(s):", file=sys.stderr)
        for r in bad:
            print(f"  {r.key} {r.params_text} -> {r.report.status_text()}",
                  file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="superwedge",
        description="Exact Schur and Bogomolov multipliers of Lie superalgebras",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an algebra file against the identities")
    p.add_argument("path")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("bogomolov", help="compute the Bogomolov multiplier report")
    p.add_argument("source", help="file path or catalog:<key>")
    p.add_argument("--route", choices=("wedge", "hopf", "both"), default="wedge")
    p.add_argument("--json", default=None, help="write the machine report here")
    _add_cfg_flags(p)
    p.set_defaults(fn=cmd_bogomolov)

    p = sub.add_parser("schur", help="dimension of the Schur multiplier")
    p.add_argument("source")
    p.add_argument("--route", choices=("wedge", "hopf", "both"), default="wedge")
    p.set_defaults(fn=cmd_schur)

    p = sub.add_parser("curly", help="dimension of the curly exterior square")
    p.add_argument("source")
    _add_cfg_flags(p)
    p.set_defaults(fn=cmd_curly)

    p = sub.add_parser("cpcheck", help="commutativity-preserving extension check")
    p.add_argument("source")
    p.add_argument("--ideal", nargs="+", required=True,
                   help="basis symbols spanning the central ideal")
    _add_cfg_flags(p)
    p.set_defaults(fn=cmd_cpcheck)

    p = sub.add_parser("catalog", help="list or export builtin algebras")
    csub = p.add_subparsers(dest="action", required=True)
    pl = csub.add_parser("list")
    pl.set_defaults(fn=cmd_catalog, action="list")
    pe = csub.add_parser("export")
    pe.add_argument("id")
    pe.add_argument("--out", default=None)
    pe.set_defaults(fn=cmd_catalog, action="export")

    p = sub.add_parser("reproduce", help="recompute a whole family table")
    p.add_argument("table", choices=report_mod.TABLES)
    p.add_argument("--max-m", dest="max_m", type=int, default=2)
    p.add_argument("--max-n", dest="max_n", type=int, default=2)
    p.add_argument("--json", default=None)
    p.add_argument("--csv", default=None)
    p.add_argument("--figures", default=None,
                   help="directory for rendered summary figures")
    _add_cfg_flags(p)
    p.set_defaults(fn=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliFailure as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
