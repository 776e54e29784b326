"""Command-line front end.

Exit codes: 0 on success, 1 when a verification check fails or a
counterexample is found, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, formats, geometry, rook
from .enumerate import COLLECTION, POLYOMINO, count_shapes, default_jobs, enumerate_shapes
from .errors import CellRookError, CounterexampleFound, ParseError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(CellRookError):
    pass


def _load(args) -> geometry.CellCollection:
    src = args.shape
    fmt = args.format
    if src in (None, "-"):
        return formats.parse_shape(sys.stdin.read(), fmt)
    try:
        return formats.read_shape(src, fmt)
    except OSError as exc:
        raise UsageError(f"cannot read {src}: {exc.strerror}") from exc


def _cell(c) -> str:
    return f"({c[0]},{c[1]})"


def cmd_show(args, out):
    P = _load(args)
    if args.emit != "structure":
        out.write(formats.dump_shape(P, args.emit))
        return EXIT_OK
    out.write(formats.to_text(P))
    out.write(f"rank {P.rank}, bounding rectangle {P.width}x{P.height}\n")
    horizontal, vertical = geometry.runs(P)
    out.write(f"rows ({len(horizontal)}):\n")
    for r in horizontal:
        out.write(f"  h{r.id}: {_cell(r.anchor)} length {r.length}\n")
    out.write(f"columns ({len(vertical)}):\n")
    for r in vertical:
        out.write(f"  v{r.id}: {_cell(r.anchor)} length {r.length}\n")
    out.write(f"maximal rectangles ({len(P.maximal_rectangles)}):\n")
    for i, (r, res) in enumerate(zip(P.maximal_rectangles, P.residues)):
        body = " ".join(_cell(c) for c in sorted(res.cells)) or "-"
        out.write(f"  B{i}: {r} {r.width}x{r.height}; residue {body}\n")
    out.write("stable squares:\n")
    for i, g in geometry.stable_squares(P):
        if g is None:
            out.write(f"  B{i}: residue is not a grid\n")
        else:
            kind = "square" if g.is_square else "not square"
            out.write(f"  B{i}: {g.width}x{g.height} ({kind})\n")
    return EXIT_OK


def cmd_poly(args, out):
    p = rook.switching_polynomial(_load(args))
    out.write((json.dumps(p.to_list()) if args.json else str(p)) + "\n")
    return EXIT_OK


def cmd_stable(args, out):
    ok, witness = geometry.is_domino_stable(_load(args), args.alignment)
    out.write("true\n" if ok else f"false\n{witness}\n")
    return EXIT_OK


def cmd_rook_number(args, out):
    out.write(f"{rook.rook_number(_load(args))}\n")
    return EXIT_OK


def cmd_classes(args, out):
    P = _load(args)
    out.write(f"{rook.class_count(P, args.k)}\n")
    return EXIT_OK


def cmd_verify(args, out):
    report = analysis.verify(_load(args), args.alignment)
    if args.json:
        out.write(report.to_json() + "\n")
    else:
        out.write(f"id {report.id}  rank {report.rank}\n")
        out.write(f"polynomial {rook.SwitchingPolynomial(report.poly)}\n")
        out.write(f"domino-stable {str(report.stable).lower()}  "
                  f"palindromic {str(report.palindromic).lower()}\n")
        for name in analysis.CHECKS:
            status = report.checks.get(name, analysis.SKIPPED)
            reason = report.reasons.get(name, "")
            out.write(f"  {name:<20} {status}" + (f"  ({reason})" if reason else "") + "\n")
    return EXIT_FAIL if report.failed else EXIT_OK


def cmd_enumerate(args, out):
    if args.emit == "count":
        out.write(f"{count_shapes(args.rank, args.universe, args.jobs)}\n")
        return EXIT_OK
    for i, P in enumerate(enumerate_shapes(args.rank, args.universe, args.jobs)):
        if args.emit == "json":
            out.write(formats.to_json(P) + "\n")
        else:
            out.write(f"; {args.universe} rank {args.rank} #{i}\n")
            out.write(formats.to_text(P))
    return EXIT_OK


def cmd_corpus_verify(args, out):
    lo = args.min_rank if args.min_rank is not None else args.rank
    if lo > args.rank:
        raise UsageError("--min-rank exceeds --rank")

    def shapes():
        for n in range(lo, args.rank + 1):
            yield from enumerate_shapes(n, args.universe)

    sink = open(args.reports, "w") if args.reports else None
    try:
        on_report = (lambda r: sink.write(r.to_json() + "\n")) if sink else None
        agg = analysis.verify_corpus(
            shapes(), alignment=args.alignment, jobs=args.jobs,
            keep_going=args.keep_going, audit_alignment=args.audit_alignment,
            on_report=on_report)
    except CounterexampleFound as exc:
        out.write(f"counterexample {exc.report.id}: {', '.join(exc.report.failed)}\n")
        out.write(exc.shape)
        return EXIT_FAIL
    finally:
        if sink:
            sink.close()
    out.write(json.dumps(agg.to_dict(), indent=2) + "\n")
    return EXIT_FAIL if agg.failures else EXIT_OK


def _add_shape_args(p):
    p.add_argument("shape", nargs="?", help="shape file (default: stdin)")
    p.add_argument("--format", choices=formats.FORMATS,
                   help="input format (default: by extension, then by content)")


def _add_alignment(p):
    p.add_argument("--alignment", choices=[geometry.ALIGN_RUN, geometry.ALIGN_COORDINATE],
                   default=geometry.ALIGN_RUN,
                   help="what counts as horizontal/vertical position (default: run)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellrook",
        description="Switching rook polynomials and domino-stability of collections of cells.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("show", help="print the grid and derived structure")
    _add_shape_args(p)
    p.add_argument("--emit", choices=["structure", *formats.FORMATS], default="structure")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("poly", help="print the switching rook polynomial")
    _add_shape_args(p)
    p.add_argument("--json", action="store_true", help="coefficients as a JSON array")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("stable", help="decide domino-stability")
    _add_shape_args(p)
    _add_alignment(p)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("rook-number", help="print the rook number")
    _add_shape_args(p)
    p.set_defaults(func=cmd_rook_number)

    p = sub.add_parser("classes", help="count switch classes of k-rook configurations")
    _add_shape_args(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("verify", help="run every check on one shape")
    _add_shape_args(p)
    _add_alignment(p)
    p.add_argument("--json", action="store_true", help="emit the report as one JSON line")
    p.set_defaults(func=cmd_verify)

    universes = [POLYOMINO, COLLECTION]
    p = sub.add_parser("enumerate", help="list or count free shapes of a rank")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--universe", choices=universes, default=POLYOMINO)
    p.add_argument("--emit", choices=["text", "json", "count"], default="text")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("corpus-verify", help="verify every shape of a universe")
    p.add_argument("--rank", type=int, required=True, help="largest rank")
    p.add_argument("--min-rank", type=int, help="smallest rank (default: --rank)")
    p.add_argument("--universe", choices=universes, default=POLYOMINO)
    p.add_argument("--jobs", type=int, default=default_jobs())
    _add_alignment(p)
    p.add_argument("--keep-going", action="store_true", help="collect all counterexamples")
    p.add_argument("--audit-alignment", action="store_true",
                   help="also report shapes where the two alignment modes disagree")
    p.add_argument("--reports", metavar="PATH", help="write per-shape JSON lines here")
    p.set_defaults(func=cmd_corpus_verify)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ParseError, UsageError) as exc:
        print(f"cellrook: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CellRookError as exc:
        print(f"cellrook: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
