"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from .biquandles import (
    BIQUANDLE_4,
    DIHEDRAL_3,
    coloring_lower_bound,
    count_colorings,
    kishino_family,
    load_table_file,
)
from .bracket import jones, jones_fingerprint
from .bridges import wirtinger_number
from .codes import (
    SignedGaussCode,
    overbridge_count,
    parity_filter,
    parse,
    serialize,
    simplify,
    strands,
    virtualize_remove,
)
from .errors import BridgekitError, InconsistentBounds
from .pipeline import RunConfig, run_dataset


def _read_code(text: str):
    if text == "-":
        text = sys.stdin.read()
    return parse(text)


def _cmd_parse(args) -> int:
    code = _read_code(args.code)
    info = {
        "code": serialize(code),
        "crossings": code.crossings,
        "strands": len(strands(code)) if code.entries else 0,
        "overbridges": overbridge_count(code),
        "planar_parity_ok": parity_filter(code),
    }
    print(json.dumps(info, indent=2))
    return 0


def _cmd_simplify(args) -> int:
    print(serialize(simplify(_read_code(args.code))))
    return 0


def _cmd_wirtinger(args) -> int:
    code = _read_code(args.code)
    w = wirtinger_number(code, args.k_start, args.k_max)
    print("NOT_FOUND" if w is None else w)
    return 0


def _cmd_colorings(args) -> int:
    code = _read_code(args.code)
    if not isinstance(code, SignedGaussCode):
        code = SignedGaussCode(code.entries, tuple([-1] * code.crossings))
        print("note: unsigned input, assuming all crossing signs -1", file=sys.stderr)
    quandles = [load_table_file(p) for p in args.quandle] or [DIHEDRAL_3]
    biquandles = [load_table_file(p) for p in args.biquandle] or [BIQUANDLE_4]
    out = {"quandles": {}, "biquandles": {}}
    for q in quandles:
        cnt = count_colorings(code, q)
        out["quandles"][q.name] = {
            "count": cnt,
            "b1_lower": coloring_lower_bound(cnt, q.order, "quandle"),
        }
    for b in biquandles:
        cnt = count_colorings(code, b)
        out["biquandles"][b.name] = {
            "count": cnt,
            "b2_lower": coloring_lower_bound(cnt, b.order, "biquandle"),
        }
    print(json.dumps(out, indent=2))
    return 0


def _cmd_jones(args) -> int:
    code = _read_code(args.code)
    if not isinstance(code, SignedGaussCode):
        code = SignedGaussCode(code.entries, tuple([-1] * code.crossings))
        print("note: unsigned input, assuming all crossing signs -1", file=sys.stderr)
    print(jones_fingerprint(code))
    return 0


def _cmd_virtualize(args) -> int:
    code = _read_code(args.code)
    ks = [args.k] if args.k else range(1, code.crossings + 1)
    for k in ks:
        print(serialize(virtualize_remove(code, k)))
    return 0


def _cmd_kishino(args) -> int:
    print(serialize(kishino_family(args.m, args.n)))
    return 0


def _cmd_dataset(args) -> int:
    config = RunConfig(
        inputs=args.input,
        output=args.output,
        k_start=args.k_start,
        k_max=args.k_max,
        quandle_files=args.quandle,
        biquandle_files=args.biquandle,
        with_wirtinger=not args.no_wirtinger,
        with_quandle=not args.no_quandle,
        with_biquandle=not args.no_biquandle,
        with_jones=not args.no_jones,
        virtualize=args.virtualize,
        classical_census=args.classical_census,
        dedup=args.dedup,
        jobs=args.jobs,
        resume=args.resume,
    )
    summary = run_dataset(config)
    print(summary.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bridgekit",
        description="Bridge-number bounds, coloring invariants and Jones polynomials for Gauss codes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_code_cmd(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("code", help="Gauss code text, e.g. '-1 2 -3 1 -2 3', optionally '| - - -'; '-' reads stdin")
        sp.set_defaults(fn=fn)
        return sp

    add_code_cmd("parse", _cmd_parse, "validate and normalize a code")
    add_code_cmd("simplify", _cmd_simplify, "greedy kink/slide reduction")

    sp = add_code_cmd("wirtinger", _cmd_wirtinger, "seed-propagation upper bound for the first bridge number")
    sp.add_argument("--k-start", type=int, default=1, choices=(1, 2))
    sp.add_argument("--k-max", type=int, default=None)

    sp = add_code_cmd("colorings", _cmd_colorings, "coloring counts and bridge lower bounds")
    sp.add_argument("--quandle", action="append", default=[], metavar="FILE")
    sp.add_argument("--biquandle", action="append", default=[], metavar="FILE")

    add_code_cmd("jones", _cmd_jones, "Jones polynomial fingerprint")

    sp = add_code_cmd("virtualize", _cmd_virtualize, "remove crossing pairs, one child per crossing")
    sp.add_argument("--k", type=int, default=None, help="only this crossing")

    sp = sub.add_parser("kishino", help="bow-tie family code: m-1 trefoil factors, n bow-tie factors")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.set_defaults(fn=_cmd_kishino)

    sp = sub.add_parser("dataset", help="batch labeling pipeline")
    sp.add_argument("--input", action="append", required=True, metavar="FILE")
    sp.add_argument("--output", required=True, metavar="DIR")
    sp.add_argument("--k-start", type=int, default=1, choices=(1, 2))
    sp.add_argument("--k-max", type=int, default=6)
    sp.add_argument("--quandle", action="append", default=[], metavar="FILE")
    sp.add_argument("--biquandle", action="append", default=[], metavar="FILE")
    sp.add_argument("--no-wirtinger", action="store_true")
    sp.add_argument("--no-quandle", action="store_true")
    sp.add_argument("--no-biquandle", action="store_true")
    sp.add_argument("--no-jones", action="store_true")
    sp.add_argument("--virtualize", action="store_true", help="emit crossing-removal children instead of the inputs")
    sp.add_argument("--classical-census", action="store_true", help="inputs are classical census codes (k_start floor 2, upper 2/3 exact)")
    sp.add_argument("--dedup", choices=("canonical", "jones", "both"), default="both")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--resume", default=None, metavar="CHECKPOINT")
    sp.set_defaults(fn=_cmd_dataset)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InconsistentBounds as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2
    except (BridgekitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
