"""Command-line front end.

Exit codes: 0 on success, 1 when a verification or family check fails,
2 for usage, input and parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from contextlib import contextmanager
from pathlib import Path

from .diagram import TangleDiagram, denominator_closure, numerator_closure
from .fixtures import load_corpus
from .pd import PDSyntaxError, parse
from .report import (
    INVARIANT_COLUMNS, TORUS_COLUMNS, WHITEHEAD_COLUMNS, invariants_row, to_json, write_csv,
)
from .stategraph import state_graph
from .torus import family_part_a
from .twist import tangle_twist_number, tangle_twist_regions, twist_regions
from .verify import SUITES, run_suite, whitehead_rows

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@contextmanager
def _output(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _read_diagram(path: str):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e
    try:
        return parse(text)
    except PDSyntaxError as e:
        raise UsageError(f"{path}: {e}") from e
    except ValueError as e:
        raise UsageError(f"{path}: invalid diagram: {e}") from e


def _print_row(row: dict) -> None:
    for c in INVARIANT_COLUMNS:
        v = row.get(c)
        print(f"{c}: {'-' if v is None else v}")


def cmd_invariants(args) -> int:
    obj = _read_diagram(args.file)
    name = Path(args.file).stem
    if isinstance(obj, TangleDiagram):
        report = {
            "name": name,
            "tangle_tw": tangle_twist_number(obj),
            "numerator": invariants_row(numerator_closure(obj), name + ":N", args.cap),
            "denominator": invariants_row(denominator_closure(obj), name + ":D", args.cap),
        }
        if args.json:
            sys.stdout.write(to_json(report))
        else:
            print(f"tangle_tw: {report['tangle_tw']}")
            for key in ("numerator", "denominator"):
                print(f"[{key}]")
                _print_row(report[key])
        if args.dump_twist:
            for region in tangle_twist_regions(obj):
                print(" ".join(map(str, region)))
        return EXIT_OK

    row = invariants_row(obj, name, args.cap)
    if args.json:
        sys.stdout.write(to_json(row))
    else:
        _print_row(row)
    if args.dump_graph:
        print(state_graph(obj, args.dump_graph).dump().rstrip("\n"))
    if args.dump_twist:
        for region in twist_regions(obj):
            print(" ".join(map(str, region)))
    return EXIT_OK


def cmd_family(args) -> int:
    if args.family == "torus":
        rows = family_part_a(args.q, args.kmax, args.kmin) if args.kmax >= args.kmin else []
        dicts, columns = [r.as_dict() for r in rows], TORUS_COLUMNS
        problems = [f"k={r.k}: {p}" for r in rows for p in r.problems]
    else:
        jones_m = range(1, args.jones_max + 1)
        dicts = whitehead_rows(args.mmax, jones_m) if args.mmax >= 1 else []
        columns = WHITEHEAD_COLUMNS
        problems = [f"m={r['m']}: not B-adequate" for r in dicts if not r["adequate_B"]]
    with _output(args.csv) as out:
        if args.json:
            out.write(to_json([{c: r.get(c) for c in columns} for r in dicts]))
        else:
            write_csv(dicts, columns, out)
    for p in problems:
        print(f"check failed: {p}", file=sys.stderr)
    return EXIT_FAIL if problems else EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    try:
        corpus = load_corpus(args.corpus)
    except (OSError, json.JSONDecodeError, KeyError) as e:
        raise UsageError(f"cannot load corpus: {e}") from e
    t0 = time.perf_counter()
    results = run_suite(args.suite, corpus)
    if args.json:
        sys.stdout.write(to_json({
            "suite": args.suite,
            "passed": all(r.passed for r in results),
            "checks": [r.as_dict(timing=args.timing) for r in results],
        }))
    else:
        for r in results:
            print(r.line())
            if args.verbose:
                for n in r.notes:
                    print(f"  note: {n}")
    if args.timing:
        for r in results:
            print(f"criterion {r.criterion}: {r.elapsed:.2f} s", file=sys.stderr)
        print(f"total: {time.perf_counter() - t0:.2f} s", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tanglebounds",
        description="Knot invariants and crosscap-number bounds for Conway sums of tangles.",
    )
    p.add_argument("--cap", type=int, default=None,
                   help="state-sum crossing cap (overrides TANGLEBOUNDS_CAP)")
    p.add_argument("--seed", type=int, default=None, help="reserved; every computation is deterministic")
    sub = p.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="invariants of one PD file")
    inv.add_argument("file")
    inv.add_argument("--json", action="store_true")
    inv.add_argument("--dump-graph", choices=("A", "B"), help="print the all-A or all-B state graph")
    inv.add_argument("--dump-twist", action="store_true", help="print one twist region per line")
    inv.set_defaults(func=cmd_invariants)

    fam = sub.add_parser("family", help="sweep a generated family")
    fam_sub = fam.add_subparsers(dest="family", required=True)
    tor = fam_sub.add_parser("torus", help="T(2+2qk, q) for k in [kmin, kmax]")
    tor.add_argument("--q", type=int, default=3)
    tor.add_argument("--kmax", type=int, default=10)
    tor.add_argument("--kmin", type=int, default=1)
    wh = fam_sub.add_parser("whitehead", help="negative Whitehead doubles of trefoil sums")
    wh.add_argument("--mmax", type=int, default=8)
    wh.add_argument("--jones-max", type=int, default=2, help="compute Jones for m up to this value")
    for sp in (tor, wh):
        sp.add_argument("--csv", metavar="PATH", help="write CSV here ('-' or omitted: stdout)")
        sp.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
        sp.set_defaults(func=cmd_family)

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("suite", nargs="?", default="all")
    ver.add_argument("--corpus", help="fixture JSON to use instead of the built-in corpus")
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--timing", action="store_true", help="report timings (on stderr unless --json)")
    ver.add_argument("-v", "--verbose", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.cap is not None and args.cap < 0:
        print("tanglebounds: --cap must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    saved = os.environ.get("TANGLEBOUNDS_CAP")
    if args.cap is not None:
        os.environ["TANGLEBOUNDS_CAP"] = str(args.cap)
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"tanglebounds: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        # leave the environment as found when called in-process
        if saved is None:
            os.environ.pop("TANGLEBOUNDS_CAP", None)
        else:
            os.environ["TANGLEBOUNDS_CAP"] = saved


if __name__ == "__main__":
    sys.exit(main())
