"""Command line front end: mforce <min|check|construct|search|verify>.

Patterns are given as built-in names (i2, h2, i3, b3, c3, d3, e3, h3, i4,
perm:2413, ...), as paths to matrix text files, or as '-' for stdin. All
user-facing indices are 1-based. Exit codes: 0 success (and "yes" for
checks, all-pass for suites), 1 check answered "no" or a suite row failed,
2 invalid input or precondition.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bitmatrix import BitMatrix, MatrixFormatError, direct_sum, make, parse, serialize
from .forcing import (
    core,
    corner_functions,
    is_forcing,
    min_ones,
    minimal_forcing,
    minimal_forcing_from_corners,
)
from .patterns import named
from .strong_forcing import (
    ResultsCache,
    SearchConfig,
    extremal_123_witness,
    extremal_132_witness,
    extremal_2x2,
    extremal_identity_witness,
    find_witness,
    is_strongly_forcing,
    linear_zero_construction,
    search_max,
    thread_cap,
)
from .verification import FAIL, run_suite


class CliError(Exception):
    """Invalid invocation or input; maps to exit code 2."""


def load_pattern(spec: str) -> BitMatrix:
    """Resolve a pattern argument: built-in name, then file path, then stdin."""
    try:
        return named(spec)
    except ValueError:
        pass
    if spec == "-":
        return parse(sys.stdin.read())
    path = Path(spec)
    if not path.exists():
        raise CliError(
            f"pattern {spec!r} is neither a built-in name nor an existing file"
        )
    return parse(path.read_text())


def _report(command: str, inputs: dict, outputs: dict, passed: bool, started: float) -> str:
    report = {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "passed": passed,
        "timing_ms": int((time.monotonic() - started) * 1000),
    }
    return json.dumps(report, indent=2, sort_keys=True)


def cmd_min(args: argparse.Namespace) -> int:
    started = time.monotonic()
    pattern = load_pattern(args.pattern)
    result = min_ones(args.m, args.n, pattern)
    outputs: dict = {"count": result.value, "method": result.method}
    lines = []
    if args.emit in ("count", "both"):
        lines.append(f"count {result.value}")
        lines.append(f"method {result.method}")
    if args.emit in ("matrix", "both"):
        matrix = minimal_forcing(args.m, args.n, pattern)
        outputs["matrix"] = serialize(matrix)
        lines.append(serialize(matrix).rstrip("\n"))
    if args.explain:
        corners = corner_functions(pattern)
        borders = core(pattern)
        outputs["corners"] = corners.to_json_dict()
        outputs["core"] = borders.to_json_dict()
        lines.append(
            "corners nw=%d sw=%d ne=%d se=%d"
            % (len(corners.nw), len(corners.sw), len(corners.ne), len(corners.se))
        )
        lines.append(
            "core top=%d bottom=%d left=%d right=%d"
            % (borders.top_zero_rows, borders.bottom_zero_rows,
               borders.left_zero_cols, borders.right_zero_cols)
        )
    if args.format == "json":
        print(_report(
            "min",
            {"m": args.m, "n": args.n, "pattern": args.pattern},
            outputs, True, started,
        ))
    else:
        print("\n".join(lines))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    started = time.monotonic()
    ambient = parse(Path(args.ambient).read_text()) if args.ambient != "-" else parse(sys.stdin.read())
    pattern = load_pattern(args.pattern)
    if args.kind == "forcing":
        verdict = is_forcing(ambient, pattern)
        outputs: dict = {"forcing": verdict}
    else:
        verdict = is_strongly_forcing(ambient, pattern)
        outputs = {"strongly_forcing": verdict}
        if args.witness:
            embeddings = []
            for pos in ambient.iter_ones():
                witness = find_witness(ambient, pattern, pos)
                embeddings.append({
                    "entry": [pos.row + 1, pos.col + 1],
                    "witness": witness.to_json_dict() if witness else None,
                })
            outputs["witnesses"] = embeddings
    if args.format == "json":
        print(_report(
            "check",
            {"kind": args.kind, "ambient": args.ambient, "pattern": args.pattern},
            outputs, verdict, started,
        ))
    else:
        print("yes" if verdict else "no")
        if args.kind == "strong" and args.witness:
            for item in outputs["witnesses"]:
                entry = item["entry"]
                if item["witness"] is None:
                    print(f"({entry[0]},{entry[1]}) uncovered")
                else:
                    rows = ",".join(map(str, item["witness"]["rows"]))
                    cols = ",".join(map(str, item["witness"]["cols"]))
                    print(f"({entry[0]},{entry[1]}) rows [{rows}] cols [{cols}]")
    return 0 if verdict else 1


def _identity_witness_block(n: int, k: int) -> BitMatrix:
    if k == 1:
        return make(n, n, 1)
    return extremal_identity_witness(n, k)


def cmd_construct(args: argparse.Namespace) -> int:
    which = args.which

    def need(name: str):
        value = getattr(args, name.replace("-", "_"), None)
        if value is None:
            raise CliError(f"construct {which} requires --{name}")
        return value

    if which == "a-mnq":
        matrix = minimal_forcing_from_corners(need("m"), need("n"), load_pattern(need("pattern")))
    elif which == "s-n":
        matrix = extremal_123_witness(need("n"))
    elif which == "t-n":
        matrix = extremal_132_witness(need("n"))
    elif which == "s-nk":
        matrix = extremal_identity_witness(need("n"), need("k"))
    elif which == "linear-zero":
        matrix = linear_zero_construction(need("m"), need("n"), load_pattern(need("pattern")))
    elif which == "extremal-2x2":
        matrix = extremal_2x2(need("n"), args.variant)
    else:
        matrix = direct_sum(
            _identity_witness_block(need("n1"), need("k1")),
            _identity_witness_block(need("n2"), need("k2")),
        )
    text = serialize(matrix)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    pattern = load_pattern(args.pattern)
    thread_cap()  # validate MFORCE_THREADS early; the search runs one worker
    config = SearchConfig(
        node_budget=args.node_budget,
        time_budget=args.time_budget,
        use_dihedral_reduction=args.dihedral_reduction,
        enumerate_all_extremal=args.all_extremal,
    )
    cache = ResultsCache(args.cache) if args.cache else None
    outcome = search_max(args.n, pattern, config, cache)
    print(json.dumps(outcome.to_json_dict(), indent=2, sort_keys=True))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.monotonic()
    rows = run_suite(args.suite, n_max=args.n_max, k_max=args.k_max)
    failed = sum(1 for row in rows if row.status == FAIL)
    if args.format == "json":
        print(_report(
            "verify",
            {"suite": args.suite, "n_max": args.n_max, "k_max": args.k_max},
            {
                "rows": [row.to_json_dict() for row in rows],
                "failed": failed,
                "total": len(rows),
            },
            failed == 0, started,
        ))
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["theorem_id", "instance", "expected", "actual", "status", "millis"])
        for row in rows:
            writer.writerow([
                row.theorem_id, row.instance, row.expected, row.actual,
                row.status, row.millis,
            ])
        sys.stdout.write(buffer.getvalue())
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mforce",
        description="Extremal pattern-forcing computations on (0,1)-matrices.",
    )
    parser.add_argument("--version", action="version", version=f"mforce {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_min = sub.add_parser("min", help="minimum ones for a forcing matrix")
    p_min.add_argument("--m", type=int, required=True)
    p_min.add_argument("--n", type=int, required=True)
    p_min.add_argument("--pattern", required=True)
    p_min.add_argument("--emit", choices=("count", "matrix", "both"), default="count")
    p_min.add_argument("--format", choices=("text", "json"), default="text")
    p_min.add_argument("--explain", action="store_true",
                       help="also report corner cardinalities and core offsets")
    p_min.set_defaults(func=cmd_min)

    p_check = sub.add_parser("check", help="test the forcing or strong-forcing property")
    p_check.add_argument("kind", choices=("forcing", "strong"))
    p_check.add_argument("--ambient", required=True, help="matrix file, or - for stdin")
    p_check.add_argument("--pattern", required=True)
    p_check.add_argument("--witness", action="store_true",
                         help="with strong: emit one embedding per 1-entry")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=cmd_check)

    p_construct = sub.add_parser("construct", help="emit a named construction")
    p_construct.add_argument(
        "which",
        choices=("a-mnq", "s-n", "t-n", "s-nk", "linear-zero", "extremal-2x2", "block"),
    )
    p_construct.add_argument("--m", type=int)
    p_construct.add_argument("--n", type=int)
    p_construct.add_argument("--k", type=int)
    p_construct.add_argument("--pattern")
    p_construct.add_argument("--variant", choices=("i2", "h2"), default="i2")
    p_construct.add_argument("--n1", type=int)
    p_construct.add_argument("--k1", type=int)
    p_construct.add_argument("--n2", type=int)
    p_construct.add_argument("--k2", type=int)
    p_construct.add_argument("--out", help="write the matrix here instead of stdout")
    p_construct.set_defaults(func=cmd_construct)

    p_search = sub.add_parser("search", help="exact maximum ones for strong forcing")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--pattern", required=True)
    p_search.add_argument("--node-budget", type=int)
    p_search.add_argument("--time-budget", type=float, help="seconds")
    p_search.add_argument("--all-extremal", action="store_true",
                          help="collect the whole maximum level set")
    p_search.add_argument("--dihedral-reduction", action="store_true",
                          help="search the canonical pattern and map witnesses back")
    p_search.add_argument("--cache", help="JSON results cache path")
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument(
        "--suite", required=True,
        choices=("lemma21", "formulas", "perm-bounds", "2x2", "3x3", "dihedral", "conjecture"),
    )
    p_verify.add_argument("--n-max", type=int)
    p_verify.add_argument("--k-max", type=int)
    p_verify.add_argument("--format", choices=("csv", "json"), default="csv")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, MatrixFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
