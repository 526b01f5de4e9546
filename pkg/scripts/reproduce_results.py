#!/usr/bin/env python3
"""Run every verification suite and print one consolidated results table.

Each row replays one exact claim (a closed form, an extremal value, a
symmetry transfer) against independent recomputation. Statuses: pass, fail,
open (reported evidence without an exactness claim). Exit code 1 if any row
fails.

Usage:
    python3 scripts/reproduce_results.py [--format csv|json] [--suite NAME ...]
"""

import argparse
import csv
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mforce.verification import SUITES, run_suite  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--suite", action="append", choices=sorted(SUITES),
                        help="run only these suites (repeatable); default all")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    args = parser.parse_args()

    names = args.suite or sorted(SUITES)
    started = time.monotonic()
    rows = []
    for name in names:
        for row in run_suite(name):
            rows.append((name, row))

    failed = sum(1 for _, row in rows if row.status == "fail")
    opened = sum(1 for _, row in rows if row.status == "open")

    if args.format == "json":
        print(json.dumps({
            "suites": names,
            "rows": [dict(suite=name, **row.to_json_dict()) for name, row in rows],
            "failed": failed,
            "open": opened,
            "total": len(rows),
            "timing_ms": int((time.monotonic() - started) * 1000),
        }, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["suite", "theorem_id", "instance", "expected",
                         "actual", "status", "millis"])
        for name, row in rows:
            writer.writerow([name, row.theorem_id, row.instance, row.expected,
                             row.actual, row.status, row.millis])
        print(
            f"# {len(rows)} rows: {len(rows) - failed - opened} pass, "
            f"{failed} fail, {opened} open in "
            f"{time.monotonic() - started:.1f}s",
            file=sys.stderr,
        )
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
