#!/usr/bin/env python3
"""Collect evidence for the conjectured identity-pattern maxima.

For each (n, k) in the requested grid, reports the conjectured value
n^2 - (2k-3)n - (2k - k^2), the construction and recurrence lower bounds,
the simple upper bound n^2 - (k-1)n, and, where the exact search finishes
within its budget, the certified maximum. A "verdict" column states the
only claims the data supports: "exact-match" when a certified maximum
equals the conjectured value, "exact-mismatch" if it ever differs (none
known), otherwise "open".

Usage:
    python3 scripts/conjecture_evidence.py --k 4 5 --n-max 8 \
        --node-budget 20000000 [--search-cap 49] [--cache results.json]
"""

import argparse
import csv
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mforce import (  # noqa: E402
    ResultsCache,
    SearchConfig,
    conjectured_max_identity,
    extremal_identity_witness,
    identity,
    is_strongly_forcing,
    recurrence_lower_bound,
    search_max,
    upper_bound_simple,
)
from mforce.verification import conjecture_table, exact_max_identity  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=int, nargs="+", default=[4, 5, 6])
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--node-budget", type=int, default=8_000_000)
    parser.add_argument("--search-cap", type=int, default=36,
                        help="run exact search only when n*n <= this")
    parser.add_argument("--cache", help="JSON results cache path")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    args = parser.parse_args()

    cache = ResultsCache(args.cache) if args.cache else None
    table = conjecture_table(args.n_max, max(args.k))
    records = []
    for k in sorted(args.k):
        for n in range(k, args.n_max + 1):
            conj = conjectured_max_identity(n, k)
            witness = extremal_identity_witness(n, k)
            assert witness.ones_count() == conj
            assert is_strongly_forcing(witness, identity(k))

            rec = recurrence_lower_bound(n, k, table)
            ub = upper_bound_simple(n, k)
            exact = exact_max_identity(n, k)
            searched = None
            if exact is None and n * n <= args.search_cap:
                out = search_max(
                    n, identity(k),
                    SearchConfig(node_budget=args.node_budget),
                    cache,
                )
                searched = out.status
                if out.status == "exact":
                    exact = out.best_ones

            if exact is None:
                verdict = "open"
            elif exact == conj:
                verdict = "exact-match"
            else:
                verdict = "exact-mismatch"
            records.append({
                "n": n,
                "k": k,
                "conjectured": conj,
                "construction_lb": conj,
                "recurrence_lb": rec,
                "upper_bound": ub,
                "exact": exact,
                "search_status": searched,
                "verdict": verdict,
            })

    if args.format == "json":
        print(json.dumps(records, indent=2))
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(records[0]))
        writer.writeheader()
        writer.writerows(records)
    mismatches = [r for r in records if r["verdict"] == "exact-mismatch"]
    matches = sum(1 for r in records if r["verdict"] == "exact-match")
    print(
        f"# {len(records)} instances: {matches} certified matches, "
        f"{len(mismatches)} mismatches, "
        f"{len(records) - matches - len(mismatches)} open",
        file=sys.stderr,
    )
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
