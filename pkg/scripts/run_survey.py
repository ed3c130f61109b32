#!/usr/bin/env python3
"""Sweep all complement-dual weight patterns for an n-qubit register.

Each pattern assigns Hamming-weight supports to the two codewords; the
solver decides feasibility exactly where it can (sign-definite
certificates, linear systems in the squared coefficients) and by verified
grid search otherwise.  Feasible rows mean a genuine correctable code:
every one has been re-checked through the full verifier.
"""

from __future__ import annotations

import argparse

from exqec import survey_patterns


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7)
    parser.add_argument("--max-weights", type=int, default=3)
    parser.add_argument(
        "--families", default="single_pauli",
        help="error families joined by '+', e.g. single_pauli+exchange",
    )
    parser.add_argument("--verbose", action="store_true",
                        help="print full solver notes per pattern")
    args = parser.parse_args()

    families = tuple(f for f in args.families.split("+") if f)
    results = survey_patterns(args.n, max_weights=args.max_weights, families=families)
    feasible = 0
    for result in results:
        feasible += result.feasible
        mark = "FEASIBLE" if result.feasible else "infeasible"
        print(f"{result.pattern.describe():48} {mark:10} [{result.method}]")
        if args.verbose:
            for line in result.to_lines():
                print("    " + line)
    print(f"\n{len(results)} patterns, {feasible} feasible")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
