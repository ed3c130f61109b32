#!/usr/bin/env python3
"""End-to-end tour of the 9-qubit dual-orbit code.

Verifies correctability against the identity, all 36 exchanges and all 27
single-qubit Paulis, prints the block structure of the D matrix, scans for
stabilizers (there are none), and runs one corrupt-and-recover round trip.
"""

from __future__ import annotations

import argparse

import numpy as np

from exqec import (
    basic_error_set,
    build_recovery,
    d_blocks,
    parse_error_ops,
    ruskai9_code,
    stabilizer_scan,
    verify_kl,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--error", default="X5", help="operator to corrupt with")
    args = parser.parse_args()

    code = ruskai9_code()
    errors = basic_error_set(9, families=("single_pauli", "exchange"))

    report = verify_kl(code, errors)
    print(f"correctable: {report.correctable}")
    print(f"errors checked: {len(errors)} (exact arithmetic, tolerance 0)")
    print(f"D rank: {report.rank} -> protects {report.dimension_used} of "
          f"{report.dimension_total} dimensions")
    for line in d_blocks(report.d_matrix).to_lines():
        print("  " + line)

    scan = stabilizer_scan(code)
    print(f"stabilizer scan: {scan.scanned} classes, "
          f"{len(scan.findings)} findings -> "
          f"{'additive' if scan.is_nontrivially_stabilized else 'not additive'}")

    recovery = build_recovery(code, errors, report.d_matrix)
    encoded = (code.words[0] + code.words[1].scaled(3)).to_float()
    (op,) = parse_error_ops(args.error, 9)
    corrupted = op.apply(encoded)
    fidelity = recovery.fidelity(encoded, corrupted)
    ideal = encoded.dense / np.linalg.norm(encoded.dense)
    overlap = abs(np.vdot(ideal, recovery.recover(corrupted).dense))
    print(f"round trip through {op.label()}: fidelity {fidelity:.15f}, "
          f"overlap {overlap:.15f}")
    return 0 if report.correctable else 1


if __name__ == "__main__":
    raise SystemExit(main())
