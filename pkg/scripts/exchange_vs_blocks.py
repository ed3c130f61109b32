#!/usr/bin/env python3
"""Why a qubit swap defeats the three-block parity code.

The nine-qubit block-parity code corrects every single-qubit Pauli error,
but the exchange of qubits 3 and 4 (straddling two blocks) collides with
phase flips: the verifier pinpoints the offending Gram entries, and the
numerical decomposition shows the corrupted state splitting into half the
original, half a phase-flipped twin, and an untreatable remainder.
"""

from __future__ import annotations

import argparse

from exqec import basic_error_set, shor_code, shor_exchange_demo, verify_kl


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=3)
    args = parser.parse_args()

    code = shor_code()
    print("single-qubit Paulis only:",
          "correctable" if verify_kl(code, basic_error_set(9)).correctable
          else "NOT correctable")

    errors = basic_error_set(9, families=("single_pauli", "exchange"))
    report = verify_kl(code, errors)
    print(f"with all exchanges: correctable = {report.correctable}, "
          f"{len(report.violations)} violations")
    for violation in report.violations[:4]:
        print("  " + violation.describe(report.labels))
    print("  ...")

    print()
    for line in shor_exchange_demo(seed=args.seed, samples=args.samples).to_lines():
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
