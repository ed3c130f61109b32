from __future__ import annotations

import re

import pytest

from exqec import (
    basic_error_set,
    five_qubit_code,
    repetition3,
    ruskai9_code,
    shor_code,
    verify_kl,
)


@pytest.fixture(scope="session")
def ruskai9():
    return ruskai9_code()


@pytest.fixture(scope="session")
def shor9():
    return shor_code()


@pytest.fixture(scope="session")
def rep3():
    return repetition3()


@pytest.fixture(scope="session")
def five_qubit():
    return five_qubit_code()


@pytest.fixture(scope="session")
def full_error_set_9():
    """Identity, all 36 exchanges, all 27 single Paulis on 9 qubits."""
    return basic_error_set(9, families=("single_pauli", "exchange"))


@pytest.fixture(scope="session")
def pauli_error_set_9():
    return basic_error_set(9, families=("single_pauli",))


@pytest.fixture(scope="session")
def ruskai9_report(ruskai9, full_error_set_9):
    """The expensive full verification, shared across the suite."""
    return verify_kl(ruskai9, full_error_set_9)


_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)([a-z]?)_(\w+)")

_VERDICTS = {
    "passed": "PASS",
    "failed": "FAIL",
    "error": "FAIL (error)",
    "xfailed": "FAIL (expected, documented)",
    "xpassed": "UNEXPECTED PASS (xfail gone stale)",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, printed at the end."""
    entries = []
    for status, verdict in _VERDICTS.items():
        for report in terminalreporter.stats.get(status, []):
            m = _CRITERION.search(report.nodeid)
            if m is None:
                continue
            num, suffix, name = int(m.group(1)), m.group(2), m.group(3)
            entries.append((num, suffix, name.replace("_", " "), verdict))
    if not entries:
        return
    terminalreporter.section("acceptance criteria")
    for num, suffix, name, verdict in sorted(entries):
        terminalreporter.write_line(f"criterion {num:02d}{suffix} ({name}): {verdict}")
