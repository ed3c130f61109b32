from __future__ import annotations

import subprocess
import sys

import pytest

from exqec.cli import run


def invoke(capsys, *argv):
    rc = run(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# ------------------------------------------------------------------- verify


def test_verify_positive_exit_and_keys(capsys):
    rc, out, _ = invoke(
        capsys, "verify", "--code", "ruskai9", "--errors", "pauli+exchange"
    )
    assert rc == 0
    assert out.startswith("verify ruskai9\n")
    assert "  correctable: true" in out
    assert "  rank: 28" in out
    assert "  dimension-used: 56 of 512" in out


def test_verify_negative_exit(capsys):
    rc, out, _ = invoke(
        capsys, "verify", "--code", "shor9", "--errors", "pauli+exchange"
    )
    assert rc == 1
    assert "correctable: false" in out
    rc, _, _ = invoke(capsys, "verify", "--code", "shor9", "--errors", "pauli")
    assert rc == 0


def test_verify_explicit_error_list(capsys):
    rc, out, _ = invoke(
        capsys, "verify", "--code", "shor9", "--errors", "I, Z7, E(3,4)"
    )
    assert rc == 1
    assert "violations: 2" in out
    assert "d[Z7,E(3,4)] differs between word 1 and word 0" in out


def test_verify_strict_flag(capsys):
    rc, _, _ = invoke(capsys, "verify", "--code", "five-qubit", "--strict")
    assert rc == 0
    rc, out, _ = invoke(
        capsys, "verify", "--code", "ruskai9", "--errors", "pauli+exchange", "--strict"
    )
    assert rc == 1
    assert "strict: true" in out


def test_verify_float_mode(capsys):
    rc, out, _ = invoke(
        capsys, "--mode", "float", "verify", "--code", "ruskai9",
        "--errors", "pauli+exchange",
    )
    assert rc == 0
    assert "tolerance: 1e-09" in out


def test_verify_codefile(tmp_path, capsys):
    path = tmp_path / "pair.code"
    path.write_text("qubits: 1\nword 0:\n1 |0>\nword 1:\n1 |1>\n")
    rc, out, _ = invoke(capsys, "verify", "--codefile", str(path), "--errors", "identity")
    assert rc == 0
    assert "correctable: true" in out


# ----------------------------------------------------------- dmatrix / gram


def test_dmatrix_output(capsys):
    rc, out, _ = invoke(capsys, "dmatrix", "--code", "ruskai9")
    assert rc == 0
    assert "size: 64" in out
    assert "d[I,E(1,2)]: 4" in out
    assert "d[X1,X2]: 3/2" in out
    assert "total rank: 28" in out
    rc, _, _ = invoke(capsys, "dmatrix", "--code", "shor9")
    assert rc == 1


def test_gram_output(capsys):
    rc, out, _ = invoke(capsys, "gram", "--code", "rep3", "--errors", "identity")
    assert rc == 0
    lines = [line.strip() for line in out.splitlines()[1:]]
    assert lines == [
        "g[I w0, I w0]: 1",
        "g[I w0, I w1]: 0",
        "g[I w1, I w0]: 0",
        "g[I w1, I w1]: 1",
    ]


# --------------------------------------------------------------- stab-check


def test_stab_check_exit_codes(capsys):
    rc, out, _ = invoke(capsys, "stab-check", "ruskai9")
    assert rc == 0
    assert "nontrivially-stabilized: false" in out
    rc, out, _ = invoke(capsys, "stab-check", "shor9")
    assert rc == 1
    assert "findings: 255" in out


def test_stab_check_witness(capsys):
    rc, out, _ = invoke(
        capsys, "stab-check", "ruskai9", "--witness", "000000000", "111111111"
    )
    assert rc == 0
    assert "kind: word_mismatch" in out
    rc, out, _ = invoke(
        capsys, "stab-check", "shor9", "--witness", "000000000", "110000000"
    )
    assert rc == 1
    assert "kind: stabilizes" in out


def test_stab_check_witness_integer_masks(capsys):
    rc, out, _ = invoke(capsys, "stab-check", "rep3", "--witness", "0", "0b011")
    assert rc == 1
    assert "element: IZZ" in out


# ------------------------------------------------------------ search/survey


def test_search_feasible(capsys):
    rc, out, _ = invoke(
        capsys, "search", "--n", "9", "--support0", "0,6", "--support1", "3,9"
    )
    assert rc == 0
    assert "feasible: true" in out
    assert "square a_0^2: 1/4" in out


def test_search_infeasible(capsys):
    rc, out, _ = invoke(
        capsys, "search", "--n", "9", "--support0", "0", "--support1", "9"
    )
    assert rc == 1
    assert "method: sign-definite" in out


def test_survey_small(capsys):
    rc, out, _ = invoke(capsys, "survey", "--n", "4", "--max-weights", "1")
    assert rc == 0
    assert "patterns: 2" in out
    assert "feasible-count: 0" in out


# ------------------------------------------------------------- demo / bounds


def test_demo_shor(capsys):
    rc, out, _ = invoke(capsys, "demo-shor")
    assert rc == 0
    assert "sample 0: psi-coefficient 0.5, remainder-fraction 0.5" in out
    assert "detected-z-qubits: 7 8 9" in out
    rc2, out2, _ = invoke(capsys, "--seed", "9", "demo-shor", "--samples", "1")
    assert rc2 == 0
    assert "samples: 1" in out2


def test_bounds(capsys):
    rc, out, _ = invoke(capsys, "bounds", "--scenario", "single_bit")
    assert rc == 0
    assert "min_n: 5" in out
    rc, out, _ = invoke(capsys, "bounds", "--scenario", "irrep_proposal")
    assert "min_n: 9" in out


# -------------------------------------------------------------- output modes


def test_structured_output_has_no_decoration(capsys):
    rc, out, _ = invoke(
        capsys, "--output", "structured", "verify", "--code", "rep3",
        "--errors", "identity",
    )
    assert rc == 0
    assert out.splitlines()[0] == "correctable: true"
    assert not any(line.startswith(" ") for line in out.splitlines())


def test_output_is_deterministic(capsys):
    args = ("dmatrix", "--code", "ruskai9")
    rc1, out1, _ = invoke(capsys, *args)
    rc2, out2, _ = invoke(capsys, *args)
    assert (rc1, out1) == (rc2, out2)


# --------------------------------------------------------------- exit code 2


def test_missing_codefile_is_usage_error(capsys):
    rc, out, err = invoke(capsys, "verify", "--codefile", "/no/such/file.code")
    assert rc == 2
    assert out == ""
    assert "cannot read code file" in err


def test_malformed_codefile_is_usage_error(tmp_path, capsys):
    path = tmp_path / "broken.code"
    path.write_text("qubits: 2\nword 0:\nzzz |00>\n")
    rc, _, err = invoke(capsys, "verify", "--codefile", str(path))
    assert rc == 2
    assert "line 3" in err


def test_bad_error_spec_is_usage_error(capsys):
    rc, _, err = invoke(capsys, "verify", "--code", "rep3", "--errors", "Q9")
    assert rc == 2
    assert "cannot parse operator token" in err


def test_bad_witness_mask_is_usage_error(capsys):
    rc, _, err = invoke(capsys, "stab-check", "rep3", "--witness", "01", "000")
    assert rc == 2
    assert "mask" in err


def test_negative_tolerance_is_usage_error(capsys):
    rc, _, err = invoke(capsys, "--tol", "-1", "verify", "--code", "rep3")
    assert rc == 2
    assert "tolerance" in err


def test_overlapping_supports_are_usage_error(capsys):
    rc, _, err = invoke(
        capsys, "search", "--n", "9", "--support0", "0,3", "--support1", "3,9"
    )
    assert rc == 2
    assert "disjoint" in err


def test_scan_too_large_is_usage_error(tmp_path, capsys):
    path = tmp_path / "wide.code"
    path.write_text("qubits: 13\nword 0:\n1 |0000000000000>\n")
    rc, _, err = invoke(capsys, "stab-check", str(path))
    assert rc == 2
    assert "scan" in err.lower()


def test_threads_env_validation(monkeypatch, capsys):
    monkeypatch.setenv("QEC_THREADS", "zero")
    rc, _, err = invoke(capsys, "bounds", "--scenario", "single_bit")
    assert rc == 2
    assert "QEC_THREADS" in err
    monkeypatch.setenv("QEC_THREADS", "0")
    rc, _, err = invoke(capsys, "bounds", "--scenario", "single_bit")
    assert rc == 2
    monkeypatch.setenv("QEC_THREADS", "2")
    rc, _, _ = invoke(capsys, "bounds", "--scenario", "single_bit")
    assert rc == 0


def test_unknown_command_exits_via_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


# ------------------------------------------------------------ installed entry


def test_console_script_and_module_entry():
    script = subprocess.run(
        ["exqec", "bounds", "--scenario", "single_bit"],
        capture_output=True,
        text=True,
    )
    assert script.returncode == 0
    assert "min_n: 5" in script.stdout
    module = subprocess.run(
        [sys.executable, "-m", "exqec", "bounds", "--scenario", "single_bit"],
        capture_output=True,
        text=True,
    )
    assert module.returncode == 0
    assert module.stdout == script.stdout
