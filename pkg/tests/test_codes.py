from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exqec.codes import (
    BUILTIN_CODES,
    Code,
    PermInvariantSpec,
    amplitude_token,
    builtin_code,
    parse_amplitude,
    parse_code,
    perm_invariant_code,
    serialize_code,
)
from exqec.errors import CodeParseError, InvalidCodeError
from exqec.qstate import Amplitude, StateVector, orbit_sum

DATA = Path(__file__).parent / "data"


# ------------------------------------------------------------ built-in codes


def test_builtin_registry():
    assert set(BUILTIN_CODES) == {"ruskai9", "shor9", "rep3", "five-qubit"}
    with pytest.raises(KeyError):
        builtin_code("nope")


def test_dual_orbit_words(ruskai9):
    assert ruskai9.n == 9
    assert ruskai9.num_words() == 2
    for w in ruskai9.words:
        assert w.norm2().as_fraction() == 4
        assert len(w.terms) == 85
    assert ruskai9.words[1] == ruskai9.words[0].complement()
    # word 0: all-zeros plus the weight-6 orbit at 1/sqrt(28)
    w0 = ruskai9.words[0]
    assert w0.terms[0].re == 1
    sample = next(i for i in w0.support() if i)
    assert bin(sample).count("1") == 6
    assert w0.terms[sample].re == Fraction(1, 14)
    assert w0.terms[sample].radicand == 7


def test_block_parity_words(shor9):
    for w in shor9.words:
        assert w.norm2().as_fraction() == 4
        assert len(w.terms) == 4
    # word supports follow the three-bit block patterns
    def blocks(idx):
        bits = format(idx, "09b")
        return [bits[0:3], bits[3:6], bits[6:9]]

    for idx in shor9.words[0].support():
        assert all(b in ("000", "111") for b in blocks(idx))
        assert sum(b == "111" for b in blocks(idx)) % 2 == 0
    for idx in shor9.words[1].support():
        assert sum(b == "111" for b in blocks(idx)) % 2 == 1


def test_repetition_words(rep3):
    assert rep3.words[0].support() == frozenset({0b000})
    assert rep3.words[1].support() == frozenset({0b111})


def test_cyclic_stabilizer_words(five_qubit):
    for w in five_qubit.words:
        assert w.norm2().as_fraction() == 16
        assert len(w.terms) == 16
        values = {a.re for a in w.terms.values()}
        assert values == {Fraction(1), Fraction(-1)}
    assert five_qubit.check() == []


# ------------------------------------------------------- validation plumbing


def test_check_reports_offenders():
    overlapping = Code(
        2,
        (
            StateVector.basis(2, 0),
            StateVector.basis(2, 0) + StateVector.basis(2, 3),
        ),
    )
    found = overlapping.check()
    pairs = {(i, j) for i, j, _ in found}
    assert (0, 1) in pairs  # cross term
    assert (1, 1) in pairs  # norm mismatch
    with pytest.raises(InvalidCodeError) as err:
        overlapping.validate()
    assert err.value.offenders == found


def test_code_rejects_empty_and_mixed_modes():
    with pytest.raises(InvalidCodeError):
        Code(2, ())
    with pytest.raises(ValueError):
        Code(2, (StateVector.basis(2, 0), StateVector.basis(2, 3).to_float()))


def test_perm_invariant_constructor_matches_orbits(ruskai9):
    spec = PermInvariantSpec(
        9,
        (
            {0: Amplitude.make(1), 6: Amplitude.make(Fraction(1, 28), 0, 28)},
            {9: Amplitude.make(1), 3: Amplitude.make(Fraction(1, 28), 0, 28)},
        ),
    )
    code = perm_invariant_code(spec, label="direct")
    assert code.words == ruskai9.words
    assert code.label == "direct"


def test_perm_invariant_constructor_rejects_overlap():
    spec = PermInvariantSpec(4, ({0: Amplitude.make(1)}, {0: Amplitude.make(1)}))
    with pytest.raises(InvalidCodeError):
        perm_invariant_code(spec)
    with pytest.raises(ValueError):
        PermInvariantSpec(4, ({5: Amplitude.make(1)},))


# ----------------------------------------------------------------- amp tokens


@pytest.mark.parametrize(
    "token,expected",
    [
        ("1/sqrt(28)", Amplitude.make(Fraction(1, 28), 0, 28)),
        ("1/14*sqrt(7)", Amplitude.make(Fraction(1, 14), 0, 7)),
        ("sqrt(7)", Amplitude.make(1, 0, 7)),
        ("-2/3*i", Amplitude.make(0, Fraction(-2, 3))),
        ("i*sqrt(3)", Amplitude.make(0, 1, 3)),
        ("-1", Amplitude.make(-1)),
        ("+3/4", Amplitude.make(Fraction(3, 4))),
    ],
)
def test_parse_amplitude_cases(token, expected):
    assert parse_amplitude(token) == expected


@pytest.mark.parametrize("bad", ["", "foo", "1+i", "sqrt(-1)", "1//2"])
def test_parse_amplitude_rejects(bad):
    with pytest.raises(ValueError):
        parse_amplitude(bad)


simple_amplitudes = st.builds(
    lambda c, r, use_im: Amplitude.make(0, c, r) if use_im else Amplitude.make(c, 0, r),
    st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=40).filter(bool),
    st.integers(min_value=1, max_value=60),
    st.booleans(),
)


@given(simple_amplitudes)
def test_amplitude_token_round_trips(amp):
    assert parse_amplitude(amplitude_token(amp)) == amp


def test_amplitude_token_rejects_mixed():
    with pytest.raises(ValueError):
        amplitude_token(Amplitude.make(1, 1))


# ------------------------------------------------------------- file format


def test_parse_code_orbit_shorthand(ruskai9):
    code = parse_code((DATA / "dual_orbit9.code").read_text())
    assert code.label == "dual-orbit"
    assert code.words == ruskai9.words


def test_parse_code_validation_toggle():
    text = (DATA / "invalid_overlap.code").read_text()
    with pytest.raises(InvalidCodeError):
        parse_code(text)
    code = parse_code(text, validate=False)
    assert code.num_words() == 2


@pytest.mark.parametrize("name", sorted(BUILTIN_CODES))
def test_serialize_round_trips(name):
    code = builtin_code(name)
    again = parse_code(serialize_code(code))
    assert again.words == code.words
    assert again.label == code.label


def test_serialize_requires_exact_mode(rep3):
    with pytest.raises(ValueError):
        serialize_code(rep3.to_float())


@pytest.mark.parametrize(
    "text,line",
    [
        ("word 0:\n1 |00>", 1),  # no qubits: header
        ("qubits: 2\nword 1:\n1 |00>", 2),  # wrong numbering
        ("qubits: 2\nqubits: 3", 2),  # duplicate header
        ("qubits: 2\n1 |00>", 2),  # entry outside a word
        ("qubits: 2\nword 0:\nfoo |00>", 3),  # bad coefficient
        ("qubits: 2\nword 0:\n1 |000>", 3),  # ket width mismatch
        ("qubits: 2\nword 0:\nword 1:\n1 |00>", 3),  # empty word
        ("qubits: 0\nword 0:\n1 |>", 1),  # bad qubit count
    ],
)
def test_parse_code_error_positions(text, line):
    with pytest.raises(CodeParseError) as err:
        parse_code(text)
    assert err.value.line == line


def test_parse_code_comments_and_blank_lines():
    text = "\n# leading comment\nqubits: 1\n\nword 0: # inline\n1 |0>\nword 1:\n1 |1>\n"
    code = parse_code(text)
    assert code.n == 1
    assert code.num_words() == 2


def test_parse_code_ket_width_column():
    with pytest.raises(CodeParseError) as err:
        parse_code("qubits: 2\nword 0:\n1/2 |000>")
    assert err.value.line == 3
    assert err.value.column == len("1/2") + 2


# ----------------------------------------------------------- orbit identity


def test_orbit_entries_match_manual_expansion():
    text = "qubits: 3\nword 0:\n1/2 orbit(k=2)\n"
    code = parse_code(text, validate=False)
    assert code.words[0] == orbit_sum(3, 2).scaled(Fraction(1, 2))
