"""Error operators: Pauli strings, exchange swaps, permutations, products.

A Pauli string is stored symplectically as ``i**phase * X(xmask) * Z(zmask)``
with the Z factor acting first.  On basis state ``|v>`` it gives::

    i**phase * (-1)**parity(zmask & v) |v xor xmask>

With this operator order the single-qubit ``Y_k`` is ``i * X_k * Z_k``
(phase exponent 1).  Masks follow the qstate bit convention: qubit 1 is the
most significant bit, so qubit k corresponds to mask ``1 << (n - k)``.

The exchange operator ``E(j,k)`` swaps the two bits when they differ and
fixes the basis state otherwise, which is exactly the transposition of
qubits j and k; its expansion as half the sum of II, ZZ, XX, YY on the pair
is left to the test suite as a cross-check rather than used here.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DimensionMismatch
from .qstate import QubitPermutation, StateVector, apply_permutation

__all__ = [
    "PauliString",
    "ExchangeOp",
    "PermutationOp",
    "IdentityOp",
    "Composition",
    "ErrorOperator",
    "ErrorSet",
    "apply",
    "basic_error_set",
    "qubit_mask",
    "parse_error_ops",
    "action_signature",
]


def qubit_mask(n: int, qubits: Iterable[int]) -> int:
    mask = 0
    for k in qubits:
        if not 1 <= k <= n:
            raise DimensionMismatch(f"qubit {k} out of range 1..{n}")
        mask |= 1 << (n - k)
    return mask


def _parity_u64(values: np.ndarray) -> np.ndarray:
    out = np.bitwise_count(values) & 1
    return out.astype(np.int64)


@dataclass(frozen=True)
class PauliString:
    """``i**phase * X(x_mask) * Z(z_mask)`` on n qubits (Z acts first)."""

    n: int
    x_mask: int
    z_mask: int
    phase: int = 0

    def __post_init__(self):
        top = 1 << self.n
        if not (0 <= self.x_mask < top and 0 <= self.z_mask < top):
            raise DimensionMismatch("Pauli mask out of range for n qubits")
        object.__setattr__(self, "phase", self.phase & 3)

    @staticmethod
    def identity(n: int) -> "PauliString":
        return PauliString(n, 0, 0, 0)

    @staticmethod
    def single(n: int, kind: str, k: int) -> "PauliString":
        """One-qubit X/Y/Z on qubit k."""
        m = qubit_mask(n, [k])
        if kind == "X":
            return PauliString(n, m, 0, 0)
        if kind == "Z":
            return PauliString(n, 0, m, 0)
        if kind == "Y":
            return PauliString(n, m, m, 1)
        raise ValueError(f"unknown Pauli kind {kind!r}")

    @staticmethod
    def from_letters(letters: str, phase: int = 0) -> "PauliString":
        """Build from a letter string like ``"XZZXI"`` (qubit 1 first)."""
        n = len(letters)
        x = z = 0
        extra = 0
        for k, ch in enumerate(letters.upper(), start=1):
            m = 1 << (n - k)
            if ch == "X":
                x |= m
            elif ch == "Z":
                z |= m
            elif ch == "Y":
                x |= m
                z |= m
                extra += 1
            elif ch != "I":
                raise ValueError(f"bad Pauli letter {ch!r}")
        return PauliString(n, x, z, phase + extra)

    @property
    def weight(self) -> int:
        return (self.x_mask | self.z_mask).bit_count()

    def compose(self, other: "PauliString") -> "PauliString":
        """Operator product ``self * other`` (``other`` acts first)."""
        if self.n != other.n:
            raise DimensionMismatch("Pauli strings act on different sizes")
        swap = (self.z_mask & other.x_mask).bit_count() & 1
        return PauliString(
            self.n,
            self.x_mask ^ other.x_mask,
            self.z_mask ^ other.z_mask,
            self.phase + other.phase + 2 * swap,
        )

    def inverse(self) -> "PauliString":
        overlap = (self.x_mask & self.z_mask).bit_count() & 1
        return PauliString(self.n, self.x_mask, self.z_mask, -self.phase + 2 * overlap)

    def apply(self, state: StateVector) -> StateVector:
        if self.n != state.n:
            raise DimensionMismatch("operator and state sizes differ")
        if state.mode == "exact":
            out = {}
            for idx, amp in state.terms.items():
                e = self.phase + 2 * ((self.z_mask & idx).bit_count() & 1)
                out[idx ^ self.x_mask] = amp.times_i(e)
            return StateVector.from_terms(self.n, out)
        idx = np.arange(1 << self.n, dtype=np.uint64)
        signs = 1.0 - 2.0 * _parity_u64(idx & np.uint64(self.z_mask))
        out = np.empty_like(state.dense)
        out[idx ^ np.uint64(self.x_mask)] = (1j**self.phase) * signs * state.dense
        return StateVector.from_dense(self.n, out)

    def to_letters(self) -> str:
        """Display form, e.g. ``"-iXYZII"``."""
        letters = []
        ys = 0
        for k in range(1, self.n + 1):
            m = 1 << (self.n - k)
            x, z = bool(self.x_mask & m), bool(self.z_mask & m)
            if x and z:
                letters.append("Y")
                ys += 1
            elif x:
                letters.append("X")
            elif z:
                letters.append("Z")
            else:
                letters.append("I")
        prefix = {0: "", 1: "i", 2: "-", 3: "-i"}[(self.phase - ys) & 3]
        return prefix + "".join(letters)

    def label(self) -> str:
        body = (self.x_mask | self.z_mask).bit_count()
        if self.phase == 0 and body == 1:
            k = self.n - (self.x_mask | self.z_mask).bit_length() + 1
            if self.x_mask and not self.z_mask:
                return f"X{k}"
            if self.z_mask and not self.x_mask:
                return f"Z{k}"
        if self.phase == 1 and self.x_mask == self.z_mask and body == 1:
            k = self.n - self.x_mask.bit_length() + 1
            return f"Y{k}"
        if body == 0 and self.phase == 0:
            return "I"
        return self.to_letters()


@dataclass(frozen=True)
class ExchangeOp:
    """Swap qubits j and k; flips the two bits exactly when they differ."""

    n: int
    j: int
    k: int

    def __post_init__(self):
        j, k = self.j, self.k
        if j == k:
            raise ValueError("exchange requires two distinct qubits")
        if not (1 <= j <= self.n and 1 <= k <= self.n):
            raise DimensionMismatch(f"exchange qubits ({j},{k}) out of range 1..{self.n}")
        if j > k:
            object.__setattr__(self, "j", k)
            object.__setattr__(self, "k", j)

    def apply(self, state: StateVector) -> StateVector:
        if self.n != state.n:
            raise DimensionMismatch("operator and state sizes differ")
        n = self.n
        pj, pk = n - self.j, n - self.k
        both = (1 << pj) | (1 << pk)
        if state.mode == "exact":
            out = {}
            for idx, amp in state.terms.items():
                if ((idx >> pj) ^ (idx >> pk)) & 1:
                    idx ^= both
                out[idx] = amp
            return StateVector.from_terms(n, out)
        idx = np.arange(1 << n, dtype=np.int64)
        differ = ((idx >> pj) ^ (idx >> pk)) & 1
        out = np.empty_like(state.dense)
        out[idx ^ (differ * both)] = state.dense
        return StateVector.from_dense(n, out)

    def label(self) -> str:
        return f"E({self.j},{self.k})"


@dataclass(frozen=True)
class PermutationOp:
    """A general relabeling of qubit positions."""

    perm: QubitPermutation

    @property
    def n(self) -> int:
        return self.perm.n

    def apply(self, state: StateVector) -> StateVector:
        return apply_permutation(state, self.perm)

    def label(self) -> str:
        return "P(" + " ".join(str(d) for d in self.perm.image) + ")"


@dataclass(frozen=True)
class IdentityOp:
    n: int

    def apply(self, state: StateVector) -> StateVector:
        if self.n != state.n:
            raise DimensionMismatch("operator and state sizes differ")
        return state

    def label(self) -> str:
        return "I"


@dataclass(frozen=True)
class Composition:
    """Operator product; the last listed factor is applied first."""

    ops: tuple

    def __post_init__(self):
        if not self.ops:
            raise ValueError("empty composition")
        sizes = {op.n for op in self.ops}
        if len(sizes) != 1:
            raise DimensionMismatch(f"composition mixes sizes {sorted(sizes)}")

    @property
    def n(self) -> int:
        return self.ops[0].n

    def apply(self, state: StateVector) -> StateVector:
        for op in reversed(self.ops):
            state = op.apply(state)
        return state

    def label(self) -> str:
        return " ".join(op.label() for op in self.ops)


ErrorOperator = Union[PauliString, ExchangeOp, PermutationOp, IdentityOp, Composition]


def apply(op: ErrorOperator, state: StateVector) -> StateVector:
    """Apply an error operator to a state (dispatches on the operator kind)."""
    return op.apply(state)


def action_signature(op: ErrorOperator) -> tuple:
    """Canonical fingerprint of the operator's action on every basis state.

    Two operators are the same error exactly when their signatures match.
    Exponential in n; meant for validating small error sets.
    """
    n = op.n
    rows = []
    for idx in range(1 << n):
        image = op.apply(StateVector.basis(n, idx))
        rows.append(tuple(sorted((i, a.re, a.im, a.radicand) for i, a in image.terms.items())))
    return tuple(rows)


def _family_of(op: ErrorOperator) -> str:
    if isinstance(op, IdentityOp):
        return "identity"
    if isinstance(op, ExchangeOp):
        return "exchange"
    if isinstance(op, PauliString):
        lbl = op.label()
        if lbl[0] in "XYZ" and lbl[1:].isdigit():
            return lbl[0]
        return "other"
    return "other"


@dataclass(frozen=True)
class ErrorSet:
    """An ordered list of error operators, identity first."""

    n: int
    ops: tuple
    labels: tuple[str, ...] = field(default=())
    families: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.ops or not isinstance(self.ops[0], IdentityOp):
            raise ValueError("error set must start with the identity")
        if any(op.n != self.n for op in self.ops):
            raise DimensionMismatch("error set mixes qubit counts")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(op.label() for op in self.ops))
        if not self.families:
            object.__setattr__(self, "families", tuple(_family_of(op) for op in self.ops))

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    @staticmethod
    def from_ops(n: int, ops: Sequence[ErrorOperator], validate: bool = True) -> "ErrorSet":
        ops = list(ops)
        if not ops or not isinstance(ops[0], IdentityOp):
            ops.insert(0, IdentityOp(n))
        es = ErrorSet(n, tuple(ops))
        if validate:
            es.check_distinct()
        return es

    def check_distinct(self) -> None:
        """Reject duplicate operators (compared by action, not by label)."""
        seen: dict[tuple, str] = {}
        for op, lbl in zip(self.ops, self.labels):
            sig = action_signature(op)
            if sig in seen:
                raise ValueError(
                    f"duplicate error operators: {seen[sig]} and {lbl} act identically"
                )
            seen[sig] = lbl


_KNOWN_FAMILIES = {"single_pauli", "exchange", "identity_only"}


def basic_error_set(n: int, families: Iterable[str] = ("single_pauli",)) -> ErrorSet:
    """Standard error sets.

    ``single_pauli`` contributes X1..Xn, Y1..Yn, Z1..Zn; ``exchange``
    contributes all E(j,k) with j < k in lexicographic order, placed right
    after the identity so that the identity+exchange entries form one
    contiguous block; ``identity_only`` adds nothing beyond the leading
    identity, which is always present.
    """
    fams = set(families)
    unknown = fams - _KNOWN_FAMILIES
    if unknown:
        raise ValueError(f"unknown error families: {sorted(unknown)}")
    if not fams:
        raise ValueError("at least one family is required")
    ops: list[ErrorOperator] = [IdentityOp(n)]
    if "exchange" in fams:
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                ops.append(ExchangeOp(n, j, k))
    if "single_pauli" in fams:
        for kind in "XYZ":
            for k in range(1, n + 1):
                ops.append(PauliString.single(n, kind, k))
    return ErrorSet(n, tuple(ops))


_ATOM = _re.compile(
    r"I|([XYZ])(\d+)|E\((\d+)\s*,\s*(\d+)\)|P\(([\d\s]+)\)"
)


def _parse_atom(token: str, n: int) -> ErrorOperator:
    m = _ATOM.fullmatch(token)
    if m is None:
        raise ValueError(f"cannot parse operator token {token!r}")
    if m.group(1):
        return PauliString.single(n, m.group(1), int(m.group(2)))
    if m.group(3):
        return ExchangeOp(n, int(m.group(3)), int(m.group(4)))
    if m.group(5) is not None:
        image = tuple(int(t) for t in m.group(5).split())
        if len(image) != n:
            raise ValueError(f"permutation {token!r} must list all {n} destinations")
        return PermutationOp(QubitPermutation(image))
    return IdentityOp(n)


def parse_error_ops(text: str, n: int) -> list[ErrorOperator]:
    """Parse a comma-separated operator list, e.g. ``"X3, E(3,4), X1 Z2"``.

    Whitespace-juxtaposed atoms within one element form an operator product
    (rightmost factor applied first).
    """
    ops: list[ErrorOperator] = []
    for element in _split_outside_parens(text, ","):
        element = element.strip()
        if not element:
            raise ValueError("empty operator element")
        atoms = [_parse_atom(t, n) for t in _split_atoms(element)]
        ops.append(atoms[0] if len(atoms) == 1 else Composition(tuple(atoms)))
    return ops


def _split_outside_parens(text: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def _split_atoms(element: str) -> list[str]:
    # split on whitespace that is not inside parentheses
    out, depth, cur = [], 0, []
    for ch in element:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch.isspace() and depth == 0:
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out
