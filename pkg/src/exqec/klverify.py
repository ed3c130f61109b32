"""Correctability checks: Gram tensors, the D matrix, recovery operators.

A code with words ``C_i`` corrects an error set ``{e_p}`` exactly when

    <e_p C_i | e_q C_j> = delta_ij * d_pq

for a single Hermitian matrix ``D = (d_pq)`` independent of the word pair.
``verify_kl`` checks this condition; its ``strict`` flag additionally
requires ``d_pq = c * delta_pq`` (errors mapping to mutually orthogonal
subspaces).  ``verify_kl_extended`` checks the same condition for a family
of codes indexed by an extra label m:

    <e_p C_i^m | e_q C_j^m'> = delta_ij * delta_mm' * d_pq

Recovery construction diagonalizes D in float arithmetic; everything else
runs exactly when given exact-mode codes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
import scipy.linalg

from .codes import Code, shor_code
from .errorops import ErrorOperator, ErrorSet, ExchangeOp, PauliString, apply
from .qstate import InnerProductValue, StateVector, inner_product
from ._linalg import rational_rank

__all__ = [
    "GramTensor",
    "DMatrix",
    "KLReport",
    "Violation",
    "DBlockReport",
    "BlockInfo",
    "RecoveryOperation",
    "BoundReport",
    "ShorExchangeReport",
    "gram_tensor",
    "verify_kl",
    "verify_kl_extended",
    "d_blocks",
    "build_recovery",
    "dimension_bound",
    "shor_exchange_demo",
    "DEFAULT_FLOAT_TOL",
]

DEFAULT_FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class GramTensor:
    """All inner products ``<e_p C_i | e_q C_j>``; Hermitian by construction."""

    errors: ErrorSet
    num_words: int
    entries: tuple  # entries[p][i][q][j] -> InnerProductValue

    def entry(self, p: int, i: int, q: int, j: int) -> InnerProductValue:
        return self.entries[p][i][q][j]

    def word_block(self, i: int) -> tuple[tuple[InnerProductValue, ...], ...]:
        N = len(self.errors)
        return tuple(
            tuple(self.entries[p][i][q][i] for q in range(N)) for p in range(N)
        )

    def to_float(self) -> np.ndarray:
        """Dense matrix over the flattened (p, i) index, i varying fastest."""
        N, w = len(self.errors), self.num_words
        out = np.empty((N * w, N * w), dtype=np.complex128)
        for p in range(N):
            for i in range(w):
                for q in range(N):
                    for j in range(w):
                        out[p * w + i, q * w + j] = self.entries[p][i][q][j].float_view
        return out


def gram_tensor(code: Code, errors: ErrorSet) -> GramTensor:
    if code.n != errors.n:
        raise ValueError(f"code on {code.n} qubits, errors on {errors.n}")
    words = code.words
    N, w = len(errors), len(words)
    images = [[apply(op, word) for word in words] for op in errors.ops]
    flat = [(p, i) for p in range(N) for i in range(w)]
    table: dict[tuple[int, int, int, int], InnerProductValue] = {}
    for a, (p, i) in enumerate(flat):
        for q, j in flat[a:]:
            v = inner_product(images[p][i], images[q][j])
            table[(p, i, q, j)] = v
            table[(q, j, p, i)] = v.conjugate()
    entries = tuple(
        tuple(
            tuple(tuple(table[(p, i, q, j)] for j in range(w)) for q in range(N))
            for i in range(w)
        )
        for p in range(N)
    )
    return GramTensor(errors, w, entries)


@dataclass(frozen=True)
class Violation:
    """One failed condition.

    ``kind`` is ``cross_word`` (entry between different words should vanish),
    ``block_mismatch`` (word i's d_pq differs from word 0's) or ``strict``
    (off-diagonal / unequal diagonal where a scalar D was demanded).
    For the extended check the word indices are (i, m) pairs.
    """

    kind: str
    i: object
    j: object
    p: int
    q: int
    magnitude: float
    value: InnerProductValue
    reference: InnerProductValue | None = None

    def describe(self, labels: Sequence[str]) -> str:
        lp, lq = labels[self.p], labels[self.q]
        if self.kind == "cross_word":
            return (
                f"<{lp} C{self.i} | {lq} C{self.j}> = {self.value} should vanish"
            )
        if self.kind == "block_mismatch":
            return (
                f"d[{lp},{lq}] differs between word {self.i} and word 0: "
                f"{self.value} vs {self.reference}"
            )
        return f"strict condition fails at d[{lp},{lq}] = {self.value}"


@dataclass(frozen=True)
class DMatrix:
    """The common word block ``d_pq`` with the error labels that index it."""

    entries: tuple[tuple[InnerProductValue, ...], ...]
    labels: tuple[str, ...]
    families: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def to_float(self) -> np.ndarray:
        return np.array(
            [[v.float_view for v in row] for row in self.entries], dtype=np.complex128
        )

    def rank(self, tol: float = DEFAULT_FLOAT_TOL) -> int:
        """Exact rank when all entries are plain rationals, else float rank."""
        try:
            rows = [[v.as_fraction() for v in row] for row in self.entries]
        except ValueError:
            m = self.to_float()
            return int(np.linalg.matrix_rank(m, tol=tol * max(1.0, float(np.abs(m).max()))))
        return rational_rank(rows)


@dataclass
class KLReport:
    correctable: bool
    d_matrix: DMatrix | None
    violations: list[Violation]
    tolerance: float
    strict: bool
    rank: int | None
    dimension_used: int | None  # 2 * rank for a two-word code family
    dimension_total: int  # 2**n
    labels: tuple[str, ...]

    def to_lines(self) -> list[str]:
        lines = [
            f"correctable: {str(self.correctable).lower()}",
            f"tolerance: {self.tolerance:.3g}",
            f"strict: {str(self.strict).lower()}",
            f"violations: {len(self.violations)}",
        ]
        for v in self.violations[:20]:
            lines.append(f"violation: {v.describe(self.labels)} (|.| = {v.magnitude:.3g})")
        if len(self.violations) > 20:
            lines.append(f"violation: ... {len(self.violations) - 20} more")
        if self.rank is not None:
            lines.append(f"rank: {self.rank}")
            lines.append(
                f"dimension-used: {self.dimension_used} of {self.dimension_total}"
            )
        return lines


def _resolve_tol(code: Code, tol: float | None) -> float:
    if tol is not None:
        if tol < 0:
            raise ValueError("tolerance must be nonnegative")
        return tol
    return 0.0 if code.mode == "exact" else DEFAULT_FLOAT_TOL


def _differs(v: InnerProductValue, ref: InnerProductValue | None, tol: float) -> bool:
    d = v if ref is None else v.sub(ref)
    if tol == 0.0 and d.is_exact:
        return not d.is_exact_zero()
    return d.magnitude() > tol


def verify_kl(
    code: Code, errors: ErrorSet, tol: float | None = None, strict: bool = False
) -> KLReport:
    """Check the correctability condition for one code and one error set.

    Exact codes are compared with tolerance 0 by default; float codes with
    1e-9.  When correctable, the report carries the word-0 block as the D
    matrix together with its rank and the dimension count 2*rank.
    """
    tol = _resolve_tol(code, tol)
    G = gram_tensor(code, errors)
    N, w = len(errors), len(code.words)
    violations: list[Violation] = []
    for i in range(w):
        for j in range(i + 1, w):
            for p in range(N):
                for q in range(N):
                    v = G.entry(p, i, q, j)
                    if _differs(v, None, tol):
                        violations.append(
                            Violation("cross_word", i, j, p, q, v.magnitude(), v)
                        )
    base = G.word_block(0)
    for i in range(1, w):
        blk = G.word_block(i)
        for p in range(N):
            for q in range(N):
                if _differs(blk[p][q], base[p][q], tol):
                    violations.append(
                        Violation(
                            "block_mismatch",
                            i,
                            i,
                            p,
                            q,
                            blk[p][q].sub(base[p][q]).magnitude(),
                            blk[p][q],
                            base[p][q],
                        )
                    )
    if strict:
        d00 = base[0][0]
        for p in range(N):
            for q in range(N):
                ref = d00 if p == q else None
                if _differs(base[p][q], ref, tol):
                    violations.append(
                        Violation(
                            "strict", 0, 0, p, q,
                            base[p][q].sub(ref).magnitude() if ref else base[p][q].magnitude(),
                            base[p][q], ref,
                        )
                    )
    correctable = not violations
    d_matrix = DMatrix(base, errors.labels, errors.families) if correctable else None
    rank = d_matrix.rank() if d_matrix is not None else None
    return KLReport(
        correctable=correctable,
        d_matrix=d_matrix,
        violations=violations,
        tolerance=tol,
        strict=strict,
        rank=rank,
        dimension_used=None if rank is None else len(code.words) * rank,
        dimension_total=1 << code.n,
        labels=errors.labels,
    )


def verify_kl_extended(
    family: Sequence[Code], errors: ErrorSet, tol: float | None = None
) -> KLReport:
    """Correctability for a family of codes sharing one D matrix.

    ``family[m]`` holds the words ``C_i^m``; the condition demands that
    distinct (i, m) pairs stay orthogonal under every error pair and that
    all word blocks agree.  With a single family member this is precisely
    the plain check.
    """
    if not family:
        raise ValueError("empty code family")
    w = len(family[0].words)
    n = family[0].n
    if any(c.n != n or len(c.words) != w for c in family):
        raise ValueError("family members must share qubit count and word count")
    if any(c.mode != family[0].mode for c in family):
        raise ValueError("family members must share exact/float mode")
    tol = _resolve_tol(family[0], tol)
    if errors.n != n:
        raise ValueError(f"codes on {n} qubits, errors on {errors.n}")

    index = [(i, m) for m in range(len(family)) for i in range(w)]
    words = [family[m].words[i] for (i, m) in index]
    N = len(errors)
    images = [[apply(op, word) for word in words] for op in errors.ops]

    violations: list[Violation] = []
    blocks: list[list[list[InnerProductValue]]] = []
    for a, (i, m) in enumerate(index):
        blocks.append(
            [
                [inner_product(images[p][a], images[q][a]) for q in range(N)]
                for p in range(N)
            ]
        )
    for a in range(len(index)):
        for b in range(a + 1, len(index)):
            for p in range(N):
                for q in range(N):
                    v = inner_product(images[p][a], images[q][b])
                    if _differs(v, None, tol):
                        violations.append(
                            Violation(
                                "cross_word", index[a], index[b], p, q,
                                v.magnitude(), v,
                            )
                        )
    base = blocks[0]
    for a in range(1, len(index)):
        for p in range(N):
            for q in range(N):
                if _differs(blocks[a][p][q], base[p][q], tol):
                    violations.append(
                        Violation(
                            "block_mismatch", index[a], index[a], p, q,
                            blocks[a][p][q].sub(base[p][q]).magnitude(),
                            blocks[a][p][q], base[p][q],
                        )
                    )
    correctable = not violations
    d_matrix = (
        DMatrix(tuple(tuple(row) for row in base), errors.labels, errors.families)
        if correctable
        else None
    )
    rank = d_matrix.rank() if d_matrix is not None else None
    return KLReport(
        correctable=correctable,
        d_matrix=d_matrix,
        violations=violations,
        tolerance=tol,
        strict=False,
        rank=rank,
        dimension_used=None if rank is None else len(index) * rank,
        dimension_total=1 << n,
        labels=errors.labels,
    )


@dataclass(frozen=True)
class BlockInfo:
    name: str
    start: int
    stop: int  # exclusive
    rank: int
    off_block_max: float  # largest |entry| in this block's rows outside it

    @property
    def size(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class DBlockReport:
    blocks: tuple[BlockInfo, ...]
    off_block_max: float
    total_rank: int

    def to_lines(self) -> list[str]:
        lines = []
        for b in self.blocks:
            lines.append(
                f"block {b.name}: indices {b.start}..{b.stop - 1}, size {b.size}, "
                f"rank {b.rank}, off-block max {b.off_block_max:.3g}"
            )
        lines.append(f"off-block max: {self.off_block_max:.3g}")
        lines.append(f"total rank: {self.total_rank}")
        return lines


def d_blocks(d_matrix: DMatrix) -> DBlockReport:
    """Split D into named family blocks (identity+exchange, X, Y, Z).

    Requires a family-ordered error set: identity first, any exchange
    operators immediately after it, then each Pauli family contiguously.
    """
    fams = list(d_matrix.families)
    runs: list[tuple[str, int, int]] = []
    start = 0
    for idx in range(1, len(fams) + 1):
        if idx == len(fams) or fams[idx] != fams[start]:
            runs.append((fams[start], start, idx))
            start = idx
    seen = [r[0] for r in runs]
    if len(set(seen)) != len(seen):
        raise ValueError(f"error families are not contiguous: {seen}")
    # identity (+ exchange when present) merge into the single block "0"
    merged: list[tuple[str, int, int]] = []
    for name, a, b in runs:
        if name == "exchange" and merged and merged[-1][0] == "0":
            merged[-1] = ("0", merged[-1][1], b)
        elif name == "identity":
            merged.append(("0", a, b))
        else:
            merged.append((name, a, b))
    infos = []
    total_rank = 0
    global_off = 0.0
    for name, a, b in merged:
        sub = DMatrix(
            tuple(tuple(row[a:b]) for row in d_matrix.entries[a:b]),
            d_matrix.labels[a:b],
            d_matrix.families[a:b],
        )
        rank = sub.rank()
        total_rank += rank
        off = 0.0
        for p in range(a, b):
            for q in range(d_matrix.size):
                if not a <= q < b:
                    off = max(off, d_matrix.entries[p][q].magnitude())
        infos.append(BlockInfo(name, a, b, rank, off))
        global_off = max(global_off, off)
    return DBlockReport(tuple(infos), global_off, total_rank)


@dataclass
class RecoveryOperation:
    """Measurement-and-decode map built from the eigenvectors of D.

    For each eigenvalue ``lam_r > tol`` of D the combinations
    ``corrected_r = sum_p u[p, r] e_p`` send the code space to mutually
    orthogonal copies; recovery projects onto those copies and maps each
    back.  All arithmetic is float-mode.
    """

    n: int
    lambdas: np.ndarray  # kept eigenvalues, shape (R,)
    weights: np.ndarray  # eigenvector columns u[p, r], shape (N, R)
    basis: np.ndarray  # orthonormal copies, shape (R, w, 2**n)
    codewords: np.ndarray  # normalized words, shape (w, 2**n)
    labels: tuple[str, ...]

    def branches(self, state: StateVector) -> list[tuple[float, np.ndarray]]:
        """Per-outcome (squared weight, decoded logical coefficients)."""
        arr = state.to_float().dense
        out = []
        for r in range(self.basis.shape[0]):
            coeffs = np.array(
                [np.vdot(self.basis[r, i], arr) for i in range(self.basis.shape[1])]
            )
            out.append((float(np.vdot(coeffs, coeffs).real), coeffs))
        return out

    def recover(self, state: StateVector) -> StateVector:
        """Decoded state from the most likely measurement branch."""
        branches = self.branches(state)
        weight, coeffs = max(branches, key=lambda t: t[0])
        if weight <= 0.0:
            raise ArithmeticError("state has no component in any recoverable subspace")
        vec = coeffs @ self.codewords
        return StateVector.from_dense(self.n, vec / np.linalg.norm(vec))

    def fidelity(self, ideal: StateVector, corrupted: StateVector) -> float:
        """Channel fidelity of recovery against the ideal encoded state."""
        ideal_arr = ideal.to_float().dense
        ideal_arr = ideal_arr / np.linalg.norm(ideal_arr)
        logical = np.array(
            [np.vdot(self.codewords[i], ideal_arr) for i in range(len(self.codewords))]
        )
        total = float(np.vdot(corrupted.to_float().dense, corrupted.to_float().dense).real)
        if total == 0.0:
            raise ArithmeticError("corrupted state is zero")
        got = 0.0
        for _, coeffs in self.branches(corrupted):
            got += abs(np.vdot(logical, coeffs)) ** 2
        return got / total


def build_recovery(
    code: Code, errors: ErrorSet, d_matrix: DMatrix, tol: float = DEFAULT_FLOAT_TOL
) -> RecoveryOperation:
    """Recovery from a passing verification (float-mode eigendecomposition)."""
    D = d_matrix.to_float()
    D = (D + D.conj().T) / 2
    lam, U = np.linalg.eigh(D)
    scale = max(1.0, float(lam.max()) if len(lam) else 1.0)
    if lam.min() < -tol * scale:
        raise ArithmeticError(
            f"D matrix is not positive semidefinite within tolerance "
            f"(min eigenvalue {lam.min():.3g})"
        )
    keep = [r for r in range(len(lam)) if lam[r] > tol * scale]
    if not keep:
        raise ArithmeticError("D matrix has no usable eigenvalues")
    words_f = [w.to_float().dense for w in code.words]
    image_f = [[apply(op, w.to_float()).dense for w in code.words] for op in errors.ops]
    basis = np.empty((len(keep), len(words_f), 1 << code.n), dtype=np.complex128)
    for out_r, r in enumerate(keep):
        for i in range(len(words_f)):
            vec = np.zeros(1 << code.n, dtype=np.complex128)
            for p in range(len(errors)):
                if U[p, r] != 0:
                    vec += U[p, r] * image_f[p][i]
            basis[out_r, i] = vec / math.sqrt(lam[r])
    # the copies must come out orthonormal; a large residual means the
    # supplied D does not belong to this code/error pair
    flat = basis.reshape(len(keep) * len(words_f), -1)
    gram = flat.conj() @ flat.T
    residual = float(np.abs(gram - np.eye(len(flat))).max())
    if residual > 1e-6:
        raise ArithmeticError(
            f"recovery basis failed orthonormality (residual {residual:.3g}); "
            "was the D matrix produced by verify_kl on this code and error set?"
        )
    codewords = np.array([w / np.linalg.norm(w) for w in words_f])
    return RecoveryOperation(
        n=code.n,
        lambdas=np.array([lam[r] for r in keep]),
        weights=U[:, keep],
        basis=basis,
        codewords=codewords,
        labels=errors.labels,
    )


@dataclass(frozen=True)
class BoundReport:
    scenario: str
    inequality: str
    min_n: int
    trace: tuple[tuple[int, int, int, bool], ...]  # (n, lhs, rhs, satisfied)

    def to_lines(self) -> list[str]:
        lines = [f"scenario: {self.scenario}", f"inequality: {self.inequality}"]
        for n, lhs, rhs, ok in self.trace:
            lines.append(f"n={n}: {lhs} <= {rhs} -> {str(ok).lower()}")
        lines.append(f"min_n: {self.min_n}")
        return lines


_SCENARIOS = {
    # distinct states needed vs available dimension, per error-set scenario
    "single_bit": ("2*(3n+1) <= 2^n", lambda n: 2 * (3 * n + 1)),
    "all_two_bit_plus_single": (
        "9n(n-1) + 2*(3n+1) <= 2^n",
        lambda n: 9 * n * (n - 1) + 2 * (3 * n + 1),
    ),
    "irrep_proposal": ("2(n-1)*(3n+1) <= 2^n", lambda n: 2 * (n - 1) * (3 * n + 1)),
}

_BOUND_HORIZON = 64


def dimension_bound(scenario: str, n: int | None = None) -> BoundReport:
    """Least register size satisfying a counting bound, with its trace.

    The reported ``min_n`` is the least n from which the inequality holds
    onward (polynomial left sides are eventually dominated; trivial
    satisfaction at tiny n, as in the irrep scenario at n=1, is skipped).
    The optional ``n`` argument only extends the trace to include it.
    """
    if scenario not in _SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}; pick from {sorted(_SCENARIOS)}")
    text, lhs = _SCENARIOS[scenario]
    ok = [lhs(m) <= (1 << m) for m in range(1, _BOUND_HORIZON + 1)]
    min_n = None
    for idx in range(len(ok)):
        if all(ok[idx:]):
            min_n = idx + 1
            break
    assert min_n is not None, "bound horizon too small"
    upto = max(min_n, n or 0)
    trace = tuple((m, lhs(m), 1 << m, ok[m - 1]) for m in range(1, upto + 1))
    return BoundReport(scenario, text, min_n, trace)


@dataclass(frozen=True)
class ShorExchangeSample:
    a: complex
    b: complex
    psi_coefficient: complex  # overlap of E(3,4) psi with psi itself
    z_overlaps: tuple[complex, ...]  # against Z_k applied to the twisted word
    detected_z_qubits: tuple[int, ...]
    code_fraction: float
    single_pauli_fraction: float
    remainder_fraction: float
    remainder_vs_code: float
    remainder_vs_single_pauli: float


@dataclass(frozen=True)
class ShorExchangeReport:
    """Numerical decomposition of E(3,4) acting on an encoded Shor state.

    For psi = a c0 + b c1 (normalized) the image splits into 1/2 psi, a
    1/2-weighted phase-flipped copy Z_k psi~ with psi~ = a c0 - b c1, and
    a remainder orthogonal to the code space and to every single-Pauli
    image.  The scan over k identifies which phase flips carry the second
    component; the remainder holds half the squared norm.
    """

    seed: int
    samples: tuple[ShorExchangeSample, ...]

    @property
    def detected_z_qubits(self) -> tuple[int, ...]:
        return self.samples[0].detected_z_qubits

    def to_lines(self) -> list[str]:
        lines = [f"seed: {self.seed}", f"samples: {len(self.samples)}"]
        for idx, s in enumerate(self.samples):
            lines.append(
                f"sample {idx}: psi-coefficient {s.psi_coefficient.real:.12g}, "
                f"remainder-fraction {s.remainder_fraction:.12g}"
            )
        s0 = self.samples[0]
        lines.append(
            "detected-z-qubits: " + " ".join(str(k) for k in s0.detected_z_qubits)
        )
        lines.append(f"code-fraction: {s0.code_fraction:.12g}")
        lines.append(f"single-pauli-fraction: {s0.single_pauli_fraction:.12g}")
        lines.append(f"remainder-fraction: {s0.remainder_fraction:.12g}")
        lines.append(
            f"remainder-orthogonality: {max(s.remainder_vs_code for s in self.samples):.3g} (code), "
            f"{max(s.remainder_vs_single_pauli for s in self.samples):.3g} (single-pauli)"
        )
        return lines


def shor_exchange_demo(seed: int = 0, samples: int = 3) -> ShorExchangeReport:
    """Show how the 3-4 exchange defeats the Shor code, at random encodings."""
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    code = shor_code().to_float()
    c0 = code.words[0].dense / np.linalg.norm(code.words[0].dense)
    c1 = code.words[1].dense / np.linalg.norm(code.words[1].dense)
    exchange = ExchangeOp(9, 3, 4)

    pauli_images = []
    for kind in "XYZ":
        for k in range(1, 10):
            op = PauliString.single(9, kind, k)
            for word in (c0, c1):
                pauli_images.append(op.apply(StateVector.from_dense(9, word)).dense)
    code_basis = scipy.linalg.orth(np.column_stack([c0, c1]))
    full_basis = scipy.linalg.orth(np.column_stack([c0, c1, *pauli_images]))

    out = []
    for _ in range(samples):
        raw = rng.normal(size=4)
        a = complex(raw[0], raw[1])
        b = complex(raw[2], raw[3])
        norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        a, b = a / norm, b / norm
        psi = a * c0 + b * c1
        twisted = a * c0 - b * c1
        image = exchange.apply(StateVector.from_dense(9, psi)).dense

        psi_coeff = complex(np.vdot(psi, image))
        z_overlaps = []
        for k in range(1, 10):
            zk = PauliString.single(9, "Z", k)
            ztw = zk.apply(StateVector.from_dense(9, twisted)).dense
            z_overlaps.append(complex(np.vdot(ztw, image)))
        peak = max(abs(z) for z in z_overlaps)
        detected = tuple(
            k for k, z in enumerate(z_overlaps, start=1) if abs(z) > peak - 1e-9
        )

        code_part = code_basis @ (code_basis.conj().T @ image)
        full_part = full_basis @ (full_basis.conj().T @ image)
        remainder = image - full_part
        code_fraction = float(np.vdot(code_part, code_part).real)
        single_pauli_fraction = float(
            np.vdot(full_part - code_part, full_part - code_part).real
        )
        rem_fraction = float(np.vdot(remainder, remainder).real)
        rem_vs_code = max(
            abs(np.vdot(c0, remainder)), abs(np.vdot(c1, remainder))
        )
        rem_vs_pauli = max(abs(np.vdot(v, remainder)) for v in pauli_images)
        out.append(
            ShorExchangeSample(
                a=a,
                b=b,
                psi_coefficient=psi_coeff,
                z_overlaps=tuple(z_overlaps),
                detected_z_qubits=detected,
                code_fraction=code_fraction,
                single_pauli_fraction=single_pauli_fraction,
                remainder_fraction=rem_fraction,
                remainder_vs_code=float(rem_vs_code),
                remainder_vs_single_pauli=float(rem_vs_pauli),
            )
        )
    return ShorExchangeReport(seed=seed, samples=tuple(out))
