"""Feasibility search over permutation-invariant coefficient patterns.

A permutation-invariant two-word code is determined by which Hamming
weights each word uses and the real coefficient attached to each weight:

    W_0 = sum over kappa in K0 of a_kappa * orbit_sum(n, kappa)
    W_1 = sum over mu    in K1 of a_mu    * orbit_sum(n, mu)

(the two weight sets are disjoint, so one coefficient map covers both).
The correctability conditions then become quadratic equations in the
coefficients.  This module provides the closed-form Gram quantities for
single orbits, assembles the full constraint system exactly, and decides
feasibility — exactly where the system is linear in the squared
coefficients, by certified sign arguments where a constraint is a
positive combination of squares, and by grid search plus local refinement
otherwise.  Every claimed-feasible result is re-verified by running the
realized code through the correctability checker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np
import scipy.optimize

from .codes import Code, PermInvariantSpec, perm_invariant_code
from .errors import CapabilityError
from .errorops import ErrorSet, ExchangeOp, IdentityOp, PauliString
from .klverify import DEFAULT_FLOAT_TOL, verify_kl
from .qstate import Amplitude, StateVector, inner_product, orbit_sum

__all__ = [
    "phase_offdiag_term",
    "bitflip_cross_count",
    "zk_diag",
    "SupportPattern",
    "SolverResult",
    "solve_coefficients",
    "survey_patterns",
    "survey_7bit",
    "realize_code",
    "MAX_WEIGHTS_PER_WORD",
]

MAX_WEIGHTS_PER_WORD = 4

GRID_SPAN = 10.0
GRID_REFINEMENTS = 3


def _check_args(n: int, kappa: int, min_n: int = 2) -> None:
    if n < min_n:
        raise ValueError(f"need n >= {min_n}, got {n}")
    if not 0 <= kappa <= n:
        raise ValueError(f"need 0 <= kappa <= n, got kappa={kappa}")


def phase_offdiag_term(n: int, kappa: int) -> Fraction:
    """<Z_k w | Z_l w> for w = orbit_sum(n, kappa) and k != l.

    Each weight-kappa string contributes (+1 or -1)^2-type products whose
    signed count collapses to ((n-2k)^2 - n) / (n(n-1)) * C(n, kappa).
    """
    _check_args(n, kappa)
    return Fraction((n - 2 * kappa) ** 2 - n, n * (n - 1)) * math.comb(n, kappa)


def bitflip_cross_count(n: int, kappa: int) -> int:
    """<X_k w | X_l w> for w = orbit_sum(n, kappa) and k != l.

    A basis string supports a matching pair exactly when position k holds
    a 1 and position l a 0 or vice versa, with the remaining kappa-1 ones
    free among n-2 slots: 2*C(n-2, kappa-1) matches (none at kappa = 0).
    """
    _check_args(n, kappa)
    if kappa == 0:
        return 0
    return 2 * math.comb(n - 2, kappa - 1)


def zk_diag(n: int, kappa: int) -> Fraction:
    """<w | Z_k w> for w = orbit_sum(n, kappa), independent of k.

    The orbit splits by the bit at position k: C(n-1, kappa) strings gain
    +1 and C(n-1, kappa-1) gain -1, totalling (n-2*kappa)/n * C(n, kappa).
    """
    _check_args(n, kappa, min_n=1)
    return Fraction(n - 2 * kappa, n) * math.comb(n, kappa)


@dataclass(frozen=True)
class SupportPattern:
    """Which Hamming weights carry nonzero coefficients in each word."""

    n: int
    word0: frozenset[int]
    word1: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "word0", frozenset(self.word0))
        object.__setattr__(self, "word1", frozenset(self.word1))
        if not self.word0 or not self.word1:
            raise ValueError("each word needs at least one weight")
        bad = [k for k in self.word0 | self.word1 if not 0 <= k <= self.n]
        if bad:
            raise ValueError(f"weights out of range 0..{self.n}: {sorted(bad)}")
        if self.word0 & self.word1:
            raise ValueError(
                "weight sets must be disjoint (shared weights break "
                f"word orthogonality): {sorted(self.word0 & self.word1)}"
            )

    @property
    def is_complement_dual(self) -> bool:
        """True when word 1 uses exactly the complementary weights n - kappa."""
        return self.word1 == frozenset(self.n - k for k in self.word0)

    def describe(self) -> str:
        w0 = ",".join(str(k) for k in sorted(self.word0))
        w1 = ",".join(str(k) for k in sorted(self.word1))
        dual = " (complement-dual)" if self.is_complement_dual else ""
        return f"n={self.n} weights {{{w0}}} / {{{w1}}}{dual}"


class _OrbitGram:
    """Exact single-orbit Gram atoms <e O_kappa | f O_mu>, memoized.

    Orbit sums are invariant under every qubit permutation, so an atom
    only depends on the operator kinds, whether the two qubit positions
    coincide, and the weights: any pair of positions can be relabeled to
    (1, 2) by a permutation that fixes both orbit sums.
    """

    def __init__(self, n: int):
        self.n = n
        self._orbits: dict[int, StateVector] = {}
        self._memo: dict[tuple, tuple[Fraction, Fraction]] = {}

    def _orbit(self, kappa: int) -> StateVector:
        if kappa not in self._orbits:
            self._orbits[kappa] = orbit_sum(self.n, kappa)
        return self._orbits[kappa]

    def atom(
        self, tp: str, kp: int, tq: str, kq: int, kappa: int, mu: int
    ) -> tuple[Fraction, Fraction]:
        if tp == "I":
            key = ("I", 0, tq, 0 if tq == "I" else 1, kappa, mu)
        elif tq == "I":
            key = (tp, 1, "I", 0, kappa, mu)
        else:
            key = (tp, 1, tq, 1 if kp == kq else 2, kappa, mu)
        if key not in self._memo:
            left = self._image(key[0], key[1], kappa)
            right = self._image(key[2], key[3], mu)
            self._memo[key] = inner_product(left, right).as_gaussian()
        return self._memo[key]

    def _image(self, kind: str, qubit: int, kappa: int) -> StateVector:
        vec = self._orbit(kappa)
        if kind == "I":
            return vec
        return PauliString.single(self.n, kind, qubit).apply(vec)


@dataclass(frozen=True)
class _Constraint:
    """A homogeneous quadratic equation sum_ij c_ij x_i x_j = 0.

    ``terms`` maps index pairs (i <= j) into the pattern's variable list;
    ``origin`` records which Gram condition produced it.
    """

    terms: tuple[tuple[int, int, Fraction], ...]
    origin: str

    def is_diagonal(self) -> bool:
        return all(i == j for i, j, _ in self.terms)

    def is_sign_definite(self) -> bool:
        if not self.is_diagonal():
            return False
        signs = {c > 0 for _, _, c in self.terms}
        return len(signs) == 1

    def render(self, names: Sequence[str]) -> str:
        bits = []
        for i, j, c in self.terms:
            mono = f"{names[i]}^2" if i == j else f"{names[i]}*{names[j]}"
            bits.append(f"{c}*{mono}")
        return " + ".join(bits) + " = 0"


_FAMILY_OPS = {
    "single_pauli": "XYZ",
    "bitflip": "X",
    "phase": "Z",
}


def _op_descriptors(n: int, families: Sequence[str]) -> list[tuple[str, int]]:
    kinds = []
    for fam in families:
        if fam == "exchange":
            continue
        if fam not in _FAMILY_OPS:
            raise ValueError(
                f"unknown error family {fam!r}; pick from "
                f"{sorted(_FAMILY_OPS) + ['exchange']}"
            )
        kinds.extend(_FAMILY_OPS[fam])
    ops = [("I", 0)]
    for kind in kinds:
        ops.extend((kind, k) for k in range(1, n + 1))
    return ops


def _canonical(terms: dict[tuple[int, int], Fraction]) -> tuple | None:
    items = tuple(
        (i, j, c) for (i, j), c in sorted(terms.items()) if c != 0
    )
    if not items:
        return None
    lead = items[0][2]
    return tuple((i, j, c / lead) for i, j, c in items)


def _assemble_constraints(
    pattern: SupportPattern, families: Sequence[str]
) -> tuple[list[_Constraint], list[str], list[tuple[int, int]]]:
    """All correctability equations for the pattern, deduplicated.

    Returns (constraints, variable names, variable keys) where each key
    is (word, weight) in variable order and names render as a_kappa.
    """
    n = pattern.n
    keys = [(0, k) for k in sorted(pattern.word0)]
    keys += [(1, k) for k in sorted(pattern.word1)]
    index = {key: pos for pos, key in enumerate(keys)}
    names = [f"a_{k}" for _, k in keys]
    gram = _OrbitGram(n)
    ops = _op_descriptors(n, families)

    seen: dict[tuple, _Constraint] = {}

    def push(terms: dict[tuple[int, int], Fraction], origin: str) -> None:
        canon = _canonical(terms)
        if canon is not None and canon not in seen:
            seen[canon] = _Constraint(canon, origin)

    def accumulate(dest, i, j, value):
        key = (i, j) if i <= j else (j, i)
        dest[key] = dest.get(key, Fraction(0)) + value

    def op_name(op):
        return "I" if op[0] == "I" else f"{op[0]}{op[1]}"

    for a, p in enumerate(ops):
        for q in ops[a:]:
            re_terms: dict[tuple[int, int], Fraction] = {}
            im_terms: dict[tuple[int, int], Fraction] = {}
            for word, sign in ((0, 1), (1, -1)):
                weights = pattern.word0 if word == 0 else pattern.word1
                for ka in weights:
                    for mu in weights:
                        re, im = gram.atom(p[0], p[1], q[0], q[1], ka, mu)
                        i, j = index[(word, ka)], index[(word, mu)]
                        if re:
                            accumulate(re_terms, i, j, sign * re)
                        if im:
                            accumulate(im_terms, i, j, sign * im)
            origin = f"word blocks must agree at <{op_name(p)} w, {op_name(q)} w>"
            push(re_terms, origin)
            push(im_terms, origin + " (imaginary part)")
    for p in ops:
        for q in ops:
            re_terms = {}
            im_terms = {}
            for ka in pattern.word0:
                for mu in pattern.word1:
                    re, im = gram.atom(p[0], p[1], q[0], q[1], ka, mu)
                    i, j = index[(0, ka)], index[(1, mu)]
                    if re:
                        accumulate(re_terms, i, j, re)
                    if im:
                        accumulate(im_terms, i, j, im)
            origin = f"<{op_name(p)} w0, {op_name(q)} w1> must vanish"
            push(re_terms, origin)
            push(im_terms, origin + " (imaginary part)")
    return list(seen.values()), names, keys


@dataclass(frozen=True)
class SolverResult:
    pattern: SupportPattern
    families: tuple[str, ...]
    feasible: bool
    method: str  # sign-definite | exact-linear | linear-program | grid
    coefficients: dict[int, float] | None  # weight -> value, scale-free
    squares: dict[int, Fraction] | None  # exact squared values when known
    residual: float | None
    certificate: str | None
    notes: tuple[str, ...] = ()

    def to_lines(self) -> list[str]:
        lines = [
            f"pattern: {self.pattern.describe()}",
            f"families: {'+'.join(self.families)}",
            f"feasible: {str(self.feasible).lower()}",
            f"method: {self.method}",
        ]
        if self.coefficients is not None:
            for k in sorted(self.coefficients):
                lines.append(f"coefficient a_{k}: {self.coefficients[k]:.12g}")
        if self.squares is not None:
            for k in sorted(self.squares):
                lines.append(f"square a_{k}^2: {self.squares[k]}")
        if self.residual is not None:
            lines.append(f"residual: {self.residual:.3g}")
        if self.certificate is not None:
            lines.append(f"certificate: {self.certificate}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return lines


def realize_code(
    pattern: SupportPattern,
    coefficients: Mapping[int, float],
    squares: Mapping[int, Fraction] | None = None,
    label: str = "searched",
) -> Code:
    """Build the code a coefficient assignment describes.

    With exact ``squares`` the words use surd amplitudes sign-matched to
    ``coefficients``; otherwise float amplitudes.
    """
    maps = []
    for weights in (sorted(pattern.word0), sorted(pattern.word1)):
        entry: dict[int, Amplitude | float] = {}
        for k in weights:
            if squares is not None:
                s = Fraction(squares[k])
                if s == 0:
                    continue
                amp = Amplitude.make(
                    Fraction(1, s.denominator), 0, s.numerator * s.denominator
                )
                if coefficients[k] < 0:
                    amp = amp.scaled(-1)
                entry[k] = amp
            else:
                entry[k] = coefficients[k]
        maps.append(entry)
    if squares is not None:
        spec = PermInvariantSpec(pattern.n, tuple(maps))
        return perm_invariant_code(spec, label=label)
    words = []
    for entry in maps:
        dense = np.zeros(1 << pattern.n, dtype=np.complex128)
        for k, value in entry.items():
            dense += value * orbit_sum(pattern.n, k).to_float().dense
        words.append(StateVector.from_dense(pattern.n, dense))
    return Code(pattern.n, tuple(words), label=label)


def _verification_errors(n: int, families: Sequence[str]) -> ErrorSet:
    ops: list = [IdentityOp(n)]
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            ops.append(ExchangeOp(n, j, k))
    kinds = []
    for fam in families:
        if fam != "exchange":
            kinds.extend(_FAMILY_OPS[fam])
    for kind in kinds:
        for k in range(1, n + 1):
            ops.append(PauliString.single(n, kind, k))
    return ErrorSet(n, tuple(ops))


def _gate(
    pattern: SupportPattern,
    families: Sequence[str],
    coefficients: dict[int, float],
    squares: dict[int, Fraction] | None,
) -> tuple[bool, float]:
    """Re-verify a candidate through the full correctability checker.

    Exchange operators are always included: they fix every weight-orbit
    word, so they cost nothing and confirm the pattern's built-in
    immunity.  Returns (passed, worst violation magnitude).
    """
    code = realize_code(pattern, coefficients, squares)
    errors = _verification_errors(pattern.n, families)
    if squares is None:
        code = code.to_float()
    report = verify_kl(code, errors, tol=None if squares else DEFAULT_FLOAT_TOL)
    worst = max((v.magnitude for v in report.violations), default=0.0)
    return report.correctable, worst


def _forced_zero_analysis(
    constraints: list[_Constraint], names: list[str], keys: list[tuple[int, int]]
) -> tuple[str, _Constraint] | None:
    """Propagate sign-definite constraints; detect a word forced to zero."""
    zero: set[int] = set()
    cause: dict[int, _Constraint] = {}
    changed = True
    while changed:
        changed = False
        for con in constraints:
            live = [(i, j, c) for i, j, c in con.terms if i not in zero and j not in zero]
            if not live:
                continue
            if all(i == j for i, j, _ in live) and len({c > 0 for _, _, c in live}) == 1:
                for i, _, _ in live:
                    if i not in zero:
                        zero.add(i)
                        cause[i] = con
                        changed = True
    for word in (0, 1):
        members = [pos for pos, (w, _) in enumerate(keys) if w == word]
        if members and all(pos in zero for pos in members):
            con = cause[members[0]]
            return (
                f"{con.render(names)} (from: {con.origin}); every term is a "
                "square with same-signed coefficient, so the listed "
                f"coefficients must all vanish, leaving word {word} zero",
                con,
            )
    return None


def _solve_diagonal(
    pattern: SupportPattern,
    constraints: list[_Constraint],
    names: list[str],
    keys: list[tuple[int, int]],
    families: Sequence[str],
) -> SolverResult:
    """Exact path: every constraint linear in the squared coefficients."""
    d = len(keys)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for con in constraints:
        row = [Fraction(0)] * d
        for i, _, c in con.terms:
            row[i] += c
        rows.append(row)
        rhs.append(Fraction(0))
    # fix the free overall scale: word-0 squared norm = 1
    norm_row = [Fraction(0)] * d
    for pos, (w, k) in enumerate(keys):
        if w == 0:
            norm_row[pos] = Fraction(math.comb(pattern.n, k))
    rows.append(norm_row)
    rhs.append(Fraction(1))

    from ._linalg import solve_rational

    status, solution, free_cols = solve_rational(rows, rhs)
    if status == "inconsistent":
        return SolverResult(
            pattern, tuple(families), False, "exact-linear", None, None, None,
            "the linear system in the squared coefficients is inconsistent "
            "(exact elimination)",
        )
    if status == "unique":
        negative = [pos for pos, s in enumerate(solution) if s < 0]
        if negative:
            pos = negative[0]
            return SolverResult(
                pattern, tuple(families), False, "exact-linear", None, None, None,
                f"unique exact solution needs {names[pos]}^2 = "
                f"{solution[pos]} < 0",
            )
        squares = {k: solution[pos] for pos, (_, k) in enumerate(keys)}
        coefficients = {
            k: math.sqrt(float(s)) for k, s in squares.items()
        }
        ok, worst = _gate(pattern, families, coefficients, squares)
        if not ok:
            return SolverResult(
                pattern, tuple(families), False, "exact-linear",
                coefficients, squares, worst, None,
                ("diagonal solution failed full re-verification",),
            )
        return SolverResult(
            pattern, tuple(families), True, "exact-linear",
            coefficients, squares, 0.0, None,
        )
    # underdetermined: ask a feasibility LP for nonnegative squares
    A = np.array([[float(c) for c in row] for row in rows])
    b = np.array([float(v) for v in rhs])
    lp = scipy.optimize.linprog(
        c=np.zeros(d), A_eq=A, b_eq=b, bounds=[(0, None)] * d, method="highs"
    )
    if not lp.success:
        return SolverResult(
            pattern, tuple(families), False, "linear-program", None, None, None,
            None,
            (
                "no solution found: the squared-coefficient system is "
                "underdetermined and the nonnegativity program is infeasible",
            ),
        )
    squares_f = {k: lp.x[pos] for pos, (_, k) in enumerate(keys)}
    squares = {k: Fraction(v).limit_denominator(10**9) for k, v in squares_f.items()}
    coefficients = {k: math.sqrt(max(v, 0.0)) for k, v in squares_f.items()}
    ok, worst = _gate(pattern, families, coefficients, squares)
    if ok:
        return SolverResult(
            pattern, tuple(families), True, "linear-program",
            coefficients, squares, 0.0, None,
            ("squares recovered from an interior-point solution, then "
             "verified exactly",),
        )
    ok, worst = _gate(pattern, families, coefficients, None)
    if ok:
        return SolverResult(
            pattern, tuple(families), True, "linear-program",
            coefficients, None, worst, None,
        )
    return SolverResult(
        pattern, tuple(families), False, "linear-program",
        None, None, worst, None,
        ("no solution found: the linear-program candidate failed "
         "re-verification",),
    )


def _grid_points(free_dims: int) -> int:
    if free_dims <= 3:
        return 101
    if free_dims == 4:
        return 21
    return 9


def _grid_search(
    pattern: SupportPattern,
    constraints: list[_Constraint],
    names: list[str],
    keys: list[tuple[int, int]],
    families: Sequence[str],
) -> SolverResult:
    """Numerical path: grid over coefficient ratios, then local refinement.

    The leading coefficient of each word is pinned to 1 (patterns declare
    their weights nonzero, and per-word global sign is immaterial), word 1
    carries a scale factor chosen to equalize the two squared norms, and
    the remaining ratios sweep [-span, span].
    """
    n = pattern.n
    d = len(keys)
    word0_len = len(pattern.word0)
    free = [pos for pos in range(d) if pos not in (0, word0_len)]
    f = len(free)

    norm0 = np.zeros(d)
    norm1 = np.zeros(d)
    for pos, (w, k) in enumerate(keys):
        (norm0 if w == 0 else norm1)[pos] = math.comb(n, k)

    con_terms = [
        [(i, j, float(c)) for i, j, c in con.terms] for con in constraints
    ]

    def residuals(points: np.ndarray) -> np.ndarray:
        """points: (P, d) full coefficient vectors -> (P,) max |constraint|."""
        worst = np.zeros(len(points))
        for terms in con_terms:
            val = np.zeros(len(points))
            for i, j, c in terms:
                val += c * points[:, i] * points[:, j]
            np.maximum(worst, np.abs(val), out=worst)
        return worst

    def expand(ratios: np.ndarray) -> np.ndarray:
        """ratios: (P, f) -> (P, d) with pins and norm-balancing scale."""
        P = len(ratios)
        pts = np.empty((P, d))
        pts[:, 0] = 1.0
        pts[:, word0_len] = 1.0
        for col, pos in enumerate(free):
            pts[:, pos] = ratios[:, col]
        n0 = (pts * pts) @ norm0
        n1 = (pts * pts) @ norm1
        scale = np.sqrt(n0 / n1)
        mask = np.zeros(d)
        for pos, (w, _) in enumerate(keys):
            if w == 1:
                mask[pos] = 1.0
        pts = pts * (1 + (scale[:, None] - 1) * mask[None, :])
        return pts

    centers = np.zeros(f)
    span = GRID_SPAN
    best_pt = expand(centers[None, :])[0]
    best_res = float(residuals(best_pt[None, :])[0])
    points_per_dim = _grid_points(f)
    for _ in range(GRID_REFINEMENTS + 1):
        if f == 0:
            break
        axes = [
            np.linspace(c - span, c + span, points_per_dim) for c in centers
        ]
        mesh = np.meshgrid(*axes, indexing="ij")
        ratios = np.stack([m.ravel() for m in mesh], axis=1)
        pts = expand(ratios)
        res = residuals(pts)
        arg = int(np.argmin(res))
        if res[arg] < best_res:
            best_res = float(res[arg])
            best_pt = pts[arg]
            centers = ratios[arg]
        span /= 10.0

    def vector_residuals(x: np.ndarray) -> np.ndarray:
        out = [sum(c * x[i] * x[j] for i, j, c in terms) for terms in con_terms]
        out.append(float((x * x) @ norm0 - 1.0))
        return np.asarray(out)

    start = best_pt / math.sqrt(float((best_pt * best_pt) @ norm0))
    fit = scipy.optimize.least_squares(vector_residuals, start, xtol=1e-15, ftol=1e-15)
    x = fit.x
    polished = float(np.max(np.abs(vector_residuals(x)[:-1]))) if con_terms else 0.0
    coefficients = {k: float(x[pos]) for pos, (_, k) in enumerate(keys)}
    resolution = 2 * GRID_SPAN / (points_per_dim - 1) / 10**GRID_REFINEMENTS if f else 0.0
    if polished < 1e-10:
        ok, worst = _gate(pattern, families, coefficients, None)
        if ok:
            return SolverResult(
                pattern, tuple(families), True, "grid",
                coefficients, None, polished, None,
                (f"grid {points_per_dim} points/dim over [-{GRID_SPAN:g}, "
                 f"{GRID_SPAN:g}], {GRID_REFINEMENTS} refinements, "
                 "least-squares polish, full re-verification",),
            )
    return SolverResult(
        pattern, tuple(families), False, "grid", None, None,
        min(best_res, polished), None,
        (f"no solution found down to ratio resolution {resolution:g} "
         f"(best residual {min(best_res, polished):.3g}); numerical "
         "evidence, not a proof",),
    )


def solve_coefficients(
    pattern: SupportPattern, families: Sequence[str] = ("single_pauli",)
) -> SolverResult:
    """Decide whether a weight pattern supports a correctable code.

    The constraint system is assembled exactly from single-orbit Gram
    atoms.  Sign-definite constraints give certified infeasibility; a
    fully diagonal system is solved exactly in the squared coefficients;
    anything else falls back to grid search.  Feasible answers are always
    re-verified on the realized code (exchange operators included).
    """
    if len(pattern.word0) > MAX_WEIGHTS_PER_WORD or len(pattern.word1) > MAX_WEIGHTS_PER_WORD:
        raise CapabilityError(
            f"patterns are limited to {MAX_WEIGHTS_PER_WORD} weights per word"
        )
    fams = tuple(families)
    constraints, names, keys = _assemble_constraints(pattern, fams)
    notes = []
    if "exchange" in fams:
        notes.append(
            "exchange operators fix weight-orbit words, so they add no "
            "constraints; feasibility matches the exchange-free run"
        )
    forced = _forced_zero_analysis(constraints, names, keys)
    if forced is not None:
        text, _ = forced
        result = SolverResult(
            pattern, fams, False, "sign-definite", None, None, None, text,
            tuple(notes),
        )
        return result
    if all(con.is_diagonal() for con in constraints):
        result = _solve_diagonal(pattern, constraints, names, keys, fams)
    else:
        result = _grid_search(pattern, constraints, names, keys, fams)
    if notes:
        result = SolverResult(
            result.pattern, result.families, result.feasible, result.method,
            result.coefficients, result.squares, result.residual,
            result.certificate, tuple(notes) + result.notes,
        )
    return result


def survey_patterns(
    n: int,
    max_weights: int = 3,
    families: Sequence[str] = ("single_pauli",),
) -> list[SolverResult]:
    """Run the solver over every complement-dual pattern for n qubits.

    Patterns pair each weight set K with its mirror {n - kappa}; mirrors
    that overlap K are skipped (they would break word orthogonality), and
    each unordered {K, mirror} pair is visited once.  Results come back
    in sorted pattern order.
    """
    if max_weights > MAX_WEIGHTS_PER_WORD:
        raise CapabilityError(
            f"patterns are limited to {MAX_WEIGHTS_PER_WORD} weights per word"
        )
    seen: set[tuple[int, ...]] = set()
    patterns: list[SupportPattern] = []
    for size in range(1, max_weights + 1):
        for combo in combinations(range(n + 1), size):
            mirror = tuple(sorted(n - k for k in combo))
            if set(combo) & set(mirror):
                continue
            key = min(combo, mirror)
            if key in seen:
                continue
            seen.add(key)
            patterns.append(SupportPattern(n, frozenset(combo), frozenset(mirror)))
    patterns.sort(key=lambda p: (len(p.word0), tuple(sorted(p.word0))))
    return [solve_coefficients(p, families) for p in patterns]


def survey_7bit(families: Sequence[str] = ("single_pauli",)) -> list[SolverResult]:
    """The 7-qubit sweep: every dual pattern with up to 3 weights per word."""
    return survey_patterns(7, max_weights=3, families=families)
