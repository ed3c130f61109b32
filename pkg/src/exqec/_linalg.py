"""Tiny exact linear algebra helpers: GF(2) rank and rational elimination."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["gf2_rank", "rational_rank", "solve_rational"]


def gf2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank over GF(2) of rows given as integer bitmasks."""
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
            if len(pivots) == n_cols:
                break
    return len(pivots)


def rational_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank of a matrix of Fractions by Gaussian elimination."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve_rational(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> tuple[str, list[Fraction] | None, list[int]]:
    """Solve ``A x = b`` exactly.

    Returns ``(status, solution, free_columns)`` where status is one of
    ``"unique"``, ``"underdetermined"`` (solution is one particular point
    with free columns set to zero) or ``"inconsistent"`` (solution None).
    """
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivot_cols: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        pivot_cols.append(col)
        rank += 1
    for r in range(rank, len(rows)):
        if rows[r][ncols] != 0:
            return "inconsistent", None, []
    free = [c for c in range(ncols) if c not in pivot_cols]
    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivot_cols):
        solution[col] = rows[r][ncols]
    status = "unique" if not free else "underdetermined"
    return status, solution, free
