"""Shared exception types."""

from __future__ import annotations


class DimensionMismatch(ValueError):
    """Operands act on different qubit counts or out-of-range qubit indices."""


class ExactArithmeticError(ValueError):
    """An exact-mode operation would leave the single-surd amplitude form.

    Raised e.g. when adding amplitudes with different radicands on the same
    basis state.  Converting the states to float mode first avoids this.
    """


class InvalidCodeError(ValueError):
    """Candidate codewords violate orthogonality or the equal-norm rule.

    ``offenders`` lists tuples ``(i, j, value)`` of word indices together
    with the offending inner product (``i == j`` marks a norm mismatch
    against word 0).
    """

    def __init__(self, message: str, offenders=None):
        super().__init__(message)
        self.offenders = list(offenders or [])


class CodeParseError(ValueError):
    """Malformed code file; carries 1-based ``line`` and ``column``."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ScanTooLarge(RuntimeError):
    """A requested brute-force scan exceeds the supported problem size."""


class CapabilityError(ValueError):
    """The requested problem shape is outside what the solver supports."""
