"""Exceptions shared across the library."""


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder where an exact result was required."""


class VerificationError(RuntimeError):
    """An internal cross-check (dual-path computation, bookkeeping guard) failed."""


class RankCapError(ValueError):
    """A brute-force or enumeration helper was asked for a rank above its cost guard."""
