"""Labels and generic degrees of unipotent representations of GL_n(q) and U_n(q).

Two labelings are supported: by a partition of n, and (for the unitary
group) by a symbol triple (t, alpha, beta) recording the cuspidal support
staircase(t) and a bipartition.  Generic degrees are exact integer
polynomials in q produced by the hook formulas; the division is performed
once, numerator by denominator, and any nonzero remainder is a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .errors import ExactDivisionError
from .partitions import (
    Bipartition,
    Partition,
    from_core_quotient,
    hook_lengths,
    staircase,
    two_core,
    two_quotient,
)
from .polynomial import IntPolynomial, prod, q_minus_one, q_minus_sign


def a_exponent(lam: Partition) -> int:
    """The q-power prefix exponent sum((i-1) * lam_i)."""
    return sum(i * p for i, p in enumerate(Partition(lam)))


def _hooks_flat(lam: Partition) -> list[int]:
    return [h for row in hook_lengths(lam) for h in row]


@cache
def degree_gl(lam: Partition) -> IntPolynomial:
    """Generic degree of the unipotent representation of GL_n(q) labelled by lam."""
    lam = Partition(lam)
    n = lam.size
    num = IntPolynomial.q_power(a_exponent(lam)) * prod(q_minus_one(i) for i in range(1, n + 1))
    den = prod(q_minus_one(h) for h in _hooks_flat(lam))
    try:
        return num.exact_div(den)
    except ExactDivisionError as exc:  # cannot happen for a valid partition
        raise ExactDivisionError(f"GL degree of {tuple(lam)} not polynomial: {exc}") from exc


@cache
def degree_u(lam: Partition) -> IntPolynomial:
    """Generic degree of the unipotent representation of U_n(q) labelled by lam."""
    lam = Partition(lam)
    n = lam.size
    num = IntPolynomial.q_power(a_exponent(lam)) * prod(q_minus_sign(i) for i in range(1, n + 1))
    den = prod(q_minus_sign(h) for h in _hooks_flat(lam))
    try:
        return num.exact_div(den)
    except ExactDivisionError as exc:
        raise ExactDivisionError(f"U degree of {tuple(lam)} not polynomial: {exc}") from exc


def degree_gl_at(lam: Partition, q0: int) -> int:
    return degree_gl(lam)(q0)


def degree_u_at(lam: Partition, q0: int) -> int:
    return degree_u(lam)(q0)


@dataclass(frozen=True, order=True)
class SymbolLabel:
    """Cuspidal-support label (t, alpha, beta) of a unipotent representation of U_n(q)."""

    t: int
    alpha: Partition
    beta: Partition

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("cuspidal support index must be nonnegative")

    @property
    def rank(self) -> int:
        """Rank n = 2(|alpha| + |beta|) + t(t+1)/2 of the ambient unitary group."""
        return 2 * (self.alpha.size + self.beta.size) + self.t * (self.t + 1) // 2

    @property
    def bipartition(self) -> Bipartition:
        return Bipartition(self.alpha, self.beta)

    def to_json(self) -> dict:
        return {"t": self.t, "alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_json(cls, data: dict) -> "SymbolLabel":
        return cls(int(data["t"]), Partition(data["alpha"]), Partition(data["beta"]))


def symbol(t: int, alpha, beta) -> SymbolLabel:
    return SymbolLabel(t, Partition(alpha), Partition(beta))


def to_symbol(lam: Partition) -> SymbolLabel:
    """Translate a partition label of U_n(q) into its symbol triple.

    The bipartition is the 2-quotient, with the two components swapped when
    the 2-core index t is odd.
    """
    lam = Partition(lam)
    t = two_core(lam)
    q0, q1 = two_quotient(lam)
    if t % 2 == 0:
        return SymbolLabel(t, q0, q1)
    return SymbolLabel(t, q1, q0)


def from_symbol(sym: SymbolLabel) -> Partition:
    """Inverse of to_symbol."""
    if sym.t % 2 == 0:
        quotient = Bipartition(sym.alpha, sym.beta)
    else:
        quotient = Bipartition(sym.beta, sym.alpha)
    return from_core_quotient(sym.t, quotient)


def symbol_degree(sym: SymbolLabel) -> IntPolynomial:
    return degree_u(from_symbol(sym))


@dataclass(frozen=True)
class HCSeries:
    """Harish-Chandra series data of a unipotent representation of U_n(q)."""

    t: int
    n: int
    principal: bool
    cuspidal: bool

    @property
    def weyl_rank(self) -> int:
        """Rank a of the relative Weyl group W_a attached to the series."""
        return (self.n - self.t * (self.t + 1) // 2) // 2


def hc_series(lam: Partition) -> HCSeries:
    """Series membership of the unipotent representation of U_n(q) labelled by lam.

    The series index is the 2-core staircase index; the principal series is
    t = 0 for n even and t = 1 for n odd; the label is cuspidal exactly when
    it equals its own 2-core.
    """
    lam = Partition(lam)
    n = lam.size
    t = two_core(lam)
    principal = t == (n % 2)
    cuspidal = lam == staircase(t)
    return HCSeries(t=t, n=n, principal=principal, cuspidal=cuspidal)


def cuspidal_partition(n: int):
    """The unique unipotent cuspidal label of U_n(q), or None.

    One exists iff n is triangular, in which case it is the staircase.
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    t = 0
    while t * (t + 1) // 2 < n:
        t += 1
    if t * (t + 1) // 2 == n:
        return staircase(t)
    return None
