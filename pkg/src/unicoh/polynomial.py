"""Dense integer polynomials in the indeterminate q.

Coefficients are arbitrary-precision Python ints, stored lowest power first
with no trailing (leading-power) zeros.  Division is exact division: a
nonzero remainder raises rather than silently passing to rationals.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ExactDivisionError


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Immutable integer polynomial; () is the zero polynomial."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def q_power(cls, k: int) -> "IntPolynomial":
        """q**k."""
        if k < 0:
            raise ValueError("negative power")
        return cls([0] * k + [1])

    @classmethod
    def monomial(cls, k: int, c: int) -> "IntPolynomial":
        return cls([0] * k + [c]) if c else cls(())

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1 by convention."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, q0: int) -> int:
        """Evaluate at an integer, exactly (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division over the integers.

        Every elimination step must divide exactly in the leading
        coefficient, otherwise ExactDivisionError is raised.  (All divisors
        used in this library are monic, so the step always succeeds.)
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            return IntPolynomial(()), self
        quot = [0] * (dq + 1)
        lead = div[-1]
        for k in range(dq, -1, -1):
            top = rem[k + len(div) - 1]
            if top % lead != 0:
                raise ExactDivisionError(
                    f"leading coefficient {top} not divisible by {lead}"
                )
            c = top // lead
            quot[k] = c
            if c:
                for j, d in enumerate(div):
                    rem[k + j] -= c * d
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Divide, requiring a zero remainder."""
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ExactDivisionError(f"nonzero remainder {rem} dividing {self} by {other}")
        return quot

    def __floordiv__(self, other) -> "IntPolynomial":
        return self.exact_div(self._coerce(other))

    # -- presentation ----------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}q" if k == 1 else f"{mag}q^{k}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, lowest power first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "IntPolynomial":
        return cls([int(s) for s in data])


def prod(factors: Iterable[IntPolynomial]) -> IntPolynomial:
    acc = IntPolynomial.one()
    for f in factors:
        acc = acc * f
    return acc


def q_minus_sign(j: int) -> IntPolynomial:
    """q**j - (-1)**j, the factor attached to unitary groups."""
    return IntPolynomial.q_power(j) - IntPolynomial.constant((-1) ** j)


def q_minus_one(j: int) -> IntPolynomial:
    """q**j - 1, the factor attached to general linear groups."""
    return IntPolynomial.q_power(j) - IntPolynomial.one()
