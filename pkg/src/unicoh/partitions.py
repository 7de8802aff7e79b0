"""Partitions, beta-sets, border strips, 2-cores and 2-quotients.

A partition is stored canonically as a weakly decreasing tuple of positive
integers; trailing zeros passed to the constructor are trimmed.  All values
here are immutable, so they are safe hash keys for memoisation and safe to
share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {p} in {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def rows(self) -> int:
        return len(self)

    def transpose(self) -> "Partition":
        """Conjugate diagram (column lengths); an involution."""
        if not self:
            return Partition()
        cols = [0] * self[0]
        for p in self:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


EMPTY = Partition()


class Bipartition(NamedTuple):
    first: Partition
    second: Partition

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    @classmethod
    def of(cls, first: Iterable[int], second: Iterable[int]) -> "Bipartition":
        return cls(Partition(first), Partition(second))


class BetaSet(NamedTuple):
    """First-column hook lengths beta_i = lambda_i + rows - i at a fixed row count."""

    values: tuple[int, ...]
    rows: int

    def partition(self) -> Partition:
        """Invert: lambda_i = beta_i + i - rows (1-indexed)."""
        r = self.rows
        return Partition(b + (i + 1) - r for i, b in enumerate(self.values))


class BorderStrip(NamedTuple):
    """A removable border strip: its size, height (rows spanned minus 1),
    the partition left after removal, and for bipartition labels which
    component it was removed from ("first"/"second", else None)."""

    size: int
    height: int
    result: Partition
    host: Optional[str] = None


class CoreQuotient(NamedTuple):
    """2-core staircase index together with the 2-quotient bipartition."""

    core_index: int
    quotient: Bipartition


def staircase(t: int) -> Partition:
    """The staircase partition (t, t-1, ..., 1); t = 0 gives the empty partition."""
    if t < 0:
        raise ValueError("staircase index must be nonnegative")
    return Partition(range(t, 0, -1))


def beta_set(lam: Partition, rows: Optional[int] = None) -> BetaSet:
    """Beta-set of lam at the given row count (default: number of nonzero parts)."""
    lam = Partition(lam)
    if rows is None:
        rows = len(lam)
    if rows < len(lam):
        raise ValueError(f"row count {rows} below number of parts {len(lam)}")
    padded = tuple(lam) + (0,) * (rows - len(lam))
    return BetaSet(tuple(padded[i] + rows - (i + 1) for i in range(rows)), rows)


def partition_from_beta_values(values: Iterable[int]) -> Partition:
    """Rebuild a partition from strictly decreasing nonnegative beta values."""
    values = tuple(values)
    for i in range(len(values) - 1):
        if values[i] <= values[i + 1]:
            raise ValueError(f"beta values must be strictly decreasing, got {values}")
    if values and values[-1] < 0:
        raise ValueError("beta values must be nonnegative")
    return BetaSet(values, len(values)).partition()


def hook_lengths(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """Hook length of every box, row by row: arm + leg + 1."""
    lam = Partition(lam)
    conj = lam.transpose()
    return tuple(
        tuple(lam[i] - (j + 1) + conj[j] - (i + 1) + 1 for j in range(lam[i]))
        for i in range(len(lam))
    )


def border_strips(lam: Partition, size: int) -> tuple[BorderStrip, ...]:
    """All removable border strips of the given size.

    Removing a strip of size x is the beta-set move beta_i -> beta_i - x
    landing on a free nonnegative value; the height is the number of beta
    values strictly between beta_i - x and beta_i.
    """
    lam = Partition(lam)
    if size <= 0:
        raise ValueError("strip size must be positive")
    values = beta_set(lam).values
    occupied = set(values)
    strips = []
    for i, b in enumerate(values):
        target = b - size
        if target < 0 or target in occupied:
            continue
        height = sum(1 for v in values if target < v < b)
        moved = sorted((v for v in values if v != b), reverse=True)
        pos = 0
        while pos < len(moved) and moved[pos] > target:
            pos += 1
        moved.insert(pos, target)
        strips.append(BorderStrip(size, height, BetaSet(tuple(moved), len(moved)).partition()))
    return tuple(strips)


def two_core(lam: Partition) -> int:
    """Staircase index t of the 2-core, reached by removing dominoes until none remain."""
    return len(two_core_partition(lam))


def two_core_partition(lam: Partition) -> Partition:
    lam = Partition(lam)
    while True:
        strips = border_strips(lam, 2)
        if not strips:
            return lam
        lam = strips[0].result


def two_quotient(lam: Partition, rows: Optional[int] = None) -> Bipartition:
    """2-quotient: split the beta-set by parity, halve, and order by row-count parity.

    The result does not depend on padding lam with zero rows; the default
    row count is the number of nonzero parts.
    """
    lam = Partition(lam)
    if rows is None:
        rows = len(lam)
    values = beta_set(lam, rows).values
    halved_even = tuple(b // 2 for b in values if b % 2 == 0)
    halved_odd = tuple((b - 1) // 2 for b in values if b % 2 == 1)
    mu0 = partition_from_beta_values(halved_even)
    mu1 = partition_from_beta_values(halved_odd)
    if rows % 2 == 1:
        return Bipartition(mu0, mu1)
    return Bipartition(mu1, mu0)


def core_quotient(lam: Partition) -> CoreQuotient:
    return CoreQuotient(two_core(lam), two_quotient(lam))


def from_core_quotient(t: int, quotient: Bipartition) -> Partition:
    """The unique partition with 2-core staircase(t) and the given 2-quotient.

    Constructive inverse: at an odd row count R the quotient components sit
    on the even and odd beta values in that order, and the parity counts are
    those of the beta-set of staircase(t) at R.  The beta values of the two
    components are doubled (resp. doubled plus one) and interleaved.
    """
    if t < 0:
        raise ValueError("core index must be nonnegative")
    first, second = Partition(quotient[0]), Partition(quotient[1])
    rows = 2 * (t + len(first) + len(second) + 1) + 1
    core_values = beta_set(staircase(t), rows).values
    n_even = sum(1 for b in core_values if b % 2 == 0)
    n_odd = rows - n_even
    b0 = beta_set(first, n_even).values
    b1 = beta_set(second, n_odd).values
    merged = sorted([2 * b for b in b0] + [2 * b + 1 for b in b1], reverse=True)
    lam = BetaSet(tuple(merged), rows).partition()
    # |lam| = t(t+1)/2 + 2|quotient| is forced by the construction.
    assert lam.size == t * (t + 1) // 2 + 2 * (first.size + second.size)
    return lam


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield EMPTY
        return

    def gen(remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from gen(remaining - part, part, prefix)
            prefix.pop()

    yield from gen(n, n, [])


def bipartitions_of(n: int) -> Iterator[Bipartition]:
    """All bipartitions of n, first component major, descending."""
    for j in range(n, -1, -1):
        for first in partitions_of(j):
            for second in partitions_of(n - j):
                yield Bipartition(first, second)
