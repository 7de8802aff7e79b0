"""Harish-Chandra induction of unipotent representations of U_n(q).

Everything is computed on the Coxeter-group side of the comparison
dictionary: induction and restriction through a maximal chain of Levi
subgroups reduce to the type-B Pieri rule (add or delete boxes, no two in
the same column).  A Frobenius-reciprocity oracle built from explicit
character tables cross-checks the rule at small rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import factorial
from typing import Iterable, Iterator, Mapping

from .errors import RankCapError
from . import weyl_characters
from .partitions import Bipartition, Partition, partitions_of
from .polynomial import IntPolynomial
from .unipotent import SymbolLabel, symbol_degree

ORACLE_RANK_CAP = 6


# -- horizontal strips ---------------------------------------------------


def add_horizontal_strips(lam: Partition, boxes: int) -> Iterator[Partition]:
    """All partitions obtained from lam by adding `boxes` boxes, no two in a column.

    Equivalently all mu >= lam interlacing lam: mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...
    """
    lam = Partition(lam)
    if boxes < 0:
        raise ValueError("cannot add a negative number of boxes")

    padded = tuple(lam) + (0,)

    def build(i: int, remaining: int, upper: int, prefix: list[int]) -> Iterator[Partition]:
        if i == len(padded):
            if remaining == 0:
                yield Partition(prefix)
            return
        low = padded[i]
        high = min(upper, low + remaining)
        for val in range(high, low - 1, -1):
            prefix.append(val)
            yield from build(i + 1, remaining - (val - low), low, prefix)
            prefix.pop()

    yield from build(0, boxes, (lam[0] if lam else 0) + boxes, [])


def remove_horizontal_strips(lam: Partition, boxes: int) -> Iterator[Partition]:
    """All partitions obtained from lam by deleting `boxes` boxes, no two in a column."""
    lam = Partition(lam)
    if boxes < 0:
        raise ValueError("cannot delete a negative number of boxes")
    if boxes > lam.size:
        return

    padded = tuple(lam) + (0,)

    def build(i: int, remaining: int, prefix: list[int]) -> Iterator[Partition]:
        if i == len(lam):
            if remaining == 0:
                yield Partition(prefix)
            return
        low = max(padded[i + 1], padded[i] - remaining)
        for val in range(padded[i], low - 1, -1):
            prefix.append(val)
            yield from build(i + 1, remaining - (padded[i] - val), prefix)
            prefix.pop()

    yield from build(0, boxes, [])


# -- Pieri rule ----------------------------------------------------------


def pieri_induce(start: Bipartition, boxes: int) -> tuple[Bipartition, ...]:
    """Constituents of Ind(chi_start x trivial) from W_r x S_boxes to W_{r+boxes}.

    Multiplicity-free: split the boxes between the two components in every
    way and add each share as a horizontal strip.
    """
    results = []
    for d in range(boxes + 1):
        for first in add_horizontal_strips(start.first, d):
            for second in add_horizontal_strips(start.second, boxes - d):
                results.append(Bipartition(first, second))
    return tuple(sorted(results, key=weyl_characters.label_sort_key))


def pieri_restrict(start: Bipartition, boxes: int) -> tuple[Bipartition, ...]:
    """Constituents of the restriction from W_a to W_{a-boxes} (times S_boxes, trivial part)."""
    if boxes > start.size:
        raise ValueError(f"cannot delete {boxes} boxes from a bipartition of {start.size}")
    results = []
    for d in range(boxes + 1):
        for first in remove_horizontal_strips(start.first, d):
            for second in remove_horizontal_strips(start.second, boxes - d):
                results.append(Bipartition(first, second))
    return tuple(sorted(results, key=weyl_characters.label_sort_key))


# -- multisets of unipotent labels ----------------------------------------


class RepMultiset:
    """Multiset of symbol labels with positive multiplicities.

    All labels must share the same cuspidal support t and ambient rank n.
    """

    __slots__ = ("counts",)

    def __init__(self, items: Mapping[SymbolLabel, int] | Iterable[SymbolLabel] = ()):
        counts: dict[SymbolLabel, int] = {}
        if isinstance(items, Mapping):
            pairs = items.items()
        else:
            pairs = ((label, 1) for label in items)
        for label, mult in pairs:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult:
                counts[label] = counts.get(label, 0) + mult
        supports = {(label.t, label.rank) for label in counts}
        if len(supports) > 1:
            raise ValueError(f"mixed cuspidal supports in one multiset: {supports}")
        object.__setattr__(self, "counts", counts)

    def __setattr__(self, name, value):
        raise AttributeError("RepMultiset is immutable")

    def __len__(self) -> int:
        return sum(self.counts.values())

    def __iter__(self) -> Iterator[SymbolLabel]:
        return iter(self.sorted_labels())

    def __contains__(self, label: SymbolLabel) -> bool:
        return label in self.counts

    def __eq__(self, other) -> bool:
        return isinstance(other, RepMultiset) and self.counts == other.counts

    def __hash__(self) -> int:
        return hash(frozenset(self.counts.items()))

    def __repr__(self) -> str:
        body = ", ".join(
            f"(t={l.t}, {tuple(l.alpha)}, {tuple(l.beta)})x{m}" for l, m in sorted(self.counts.items())
        )
        return f"RepMultiset({{{body}}})"

    def multiplicity(self, label: SymbolLabel) -> int:
        return self.counts.get(label, 0)

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self.counts.values())

    def sorted_labels(self) -> list[SymbolLabel]:
        return sorted(
            self.counts,
            key=lambda l: (
                l.t,
                weyl_characters.label_sort_key(Bipartition(l.alpha, l.beta)),
            ),
        )

    def union(self, other: "RepMultiset") -> "RepMultiset":
        merged = dict(self.counts)
        for label, mult in other.counts.items():
            merged[label] = merged.get(label, 0) + mult
        return RepMultiset(merged)

    def intersection(self, other: "RepMultiset") -> "RepMultiset":
        return RepMultiset(
            {l: min(m, other.counts[l]) for l, m in self.counts.items() if l in other.counts}
        )

    def difference(self, other: "RepMultiset") -> "RepMultiset":
        """Remove the shared part (multiset minus, clipped at zero)."""
        return RepMultiset(
            {l: m - other.counts.get(l, 0) for l, m in self.counts.items() if m > other.counts.get(l, 0)}
        )

    def is_subset(self, other: "RepMultiset") -> bool:
        return all(other.counts.get(l, 0) >= m for l, m in self.counts.items())

    def dimension_poly(self) -> IntPolynomial:
        """Sum of generic degrees over the multiset, as a polynomial in q."""
        return reduce(
            lambda acc, item: acc + item[1] * symbol_degree(item[0]),
            self.counts.items(),
            IntPolynomial.zero(),
        )

    def to_json(self) -> list[dict]:
        return [
            {"label": label.to_json(), "multiplicity": self.counts[label]}
            for label in self.sorted_labels()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "RepMultiset":
        return cls({SymbolLabel.from_json(d["label"]): int(d["multiplicity"]) for d in data})


# -- Levi shapes and induction --------------------------------------------


@dataclass(frozen=True)
class LeviShape:
    """Block-diagonal Levi U_b(q) x GL_{a_1}(q^2) x ... x GL_{a_r}(q^2) inside U_n(q)."""

    unitary_rank: int
    gl_ranks: tuple[int, ...] = ()

    def __post_init__(self):
        if self.unitary_rank < 0 or any(a < 0 for a in self.gl_ranks):
            raise ValueError("ranks must be nonnegative")

    @property
    def n(self) -> int:
        return self.unitary_rank + 2 * sum(self.gl_ranks)


@dataclass(frozen=True)
class LeviUnipotentLabel:
    """A unipotent label of a Levi: symbol for the unitary block, one partition per GL block."""

    unitary: SymbolLabel
    gl_parts: tuple[Partition, ...] = ()


def hc_induce(shape: LeviShape, label: LeviUnipotentLabel) -> RepMultiset:
    """Harish-Chandra induction from the Levi up to U_n(q).

    Only one-row GL labels (trivial representations of the GL blocks) are
    supported; the bipartition side is then an iterated Pieri induction.
    Rank-zero GL blocks are the identity and are skipped.
    """
    if label.unitary.rank != shape.unitary_rank:
        raise ValueError(
            f"unitary label rank {label.unitary.rank} != block rank {shape.unitary_rank}"
        )
    if len(label.gl_parts) != len(shape.gl_ranks):
        raise ValueError("one GL label required per GL block")
    for a, part in zip(shape.gl_ranks, label.gl_parts):
        if part.size != a:
            raise ValueError(f"GL label {tuple(part)} is not a partition of block rank {a}")
        if a > 0 and part != Partition((a,)):
            raise ValueError(
                f"unsupported GL label {tuple(part)}: only one-row labels are implemented"
            )
    t = label.unitary.t
    current: dict[Bipartition, int] = {label.unitary.bipartition: 1}
    for a in shape.gl_ranks:
        if a == 0:
            continue
        nxt: dict[Bipartition, int] = {}
        for bip, mult in current.items():
            for out in pieri_induce(bip, a):
                nxt[out] = nxt.get(out, 0) + mult
        current = nxt
    return RepMultiset({SymbolLabel(t, bip.first, bip.second): m for bip, m in current.items()})


# -- Frobenius reciprocity oracle ------------------------------------------


def _fuse_class(b_class: Bipartition, s_class: Partition) -> Bipartition:
    """Class fusion of W_r x S_s into W_{r+s}: the S_s cycles join the positive cycles."""
    merged = sorted(tuple(b_class.first) + tuple(s_class), reverse=True)
    return Bipartition(Partition(merged), b_class.second)


def induction_multiplicity_oracle(
    r: int,
    s: int,
    weyl_label: Bipartition,
    sym_label: Partition,
    target: Bipartition,
    rank_cap: int = ORACLE_RANK_CAP,
) -> int:
    """Multiplicity of chi_target in Ind from W_r x S_s, by Frobenius reciprocity.

    Computed directly from character values and class sizes:
    <Ind(phi), chi> = sum over classes of W_r x S_s of
    |class| * phi(class) * chi(fused class) / |W_r x S_s|.
    """
    if r + s > rank_cap:
        raise RankCapError(f"oracle rank {r + s} above cap {rank_cap}")
    if weyl_label.size != r or Partition(sym_label).size != s:
        raise ValueError("label sizes must match the subgroup ranks")
    if target.size != r + s:
        raise ValueError("target label must be a bipartition of r + s")
    total = 0
    for b_class in weyl_characters.sorted_bipartitions(r):
        size_b = weyl_characters.typeb_class_size(b_class) if r else 1
        chi_b = weyl_characters.chi_typeb(weyl_label, b_class)
        if chi_b == 0:
            continue
        for s_class in partitions_of(s):
            size_s = weyl_characters.sym_class_size(s_class) if s else 1
            chi_s = weyl_characters.chi_sym(Partition(sym_label), s_class)
            if chi_s == 0:
                continue
            fused = _fuse_class(b_class, s_class)
            total += size_b * size_s * chi_b * chi_s * weyl_characters.chi_typeb(target, fused)
    order = (2**r * factorial(r)) * factorial(s)
    mult, rem = divmod(total, order)
    if rem:
        raise ArithmeticError(f"inner product {total}/{order} is not an integer")
    if mult < 0:
        raise ArithmeticError(f"negative multiplicity {mult}")
    return mult
