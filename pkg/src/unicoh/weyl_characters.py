"""Exact irreducible characters of symmetric groups and hyperoctahedral groups.

Character values are computed by the Murnaghan-Nakayama recursion (strip
removal with alternating signs) in type A, and by its signed-block variant
in type B.  A brute-force signed-permutation model of the type-B group is
provided as an independent oracle for small rank.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, reduce
from math import factorial
from typing import Iterator

from .errors import RankCapError
from .partitions import (
    Bipartition,
    BorderStrip,
    Partition,
    bipartitions_of,
    border_strips,
    partitions_of,
)

BRUTE_FORCE_RANK_CAP = 5


@cache
def chi_sym(lam: Partition, nu: Partition) -> int:
    """Character value of the symmetric group irreducible lam at cycle type nu.

    Recursion peels border strips of size nu[0]; removing a strip of height
    h contributes sign (-1)**h.  Base case: empty on empty is 1.
    """
    lam, nu = Partition(lam), Partition(nu)
    if lam.size != nu.size:
        raise ValueError(f"size mismatch: |{tuple(lam)}| != |{tuple(nu)}|")
    if not nu:
        return 1
    x, rest = nu[0], Partition(nu[1:])
    total = 0
    for strip in border_strips(lam, x):
        total += (-1) ** strip.height * chi_sym(strip.result, rest)
    return total


def _bipartition_strips(label: Bipartition, size: int) -> Iterator[tuple[BorderStrip, Bipartition]]:
    alpha, beta = label
    for strip in border_strips(alpha, size):
        yield strip._replace(host="first"), Bipartition(strip.result, beta)
    for strip in border_strips(beta, size):
        yield strip._replace(host="second"), Bipartition(alpha, strip.result)


@cache
def chi_typeb(label: Bipartition, klass: Bipartition) -> int:
    """Character value of the hyperoctahedral group W_a.

    label = (alpha, beta) names the irreducible, klass = (gamma, theta)
    the conjugacy class (positive / negative cycle lengths).  The recursion
    peels the last part x of gamma with epsilon = 1, or of theta with
    epsilon = -1 once gamma is exhausted; a strip taken from beta picks up
    an extra factor epsilon.
    """
    (alpha, beta), (gamma, theta) = label, klass
    if alpha.size + beta.size != gamma.size + theta.size:
        raise ValueError(f"size mismatch between label {label} and class {klass}")
    if not gamma and not theta:
        return 1
    if gamma:
        eps, x = 1, gamma[-1]
        rest = Bipartition(Partition(gamma[:-1]), theta)
    else:
        eps, x = -1, theta[-1]
        rest = Bipartition(gamma, Partition(theta[:-1]))
    total = 0
    for strip, remaining in _bipartition_strips(label, x):
        f = 0 if strip.host == "first" else 1
        total += (-1) ** strip.height * eps**f * chi_typeb(remaining, rest)
    return total


# -- class sizes -------------------------------------------------------


def _multiplicities(nu: Partition) -> dict[int, int]:
    mult: dict[int, int] = {}
    for p in nu:
        mult[p] = mult.get(p, 0) + 1
    return mult


def sym_centralizer_order(nu: Partition) -> int:
    return reduce(
        lambda acc, item: acc * item[0] ** item[1] * factorial(item[1]),
        _multiplicities(Partition(nu)).items(),
        1,
    )


def sym_class_size(nu: Partition) -> int:
    """Number of permutations of cycle type nu."""
    nu = Partition(nu)
    return factorial(nu.size) // sym_centralizer_order(nu)


def typeb_centralizer_order(klass: Bipartition) -> int:
    order = 1
    for component in klass:
        for length, m in _multiplicities(component).items():
            order *= (2 * length) ** m * factorial(m)
    return order


def typeb_class_size(klass: Bipartition) -> int:
    """Number of signed permutations with the given signed cycle type."""
    a = klass.first.size + klass.second.size
    return (2**a * factorial(a)) // typeb_centralizer_order(klass)


# -- brute-force signed permutations ------------------------------------


def signed_permutations(a: int) -> Iterator[tuple[int, ...]]:
    """All signed permutations of rank a as tuples f with f[i] = image of i+1.

    Images range over {+-1, ..., +-a}; the action on negatives is forced by
    f(-j) = -f(j).
    """
    for perm in itertools.permutations(range(1, a + 1)):
        for signs in itertools.product((1, -1), repeat=a):
            yield tuple(s * p for s, p in zip(signs, perm))


def signed_cycle_type(element: tuple[int, ...]) -> Bipartition:
    """Signed cycle type: positive-cycle lengths, negative-cycle lengths."""
    a = len(element)
    seen = [False] * a
    pos, neg = [], []
    for start in range(a):
        if seen[start]:
            continue
        sign, length, j = 1, 0, start
        while not seen[j]:
            seen[j] = True
            length += 1
            image = element[j]
            if image < 0:
                sign = -sign
            j = abs(image) - 1
        (pos if sign > 0 else neg).append(length)
    return Bipartition(Partition(sorted(pos, reverse=True)), Partition(sorted(neg, reverse=True)))


class SignedPermutationGroup:
    """Explicit model of the hyperoctahedral group W_a for small rank.

    Exposes element enumeration, composition, and the partition of the
    2**a * a! elements into conjugacy classes labelled by signed cycle type.
    Intended as a test oracle; ranks above the cap are rejected.
    """

    def __init__(self, a: int, rank_cap: int = BRUTE_FORCE_RANK_CAP):
        if a < 0:
            raise ValueError("rank must be nonnegative")
        if a > rank_cap:
            raise RankCapError(f"rank {a} above brute-force cap {rank_cap}")
        self.rank = a
        self.elements = tuple(signed_permutations(a))

    @property
    def order(self) -> int:
        return len(self.elements)

    @staticmethod
    def compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
        """(f * g)(j) = f(g(j))."""

        def apply(h: tuple[int, ...], j: int) -> int:
            return h[j - 1] if j > 0 else -h[-j - 1]

        return tuple(apply(f, apply(g, j)) for j in range(1, len(f) + 1))

    def class_sizes(self) -> dict[Bipartition, int]:
        sizes: dict[Bipartition, int] = {}
        for element in self.elements:
            label = signed_cycle_type(element)
            sizes[label] = sizes.get(label, 0) + 1
        return sizes


# -- character tables ----------------------------------------------------


def label_sort_key(label):
    """Documented total order: descending lexicographic on part sequences,
    first component major for bipartitions.  The terminator sentinel makes
    (1,1) precede (1), so (n) comes first and (1**n) last.
    """
    if isinstance(label, Bipartition):
        return (label_sort_key(label.first), label_sort_key(label.second))
    return tuple(-p for p in label) + (1,)


def sorted_partitions(n: int) -> list[Partition]:
    return sorted(partitions_of(n), key=label_sort_key)


def sorted_bipartitions(n: int) -> list[Bipartition]:
    return sorted(bipartitions_of(n), key=label_sort_key)


@dataclass(frozen=True)
class CharacterTable:
    group: str
    labels: tuple
    classes: tuple
    class_sizes: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]

    @property
    def group_order(self) -> int:
        return sum(self.class_sizes)

    def value(self, label, klass) -> int:
        return self.values[self.labels.index(label)][self.classes.index(klass)]

    def to_json(self) -> dict:
        def encode(item):
            if isinstance(item, Bipartition):
                return [list(item.first), list(item.second)]
            return list(item)

        return {
            "group": self.group,
            "labels": [encode(l) for l in self.labels],
            "classes": [encode(c) for c in self.classes],
            "class_sizes": [str(s) for s in self.class_sizes],
            "values": [[str(v) for v in row] for row in self.values],
        }


def character_table_sym(n: int) -> CharacterTable:
    """Full character table of the symmetric group on n letters."""
    labels = tuple(sorted_partitions(n))
    return CharacterTable(
        group=f"S{n}",
        labels=labels,
        classes=labels,
        class_sizes=tuple(sym_class_size(nu) for nu in labels),
        values=tuple(tuple(chi_sym(lam, nu) for nu in labels) for lam in labels),
    )


def character_table_typeb(a: int) -> CharacterTable:
    """Full character table of the hyperoctahedral group W_a."""
    labels = tuple(sorted_bipartitions(a))
    return CharacterTable(
        group=f"W{a}",
        labels=labels,
        classes=labels,
        class_sizes=tuple(typeb_class_size(k) for k in labels),
        values=tuple(tuple(chi_typeb(lam, k) for k in labels) for lam in labels),
    )
