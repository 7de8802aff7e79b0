"""Cohomology tables of Coxeter varieties and closed Bruhat-Tits strata.

The closed stratum of type 2*theta + 1 carries an action of U_{2theta+1}(q);
its cohomology is assembled from the Ekedahl-Oort stratification, whose
pieces induce Coxeter-variety cohomology from Levi subgroups.  Frobenius
acts on an eigenspace by (-q)**a; everywhere only the exponent a is stored,
so the whole computation stays symbolic in q.  (The geometric statements
hold for q equal to the base prime; the combinatorics is uniform in q.)
One unit of Tate twist shifts the exponent by 2.

Every table keeps multisets of irreducible unipotent labels; the spectral
sequence is not modelled as maps but as exact multiset bookkeeping along
each Frobenius eigenvalue, with guards that fail loudly if the cancellation
pattern is not the expected one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import VerificationError
from . import harish_chandra as hc
from .harish_chandra import LeviShape, LeviUnipotentLabel, RepMultiset
from .partitions import Partition
from .polynomial import IntPolynomial, prod, q_minus_sign
from .unipotent import SymbolLabel, from_symbol, symbol_degree, to_symbol


def tate_twist(exponent: int, n: int = 1) -> int:
    """Frobenius-exponent shift of the n-fold Tate twist."""
    return exponent + 2 * n


# -- tables ----------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyEntry:
    """One Frobenius eigenspace: cohomological degree, exponent a of (-q)**a,
    and the multiset of irreducible constituents."""

    degree: int
    frobenius_exponent: int
    constituents: RepMultiset


@dataclass(frozen=True)
class CohomologyTable:
    variety: str
    entries: tuple[CohomologyEntry, ...]

    def degrees(self) -> list[int]:
        return sorted({e.degree for e in self.entries})

    def at(self, degree: int) -> tuple[CohomologyEntry, ...]:
        return tuple(e for e in self.entries if e.degree == degree)

    def eigenspace(self, degree: int, exponent: int) -> RepMultiset:
        for e in self.entries:
            if e.degree == degree and e.frobenius_exponent == exponent:
                return e.constituents
        return RepMultiset()

    def degree_constituents(self, degree: int) -> dict[SymbolLabel, int]:
        """All constituents in one degree, across eigenvalues (so possibly
        across cuspidal supports), as a plain multiplicity map."""
        out: dict[SymbolLabel, int] = {}
        for e in self.at(degree):
            for label in e.constituents:
                out[label] = out.get(label, 0) + e.constituents.multiplicity(label)
        return out

    def euler_characteristic(self) -> IntPolynomial:
        total = IntPolynomial.zero()
        for e in self.entries:
            term = e.constituents.dimension_poly()
            total = total + term if e.degree % 2 == 0 else total - term
        return total

    def to_json(self) -> dict:
        return {
            "variety": self.variety,
            "entries": [
                {
                    "degree": e.degree,
                    "frobenius_exponent": e.frobenius_exponent,
                    "constituents": [
                        {
                            "partition": list(from_symbol(label)),
                            "symbol": label.to_json(),
                            "degree_poly": symbol_degree(label).to_json(),
                            "multiplicity": e.constituents.multiplicity(label),
                        }
                        for label in e.constituents.sorted_labels()
                    ],
                }
                for e in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CohomologyTable":
        return cls(
            variety=data["variety"],
            entries=tuple(
                CohomologyEntry(
                    degree=int(e["degree"]),
                    frobenius_exponent=int(e["frobenius_exponent"]),
                    constituents=RepMultiset(
                        {
                            SymbolLabel.from_json(c["symbol"]): int(c.get("multiplicity", 1))
                            for c in e["constituents"]
                        }
                    ),
                )
                for e in data["entries"]
            ),
        )


def _single(label: SymbolLabel) -> RepMultiset:
    return RepMultiset((label,))


# -- Coxeter varieties ------------------------------------------------------


def coxeter_hook(k: int, a: int) -> Partition:
    """Hook partition (1 + a, 1**(2k - a)) of 2k + 1 attached to eigenvalue exponent a."""
    if not 0 <= a <= 2 * k:
        raise ValueError(f"exponent {a} out of range 0..{2 * k}")
    return Partition((1 + a,) + (1,) * (2 * k - a))


def coxeter_cohomology(k: int) -> CohomologyTable:
    """Cohomology of the Coxeter variety for U_{2k+1}(q).

    Supported in degrees k..2k; degree k+i carries the labels of exponents
    2i and 2i+1, the top degree 2k the trivial label with exponent 2k.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    entries = []
    for i in range(k):
        entries.append(
            CohomologyEntry(k + i, 2 * i, _single(to_symbol(coxeter_hook(k, 2 * i))))
        )
        entries.append(
            CohomologyEntry(k + i, 2 * i + 1, _single(to_symbol(coxeter_hook(k, 2 * i + 1))))
        )
    entries.append(CohomologyEntry(2 * k, 2 * k, _single(to_symbol(coxeter_hook(k, 2 * k)))))
    return CohomologyTable(variety=f"coxeter(k={k})", entries=tuple(entries))


def coxeter_eigenspace_dim(k: int, a: int) -> IntPolynomial:
    """Dimension of the (-q)**a eigenspace of the Coxeter variety cohomology,
    as the exact polynomial q**((2k-a)(2k+1-a)/2) * prod_{j=1}^{2k-a}
    (q**(a+j) - (-1)**(a+j)) / (q**j - (-1)**j)."""
    if not 0 <= a <= 2 * k:
        raise ValueError(f"exponent {a} out of range 0..{2 * k}")
    m = 2 * k - a
    num = IntPolynomial.q_power(m * (m + 1) // 2) * prod(q_minus_sign(a + j) for j in range(1, m + 1))
    den = prod(q_minus_sign(j) for j in range(1, m + 1))
    return num.exact_div(den)


# -- Ekedahl-Oort pieces -----------------------------------------------------


def _check_stratum_args(theta: int, theta_prime: int) -> None:
    if theta < 0:
        raise ValueError("theta must be nonnegative")
    if not 0 <= theta_prime <= theta:
        raise ValueError(f"theta_prime {theta_prime} out of range 0..{theta}")


def _stratum_term_pieri(theta: int, theta_prime: int, a: int) -> RepMultiset:
    """Induce the exponent-a Coxeter label of U_{2theta_prime+1} tensored with the
    trivial GL_{theta-theta_prime}(q^2) label up to U_{2theta+1}(q)."""
    sym = to_symbol(coxeter_hook(theta_prime, a))
    gl_rank = theta - theta_prime
    shape = LeviShape(unitary_rank=2 * theta_prime + 1, gl_ranks=(gl_rank,))
    label = LeviUnipotentLabel(sym, (Partition((gl_rank,) if gl_rank else ()),))
    return hc.hc_induce(shape, label)


def _stratum_term_explicit(theta: int, theta_prime: int, a: int) -> RepMultiset:
    """Direct enumeration of the same constituents, independent of the Pieri code.

    For exponent a = 2i (+1), the start label is a one-row alpha (i) and a
    one-column beta; splitting the added boxes as d to the alpha side gives
    alpha = (i + d - s, s) with 0 <= s <= min(d, i), and the column side
    either keeps its length (bottom box added) or loses one row.
    """
    i, odd = divmod(a, 2)
    t = 2 if odd else 1
    column = theta_prime - i - odd
    labels = []
    for d in range(theta - theta_prime + 1):
        e = theta - theta_prime - d
        alphas = [Partition((i + d - s, s)) for s in range(min(d, i) + 1)]
        betas = []
        if column == 0:
            betas.append(Partition((e,) if e else ()))
        else:
            betas.append(Partition((e + 1,) + (1,) * (column - 1)))
            if e >= 1:
                betas.append(Partition((e,) + (1,) * column))
        for alpha in alphas:
            for beta in betas:
                labels.append(SymbolLabel(t, alpha, beta))
    return RepMultiset(labels)


def stratum_term(theta: int, theta_prime: int, a: int) -> RepMultiset:
    """Eigenvalue-exponent-a summand contributed by the Ekedahl-Oort stratum
    of type 2*theta_prime + 1 inside the closed stratum of type 2*theta + 1.

    Computed twice (Pieri induction and direct enumeration); a mismatch, or
    a repeated constituent, raises VerificationError.
    """
    _check_stratum_args(theta, theta_prime)
    if not 0 <= a <= 2 * theta_prime:
        raise ValueError(f"exponent {a} out of range 0..{2 * theta_prime}")
    via_pieri = _stratum_term_pieri(theta, theta_prime, a)
    explicit = _stratum_term_explicit(theta, theta_prime, a)
    if via_pieri != explicit:
        raise VerificationError(
            f"stratum term mismatch at (theta={theta}, theta'={theta_prime}, a={a}): "
            f"pieri={via_pieri!r}, explicit={explicit!r}"
        )
    if not via_pieri.is_multiplicity_free():
        raise VerificationError(
            f"stratum term not multiplicity-free at (theta={theta}, theta'={theta_prime}, a={a})"
        )
    return via_pieri


def eo_stratum_cohomology(theta: int, theta_prime: int) -> CohomologyTable:
    """Cohomology of one Ekedahl-Oort stratum, supported in degrees
    theta_prime..2*theta_prime with two eigenspaces per degree below the top."""
    _check_stratum_args(theta, theta_prime)
    entries = []
    for i in range(theta_prime):
        degree = theta_prime + i
        entries.append(CohomologyEntry(degree, 2 * i, stratum_term(theta, theta_prime, 2 * i)))
        entries.append(
            CohomologyEntry(degree, 2 * i + 1, stratum_term(theta, theta_prime, 2 * i + 1))
        )
    entries.append(
        CohomologyEntry(2 * theta_prime, 2 * theta_prime, stratum_term(theta, theta_prime, 2 * theta_prime))
    )
    return CohomologyTable(
        variety=f"eo-stratum(theta={theta}, theta'={theta_prime})", entries=tuple(entries)
    )


@dataclass(frozen=True)
class SpectralCell:
    column: int
    degree: int
    parts: tuple[tuple[int, RepMultiset], ...]


@dataclass(frozen=True)
class SpectralPage:
    """First page of the stratification spectral sequence, column per stratum."""

    theta: int
    cells: tuple[SpectralCell, ...]

    def cell(self, column: int, degree: int) -> Optional[SpectralCell]:
        for c in self.cells:
            if c.column == column and c.degree == degree:
                return c
        return None


def spectral_first_page(theta: int) -> SpectralPage:
    if theta < 0:
        raise ValueError("theta must be nonnegative")
    cells = []
    for theta_prime in range(theta + 1):
        table = eo_stratum_cohomology(theta, theta_prime)
        for degree in table.degrees():
            parts = tuple((e.frobenius_exponent, e.constituents) for e in table.at(degree))
            cells.append(SpectralCell(column=theta_prime, degree=degree, parts=parts))
    return SpectralPage(theta=theta, cells=tuple(cells))


# -- the closed stratum ------------------------------------------------------


def _eigen_chain(theta: int, a: int) -> list[RepMultiset]:
    """Terms carrying eigenvalue exponent a, by increasing stratum index."""
    start = (a + 1) // 2
    return [stratum_term(theta, tp, a) for tp in range(start, theta + 1)]


def _chain_head(theta: int, a: int, chain: list[RepMultiset]) -> RepMultiset:
    """Surviving part of the leading chain term.

    The head is the leading term minus its overlap with the next one; after
    that, leftovers must cancel pairwise down the chain and nothing may
    remain at the end, otherwise the bookkeeping is inconsistent.
    """
    head = chain[0]
    carry = RepMultiset()
    if len(chain) > 1:
        shared = chain[0].intersection(chain[1])
        head = chain[0].difference(shared)
        carry = chain[1].difference(shared)
    for j in range(2, len(chain)):
        if not carry.is_subset(chain[j]):
            missing = carry.difference(chain[j])
            raise VerificationError(
                f"exactness failure for exponent {a} at theta={theta}: "
                f"{missing!r} has nowhere to cancel in column {j + (a + 1) // 2}"
            )
        carry = chain[j].difference(carry)
    if len(carry):
        raise VerificationError(
            f"exactness failure for exponent {a} at theta={theta}: "
            f"uncancelled tail {carry!r}"
        )
    return head


def stratum_cohomology(theta: int) -> CohomologyTable:
    """Cohomology of the closed stratum, assembled from the first page.

    For each exponent a the surviving constituents are those of the leading
    chain term not shared with its successor; they sit in degree a, so
    Frobenius acts by (-q)**degree throughout.
    """
    if theta < 0:
        raise ValueError("theta must be nonnegative")
    entries = []
    for a in range(2 * theta + 1):
        head = _chain_head(theta, a, _eigen_chain(theta, a))
        entries.append(CohomologyEntry(degree=a, frobenius_exponent=a, constituents=head))
    return CohomologyTable(variety=f"closed-stratum(theta={theta})", entries=tuple(entries))


def closed_stratum_cohomology(theta: int) -> CohomologyTable:
    """The closed formula for the same table, independent of the spectral engine.

    Degree 2i carries the two-row labels (2*theta+1-2s, 2s) for
    0 <= s <= min(i, theta-i); degree 2i+1 the labels (2*theta-2s, 2s+1)
    for 0 <= s <= min(i, theta-1-i).
    """
    if theta < 0:
        raise ValueError("theta must be nonnegative")
    entries = []
    for degree in range(2 * theta + 1):
        i, odd = divmod(degree, 2)
        if odd:
            labels = [
                to_symbol(Partition((2 * theta - 2 * s, 2 * s + 1)))
                for s in range(min(i, theta - 1 - i) + 1)
            ]
        else:
            labels = [
                to_symbol(Partition((2 * theta + 1 - 2 * s, 2 * s)))
                for s in range(min(i, theta - i) + 1)
            ]
        entries.append(
            CohomologyEntry(degree=degree, frobenius_exponent=degree, constituents=RepMultiset(labels))
        )
    return CohomologyTable(variety=f"closed-stratum(theta={theta})", entries=tuple(entries))


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f": {self.details}" if (self.details and not self.passed) else ""
        return f"{status} {self.name}{suffix}"


@dataclass(frozen=True)
class StratumVerification:
    theta: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "theta": self.theta,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "details": c.details} for c in self.checks
            ],
        }


def verify_stratum(theta: int) -> StratumVerification:
    """Run the five closed-stratum consistency checks at one theta.

    (1) spectral assembly equals the closed formula, (2) duality symmetry of
    constituents between degrees i and 2*theta - i, (3) Frobenius exponent
    equals the degree, (4) Euler characteristics add up over the strata,
    (5) per-exponent alternating dimension sums telescope to the answer.
    All dimension identities are exact polynomial identities in q.  An
    engine-level VerificationError inside a check is reported as a failure
    of that check rather than aborting the run.
    """
    checks: list[CheckResult] = []
    prefix = f"(theta={theta})"
    closed = closed_stratum_cohomology(theta)

    def run(name, body):
        try:
            failures = body()
        except VerificationError as exc:
            failures = [str(exc)]
        checks.append(CheckResult(f"{name} {prefix}", not failures, "; ".join(failures)))

    def equality_check():
        computed = stratum_cohomology(theta)
        return [
            f"H^{degree} exponent {a}: {computed.eigenspace(degree, a)!r} != "
            f"{closed.eigenspace(degree, a)!r}"
            for degree in range(2 * theta + 1)
            for a in range(2 * theta + 1)
            if computed.eigenspace(degree, a) != closed.eigenspace(degree, a)
        ]

    def duality_check():
        table = stratum_cohomology(theta)
        return [
            f"H^{d}"
            for d in range(2 * theta + 1)
            if table.degree_constituents(d) != table.degree_constituents(2 * theta - d)
        ]

    def exponent_check():
        table = stratum_cohomology(theta)
        return [
            f"degree {e.degree} carries exponent {e.frobenius_exponent}"
            for e in table.entries
            if e.frobenius_exponent != e.degree
        ]

    def euler_check():
        lhs = stratum_cohomology(theta).euler_characteristic()
        rhs = IntPolynomial.zero()
        for theta_prime in range(theta + 1):
            rhs = rhs + eo_stratum_cohomology(theta, theta_prime).euler_characteristic()
        if lhs != rhs:
            return [f"stratum {lhs} != sum over pieces {rhs}"]
        return []

    def alternating_sum_check():
        table = stratum_cohomology(theta)
        failures = []
        for a in range(2 * theta + 1):
            alt = IntPolynomial.zero()
            for j, term in enumerate(_eigen_chain(theta, a)):
                dim = term.dimension_poly()
                alt = alt + dim if j % 2 == 0 else alt - dim
            target = table.eigenspace(a, a).dimension_poly()
            if alt != target:
                failures.append(f"exponent {a}: {alt} != {target}")
        return failures

    run("stratum-equals-closed-formula", equality_check)
    run("poincare-duality-symmetry", duality_check)
    run("frobenius-exponent-equals-degree", exponent_check)
    run("euler-characteristic-additivity", euler_check)
    run("eigenvalue-alternating-sums", alternating_sum_check)

    return StratumVerification(theta=theta, checks=tuple(checks))


def coxeter_restriction_checks(k: int) -> list[CheckResult]:
    """Label-level restriction identity between ranks k and k - 1.

    Removing one box from an eigenspace label of the rank-k Coxeter table
    must reproduce the same-exponent eigenspace one rank down plus the
    Tate twist (exponent shift by 2) of the eigenspace two exponents down.
    """
    if k < 1:
        raise ValueError("needs k >= 1")
    upper = coxeter_cohomology(k)
    lower = coxeter_cohomology(k - 1)
    checks = []
    for entry in upper.entries:
        a = entry.frobenius_exponent
        i = entry.degree - k
        restricted: dict[SymbolLabel, int] = {}
        for label in entry.constituents:
            if label.bipartition.size == 0:
                continue  # cuspidal: restricts to zero
            mult = entry.constituents.multiplicity(label)
            for bip in hc.pieri_restrict(label.bipartition, 1):
                out = SymbolLabel(label.t, bip.first, bip.second)
                restricted[out] = restricted.get(out, 0) + mult
        lhs = RepMultiset(restricted)
        rhs = lower.eigenspace(k - 1 + i, a)
        for low_entry in lower.at(k - 1 + i - 1):
            if tate_twist(low_entry.frobenius_exponent) == a:
                rhs = rhs.union(low_entry.constituents)
        checks.append(
            CheckResult(
                f"coxeter-restriction (k={k}, degree={entry.degree}, exponent={a})",
                lhs == rhs,
                f"{lhs!r} != {rhs!r}" if lhs != rhs else "",
            )
        )
    return checks


def coxeter_dimension_checks(k: int) -> list[CheckResult]:
    """Eigenspace dimension formula equals the hook-formula generic degree."""
    checks = []
    for a in range(2 * k + 1):
        closed_form = coxeter_eigenspace_dim(k, a)
        hook_form = hc.symbol_degree(to_symbol(coxeter_hook(k, a)))
        checks.append(
            CheckResult(
                f"coxeter-eigenspace-dimension (k={k}, exponent={a})",
                closed_form == hook_form,
                f"{closed_form} != {hook_form}" if closed_form != hook_form else "",
            )
        )
    return checks
