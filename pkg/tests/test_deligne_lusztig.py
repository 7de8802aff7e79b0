import pytest

from unicoh import (
    IntPolynomial,
    Partition,
    RepMultiset,
    VerificationError,
    closed_stratum_cohomology,
    coxeter_cohomology,
    coxeter_eigenspace_dim,
    coxeter_hook,
    degree_u,
    eo_stratum_cohomology,
    from_symbol,
    spectral_first_page,
    stratum_cohomology,
    stratum_term,
    tate_twist,
    verify_stratum,
)
from unicoh.deligne_lusztig import (
    CohomologyTable,
    _stratum_term_explicit,
    _stratum_term_pieri,
    coxeter_dimension_checks,
    coxeter_restriction_checks,
)
from unicoh.unipotent import symbol


def labels_as_partitions(reps) -> set[tuple[int, ...]]:
    return {tuple(from_symbol(label)) for label in reps}


class TestCoxeterHooks:
    def test_endpoints(self):
        assert coxeter_hook(1, 0) == (1, 1, 1)
        assert coxeter_hook(1, 2) == (3,)
        assert coxeter_hook(3, 3) == (4, 1, 1, 1)

    def test_range_check(self):
        with pytest.raises(ValueError):
            coxeter_hook(2, 5)


class TestCoxeterCohomology:
    def test_point(self):
        table = coxeter_cohomology(0)
        assert table.degrees() == [0]
        (entry,) = table.entries
        assert entry.frobenius_exponent == 0
        assert labels_as_partitions(entry.constituents) == {(1,)}

    def test_rank_one(self):
        table = coxeter_cohomology(1)
        assert table.degrees() == [1, 2]
        assert labels_as_partitions(table.eigenspace(1, 0)) == {(1, 1, 1)}
        assert labels_as_partitions(table.eigenspace(1, 1)) == {(2, 1)}
        assert labels_as_partitions(table.eigenspace(2, 2)) == {(3,)}

    def test_rank_two(self):
        table = coxeter_cohomology(2)
        assert table.degrees() == [2, 3, 4]
        assert labels_as_partitions(table.degree_constituents(2)) == {(1, 1, 1, 1, 1), (2, 1, 1, 1)}
        assert labels_as_partitions(table.degree_constituents(3)) == {(3, 1, 1), (4, 1)}
        assert labels_as_partitions(table.degree_constituents(4)) == {(5,)}

    def test_support_window(self):
        for k in range(5):
            degrees = coxeter_cohomology(k).degrees()
            assert degrees == list(range(k, 2 * k + 1))

    def test_multiplicity_free_sum(self):
        for k in range(6):
            table = coxeter_cohomology(k)
            combined: dict = {}
            for entry in table.entries:
                for label in entry.constituents:
                    combined[label] = combined.get(label, 0) + 1
            assert all(m == 1 for m in combined.values())


class TestCoxeterEigendim:
    def test_steinberg_eigenspace(self):
        assert coxeter_eigenspace_dim(1, 0) == IntPolynomial.q_power(3)

    def test_top_is_one_dimensional(self):
        for k in range(6):
            assert coxeter_eigenspace_dim(k, 2 * k) == IntPolynomial.one()

    @pytest.mark.parametrize("k", range(0, 9))
    def test_equals_hook_formula_degree(self, k):
        for a in range(2 * k + 1):
            assert coxeter_eigenspace_dim(k, a) == degree_u(coxeter_hook(k, a))

    def test_checks_helper(self):
        assert all(c.passed for k in range(7) for c in coxeter_dimension_checks(k))


class TestStratumTerm:
    def test_point_stratum(self):
        assert stratum_term(0, 0, 0) == RepMultiset([symbol(1, (), ())])

    def test_one_box(self):
        assert stratum_term(1, 0, 0) == RepMultiset(
            [symbol(1, (1,), ()), symbol(1, (), (1,))]
        )

    def test_top_cell_is_trivial_label(self):
        for theta in range(5):
            reps = stratum_term(theta, theta, 2 * theta)
            assert labels_as_partitions(reps) == {(2 * theta + 1,)}

    def test_cuspidal_cell(self):
        assert labels_as_partitions(stratum_term(1, 1, 1)) == {(2, 1)}

    def test_range_errors(self):
        with pytest.raises(ValueError):
            stratum_term(2, 3, 0)
        with pytest.raises(ValueError):
            stratum_term(2, 1, 3)

    @pytest.mark.parametrize("theta", range(0, 7))
    def test_dual_paths_agree_everywhere(self, theta):
        for theta_prime in range(theta + 1):
            for a in range(2 * theta_prime + 1):
                via_pieri = _stratum_term_pieri(theta, theta_prime, a)
                explicit = _stratum_term_explicit(theta, theta_prime, a)
                assert via_pieri == explicit
                assert via_pieri.is_multiplicity_free()

    def test_rank_bookkeeping(self):
        for theta in range(4):
            for theta_prime in range(theta + 1):
                for a in range(2 * theta_prime + 1):
                    for label in stratum_term(theta, theta_prime, a):
                        assert label.rank == 2 * theta + 1
                        assert label.t == (1 if a % 2 == 0 else 2)


class TestEOStratum:
    def test_point(self):
        table = eo_stratum_cohomology(0, 0)
        assert table.degrees() == [0]
        assert labels_as_partitions(table.eigenspace(0, 0)) == {(1,)}

    def test_open_cell_of_theta_one(self):
        table = eo_stratum_cohomology(1, 0)
        assert table.degrees() == [0]
        assert labels_as_partitions(table.eigenspace(0, 0)) == {(3,), (1, 1, 1)}

    def test_coxeter_cell_of_theta_one(self):
        table = eo_stratum_cohomology(1, 1)
        assert labels_as_partitions(table.eigenspace(1, 0)) == {(1, 1, 1)}
        assert labels_as_partitions(table.eigenspace(1, 1)) == {(2, 1)}
        assert labels_as_partitions(table.eigenspace(2, 2)) == {(3,)}

    def test_top_stratum_mirrors_coxeter(self):
        # the densest piece has a trivial GL factor, so its table is the
        # Coxeter table of the same rank
        for theta in range(5):
            eo = eo_stratum_cohomology(theta, theta)
            cox = coxeter_cohomology(theta)
            for entry in cox.entries:
                assert eo.eigenspace(entry.degree, entry.frobenius_exponent) == entry.constituents

    def test_support_window(self):
        for theta in range(5):
            for theta_prime in range(theta + 1):
                degrees = eo_stratum_cohomology(theta, theta_prime).degrees()
                assert degrees == list(range(theta_prime, 2 * theta_prime + 1))


class TestSpectralPage:
    def test_theta_zero(self):
        page = spectral_first_page(0)
        assert len(page.cells) == 1
        cell = page.cell(0, 0)
        assert cell is not None and len(cell.parts) == 1

    def test_theta_one_shape(self):
        page = spectral_first_page(1)
        assert page.cell(0, 0) is not None
        assert page.cell(1, 1) is not None
        assert page.cell(1, 2) is not None
        assert page.cell(0, 1) is None

    def test_triangular_cell_count(self):
        for theta in range(5):
            page = spectral_first_page(theta)
            assert len(page.cells) == sum(tp + 1 for tp in range(theta + 1))

    def test_cells_match_stratum_terms(self):
        theta = 2
        page = spectral_first_page(theta)
        for cell in page.cells:
            i = cell.degree - cell.column
            expected_exponents = (
                (2 * i,) if cell.degree == 2 * cell.column else (2 * i, 2 * i + 1)
            )
            assert tuple(e for e, _ in cell.parts) == expected_exponents
            for exponent, reps in cell.parts:
                assert reps == stratum_term(theta, cell.column, exponent)


class TestStratumCohomology:
    def test_theta_one_table(self):
        table = stratum_cohomology(1)
        assert labels_as_partitions(table.eigenspace(0, 0)) == {(3,)}
        assert labels_as_partitions(table.eigenspace(1, 1)) == {(2, 1)}
        assert labels_as_partitions(table.eigenspace(2, 2)) == {(3,)}

    def test_theta_two_table(self):
        table = stratum_cohomology(2)
        assert labels_as_partitions(table.degree_constituents(0)) == {(5,)}
        assert labels_as_partitions(table.degree_constituents(1)) == {(4, 1)}
        assert labels_as_partitions(table.degree_constituents(2)) == {(5,), (3, 2)}
        assert labels_as_partitions(table.degree_constituents(3)) == {(4, 1)}
        assert labels_as_partitions(table.degree_constituents(4)) == {(5,)}

    def test_bottom_is_trivial_only(self):
        for theta in range(6):
            table = stratum_cohomology(theta)
            assert labels_as_partitions(table.degree_constituents(0)) == {(2 * theta + 1,)}

    def test_two_row_labels_only(self):
        for theta in range(6):
            table = stratum_cohomology(theta)
            for entry in table.entries:
                for label in entry.constituents:
                    assert len(from_symbol(label)) <= 2

    @pytest.mark.parametrize("theta", range(0, 9))
    def test_matches_closed_formula(self, theta):
        computed = stratum_cohomology(theta)
        closed = closed_stratum_cohomology(theta)
        for degree in range(2 * theta + 1):
            for a in range(2 * theta + 1):
                assert computed.eigenspace(degree, a) == closed.eigenspace(degree, a)

    def test_closed_formula_symbol_form(self):
        # even labels are (t=1, (theta-s, s), empty); odd are (t=2, (theta-1-s, s), empty)
        theta = 4
        table = closed_stratum_cohomology(theta)
        for entry in table.entries:
            i, odd = divmod(entry.degree, 2)
            for label in entry.constituents:
                assert label.beta == ()
                if odd:
                    assert label.t == 2
                    assert label.alpha in [
                        Partition((theta - 1 - s, s)) for s in range(min(i, theta - 1 - i) + 1)
                    ]
                else:
                    assert label.t == 1
                    assert label.alpha in [
                        Partition((theta - s, s)) for s in range(min(i, theta - i) + 1)
                    ]


class TestVerifyStratum:
    @pytest.mark.parametrize("theta", range(0, 7))
    def test_all_five_checks_pass(self, theta):
        report = verify_stratum(theta)
        assert len(report.checks) == 5
        assert report.ok, [c.line() for c in report.checks]

    def test_euler_example(self):
        # dim R0_0 - dim R1_0 = (1 + q^3) - q^3 = 1 = dim H^0 at theta 1
        r00 = stratum_term(1, 0, 0).dimension_poly()
        r10 = stratum_term(1, 1, 0).dimension_poly()
        assert r00 - r10 == IntPolynomial.one()

    def test_report_json(self):
        data = verify_stratum(2).to_json()
        assert data["ok"] is True
        assert len(data["checks"]) == 5


class TestRestrictionIdentity:
    @pytest.mark.parametrize("k", range(1, 7))
    def test_holds_with_tate_twist(self, k):
        checks = coxeter_restriction_checks(k)
        assert checks, "no checks generated"
        assert all(c.passed for c in checks), [c.line() for c in checks if not c.passed]

    def test_twist_shifts_exponent_by_two(self):
        assert tate_twist(0) == 2
        assert tate_twist(3, 2) == 7


class TestTableSerialization:
    def test_json_round_trip(self):
        table = stratum_cohomology(2)
        data = table.to_json()
        assert data["variety"] == "closed-stratum(theta=2)"
        rebuilt = CohomologyTable.from_json(data)
        assert rebuilt == table

    def test_json_shape(self):
        data = coxeter_cohomology(1).to_json()
        for entry in data["entries"]:
            assert set(entry) == {"degree", "frobenius_exponent", "constituents"}
            for constituent in entry["constituents"]:
                assert set(constituent) == {"partition", "symbol", "degree_poly", "multiplicity"}
                assert set(constituent["symbol"]) == {"t", "alpha", "beta"}


class TestBookkeepingGuard:
    def test_tampered_chain_raises(self):
        # empty out the last chain term: the carry from the middle term has
        # nowhere to cancel and the assembly must fail loudly
        from unicoh import deligne_lusztig as dl

        original = dl.stratum_term

        def tampered(theta, theta_prime, a):
            if (theta, theta_prime, a) == (2, 2, 0):
                return RepMultiset()
            return original(theta, theta_prime, a)

        dl.stratum_term = tampered
        try:
            with pytest.raises(VerificationError):
                dl.stratum_cohomology(2)
        finally:
            dl.stratum_term = original
