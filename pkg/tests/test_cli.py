import json

import pytest

from unicoh import Bipartition, Partition
from unicoh import cli
from unicoh import deligne_lusztig as dl
from unicoh import harish_chandra as hc
from unicoh import weyl_characters as wc
from unicoh.cli import main, parse_bipartition, parse_partition


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out.rstrip("\n"), captured.err


class TestParsing:
    def test_partition(self):
        assert parse_partition("3,3,2,2,1") == Partition((3, 3, 2, 2, 1))
        assert parse_partition("") == Partition(())
        assert parse_partition("0") == Partition(())

    def test_bipartition(self):
        assert parse_bipartition("3,1,1/4,2") == Bipartition.of((3, 1, 1), (4, 2))
        assert parse_bipartition("/4,2") == Bipartition.of((), (4, 2))
        assert parse_bipartition("/") == Bipartition.of((), ())

    def test_malformed(self):
        with pytest.raises(cli.CliError):
            parse_partition("3,x")
        with pytest.raises(cli.CliError):
            parse_bipartition("3,1")


class TestScalarCommands:
    def test_char_sym_worked_example(self, capsys):
        status, out, _ = run(capsys, "char-sym", "--lambda", "3,3,2,2,1", "--class", "4,4,3")
        assert status == 0
        assert out == "-2"

    def test_char_b_worked_example(self, capsys):
        status, out, _ = run(capsys, "char-b", "--label", "3,1,1/4,2", "--class", "4/5,2")
        assert status == 0
        assert out == "-1"

    def test_char_sym_json(self, capsys):
        status, out, _ = run(
            capsys, "char-sym", "--lambda", "3,3,2,2,1", "--class", "4,4,3", "--format", "json"
        )
        assert status == 0
        assert json.loads(out)["value"] == "-2"

    def test_size_mismatch_is_usage_error(self, capsys):
        status, _, err = run(capsys, "char-sym", "--lambda", "2,1", "--class", "2")
        assert status == 2
        assert "error" in err

    def test_malformed_partition_is_usage_error(self, capsys):
        status, _, err = run(capsys, "char-sym", "--lambda", "2,x", "--class", "3")
        assert status == 2

    def test_degree(self, capsys):
        status, out, _ = run(capsys, "degree", "--group", "u", "--lambda", "1,1,1")
        assert status == 0
        assert out == "q^3"

    def test_degree_evaluated(self, capsys):
        status, out, _ = run(
            capsys, "degree", "--group", "u", "--lambda", "2,1", "--at", "3", "--format", "json"
        )
        data = json.loads(out)
        assert data["at"] == {"q": 3, "value": "6"}


class TestCombinatoricsCommands:
    def test_two_quotient_worked_example(self, capsys):
        status, out, _ = run(capsys, "two-quotient", "--lambda", "3,3,2,2,1")
        assert status == 0
        assert out == "core t=1, quotient [[2,2],[1]]"

    def test_two_core(self, capsys):
        status, out, _ = run(capsys, "two-core", "--lambda", "3,3,2,2,1")
        assert "t=1" in out

    def test_reconstruct(self, capsys):
        status, out, _ = run(capsys, "reconstruct", "--t", "1", "--quotient", "2,2/1")
        assert status == 0
        assert out == "[3,3,2,2,1]"

    def test_label_forward(self, capsys):
        status, out, _ = run(capsys, "label", "--lambda", "3,3,2,2,1", "--format", "json")
        data = json.loads(out)
        assert data["symbol"] == {"t": 1, "alpha": [1], "beta": [2, 2]}

    def test_label_backward(self, capsys):
        status, out, _ = run(capsys, "label", "--t", "1", "--alpha", "1", "--beta", "2,2")
        assert out == "[3,3,2,2,1]"

    def test_label_missing_args(self, capsys):
        status, _, err = run(capsys, "label")
        assert status == 2

    def test_series(self, capsys):
        status, out, _ = run(capsys, "series", "--lambda", "3,3,2,2,1", "--format", "json")
        data = json.loads(out)
        assert data["t"] == 1
        assert data["principal"] is True
        assert data["cuspidal"] is False

    def test_pieri_add(self, capsys):
        status, out, _ = run(capsys, "pieri", "--label", "/", "--add", "1")
        assert status == 0
        assert set(out.splitlines()) == {"[[1],[]]", "[[],[1]]"}

    def test_pieri_remove(self, capsys):
        status, out, _ = run(capsys, "pieri", "--label", "3/1", "--remove", "1", "--format", "json")
        data = json.loads(out)
        assert [[3], []] in data["result"]
        assert [[2], [1]] in data["result"]

    def test_pieri_requires_exactly_one_op(self, capsys):
        status, _, _ = run(capsys, "pieri", "--label", "1/")
        assert status == 2
        status, _, _ = run(capsys, "pieri", "--label", "1/", "--add", "1", "--remove", "1")
        assert status == 2

    def test_induce(self, capsys):
        status, out, _ = run(
            capsys, "induce", "--t", "1", "--alpha", "", "--beta", "", "--gl", "1", "--format", "json"
        )
        data = json.loads(out)
        assert data["n"] == 3
        labels = [entry["label"] for entry in data["result"]]
        assert {"t": 1, "alpha": [1], "beta": []} in labels
        assert {"t": 1, "alpha": [], "beta": [1]} in labels


class TestTables:
    def test_character_table_json_schema(self, capsys):
        status, out, _ = run(capsys, "table", "--group", "b", "--a", "2", "--format", "json")
        data = json.loads(out)
        assert set(data) == {"group", "labels", "classes", "class_sizes", "values"}
        assert len(data["labels"]) == 5

    def test_character_table_requires_rank(self, capsys):
        status, _, _ = run(capsys, "table", "--group", "sym")
        assert status == 2

    def test_rank_cap_enforced(self, capsys):
        status, _, err = run(capsys, "table", "--group", "sym", "--n", "9")
        assert status == 2
        assert "--max-n" in err

    def test_rank_cap_overridable_with_warning(self, capsys):
        status, out, err = run(capsys, "table", "--group", "sym", "--n", "9", "--max-n", "9")
        assert status == 0
        assert "warning" in err

    def test_quiet_suppresses_warning(self, capsys):
        status, _, err = run(capsys, "table", "--group", "sym", "--n", "9", "--max-n", "9", "-q")
        assert status == 0
        assert err == ""

    def test_verbose_reports_runtime(self, capsys):
        status, _, err = run(capsys, "two-core", "--lambda", "3,3,2,2,1", "-v")
        assert status == 0
        assert "computed in" in err

    def test_csv_format(self, capsys):
        status, out, _ = run(capsys, "table", "--group", "sym", "--n", "2", "--format", "csv")
        lines = out.splitlines()
        assert lines[0].startswith("label,")
        assert len(lines) == 4  # header, class sizes, two characters

    def test_coxeter_table(self, capsys):
        status, out, _ = run(capsys, "coxeter", "--k", "1")
        assert status == 0
        assert "H^1" in out and "H^2" in out

    def test_stratum_table_matches_closed(self, capsys):
        _, spectral, _ = run(capsys, "stratum", "--theta", "2", "--format", "json")
        _, closed, _ = run(capsys, "stratum", "--theta", "2", "--method", "closed", "--format", "json")
        left, right = json.loads(spectral), json.loads(closed)
        assert left["entries"] == right["entries"]

    def test_stratum_json_round_trips(self, capsys):
        _, out, _ = run(capsys, "stratum", "--theta", "1", "--format", "json")
        table = dl.CohomologyTable.from_json(json.loads(out))
        assert table == dl.stratum_cohomology(1)

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "table.json"
        status, out, _ = run(
            capsys, "stratum", "--theta", "1", "--format", "json", "--out", str(target)
        )
        assert status == 0
        assert out == ""
        assert json.loads(target.read_text())["variety"] == "closed-stratum(theta=1)"


class TestVerify:
    def test_single_theta_report(self, capsys):
        status, out, _ = run(capsys, "verify", "--theta", "3")
        assert status == 0
        lines = out.splitlines()
        assert sum(1 for l in lines if l.startswith("PASS")) == 5
        assert lines[-1].startswith("OK")

    def test_single_k_report(self, capsys):
        status, out, _ = run(capsys, "verify", "--k", "3")
        assert status == 0
        assert "coxeter-eigenspace-dimension" in out
        assert "coxeter-restriction" in out

    def test_sweep_passes(self, capsys):
        status, out, _ = run(capsys, "verify", "-q")
        assert status == 0
        assert "FAIL" not in out

    def test_sweep_json(self, capsys):
        status, out, _ = run(capsys, "verify", "--theta", "2", "--format", "json")
        data = json.loads(out)
        assert data["ok"] is True
        assert all(c["passed"] for c in data["checks"])


class TestMutationDetection:
    def test_pieri_fault_flips_verify(self, capsys, monkeypatch):
        original = hc.pieri_induce

        def broken(start, boxes):
            outs = original(start, boxes)
            return outs[:-1] if len(outs) > 1 else outs

        monkeypatch.setattr(hc, "pieri_induce", broken)
        status, out, err = run(capsys, "verify", "-q")
        assert status == 1

    def test_typeb_character_fault_flips_verify(self, capsys, monkeypatch):
        original = wc.chi_typeb

        def broken(label, klass):
            value = original(label, klass)
            if label == Bipartition.of((1,), (1,)) and klass == Bipartition.of((), (1, 1)):
                return value + 1
            return value

        monkeypatch.setattr(wc, "chi_typeb", broken)
        status, out, err = run(capsys, "verify", "-q")
        assert status == 1

    def test_sym_character_fault_flips_verify(self, capsys, monkeypatch):
        original = wc.chi_sym

        def broken(lam, nu):
            value = original(lam, nu)
            if lam == Partition((2, 1)) and nu == Partition((1, 1, 1)):
                return value - 1
            return value

        monkeypatch.setattr(wc, "chi_sym", broken)
        status, out, err = run(capsys, "verify", "-q")
        assert status == 1


class TestArgparseBehaviour:
    def test_unknown_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2

    def test_no_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2
