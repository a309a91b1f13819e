"""Command-line behavior: outputs, formats, exit codes, determinism."""

import json
import subprocess
import sys

from hodgekit.cli import main, run_paper_checks


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDiamondCommand:
    def test_hilbert_square_of_enriques(self, capsys):
        code, out, _ = run_main(capsys, "diamond", "--preset", "enriques",
                                "--format", "json", "hilb", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["dimension"] == 4
        assert [1, 1, 11] in payload["hodge"]

    def test_cover_table_lists_headline_values(self, capsys):
        code, out, _ = run_main(capsys, "diamond", "--preset", "k3_enriques",
                                "--format", "json", "cover", "2")
        assert code == 0
        rows = json.loads(out)["hodge"]
        assert [1, 1, 12] in rows
        assert [3, 1, 10] in rows
        assert [2, 2, 132] in rows

    def test_sym_one_is_the_surface(self, capsys):
        code, out, _ = run_main(capsys, "diamond", "--preset", "enriques",
                                "--format", "csv", "sym", "1")
        assert code == 0
        assert out.splitlines() == ["p,q,dim", "0,0,1", "1,1,10", "2,2,1"]

    def test_quotient_requires_subgroup(self, capsys):
        code, _, err = run_main(capsys, "diamond", "quotient", "2")
        assert code == 2
        assert "subgroup" in err

    def test_quotient_h(self, capsys):
        code, out, _ = run_main(capsys, "diamond", "--preset", "k3_enriques",
                                "--format", "json", "quotient", "2", "H")
        assert code == 0
        assert [2, 2, 112] in json.loads(out)["hodge"]

    def test_cover_rejects_other_n(self, capsys):
        code, _, err = run_main(capsys, "diamond", "cover", "3")
        assert code == 2
        assert "n=2" in err

    def test_json_and_csv_agree(self, capsys):
        _, out_json, _ = run_main(capsys, "diamond", "--preset", "k3",
                                  "--format", "json", "hilb", "2")
        _, out_csv, _ = run_main(capsys, "diamond", "--preset", "k3",
                                 "--format", "csv", "hilb", "2")
        from_json = {(p, q): d for p, q, d in json.loads(out_json)["hodge"]}
        from_csv = {}
        for line in out_csv.splitlines()[1:]:
            p, q, d = map(int, line.split(","))
            from_csv[(p, q)] = d
        assert from_json == from_csv


class TestSurfaceSpecInput:
    def write(self, tmp_path, doc):
        path = tmp_path / "surface.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)

    def test_spec_file_accepted(self, capsys, tmp_path):
        path = self.write(tmp_path, {
            "name": "custom", "dimension": 2,
            "hodge": [[0, 0, 1, 0], [1, 1, 2, 1], [2, 2, 1, 0]],
        })
        code, out, _ = run_main(capsys, "diamond", "--spec", path,
                                "--format", "json", "quotient", "2", "H")
        assert code == 0
        assert "custom" in json.loads(out)["name"]

    def test_malformed_json_exits_2(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, _, err = run_main(capsys, "diamond", "--spec", str(path), "hilb", "2")
        assert code == 2 and "invalid JSON" in err

    def test_schema_error_exits_2(self, capsys, tmp_path):
        path = self.write(tmp_path, {"name": "x", "hodge": []})
        code, _, _ = run_main(capsys, "diamond", "--spec", str(path), "hilb", "2")
        assert code == 2

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, _, _ = run_main(capsys, "diamond", "--spec",
                              str(tmp_path / "none.json"), "hilb", "2")
        assert code == 2

    def test_odd_cohomology_exits_3(self, capsys, tmp_path):
        path = self.write(tmp_path, {
            "name": "odd", "dimension": 1, "hodge": [[1, 0, 1, 0]],
        })
        code, _, err = run_main(capsys, "diamond", "--spec", path, "hilb", "2")
        assert code == 3 and "unsupported" in err


class TestVerifyPaper:
    def test_default_run_passes_with_two_noted(self, capsys):
        code, out, err = run_main(capsys, "verify-paper", "--format", "json")
        assert code == 0
        results = json.loads(out)
        statuses = [r["status"] for r in results]
        assert statuses.count("fail") == 0
        noted = [r["check_id"] for r in results if r["status"] == "discrepancy-noted"]
        assert noted == ["043-quot-k2-h22", "058-cover-n2-h22"]
        assert "fail: 0" in err

    def test_restricted_run_same_statuses(self, capsys):
        code, _, err = run_main(capsys, "verify-paper", "--n-max", "3")
        assert code == 0
        assert "fail: 0" in err
        assert "discrepancy-noted: 2" in err

    def test_n_max_lower_bound(self, capsys):
        code, _, err = run_main(capsys, "verify-paper", "--n-max", "1")
        assert code == 2 and "n-max" in err

    def test_table_and_json_contain_same_numbers(self, capsys):
        _, out_table, _ = run_main(capsys, "verify-paper", "--n-max", "3")
        _, out_json, _ = run_main(capsys, "verify-paper", "--n-max", "3",
                                  "--format", "json")
        for r in json.loads(out_json):
            assert r["check_id"] in out_table
            assert r["actual"] in out_table

    def test_deterministic_output(self, capsys):
        _, first, _ = run_main(capsys, "verify-paper", "--n-max", "4")
        _, second, _ = run_main(capsys, "verify-paper", "--n-max", "4")
        assert first == second

    def test_check_ids_emit_sorted(self):
        ids = [r.check_id for r in run_paper_checks(4)]
        assert ids == sorted(ids)

    def test_every_check_has_provenance(self):
        for r in run_paper_checks(3):
            assert r.provenance in ("PAPER", "DERIVED")


class TestConsoleEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hodgekit.cli", "diamond", "--preset",
             "enriques", "sym", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "56" in proc.stdout

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hodgekit.cli", "diamond", "frobnicate", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
