import json
from pathlib import Path

import pytest

from catalan_ode.bfile import parse_bfile
from catalan_ode.cli import main
from catalan_ode.identities import VerificationReport
from catalan_ode.runner import RunConfig, emit_report, run_suite

FIXTURE = Path(__file__).resolve().parent.parent / "data" / "catalan_b000108.txt"


class TestBFileParser:
    def test_basic(self):
        entries = parse_bfile("0 1\n1 1\n2 2")
        assert [(e.index, e.value) for e in entries] == [(0, 1), (1, 1), (2, 2)]

    def test_comments_and_blanks(self):
        entries = parse_bfile("# comment\n\n5 42\n")
        assert [(e.index, e.value) for e in entries] == [(5, 42)]

    def test_malformed_value(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_bfile("# comment\n3 five")

    def test_malformed_shape(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_bfile("3 4 5")

    def test_non_increasing(self):
        with pytest.raises(ValueError, match="not increasing"):
            parse_bfile("2 2\n2 3")

    def test_big_values(self):
        big = 10**100 + 7
        assert parse_bfile(f"0 {big}")[0].value == big


class TestCatalanCommand:
    def test_prints_sequence(self, capsys):
        assert main(["catalan", "--max", "12"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "1,1,2,5,14,42,132,429,1430,4862,16796,58786,208012"

    def test_negative_max(self, capsys):
        assert main(["catalan", "--max", "-1"]) == 2


class TestHigherCommand:
    def test_order_three(self, capsys):
        assert main(["higher", "--r", "3", "--max", "2"]) == 0
        assert capsys.readouterr().out.strip() == "1,3,9"

    def test_bad_order(self, capsys):
        assert main(["higher", "--r", "0", "--max", "2"]) == 2


class TestCoeffsCommand:
    def test_a_family(self, capsys):
        assert main(["coeffs", "--family", "a", "--max-N", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["family"] == "a"
        assert doc["rows"][1] == {"N": 2, "entries": ["2", "2"]}

    def test_b_family(self, capsys):
        assert main(["coeffs", "--family", "b", "--max-N", "4"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["rows"][3]["entries"] == ["1", "-12", "12"]


class TestVerifyCommand:
    def test_eq57_passes(self, capsys):
        assert main(["verify", "--id", "eq57", "--max-N", "12", "--order", "64"]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_invalid_bound(self, capsys):
        assert main(["verify", "--id", "thm1", "--max-N", "0"]) == 2

    def test_order_constraint(self, capsys):
        assert main(["verify", "--id", "thm1", "--max-N", "8", "--order", "12"]) == 2

    def test_unknown_identity_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--id", "thm99"])
        assert exc.value.code == 2

    def test_json_output(self, capsys):
        assert main(["verify", "--id", "eq58", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["version"] == "1"
        assert doc["reports"] == [
            {"id": "eq58", "mode": "series", "parameters": {"K": 64}, "passed": True}
        ]

    def test_parallel_matches_serial(self, capsys):
        assert main(["verify", "--id", "eq57", "--format", "json",
                     "--parallelism", "4"]) == 0
        parallel = capsys.readouterr().out
        assert main(["verify", "--id", "eq57", "--format", "json"]) == 0
        assert parallel == capsys.readouterr().out

    def test_env_threads_flag_precedence(self, capsys, monkeypatch):
        monkeypatch.setenv("CATALAN_ODE_THREADS", "not-a-number")
        assert main(["verify", "--id", "asymptotic", "--format", "json"]) == 0
        monkeypatch.setenv("CATALAN_ODE_THREADS", "2")
        assert main(["verify", "--id", "asymptotic", "--format", "json"]) == 0


class TestCrosscheckCommand:
    def test_fixture_has_no_mismatches(self, capsys):
        assert main(["crosscheck", "--bfile", str(FIXTURE), "--max", "200"]) == 0
        assert "0 mismatches" in capsys.readouterr().out

    def test_detects_mismatch(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("0 1\n1 1\n2 3\n")
        assert main(["crosscheck", "--bfile", str(bad), "--max", "10"]) == 1
        assert "mismatch at index 2" in capsys.readouterr().out

    def test_missing_file(self, capsys):
        assert main(["crosscheck", "--bfile", "/nonexistent", "--max", "5"]) == 2


class TestEmitReport:
    def test_empty_json(self):
        assert emit_report([], "json") == '{"reports":[],"version":"1"}'

    def test_json_round_trip(self):
        cfg = RunConfig(max_n_deriv=2, max_index=3, conv_max=5,
                        terms_eq59=5, terms_eq62=5)
        reports = run_suite("all", cfg)
        text = emit_report(reports, "json")
        doc = json.loads(text)
        assert json.dumps(doc, sort_keys=True, separators=(",", ":")) == text

    def test_failing_report_includes_witness(self):
        rep = VerificationReport(
            identity="thm1", parameters={"N": 1}, mode="series", passed=False,
            witness={"index": "0", "lhs": "1", "rhs": "2"},
        )
        doc = json.loads(emit_report([rep], "json"))
        assert doc["reports"][0]["witness"] == {"index": "0", "lhs": "1", "rhs": "2"}

    def test_human_table(self):
        rep = VerificationReport(
            identity="eq58", parameters={"K": 4}, mode="series", passed=True,
        )
        text = emit_report([rep], "human")
        assert "eq58" in text and "PASS" in text
