import json

import pytest

from ruledsurf.cli import EXIT_DISAGREE, EXIT_IO, EXIT_OK, EXIT_VALIDATION, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_scenario(tmp_path, name="scenario.json", **overrides):
    doc = {
        "base": {"genus": 1, "characteristic": 0, "degrees": [3, 0]},
        "budget_class": {"a": 0, "b": 2},
        "steps": [{"on_strict_transform": True} for _ in range(7)],
    }
    doc.update(overrides)
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestClassify:
    def test_elliptic_big(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--genus", "1", "--degrees", "1,0")
        assert code == EXIT_OK
        assert "big: true" in out
        assert "volume: 1" in out
        assert "nef: false" in out  # -K pairs negatively with the section

    def test_genus2_not_big(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--genus", "2", "--degrees", "2,0")
        assert code == EXIT_OK
        assert "big: false" in out
        assert "volume: 0" in out

    def test_min_destabilizing_e(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--genus", "2", "--char", "2", "--degrees", "1,0"
        )
        assert code == EXIT_OK
        assert "min_destabilizing_e: 2" in out

    def test_explicit_class(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--genus", "1", "--degrees", "1,0",
            "--class", "1,0",
        )
        assert code == EXIT_OK
        assert "nef: true" in out
        assert "big: true" in out

    def test_invalid_degrees(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--genus", "1", "--degrees", "1,x")
        assert code == EXIT_VALIDATION
        assert "degrees" in err

    def test_invalid_genus(self, capsys):
        code, _, _ = run_cli(capsys, "classify", "--genus", "-1", "--degrees", "1,0")
        assert code == EXIT_VALIDATION


class TestScan:
    def test_small_grid_agrees(self, capsys, monkeypatch):
        monkeypatch.setenv("RSK_THREADS", "1")
        code, out, _ = run_cli(
            capsys, "scan", "--genus-range", "1:2", "--d1-range", "0:4",
            "--d2-range", "0:0", "--m-max", "32",
        )
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        header = lines[0].split("\t")
        assert header == ["genus", "char", "d1", "d2", "a", "b", "big",
                          "verdict", "volume", "agree"]
        assert len(lines) == 1 + 2 * 5
        assert all(line.split("\t")[-1] == "true" for line in lines[1:])

    def test_deterministic_output(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("RSK_THREADS", "1")
        args = ["scan", "--genus-range", "1:1", "--d1-range=-1:2",
                "--d2-range=-1:1", "--m-max", "16"]
        out1 = tmp_path / "a.tsv"
        out2 = tmp_path / "b.tsv"
        assert main(args + ["--out", str(out1)]) == EXIT_OK
        assert main(args + ["--out", str(out2)]) == EXIT_OK
        assert out1.read_bytes() == out2.read_bytes()

    def test_single_point_matches_classify(self, capsys, monkeypatch):
        monkeypatch.setenv("RSK_THREADS", "1")
        code, out, _ = run_cli(
            capsys, "scan", "--genus-range", "2:2", "--d1-range", "5:5",
            "--d2-range", "0:0", "--m-max", "32",
        )
        assert code == EXIT_OK
        row = out.strip().split("\n")[1].split("\t")
        assert row[6] == "true"  # big column, same verdict as classify
        code2, out2, _ = run_cli(capsys, "classify", "--genus", "2",
                                 "--degrees", "5,0")
        assert "big: true" in out2

    def test_empty_grid_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "scan", "--genus-range", "1:1", "--d1-range", "0:0",
            "--d2-range", "3:3",
        )
        assert code == EXIT_VALIDATION
        assert "empty" in err

    def test_bad_range_syntax(self, capsys):
        code, _, err = run_cli(
            capsys, "scan", "--genus-range", "1-2", "--d1-range", "0:1",
            "--d2-range", "0:0",
        )
        assert code == EXIT_VALIDATION

    def test_unwritable_out(self, capsys, monkeypatch):
        monkeypatch.setenv("RSK_THREADS", "1")
        code, _, err = run_cli(
            capsys, "scan", "--genus-range", "1:1", "--d1-range", "1:1",
            "--d2-range", "0:0", "--out", "/nonexistent-dir/out.tsv",
        )
        assert code == EXIT_IO

    def test_rank3_grid(self, capsys, monkeypatch):
        monkeypatch.setenv("RSK_THREADS", "1")
        code, out, _ = run_cli(
            capsys, "scan", "--genus-range", "1:1", "--d1-range", "1:2",
            "--d2-range", "0:0", "--d3-range", "0:0", "--m-max", "16",
        )
        assert code == EXIT_OK
        assert out.split("\n")[0].split("\t")[2:5] == ["d1", "d2", "d3"]


class TestBlowup:
    def test_certifies_example(self, capsys, tmp_path):
        path = write_scenario(tmp_path)
        code, out, _ = run_cli(capsys, "blowup", path)
        assert code == EXIT_OK
        assert "certified: true" in out
        assert "k_squared_step_0: 0" in out
        assert "k_squared_step_7: -7" in out

    def test_flipped_flag(self, capsys, tmp_path):
        flags = [{"on_strict_transform": True} for _ in range(7)]
        flags[0]["on_strict_transform"] = False
        path = write_scenario(tmp_path, steps=flags)
        code, out, _ = run_cli(capsys, "blowup", path)
        assert code == EXIT_OK
        assert "certified: false" in out

    def test_missing_field(self, capsys, tmp_path):
        path = write_scenario(tmp_path, budget_class={"a": 0})
        code, _, err = run_cli(capsys, "blowup", path)
        assert code == EXIT_VALIDATION
        assert "scenario.budget_class.b" in err

    def test_wrong_type_field(self, capsys, tmp_path):
        path = write_scenario(
            tmp_path, steps=[{"on_strict_transform": "yes"}]
        )
        code, _, err = run_cli(capsys, "blowup", path)
        assert code == EXIT_VALIDATION
        assert "steps[0].on_strict_transform" in err

    def test_invalid_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "blowup", str(path))
        assert code == EXIT_VALIDATION

    def test_non_pseff_budget(self, capsys, tmp_path):
        path = write_scenario(tmp_path, budget_class={"a": -1, "b": 0})
        code, _, err = run_cli(capsys, "blowup", path)
        assert code == EXIT_VALIDATION
        assert "pseudoeffective" in err


class TestH0:
    def test_interval_output(self, capsys):
        code, out, _ = run_cli(capsys, "h0", "--genus", "1", "--degrees", "1,0")
        assert code == EXIT_OK
        assert "h0_lo: 1" in out and "h0_hi: 2" in out

    def test_growth_section(self, capsys):
        code, out, _ = run_cli(
            capsys, "h0", "--genus", "2", "--degrees", "5,0", "--m-max", "32"
        )
        assert code == EXIT_OK
        assert "verdict: BIG_CERTIFIED" in out
        assert "sample_m_32:" in out


class TestFrobenius:
    def test_pullback(self, capsys):
        code, out, _ = run_cli(
            capsys, "frobenius", "--genus", "1", "--char", "2",
            "--degrees", "1,0", "--e", "2",
        )
        assert code == EXIT_OK
        assert "pullback_degrees: 4,0" in out
        assert "min_destabilizing_e: 0" in out

    def test_char_zero_error(self, capsys):
        code, _, err = run_cli(
            capsys, "frobenius", "--genus", "1", "--degrees", "1,0", "--e", "1"
        )
        assert code == EXIT_VALIDATION
        assert "characteristic zero" in err
