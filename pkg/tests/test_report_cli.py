import json
from pathlib import Path

import jsonschema
import pytest
from click.testing import CliRunner

from aontlab import (
    dump_array_csv,
    identity_matrix,
    linear_aont,
    save_model_json,
    uniform_model,
)
from aontlab.cli import cli
from aontlab.demos import run_demo
from aontlab.report import (
    build_report,
    parse_report_csv,
    report_to_csv,
    report_to_json_dict,
    report_to_table,
)

from conftest import example1_model, example3_model, example4_model

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs" / "analysis_report.schema.json").read_text()
)


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def ex1_model_file(tmp_path):
    path = tmp_path / "ex1.json"
    save_model_json(example1_model(), str(path))
    return str(path)


def test_build_report_example1(table1):
    report = build_report(table1, example1_model(), 1, 1, array_label="table1")
    assert report.verdict.verdict == "aont"
    assert report.bounds_tag == "symmetric"
    assert len(report.rows) == 4
    values = {(r.x, r.y): r.oracle for r in report.rows}
    assert values[(1,), (3,)] == pytest.approx(1.196889, abs=1e-6)
    assert values[(2,), (4,)] == pytest.approx(1.198335, abs=1e-6)
    assert all(r.within for r in report.rows)
    assert not report.perfect_security
    assert report.exceeds_min_entropy_cap is False


def test_build_report_example3_flags_cap(table2):
    report = build_report(table2, example3_model(), 1, 2, array_label="table2")
    assert report.bounds_tag == "asymmetric"
    assert report.exceeds_min_entropy_cap is True
    assert report.row_for((1,), (5,)).oracle == pytest.approx(1.459148, abs=1e-6)


def test_build_report_example4(table3):
    report = build_report(table3, example4_model(), 1, 2, array_label="table3")
    assert report.verdict.verdict == "weak-aont-only"
    assert report.bounds_tag == "weak"
    assert all(r.within for r in report.rows)
    assert report.row_for((1,), (6,)).oracle == pytest.approx(0.657504, abs=1e-6)


def test_report_rows_sorted(table2):
    report = build_report(table2, example3_model(), 1, 2)
    keys = [(r.x, r.y) for r in report.rows]
    assert keys == sorted(keys)


def test_report_perfect_security_flag(table1):
    report = build_report(table1, uniform_model(2, 3), 1, 1)
    assert report.perfect_security


def test_csv_round_trip(table1):
    report = build_report(table1, example1_model(), 1, 1)
    text = report_to_csv(report)
    parsed = parse_report_csv(text)
    assert len(parsed) == len(report.rows)
    for rec, row in zip(parsed, report.rows):
        assert rec["x"] == row.x and rec["y"] == row.y
        assert rec["oracle"] == row.oracle  # exact float round trip
        assert rec["formula"] == row.formula
        assert rec["lower"] == row.lower and rec["upper"] == row.upper


def test_table_rendering_six_decimals(table1):
    report = build_report(table1, example1_model(), 1, 1)
    text = report_to_table(report)
    assert "1.196889" in text and "verdict: aont" in text


def test_json_schema_validation(table1, table2, table3):
    for arr, model, t_i, t_o in (
        (table1, example1_model(), 1, 1),
        (table2, example3_model(), 1, 2),
        (table3, example4_model(), 1, 2),
    ):
        doc = report_to_json_dict(build_report(arr, model, t_i, t_o))
        jsonschema.validate(doc, SCHEMA)


def test_json_schema_validates_neither_report():
    arr = linear_aont(identity_matrix(2, 3))
    doc = report_to_json_dict(build_report(arr, uniform_model(2, 3), 1, 1))
    jsonschema.validate(doc, SCHEMA)
    assert doc["bounds"] is None


def test_demo_reports_pass():
    for n in (1, 2, 3, 4):
        report, checks, passed = run_demo(n)
        assert passed, [c for c in checks if not c.ok]


def test_cli_verify_exit_codes(runner, tmp_path):
    assert runner.invoke(cli, ["verify", "--builtin", "table1", "--ti", "1", "--to", "1"]).exit_code == 0
    assert runner.invoke(cli, ["verify", "--builtin", "table2", "--ti", "1", "--to", "2"]).exit_code == 0
    res3 = runner.invoke(cli, ["verify", "--builtin", "table3", "--ti", "1", "--to", "2"])
    assert res3.exit_code == 1
    assert "(1, 4)" in res3.output

    ident = tmp_path / "identity.csv"
    ident.write_text(dump_array_csv(linear_aont(identity_matrix(2, 3))))
    assert runner.invoke(cli, ["verify", "--array", str(ident), "--ti", "1", "--to", "1"]).exit_code == 2


def test_cli_verify_truncated_file(runner, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,a,a,a\na,b,c,b\n")
    result = runner.invoke(cli, ["verify", "--array", str(bad), "--ti", "1", "--to", "1"])
    assert result.exit_code > 2


def test_cli_verify_usage_error_code(runner):
    result = runner.invoke(cli, ["verify", "--ti", "1", "--to", "1"])
    assert result.exit_code == 4


def test_cli_verify_json(runner):
    result = runner.invoke(cli, ["verify", "--builtin", "table3", "--ti", "1", "--to", "2", "--format", "json"])
    doc = json.loads(result.output)
    assert doc["verdict"] == "weak-aont-only" and doc["witness"] == [1, 4]


def test_cli_analyze_table(runner, ex1_model_file):
    result = runner.invoke(
        cli,
        ["analyze", "--builtin", "table1", "--model", ex1_model_file, "--ti", "1", "--to", "1"],
    )
    assert result.exit_code == 0
    assert "1.196889" in result.output


def test_cli_analyze_json_schema(runner, ex1_model_file):
    result = runner.invoke(
        cli,
        [
            "analyze", "--builtin", "table1", "--model", ex1_model_file,
            "--ti", "1", "--to", "1", "--format", "json",
        ],
    )
    jsonschema.validate(json.loads(result.output), SCHEMA)


def test_cli_analyze_csv_round_trip(runner, ex1_model_file, table1):
    result = runner.invoke(
        cli,
        [
            "analyze", "--builtin", "table1", "--model", ex1_model_file,
            "--ti", "1", "--to", "1", "--format", "csv",
        ],
    )
    parsed = parse_report_csv(result.output)
    direct = build_report(table1, example1_model(), 1, 1)
    for rec, row in zip(parsed, direct.rows):
        assert rec["oracle"] == row.oracle


def test_cli_analyze_pair_filter(runner, ex1_model_file):
    result = runner.invoke(
        cli,
        [
            "analyze", "--builtin", "table1", "--model", ex1_model_file,
            "--ti", "1", "--to", "1", "--format", "csv", "--pair", "1:3",
        ],
    )
    rows = parse_report_csv(result.output)
    assert len(rows) == 1 and rows[0]["x"] == (1,) and rows[0]["y"] == (3,)


def test_cli_analyze_bad_model_file(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    result = runner.invoke(
        cli, ["analyze", "--builtin", "table1", "--model", str(bad), "--ti", "1", "--to", "1"]
    )
    assert result.exit_code == 3


def test_cli_demo(runner):
    result = runner.invoke(cli, ["demo", "1"])
    assert result.exit_code == 0
    assert "demo 1: PASS" in result.output


def test_cli_demo_json_schema(runner):
    result = runner.invoke(cli, ["demo", "4", "--format", "json"])
    doc = json.loads(result.output)
    jsonschema.validate(doc, SCHEMA)
    assert doc["passed"] is True


def test_cli_search_text(runner):
    result = runner.invoke(cli, ["search", "--s", "2", "--v", "3", "--ti", "1", "--to", "1"])
    assert result.exit_code == 0
    assert "48 examined, 8 found" in result.output


def test_cli_search_json(runner):
    result = runner.invoke(cli, ["search", "--s", "2", "--v", "2", "--ti", "1", "--to", "1", "--format", "json"])
    doc = json.loads(result.output.splitlines()[-1])
    assert doc["examined"] == 6 and doc["found"] == 0


def test_cli_search_cap_exceeded(runner):
    result = runner.invoke(cli, ["search", "--s", "4", "--v", "7", "--ti", "1", "--to", "1"])
    assert result.exit_code == 3
