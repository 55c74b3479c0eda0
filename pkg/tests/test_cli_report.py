"""Report assembly, serialization, and the command-line driver."""

import json
from fractions import Fraction

import pytest

from igusa.cli import main
from igusa.exact import CYC_I, Cyclotomic, QSeries
from igusa.report import (
    CheckResult,
    SuiteRunner,
    build_report,
    census_suite,
    render_markdown,
)
from igusa.report import _first_mismatch, _plain


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------


def test_plain_serialization_of_exact_values():
    assert _plain(Fraction(3, 1)) == 3
    assert _plain(Fraction(-1, 2)) == "-1/2"
    assert _plain(Cyclotomic(64)) == 64
    assert _plain(CYC_I) == "i"
    assert _plain(-CYC_I) == "-i"
    assert _plain(Cyclotomic(8) * CYC_I) == "8i"
    assert _plain(Cyclotomic(-8) * CYC_I) == "-8i"
    series = QSeries({Fraction(0): Cyclotomic(Fraction(-1, 2)),
                      Fraction(1): Cyclotomic(10)}, Fraction(5, 4))
    plain = _plain(series)
    assert plain["coefficients"] == {"0": "-1/2", "1": 10}
    assert plain["truncation_exponent"] == "5/4"
    assert _plain((1, frozenset({3, 2}))) == [1, [2, 3]]


def test_first_mismatch_reports_a_path():
    expected = {"a": [1, 2, 3], "b": {"c": 5}}
    hit = _first_mismatch(expected, {"a": [1, 9, 3], "b": {"c": 5}})
    assert hit == {"path": "$.a[1]", "expected": 2, "actual": 9}
    assert _first_mismatch(expected, expected) is None
    missing = _first_mismatch({"a": 1}, {})
    assert missing["path"] == "$.a"


def test_check_result_rejects_unknown_status():
    with pytest.raises(ValueError):
        CheckResult(id="x", status="maybe", claim="", expected=1, actual=1)


# ---------------------------------------------------------------------------
# Suite runner behavior
# ---------------------------------------------------------------------------


def test_runner_records_pass_fail_and_error():
    runner = SuiteRunner()
    runner.run("ok", "a passing check", lambda: (1, 1))
    runner.run("bad", "a failing check", lambda: ({"k": 1}, {"k": 2}))

    def boom():
        raise ValueError("witness: the culprit")

    runner.run("err", "an erroring check", boom)
    runner.skip("skip", "a skipped check", "disabled")
    by_id = {c.id: c for c in runner.checks}
    assert by_id["ok"].status == "pass"
    assert by_id["bad"].status == "fail"
    assert by_id["bad"].actual["first_mismatch"]["path"] == "$.k"
    assert by_id["err"].status == "fail"
    assert "witness: the culprit" in by_id["err"].actual["error"]
    assert by_id["skip"].status == "skipped"


def test_runner_timings_flag_controls_runtime_field():
    silent = SuiteRunner(timings=False)
    silent.run("x", "", lambda: (1, 1))
    assert silent.checks[0].runtime_ms is None
    timed = SuiteRunner(timings=True)
    timed.run("x", "", lambda: (1, 1))
    assert isinstance(timed.checks[0].runtime_ms, float)


# ---------------------------------------------------------------------------
# Report documents
# ---------------------------------------------------------------------------


def test_census_report_is_deterministic_and_sorted():
    doc1 = build_report("census", seed=7)
    doc2 = build_report("census", seed=7)
    assert doc1.to_json() == doc2.to_json()
    ids = [c.id for c in doc1.checks]
    assert ids == sorted(ids)
    assert doc1.summary == {"pass": 3, "fail": 0, "skipped": 0, "total": 3}
    assert not doc1.failed
    payload = doc1.to_dict()
    assert payload["config"]["seed"] == 7
    assert payload["tool"] == "igusa"


def test_unknown_subcommand_is_rejected():
    with pytest.raises(ValueError):
        build_report("bogus")


def test_geometry_report_with_zero_trials_skips_numeric():
    doc = build_report("geometry", trials=0)
    statuses = {c.id: c.status for c in doc.checks}
    assert statuses["geometry-degree16"] == "skipped"
    assert statuses["geometry-witness-composition"] == "skipped"
    symbolic = [s for i, s in statuses.items()
                if s != "skipped"]
    assert symbolic and all(s == "pass" for s in symbolic)
    assert not doc.failed  # skipped checks do not fail the run
    assert any("open question" in note for note in doc.notes)


def test_markdown_is_rendered_from_the_json_document():
    doc = build_report("census")
    payload = doc.to_dict()
    text = render_markdown(payload)
    assert text.startswith("# Verification report: census")
    for check in payload["checks"]:
        assert f"`{check['id']}`" in text
    assert "## Failures" not in text
    # a failing document renders a failure section with the witness
    failing = dict(payload)
    failing["checks"] = [dict(payload["checks"][0])]
    failing["checks"][0]["status"] = "fail"
    failing["checks"][0]["actual"] = {"first_mismatch": {"path": "$.x"}}
    failing["summary"] = {"pass": 0, "fail": 1, "skipped": 0, "total": 1}
    failed_text = render_markdown(failing)
    assert "## Failures" in failed_text
    assert "$.x" in failed_text


# ---------------------------------------------------------------------------
# Command-line driver
# ---------------------------------------------------------------------------


def test_cli_census_json_to_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["census", "--out", str(out)])
    assert code == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(out.read_text())
    assert payload["summary"]["fail"] == 0
    assert payload["subcommand"] == "census"


def test_cli_census_markdown_to_stdout(capsys):
    code = main(["census", "--format", "md"])
    assert code == 0
    text = capsys.readouterr().out
    assert text.startswith("# Verification report: census")


def test_cli_usage_errors_exit_2():
    for argv in (
        [],                          # missing suite
        ["bogus"],                   # unknown suite
        ["census", "--bogus"],       # unknown flag
        ["census", "--box", "2"],    # box below the witness range
        ["census", "--seed", "-1"],  # negative seed
        ["geometry", "--trials", "-3"],
        ["obstruction", "--tolerance", "0"],
    ):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2, argv


def test_cli_failing_check_exits_1(tmp_path):
    # an impossible tolerance forces the numeric oracle check to fail
    out = tmp_path / "fail.json"
    code = main(["obstruction", "--tolerance", "1e-30", "--out", str(out)])
    assert code == 1
    payload = json.loads(out.read_text())
    failed = [c for c in payload["checks"] if c["status"] == "fail"]
    assert [c["id"] for c in failed] == ["eisenstein-numeric-oracle"]
    # the failure names its witness
    assert "disagrees" in failed[0]["actual"]["error"]


def test_cli_byte_identical_reports_for_same_config(capsys):
    main(["census", "--seed", "11"])
    first = capsys.readouterr().out
    main(["census", "--seed", "11"])
    second = capsys.readouterr().out
    assert first == second


def test_cli_timings_are_recorded_on_request(capsys):
    main(["census", "--timings"])
    payload = json.loads(capsys.readouterr().out)
    assert all(isinstance(c["runtime_ms"], float) for c in payload["checks"])
    assert payload["config"]["timings"] is True
