"""CLI behavior: exit codes, report content, JSON output, batch ordering."""

import json

import pytest

from cyalg.cli import Report, run

HEIS_DOC = """
{
  "lie": {"dim": 3, "basis": ["x", "y", "z"], "brackets": [
    {"left": "x", "right": "y", "value": {"z": "1"}}]}
}
"""

BAD_JACOBI_DOC = """
{
  "lie": {"dim": 3, "basis": ["x", "y", "z"], "brackets": [
    {"left": "x", "right": "y", "value": {"x": "1"}},
    {"left": "y", "right": "z", "value": {"y": "1"}},
    {"left": "x", "right": "z", "value": {"z": "-1"}}]}
}
"""

REFLECTION_DOC = """
{
  "lie": {"dim": 2, "basis": ["x", "y"], "brackets": []},
  "group": {"generators": [[["1", "0"], ["0", "-1"]]]}
}
"""

INVARIANT_DOC = """
{
  "lie": {"dim": 3, "basis": ["x", "y", "z"], "brackets": []},
  "group": {"generators": [[["1*z@3", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]]},
  "query": "integral-invariants"
}
"""


def test_classify_catalog_entries():
    code, reports = run(["classify", "catalog:heisenberg"])
    assert code == 0
    assert reports[0].verdict is True
    assert reports[0].data["class"] == "HEISENBERG"
    code, reports = run(["classify", "sl2"])
    assert code == 0 and reports[0].data["class"] == "SL2"


def test_classify_non_unimodular_is_mathematical_no():
    code, reports = run(["classify", "catalog:solvable2b"])
    assert code == 1
    assert reports[0].verdict is False
    assert reports[0].error is None


def test_homology_reports_betti():
    code, reports = run(["homology", "catalog:sl2"])
    assert code == 0
    assert reports[0].data["betti"] == [1, 0, 0, 1]
    assert reports[0].routes == {"trace_condition": True,
                                 "top_differential_zero": True,
                                 "top_homology_nonzero": True}


def test_potential_catalog_case1(tmp_path):
    code, reports = run(["potential", "catalog:case1"])
    assert code == 0 and reports[0].verdict is True
    # and every catalog case verifies
    code, reports = run(["potential"] + [f"case{i}" for i in range(1, 8)])
    assert code == 0
    assert all(r.verdict for r in reports)


def test_skew_reflection_exit_1(tmp_path):
    path = tmp_path / "reflect.json"
    path.write_text(REFLECTION_DOC)
    code, reports = run(["skew", str(path)])
    assert code == 1
    assert reports[0].verdict is False
    assert reports[0].data["group_in_sl"] is False
    assert reports[0].data["sl_witness"]["determinant"] == "-1"


def test_integral_invariants_query_override(tmp_path):
    path = tmp_path / "invars.json"
    path.write_text(INVARIANT_DOC)
    code, reports = run(["skew", str(path)])
    assert code == 0
    assert reports[0].query == "integral-invariants"
    assert reports[0].data["invariant"] == ["1", "-1 - 1*z@3", "1*z@3"]
    assert reports[0].data["is_full_group_sum"] is False


def test_check_jacobi_verdict_vs_input_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(BAD_JACOBI_DOC)
    code, reports = run(["check", str(path)])
    assert code == 1
    assert reports[0].verdict is False
    code, reports = run(["homology", str(path)])
    assert code == 2
    assert reports[0].error["type"] == "JacobiViolation"


def test_check_valid_table(tmp_path):
    path = tmp_path / "heis.json"
    path.write_text(HEIS_DOC)
    code, reports = run(["check", str(path)])
    assert code == 0
    assert reports[0].data["unimodular"] is True
    assert reports[0].data["derived_dim"] == 1


def test_missing_file_is_exit_2():
    code, reports = run(["classify", "does-not-exist.json"])
    assert code == 2
    assert reports[0].error["type"] == "IOError"


def test_sridharan_subcommand():
    code, reports = run(["sridharan", "catalog:case6"])
    assert code == 0
    assert reports[0].verdict is True
    assert reports[0].data["dualizing_is_identity"] is True
    assert "-1 + x*z - z*x" in reports[0].data["relations"]
    code, reports = run(["sridharan", "catalog:solvable2b"])
    assert code == 1
    assert reports[0].data["dualizing_shift"] == ["-2", "0", "0"]


def test_json_output(tmp_path):
    out = tmp_path / "report.json"
    code, reports = run(["homology", "heisenberg", "--json", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["exit_code"] == 0
    assert doc["reports"][0]["data"]["betti"] == [1, 2, 2, 1]
    assert doc["reports"][0]["source"] == "catalog:heisenberg"


def test_batch_order_and_aggregate_exit():
    inputs = ["abelian3", "solvable2b", "heisenberg"]
    code, reports = run(["homology"] + inputs)
    assert code == 1  # one mathematical no dominates the zeros
    assert [r.source for r in reports] == ["catalog:" + n for n in inputs]
    code2, reports2 = run(["homology"] + inputs + ["--jobs", "3"])
    assert code2 == 1
    assert [(r.source, r.verdict) for r in reports2] == [
        (r.source, r.verdict) for r in reports]


def test_group_cap_flag(tmp_path):
    path = tmp_path / "big.json"
    path.write_text("""
    {
      "lie": {"dim": 2, "basis": ["x", "y"], "brackets": []},
      "group": {"generators": [[["0", "-1"], ["1", "0"]]], "cap": 2},
      "query": "skew-cy"
    }
    """)
    code, reports = run(["skew", str(path)])
    assert code == 2
    assert reports[0].error["type"] == "OrderExceedsCap"
    code, reports = run(["skew", str(path), "--cap", "16"])
    assert code == 0 and reports[0].verdict is True


def test_catalog_listing_and_dump(capsys):
    code, reports = run(["catalog"])
    assert code == 0
    out = capsys.readouterr().out
    assert "case1" in out and "solvable2b" in out
    assert len(reports) == 12
    code, reports = run(["catalog", "case3"])
    assert code == 0
    assert reports[0].data["document"]["lie"]["dim"] == 3
    code, reports = run(["catalog", "bogus"])
    assert code == 2


def test_report_exit_code_logic():
    assert Report("q", "s", verdict=True).exit_code == 0
    assert Report("q", "s").exit_code == 0
    assert Report("q", "s", verdict=False).exit_code == 1
    assert Report("q", "s", error={"type": "X", "message": ""}).exit_code == 2


def test_report_text_rendering():
    r = Report("homology", "demo", verdict=True, dimension=3,
               routes={"trace_condition": True}, data={"betti": [1, 2, 2, 1]},
               notes=("checked",))
    text = r.to_text()
    assert "demo" in text and "verdict: yes" in text and "betti" in text
    r = Report("q", "s", error={"type": "ParseError", "message": "boom"})
    assert "boom" in r.to_text()
