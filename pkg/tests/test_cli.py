"""CLI behaviour: exit codes, output formats and golden JSON reports.

Set AGGROUP_REGEN_GOLDEN=1 to rewrite the golden files after an intended
output change.
"""
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from aggroup.cli import main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
SCHEMA = json.loads((HERE.parent / "src" / "aggroup" / "report.schema.json").read_text())


def run(*args, stdin=None):
    p = subprocess.run(
        [sys.executable, "-m", "aggroup", *map(str, args)],
        capture_output=True, text=True, input=stdin,
    )
    return p.returncode, p.stdout, p.stderr


def golden(name: str, text: str):
    path = GOLDEN / name
    if os.environ.get("AGGROUP_REGEN_GOLDEN"):
        path.write_text(text)
    assert text == path.read_text()


# -- validate ---------------------------------------------------------------

def test_validate_ok():
    code, out, _ = run("validate", DATA / "e1.txt")
    assert code == 0 and "AG-group" in out


def test_validate_not_ag_group_lists_witnesses():
    code, out, _ = run("validate", DATA / "not_ag.txt", "--json")
    assert code == 1
    d = json.loads(out)
    assert d["left_invertive"]["witness"] == [0, 0, 1]
    assert d["inverses"]["status"] == "fail"


@pytest.mark.parametrize("path", [DATA / "garbage.txt", DATA / "missing.txt"])
def test_validate_parse_errors_exit_2(path):
    code, _, err = run("validate", path)
    assert code == 2 and "error" in err


def test_stdin_input():
    code, _, _ = run("validate", "-", stdin=(DATA / "e2.txt").read_text())
    assert code == 0


# -- analyze ----------------------------------------------------------------

def test_analyze_e1_json_matches_schema_and_golden():
    code, out, _ = run("analyze", DATA / "e1.txt", "--json")
    assert code == 0
    d = json.loads(out)
    jsonschema.validate(d, SCHEMA)
    assert d["mult_group"]["recognized"] == "S3"
    assert d["inner"]["recognized"] == "C2"
    golden("analyze_e1.json", out)


def test_analyze_e2():
    code, out, _ = run("--json", "analyze", DATA / "e2.txt")
    assert code == 0
    d = json.loads(out)
    jsonschema.validate(d, SCHEMA)
    assert d["left_section"]["abelian"] and d["mult_group"]["order"] == 8
    assert d["inner"]["normal_in_mg"] is False


def test_analyze_human_output_uses_cycles():
    code, out, _ = run("analyze", DATA / "e2.txt")
    assert code == 0
    assert "R2 = (0 2 1 3)" in out
    assert "inner mapping group: {L0, R0} ~ C2" in out


def test_analyze_rejects_non_ag_group():
    assert run("analyze", DATA / "not_ag.txt")[0] == 1


def test_analyze_is_byte_stable():
    assert run("analyze", DATA / "e2.txt", "--json")[1] == run("analyze", DATA / "e2.txt", "--json")[1]


# -- law ------------------------------------------------------------------------

def test_law_suite_lemma1_e2():
    code, out, _ = run("law", DATA / "e2.txt", "--suite", "lemma1", "--json")
    assert code == 0
    assert len({r["name"] for r in json.loads(out)["results"]}) == 14


def test_law_commutativity_fails_on_e1():
    code, out, _ = run("law", DATA / "e1.txt", "--law", "a*b = b*a", "--json")
    assert code == 1
    assert json.loads(out)["results"][0]["counterexample"] == {"a": 0, "b": 1}


def test_law_suite_lemma2_e1():
    code, out, _ = run("law", DATA / "e1.txt", "--suite", "lemma2")
    assert code == 0 and out.strip().endswith("all pass")


def test_law_suite_all_and_axioms():
    assert run("law", DATA / "e2.txt", "--suite", "all")[0] == 0
    code, out, _ = run("law", DATA / "not_ag.txt", "--suite", "axioms", "--json")
    assert code == 1
    st = {r["name"]: r["status"] for r in json.loads(out)["results"]}
    assert st == {"left-invertive": "fail", "left-identity": "pass", "inverse": "fail"}


def test_law_lemma2_needs_ag_group():
    assert run("law", DATA / "not_ag.txt", "--suite", "lemma2")[0] == 1


def test_law_syntax_error_exit_2():
    code, _, err = run("law", DATA / "e1.txt", "--law", "a*=b")
    assert code == 2 and "position 2" in err


def test_law_identity_on_non_ag_table_exit_2():
    assert run("law", DATA / "not_ag.txt", "--law", "e*a = a")[0] == 2


# -- enumerate / survey -----------------------------------------------------------

def test_enumerate_count_only():
    code, out, _ = run("enumerate", "--order", "1", "--count-only")
    assert code == 0 and json.loads(out) == {"order": 1, "total": 1, "proper": 0}


def test_enumerate_stream_contains_e1_class():
    code, out, _ = run("enumerate", "--order", "3")
    assert code == 0
    blocks = out.strip().split("\n\n")
    assert "3\n0 1 2\n2 0 1\n1 2 0" in blocks


def test_enumerate_json_and_golden():
    code, out, _ = run("enumerate", "--order", "4", "--json")
    assert code == 0 and len(json.loads(out)) == 4
    golden("enumerate_4.json", out)


def test_enumerate_jobs_identical():
    assert run("enumerate", "--order", "4", "--jobs", "1")[1] == run("enumerate", "--order", "4", "--jobs", "8")[1]


def test_enumerate_bound_exit_2():
    assert run("enumerate", "--order", "9")[0] == 2
    assert run("enumerate", "--order", "5", "--max-order", "4")[0] == 2


def test_survey():
    code, out, _ = run("survey", "--max-order", "4", "--json")
    assert code == 0
    d = json.loads(out)
    assert [t["total"] for t in d["tallies"]] == [1, 1, 2, 4]
    assert all(not r["failures"] for r in d["rows"])


# -- audit-paper / global flags --------------------------------------------------

def test_audit_paper_golden():
    code, out, _ = run("audit-paper", "--json")
    assert code == 0
    golden("audit_paper.json", out)


def test_audit_paper_text():
    code, out, _ = run("audit-paper")
    assert code == 0
    assert "newE2: 22 cells differ (errata detected)" in out
    assert "R2*R2: printed L3, recomputed L1" in out


def test_quiet():
    code, out, _ = run("analyze", DATA / "e1.txt", "--quiet")
    assert code == 0 and out == ""


def test_usage_errors():
    assert main([]) == 2
    assert main(["bogus"]) == 2
    assert main(["law", str(DATA / "e1.txt")]) == 2
