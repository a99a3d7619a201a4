import json
from importlib.resources import files

import jsonschema
import pytest

from aggroup.analysis import Structure, analysis_report
from aggroup.enumeration import EnumerationBoundError
from aggroup.survey import survey

SCHEMA = json.loads(files("aggroup").joinpath("report.schema.json").read_text())


def test_schema_is_valid_and_shipped():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_every_class_report_matches_schema(ag_groups_upto6):
    for g in ag_groups_upto6:
        r = analysis_report(g)
        jsonschema.validate(r, SCHEMA)
        assert not r["discrepancies"]
        if g.proper:
            assert r["mult_group"]["order"] == 2 * g.order
            assert r["inner"]["elements"] == ["L0", "R0"]
            assert r["right_section"]["closed"] is False


def test_proper_inner_mapping_group_never_normal(ag_groups_upto6):
    for g in ag_groups_upto6:
        if g.proper:
            s = Structure(g)
            assert s.recognized()["inner"] == "C2"
            assert s.observations[0].extra["normal"] is False


def test_survey_up_to_8_has_no_audit_failures():
    r = survey(8)
    assert [t["total"] for t in r["tallies"]] == [1, 1, 2, 4, 2, 2, 2, 10]
    assert [t["proper"] for t in r["tallies"]] == [0, 0, 1, 2, 1, 1, 1, 7]
    assert all(t["classes_with_audit_failures"] == 0 for t in r["tallies"])
    # from order 8 on, M(G) is not always dihedral
    t8 = r["tallies"][-1]
    assert t8["proper_with_dihedral_mult_group"] < t8["proper"]


def test_survey_bound():
    with pytest.raises(EnumerationBoundError):
        survey(9)
