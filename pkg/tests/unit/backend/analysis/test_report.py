#!/usr/bin/env python3
# package imports
from brpiclab.backend.analysis.report import (
    SCHEMA_VERSION,
    aut_block,
    full_report,
    group_block,
    lagrangian_rows,
    out_block,
    schur_block,
)
from brpiclab.backend.dataio.config import dumps_report
from brpiclab.backend.dataio.validate import validate_report
from brpiclab.backend.lagrangian.lagrangian import enumerate_lagrangians

# third party imports
import pytest

# standard imports
import json


@pytest.fixture(scope="module")
def s4_report(S4):
    return full_report(group=S4, spec="S4")


def test_report_is_valid(s4_report):
    validate_report(json.loads(dumps_report(s4_report)))
    assert s4_report["schema_version"] == SCHEMA_VERSION
    assert "timing" not in s4_report


def test_report_values(s4_report):
    assert s4_report["group"]["spec"] == "S4"
    assert s4_report["schur"] == {"invariant_factors": [2], "order": 2}
    assert s4_report["out"]["order"] == 1
    assert len(s4_report["lagrangians"]) == 3
    assert s4_report["l0"] == [1, 2, 3]
    assert s4_report["bimodules"]["orbits"] == 6
    assert s4_report["bimodules"]["involutions"] == 4
    brpic = s4_report["brpic"]
    assert brpic["order"] == 6
    assert brpic["a0_order"] == 2
    assert brpic["kernel_order"] == 1
    assert brpic["identification"]["candidates"] == ["S3"]
    assert brpic["identification"]["status"] == "unique within catalog"
    assert "family" not in brpic
    assert all(check["passed"] for check in s4_report["checks"])


def test_report_is_reproducible(S4, s4_report):
    assert dumps_report(full_report(group=S4, spec="S4")) == dumps_report(s4_report)


def test_timing(S3):
    report = full_report(group=S3, include_timing=True)
    assert report["timing"]["seconds"] >= 0
    assert report["group"]["spec"] == "S3"
    validate_report(json.loads(dumps_report(report)))


def test_family_predictions_recorded(S3):
    family = full_report(group=S3)["brpic"]["family"]
    assert family["family"] == "odd dihedral"
    assert family["brpic_order"] == 2
    assert family["l0_divisors"] == [1, 3]


def test_blocks(Q8, D8):
    assert group_block(Q8)["center_order"] == 2
    assert schur_block(Q8)["order"] == 1
    out = out_block(Q8)
    assert (out["aut_order"], out["inner_order"], out["order"]) == (24, 4, 6)
    assert out["structure"] == "S3"
    aut = aut_block(D8)
    assert aut["order"] == 8 and aut["out_order"] == 2
    assert len(aut["outer_representatives"]) == 2
    assert aut["outer_representatives"][0] == aut["generators"]


def test_lagrangian_rows(Q8):
    lagrangians = enumerate_lagrangians(Q8)
    rows = lagrangian_rows(lagrangians)
    assert [row["index"] for row in rows] == [1, 2, 3, 4, 5]
    assert "in_l0" not in rows[0]
    assert rows[0]["label_status"] == "canonical-RepG"
    assert rows[0]["label_groups"] == ["Q8"]
    rows = lagrangian_rows(lagrangians, lagrangians[:1])
    assert [row["in_l0"] for row in rows] == [True, False, False, False, False]


if __name__ == "__main__":
    pytest.main([__file__])
