#!/usr/bin/env python3
# package imports
from brpiclab.backend.dataio.validate import todict, validate_group_table, validate_report
from brpiclab.backend.errors import JSONValidationError

# third party imports
import pytest

# standard imports
import json


def test_group_table(JSON_DIR):
    document = validate_group_table(JSON_DIR / "klein.json")
    assert document["order"] == 4
    with pytest.raises(JSONValidationError):
        validate_group_table({"table": [[0]]})
    with pytest.raises(JSONValidationError):
        validate_group_table({"order": 1, "table": [[-1]]})


def test_todict(JSON_DIR):
    assert todict({"a": 1}) == {"a": 1}
    assert todict('{"a": 1}') == {"a": 1}
    assert todict(JSON_DIR / "cyclic3.json")["order"] == 3
    with pytest.raises(TypeError):
        todict(3)


def test_report_missing_block():
    with pytest.raises(JSONValidationError):
        validate_report(json.dumps({"schema_version": 1}))


def test_report_bad_label_status():
    report = {
        "schema_version": 1,
        "group": {"spec": "C1", "name": "C1", "order": 1},
        "schur": {"invariant_factors": [], "order": 1},
        "out": {"order": 1},
        "lagrangians": [
            {"index": 1, "normal_order": 1, "normal_elements": [0], "form_trivial": True, "in_l0": True}
        ],
        "l0": [1],
        "bimodules": {"orbits": 1, "involutions": 1},
        "brpic": {"order": 1, "a0_order": 1, "kernel_order": 1, "identification": {"candidates": [], "status": "x"}},
        "checks": [],
    }
    assert validate_report(report) is report
    report["lagrangians"][0]["label_status"] = "guessed"
    with pytest.raises(JSONValidationError):
        validate_report(report)


if __name__ == "__main__":
    pytest.main([__file__])
