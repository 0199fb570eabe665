#!/usr/bin/env python3
# package imports
from brpiclab.backend.dataio.config import dumps_report, save_report

# third party imports
import numpy as np
import pytest

# standard imports
import json


def test_save_report(tmpdir):
    report = {"order": np.int64(6), "abelian": np.bool_(False), "factors": np.array([2, 3])}
    # error_1: incorrect file extension
    with pytest.raises(ValueError):
        save_report(report, tmpdir / "test.test")
    # case: save correctly, creating the directory
    filepath = tmpdir / "nested" / "test.json"
    text = save_report(report, filepath)
    assert filepath.read_text() == text
    assert json.loads(text) == {"order": 6, "abelian": False, "factors": [2, 3]}


def test_dumps_report_is_stable():
    report = {"b": 1, "a": [1, 2]}
    assert dumps_report(report) == dumps_report(dict(report))
    assert dumps_report(report).endswith("\n")
    assert list(json.loads(dumps_report(report))) == ["b", "a"]
    with pytest.raises(TypeError):
        dumps_report({"x": object()})


if __name__ == "__main__":
    pytest.main([__file__])
