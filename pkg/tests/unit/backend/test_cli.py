#!/usr/bin/env python3
# package imports
from brpiclab.backend.__main__ import build_parser, main, render_text

# third party imports
import pytest
from unittest.mock import patch

# standard imports
import json


def _run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr().out


def test_schur_json(capsys):
    code, out = _run(capsys, "schur", "D8", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"invariant_factors": [2], "order": 2}


def test_out_text(capsys):
    code, out = _run(capsys, "out", "Q8")
    assert code == 0
    assert "order: 6" in out
    assert "structure: S3" in out


def test_l0_rows(capsys):
    code, out = _run(capsys, "l0", "S4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 3
    assert all(row["in_l0"] for row in rows)


def test_lagrangians_without_membership(capsys):
    code, out = _run(capsys, "lagrangians", "Q8", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 5
    assert "in_l0" not in rows[0]


def test_bimodules_and_brpic(capsys):
    code, out = _run(capsys, "bimodules", "S3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 2 and payload["involutions"] == 2
    code, out = _run(capsys, "brpic", "S3", "--format", "json")
    assert json.loads(out)["order"] == 2


def test_aut(capsys):
    code, out = _run(capsys, "aut", "C2xC2", "--format", "json")
    payload = json.loads(out)
    assert payload["order"] == 6 and payload["out_order"] == 6


@pytest.mark.parametrize("spec", ["D7", "X3", "pq(3,5)", "table:this/file/doesnt/exist.json"])
def test_parse_error(capsys, spec):
    code, _ = _run(capsys, "schur", spec)
    assert code == 2


def test_cap_error(capsys):
    code, _ = _run(capsys, "schur", "S5")
    assert code == 3
    with patch.dict("os.environ", {"BRPIC_MAX_ORDER": "200"}):
        code, out = _run(capsys, "out", "S5", "--format", "json")
    assert code == 0
    assert json.loads(out)["order"] == 1


def test_check_failure(capsys):
    failing = [{"name": "cocycle_identity", "passed": False, "details": "forced"}]
    with patch("brpiclab.backend.__main__.run_checks", return_value=failing):
        code, out = _run(capsys, "check", "C2")
    assert code == 4
    assert "forced" in out


def test_check_passes(capsys):
    code, out = _run(capsys, "check", "C2", "--format", "json")
    assert code == 0
    assert all(r["passed"] for r in json.loads(out))


def test_report_cache(capsys, tmpdir):
    cache = tmpdir / "cache"
    code, first = _run(capsys, "report", "S3", "--format", "json", "--cache-dir", str(cache))
    assert code == 0
    assert len(list(cache.glob("*.json"))) == 1
    code, second = _run(capsys, "report", " S3 ", "--format", "json", "--cache-dir", str(cache))
    assert second == first
    code, third = _run(capsys, "report", "S3", "--format", "json", "--no-cache", "--cache-dir", str(tmpdir / "unused"))
    assert third == first
    assert not (tmpdir / "unused").exists()


def test_unknown_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["frobnicate", "S3"])


def test_render_text():
    text = render_text({"order": 2, "rows": [{"a": 1, "bb": [1, 2]}, {"a": 10, "bb": None}]})
    lines = text.splitlines()
    assert lines[0] == "order: 2"
    assert lines[1] == "rows:"
    assert lines[2].split() == ["a", "bb"]
    assert lines[3].split() == ["1", "[1,2]"]
    assert lines[4].split() == ["10", "-"]


if __name__ == "__main__":
    pytest.main([__file__])
