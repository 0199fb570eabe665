#!/usr/bin/env python3
# package imports
from brpiclab.backend.analysis.report import full_report
from brpiclab.backend.dataio.cache import ReportCache, table_digests
from brpiclab.backend.dataio.spec import build_group, parse_spec
from brpiclab.backend.errors import JSONValidationError

# third party imports
import pytest

# standard imports
import logging


@pytest.fixture(scope="module")
def s3_report():
    return full_report(group=build_group("S3"), spec="S3")


def test_store_and_load(tmpdir, s3_report):
    cache = ReportCache(tmpdir / "cache")
    spec = parse_spec("S3")
    assert cache.load(spec) is None
    text = cache.store(spec, s3_report)
    assert cache.path(spec).exists()
    report, loaded = cache.load(spec)
    assert loaded == text
    assert report["brpic"]["order"] == 2


def test_key_depends_on_canonical_spec_and_version(tmpdir):
    cache = ReportCache(tmpdir)
    assert cache.key(parse_spec(" S3")) == cache.key(parse_spec("S3"))
    assert cache.key(parse_spec("S3")) != cache.key(parse_spec("S4"))
    assert cache.key(parse_spec("S3")) != ReportCache(tmpdir, schema_version=2).key(parse_spec("S3"))


def test_table_contents_change_the_key(tmpdir, JSON_DIR):
    table = tmpdir / "group.json"
    table.write_text((JSON_DIR / "cyclic3.json").read_text())
    cache = ReportCache(tmpdir / "cache")
    spec = parse_spec(f"table:{table}")
    before = cache.key(spec)
    assert cache.key(spec) == before
    report = full_report(group=build_group(spec), spec=spec.canonical())
    cache.store(spec, report)
    assert cache.load(spec) is not None
    # same path, different group
    table.write_text('{"order": 2, "table": [[0, 1], [1, 0]]}')
    assert cache.key(spec) != before
    assert cache.load(spec) is None
    table.unlink()
    assert table_digests(spec.node) == ["missing"]
    assert table_digests(parse_spec("S3xC2").node) == []


def test_other_version_is_a_miss(tmpdir, s3_report):
    spec = parse_spec("S3")
    ReportCache(tmpdir).store(spec, s3_report)
    assert ReportCache(tmpdir, schema_version=2).load(spec) is None


def test_corrupt_entry(tmpdir, s3_report, caplog):
    cache = ReportCache(tmpdir)
    spec = parse_spec("S3")
    cache.store(spec, s3_report)
    cache.path(spec).write_text('{"schema_version": 1')
    with caplog.at_level(logging.WARNING):
        assert cache.load(spec) is None
    assert "corrupt" in caplog.text


def test_invalid_report_not_stored(tmpdir):
    cache = ReportCache(tmpdir)
    spec = parse_spec("S3")
    with pytest.raises(JSONValidationError):
        cache.store(spec, {"schema_version": 1})
    assert not cache.path(spec).exists()


if __name__ == "__main__":
    pytest.main([__file__])
