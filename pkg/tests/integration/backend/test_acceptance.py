# end-to-end values of BrPic(Vec_G) for the groups with known answers

# package imports
from brpiclab.backend.__main__ import main
from brpiclab.backend.analysis.families import dihedral_extension_data, pq_brpic_prediction
from brpiclab.backend.analysis.report import full_report
from brpiclab.backend.dataio.config import dumps_report
from brpiclab.backend.dataio.spec import build_group
from brpiclab.backend.dataio.validate import validate_report

# third party imports
import pytest

# standard library imports
import json
import time


def _report(spec: str) -> dict:
    report = full_report(group=build_group(spec), spec=spec)
    return validate_report(json.loads(dumps_report(report)))


class TestKnownGroups:
    @pytest.mark.parametrize(
        "spec, lagrangians, l0, order, a0_order, identified",
        [
            ("S3", 2, 2, 2, 1, "C2"),
            ("S4", 3, 3, 6, 2, "S3"),
            ("A4", 3, 3, 12, 4, "D12"),
            ("Q8", 5, 1, 6, 6, "S3"),
        ],
    )
    def test_report(self, spec, lagrangians, l0, order, a0_order, identified):
        report = _report(spec)
        assert len(report["lagrangians"]) == lagrangians
        assert len(report["l0"]) == l0
        assert report["brpic"]["order"] == order
        assert report["brpic"]["a0_order"] == a0_order
        assert report["brpic"]["identification"]["candidates"] == [identified]
        assert all(check["passed"] for check in report["checks"])

    def test_a4_kernel(self):
        assert _report("A4")["brpic"]["kernel_order"] == 2

    def test_quaternion_labels(self):
        rows = _report("Q8")["lagrangians"]
        assert [row["in_l0"] for row in rows] == [True, False, False, False, False]
        assert all("Q8" not in row["label_groups"] for row in rows[1:])

    @pytest.mark.slow
    def test_dihedral_eight(self):
        report = _report("D8")
        assert len(report["lagrangians"]) == 7
        assert len(report["l0"]) == 6
        assert report["brpic"]["order"] == 24
        assert report["brpic"]["identification"]["candidates"] == ["S4"]


class TestFamilies:
    @pytest.mark.parametrize(
        "p, q, identified",
        [
            (2, 3, "C2"),
            (2, 5, None),
            pytest.param(3, 7, "C2xC2", marks=pytest.mark.slow),
            pytest.param(3, 13, "D8", marks=pytest.mark.slow),
        ],
    )
    def test_pq(self, p, q, identified):
        report = _report(f"pq({p},{q})")
        assert report["brpic"]["order"] == pq_brpic_prediction(p, q)
        assert report["out"]["order"] == (q - 1) // p
        assert report["brpic"]["family"]["brpic_order"] == report["brpic"]["order"]
        if identified:
            assert report["brpic"]["identification"]["candidates"] == [identified]

    @pytest.mark.slow
    def test_pq_3_13_within_a_minute(self):
        start = time.perf_counter()
        report = full_report(group=build_group("pq(3,13)"), spec="pq(3,13)")
        assert time.perf_counter() - start < 60
        assert report["brpic"]["order"] == 8

    @pytest.mark.slow
    @pytest.mark.parametrize("n, order, out, kernel, image", [(9, 6, 3, 3, 2), (15, 16, 4, 4, 4)])
    def test_odd_dihedral(self, n, order, out, kernel, image):
        report = _report(f"D{2 * n}")
        brpic = report["brpic"]
        assert brpic["order"] == order == dihedral_extension_data(n)["brpic_order"]
        assert len(report["l0"]) == 2 ** len({p for p in (3, 5) if n % p == 0})
        assert report["out"]["order"] == out
        assert brpic["kernel_order"] == kernel == dihedral_extension_data(n)["kernel_order"]
        assert brpic["full_image_order"] == image == dihedral_extension_data(n)["quotient_order"]
        assert brpic["family"]["family"] == "odd dihedral"
        assert brpic["family"]["split"] is None
        status = brpic["identification"]["status"]
        assert status.endswith("within catalog") or status.startswith("unrecognized")


class TestAbelian:
    @pytest.mark.parametrize("spec, order", [("C2", 2), ("C3", 4), ("C4", 4), ("C2xC2", 72)])
    def test_order_matches_oracle(self, spec, order):
        report = _report(spec)
        assert report["brpic"]["order"] == order
        names = {check["name"]: check["passed"] for check in report["checks"]}
        assert all(names.values())

    def test_above_catalog_cap(self):
        report = _report("C2xC2")
        assert report["brpic"]["order"] == 72
        assert report["brpic"]["identification"]["candidates"] == []
        assert report["brpic"]["identification"]["status"] == "skipped: order above catalog_cap"


class TestCommandLine:
    def test_report_round_trip(self, capsys, tmpdir):
        assert main(["report", "S4", "--format", "json", "--cache-dir", str(tmpdir)]) == 0
        first = capsys.readouterr().out
        assert main(["report", "S4", "--format", "json", "--cache-dir", str(tmpdir)]) == 0
        assert capsys.readouterr().out == first
        assert json.loads(first)["brpic"]["order"] == 6

    @pytest.mark.parametrize("args, code", [(["schur", "D7"], 2), (["brpic", "S5"], 3), (["schur", "S4"], 0)])
    def test_exit_codes(self, capsys, args, code):
        assert main(args) == code
