#!/usr/bin/env python3
# package imports
from brpiclab.backend.bimodule.context import bimodule_context
from brpiclab.backend.bimodule.enumerate import enumerate_invertible, involution_census
from brpiclab.backend.errors import OrderCapError
from brpiclab.backend.group.builders import dihedral

# third party imports
import pytest
from unittest.mock import patch


@pytest.mark.parametrize(
    "group_name, count, involutions",
    [("C2", 2, 2), ("C3", 4, 4), ("S3", 2, 2), ("S4", 6, 4), ("Q8", 6, 4), ("A4", 12, 8), ("D8", 24, 10)],
)
def test_orbits(group_name, count, involutions, request):
    group = request.getfixturevalue(group_name)
    orbits = enumerate_invertible(group=group)
    assert len(orbits) == count
    assert len({orbit.key for orbit in orbits}) == count
    assert involution_census(group, orbits) == involutions


def test_identity_first(S4):
    first = enumerate_invertible(group=S4)[0]
    assert first.datum.L1.order == 1
    assert first.coordinates == () or not any(first.coordinates)


def test_describe(S3):
    rows = [orbit.describe() for orbit in enumerate_invertible(group=S3)]
    assert [row["subgroup_order"] for row in rows] == [6, 18]
    assert rows[1]["left_leg"] != [0]


@pytest.mark.slow
def test_workers_do_not_change_result(D8):
    serial = [orbit.key for orbit in enumerate_invertible(group=D8, max_workers=1)]
    # fresh context so the classes are analysed again
    bimodule_context.cache_clear()
    parallel = [orbit.key for orbit in enumerate_invertible(group=D8, max_workers=2)]
    assert serial == parallel


def test_cap():
    with patch.dict("os.environ", {"BRPIC_MAX_ORDER": "12"}):
        with pytest.raises(OrderCapError):
            enumerate_invertible(group=dihedral(14))


if __name__ == "__main__":
    pytest.main([__file__])
