#!/usr/bin/env python3
# package imports
from brpiclab.backend.analysis.identify import (
    Constraints,
    catalog,
    catalog_entries,
    identify_brpic,
    name_of,
    satisfies,
)
from brpiclab.backend.analysis.l0 import a0_permutation, brpic_order
from brpiclab.backend.bimodule.enumerate import enumerate_invertible, involution_census
from brpiclab.backend.group.builders import abelian, dihedral, quaternion, symmetric

# third party imports
import pytest
from unittest.mock import patch

# standard imports
from dataclasses import replace


@pytest.mark.parametrize(
    "order, names",
    [
        (4, ["C2xC2", "C4"]),
        (6, ["S3", "C6"]),
        (8, ["D8", "Q8", "C2xC2xC2", "C2xC4", "C8"]),
        (12, ["A4", "D12", "Dic3", "C2xC6", "C12"]),
    ],
)
def test_catalog(order, names):
    assert [name for name, _ in catalog(order)] == names


def test_catalog_order_24_has_s4():
    names = [name for name, _ in catalog(24)]
    assert names[0] == "S4"
    assert len(names) == len(set(names))
    assert len(catalog_entries(24)) >= len(names)


def test_name_of():
    assert name_of(symmetric(3)) == "S3"
    assert name_of(quaternion()) == "Q8"
    assert name_of(abelian((2, 2))) == "C2xC2"
    assert name_of(dihedral(12)) == "D12"


def _constraints(group):
    orbits = enumerate_invertible(group=group)
    order = brpic_order(group, orbits)
    return Constraints.from_action(order, a0_permutation(group), involution_census(group, orbits))


@pytest.mark.parametrize(
    "group_name, expected", [("S3", "C2"), ("C3", "C2xC2"), ("S4", "S3"), ("Q8", "S3"), ("A4", "D12")]
)
def test_identify(group_name, expected, request):
    group = request.getfixturevalue(group_name)
    result = identify_brpic(constraints=_constraints(group))
    assert result.candidates == [expected]
    assert result.status == "unique within catalog"
    assert result.recognized


@pytest.mark.slow
def test_identify_d8(D8):
    result = identify_brpic(constraints=_constraints(D8))
    assert result.candidates == ["S4"]
    assert result.as_dict()["constraints"]["degree"] == 6


def test_satisfies_rejects_wrong_order(S4):
    constraints = _constraints(S4)
    assert satisfies(symmetric(3), constraints)
    assert not satisfies(abelian((6,)), constraints)
    assert not satisfies(symmetric(4), constraints)


def test_unrecognized_status(S4):
    constraints = _constraints(S4)
    impossible = Constraints(
        order=6,
        a0=constraints.a0,
        degree=3,
        kernel_order=1,
        a0_image_order=2,
        a0_orbit_lengths=(1, 2),
        involutions=5,
    )
    result = identify_brpic(constraints=impossible)
    assert not result.recognized
    assert result.status.startswith("unrecognized")
    assert result.examined == ["S3", "C6"]


def test_order_above_catalog_cap(S4):
    constraints = replace(_constraints(S4), order=72)
    with patch.dict("os.environ", {}, clear=True):
        result = identify_brpic(constraints=constraints)
    assert result.candidates == []
    assert result.examined == []
    assert not result.recognized
    assert result.status == "skipped: order above catalog_cap"
    assert result.as_dict()["constraints"]["order"] == 72


if __name__ == "__main__":
    pytest.main([__file__])
