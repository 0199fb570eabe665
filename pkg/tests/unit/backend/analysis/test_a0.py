#!/usr/bin/env python3
# package imports
from brpiclab.backend.analysis.a0 import a0_group, act, action_table
from brpiclab.backend.group.automorphism import is_isomorphic
from brpiclab.backend.group.builders import symmetric
from brpiclab.backend.lagrangian.lagrangian import canonical_lagrangian, enumerate_lagrangians

# third party imports
import pytest


@pytest.mark.parametrize(
    "group_name, order", [("C2", 1), ("C3", 2), ("V4", 12), ("S3", 1), ("S4", 2), ("A4", 4), ("D8", 4), ("Q8", 6)]
)
def test_order(group_name, order, request):
    group = request.getfixturevalue(group_name)
    a0 = a0_group(group)
    assert a0.order == order
    assert a0.elements[0].is_identity
    assert a0.table.order == order


def test_quaternion_a0_is_s3(Q8):
    assert is_isomorphic(a0_group(Q8).table, symmetric(3)) is not None


def test_multiplication_matches_table(D8):
    a0 = a0_group(D8)
    for i in range(a0.order):
        assert a0.multiply(0, i) == i
        assert a0.multiply(i, 0) == i


@pytest.mark.parametrize("group_name", ["V4", "S4", "D8", "Q8"])
def test_canonical_fixed(group_name, request):
    group = request.getfixturevalue(group_name)
    canonical = canonical_lagrangian(group)
    for element in a0_group(group).elements:
        assert act(element, canonical) == canonical


@pytest.mark.parametrize("group_name", ["V4", "S4", "A4", "D8"])
def test_action_is_homomorphism(group_name, request):
    group = request.getfixturevalue(group_name)
    a0 = a0_group(group)
    domain = enumerate_lagrangians(group)
    images = action_table(a0, domain)
    table = a0.table.table
    for e in range(a0.order):
        for f in range(a0.order):
            assert (images[e][images[f]] == images[table[e, f]]).all()


def test_schur_twist_moves_klein(S4):
    # the nontrivial Schur class swaps the two Lagrangians supported on the Klein subgroup
    a0 = a0_group(S4)
    images = action_table(a0, enumerate_lagrangians(S4))
    assert images[0].tolist() == [0, 1, 2]
    assert images[1].tolist() == [0, 2, 1]


if __name__ == "__main__":
    pytest.main([__file__])
