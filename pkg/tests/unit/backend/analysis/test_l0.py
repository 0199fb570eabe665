#!/usr/bin/env python3
# package imports
from brpiclab.backend.analysis.l0 import a0_permutation, brpic_order, cycle_string, image_census, l0_set
from brpiclab.backend.bimodule.enumerate import enumerate_invertible
from brpiclab.backend.lagrangian.lagrangian import canonical_lagrangian, enumerate_lagrangians
from brpiclab.backend.lagrangian.label import in_l0_by_label

# third party imports
import pytest
from sympy.combinatorics import Permutation


@pytest.mark.parametrize(
    "group_name, l0_size, order",
    [("C2", 2, 2), ("C3", 2, 4), ("S3", 2, 2), ("S4", 3, 6), ("A4", 3, 12), ("D8", 6, 24), ("Q8", 1, 6)],
)
def test_l0_and_order(group_name, l0_size, order, request):
    group = request.getfixturevalue(group_name)
    orbits = enumerate_invertible(group=group)
    l0 = l0_set(group, orbits)
    assert len(l0) == l0_size
    assert l0[0] == canonical_lagrangian(group)
    assert brpic_order(group, orbits) == order


def test_l0_matches_labels(D8):
    l0 = set(l0_set(D8))
    for lag in enumerate_lagrangians(D8):
        verdict = in_l0_by_label(lag)
        assert verdict is None or verdict == (lag in l0)


def test_image_census_uniform(A4):
    orbits = enumerate_invertible(group=A4)
    census = image_census(orbits)
    assert set(census.values()) == {len(orbits) // len(census)}


@pytest.mark.parametrize(
    "perm, expected",
    [
        (Permutation([0, 1, 2]), "1"),
        (Permutation([1, 0, 2]), "(12)"),
        (Permutation([1, 2, 0]), "(123)"),
        (Permutation([1, 0, 3, 2]), "(12)(34)"),
        (Permutation(list(range(9)) + [10, 9]), "(10,11)"),
    ],
)
def test_cycle_string(perm, expected):
    assert cycle_string(perm) == expected


@pytest.mark.parametrize("group_name, kernel, image", [("S4", 1, 2), ("A4", 2, 2), ("Q8", 6, 1)])
def test_a0_permutation(group_name, kernel, image, request):
    group = request.getfixturevalue(group_name)
    rep = a0_permutation(group)
    assert rep.kernel.order == kernel
    assert rep.image_order == image
    assert rep.is_homomorphism()
    assert rep.image_cycles()[0] == "1"
    assert rep.kernel.order * rep.image_order == rep.a0.order


def test_a0_permutation_d8(D8):
    rep = a0_permutation(D8)
    assert rep.degree == 6
    assert rep.orbit_lengths[0] == 1
    assert sum(rep.orbit_lengths) == 6
    # a Klein four-group fixing the first two members
    assert set(rep.image_cycles()) == {"1", "(34)(56)", "(35)(46)", "(36)(45)"}
    assert rep.image_order == 4


if __name__ == "__main__":
    pytest.main([__file__])
