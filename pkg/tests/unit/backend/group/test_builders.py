#!/usr/bin/env python3
# package imports
from brpiclab.backend.errors import GroupSpecError
from brpiclab.backend.group.automorphism import is_isomorphic
from brpiclab.backend.group.builders import (
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    elementary_abelian,
    generalized_dihedral,
    permutation_group,
    pq_group,
    quaternion,
    symmetric,
)

# third party imports
import pytest


@pytest.mark.parametrize(
    "builder, order, abelian_expected",
    [
        (lambda: cyclic(6), 6, True),
        (lambda: abelian((2, 4)), 8, True),
        (lambda: dihedral(8), 8, False),
        (lambda: dicyclic(3), 12, False),
        (lambda: quaternion(), 8, False),
        (lambda: symmetric(4), 24, False),
        (lambda: alternating(4), 12, False),
        (lambda: pq_group(3, 7), 21, False),
        (lambda: elementary_abelian(2, 3), 8, True),
    ],
)
def test_orders(builder, order, abelian_expected):
    group = builder()
    assert group.order == order
    assert group.is_abelian == abelian_expected


def test_dihedral_takes_the_order():
    d6 = dihedral(6)
    assert is_isomorphic(d6, symmetric(3)) is not None
    with pytest.raises(GroupSpecError):
        dihedral(7)


def test_quaternion_has_one_involution(Q8):
    assert int((Q8.element_orders == 2).sum()) == 1
    assert is_isomorphic(quaternion(), dihedral(8)) is None


def test_permutation_group():
    s3 = permutation_group([[[1, 2, 3]], [[1, 2]]])
    assert is_isomorphic(s3, symmetric(3)) is not None
    klein = permutation_group([[[1, 2], [3, 4]], [[1, 3], [2, 4]]])
    assert is_isomorphic(klein, abelian((2, 2))) is not None
    with pytest.raises(GroupSpecError):
        permutation_group([[[0, 1]]])
    with pytest.raises(GroupSpecError):
        permutation_group([[[1, 2, 1]]])


def test_pq_group():
    assert is_isomorphic(pq_group(2, 3), symmetric(3)) is not None
    assert is_isomorphic(pq_group(2, 5), dihedral(10)) is not None
    with pytest.raises(GroupSpecError):
        pq_group(3, 5)
    with pytest.raises(GroupSpecError):
        pq_group(4, 5)


def test_generalized_dihedral():
    assert is_isomorphic(generalized_dihedral(cyclic(4)), dihedral(8)) is not None
    assert generalized_dihedral(abelian((2, 2))).is_abelian
    with pytest.raises(ValueError):
        generalized_dihedral(symmetric(3))


if __name__ == "__main__":
    pytest.main([__file__])
