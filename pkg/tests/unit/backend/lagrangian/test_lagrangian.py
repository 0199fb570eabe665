#!/usr/bin/env python3
# package imports
from brpiclab.backend.group.subgroups import normal_abelian_subgroups
from brpiclab.backend.lagrangian.lagrangian import (
    canonical_lagrangian,
    enumerate_lagrangians,
    lagrangian_from_matrix,
)

# third party imports
import numpy as np
import pytest


@pytest.mark.parametrize(
    "group_name, count",
    [("C2", 2), ("C3", 2), ("V4", 6), ("S3", 2), ("S4", 3), ("A4", 3), ("D8", 7), ("Q8", 5)],
)
def test_count(group_name, count, request):
    group = request.getfixturevalue(group_name)
    lagrangians = enumerate_lagrangians(group)
    assert len(lagrangians) == count
    assert len(set(lagrangians)) == count


def test_sorted_canonical_first(D8):
    lagrangians = enumerate_lagrangians(D8)
    assert lagrangians[0] == canonical_lagrangian(D8)
    assert lagrangians[0].is_canonical
    assert lagrangians == sorted(lagrangians)
    orders = [lag.normal.order for lag in lagrangians]
    assert orders == sorted(orders)
    for lag in lagrangians:
        lag.validate()
        assert lag.form.modulus == D8.order


def test_describe(S4):
    rows = [lag.describe() for lag in enumerate_lagrangians(S4)]
    assert [r["normal_order"] for r in rows] == [1, 4, 4]
    assert [r["form_trivial"] for r in rows] == [True, True, False]
    assert rows[1]["invariant_factors"] == [2, 2]
    assert rows[2]["form_matrix"] == [[0, 12], [12, 0]]


def test_from_matrix(S4):
    klein = next(n for n in normal_abelian_subgroups(S4) if n.order == 4)
    lag = lagrangian_from_matrix(klein, np.array([[0, 12], [12, 0]]))
    assert lag in enumerate_lagrangians(S4)
    assert not lag.form.is_zero


def test_not_normal(S4):
    # S4 has trivial center, so no subgroup of order 2 is normal
    involution = next(x for x in range(S4.order) if S4.element_orders[x] == 2)
    with pytest.raises(ValueError):
        lagrangian_from_matrix(S4.generated_subgroup([involution]), np.zeros((1, 1), dtype=np.int64))


def test_not_alternating(D8):
    klein = next(
        n for n in normal_abelian_subgroups(D8) if n.order == 4 and all(D8.element_orders[x] <= 2 for x in n)
    )
    with pytest.raises(ValueError):
        lagrangian_from_matrix(klein, np.array([[0, 4], [0, 0]]))
    assert lagrangian_from_matrix(klein, np.array([[0, 4], [4, 0]])).is_invariant()


if __name__ == "__main__":
    pytest.main([__file__])
