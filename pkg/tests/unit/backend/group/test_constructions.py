#!/usr/bin/env python3
# package imports
from brpiclab.backend.group.automorphism import is_isomorphic
from brpiclab.backend.group.builders import abelian, cyclic
from brpiclab.backend.group.constructions import direct_product, opposite, product_projections, quotient
from brpiclab.backend.group.finite_group import GroupMap

# third party imports
import numpy as np
import pytest


def test_opposite(S3):
    op = opposite(S3)
    assert np.array_equal(op.table, S3.table.T)
    assert op.name == "S3^op"
    assert is_isomorphic(op, S3) is not None


def test_direct_product(S3, C2):
    product, left, right = direct_product(S3, C2)
    assert product.order == 12
    assert left.is_homomorphism() and right.is_homomorphism()
    p1, p2 = product_projections(product, S3, C2)
    assert p1.is_homomorphism() and p2.is_homomorphism()
    assert p1.compose(left) == GroupMap.identity(S3)
    assert p2.compose(right) == GroupMap.identity(C2)
    assert p1.kernel().order == 2
    assert p2.kernel().order == 6


def test_quotient_by_center(D8):
    center = D8.center
    q, projection = quotient(D8, center)
    assert q.order == 4
    assert is_isomorphic(q, abelian((2, 2))) is not None
    assert projection.is_homomorphism()
    assert projection.kernel() == center


def test_quotient_not_normal(D8):
    # a reflection lies outside the center
    reflection = next(x for x in range(D8.order) if D8.element_orders[x] == 2 and x not in D8.center)
    with pytest.raises(ValueError):
        quotient(D8, D8.generated_subgroup([reflection]))


def test_quotient_by_whole():
    C6 = cyclic(6)
    q, projection = quotient(C6, C6.whole())
    assert q.order == 1
    assert projection.kernel().order == 6


if __name__ == "__main__":
    pytest.main([__file__])
