#!/usr/bin/env python3
# package imports
from brpiclab.backend.analysis.l0 import brpic_order
from brpiclab.backend.analysis.oracle import hyperbolic_form, orthogonal_oracle
from brpiclab.backend.errors import OrderCapError
from brpiclab.backend.group.builders import abelian, cyclic

# third party imports
import pytest


@pytest.mark.parametrize("factors, expected", [((), 1), ((2,), 2), ((3,), 4), ((4,), 4), ((2, 2), 72)])
def test_oracle_values(factors, expected):
    assert orthogonal_oracle(abelian(factors)) == expected


@pytest.mark.parametrize("factors", [(2,), (3,), (4,), (2, 2), (5,)])
def test_oracle_matches_enumeration(factors):
    group = abelian(factors)
    assert orthogonal_oracle(group) == brpic_order(group)


def test_hyperbolic_form():
    product, q, exponent = hyperbolic_form(cyclic(2))
    assert product.order == 4
    assert exponent == 2
    # exactly one element (1, chi) with chi(1) = 1/2
    assert sorted(int(v) for v in q) == [0, 0, 0, 1]


def test_oracle_rejects_nonabelian(S3):
    with pytest.raises(ValueError):
        orthogonal_oracle(S3)


def test_oracle_cap():
    with pytest.raises(OrderCapError):
        orthogonal_oracle(abelian((4, 4)))


if __name__ == "__main__":
    pytest.main([__file__])
