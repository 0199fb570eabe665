#!/usr/bin/env python3
# package imports
from brpiclab.backend.analysis.families import (
    abelian_schur_order,
    dihedral_extension_data,
    dihedral_l0_prediction,
    family_block,
    odd_dihedral_n,
    pq_brpic_prediction,
    pq_parameters,
    sylow_injectivity,
)
from brpiclab.backend.analysis.l0 import brpic_order
from brpiclab.backend.cohomology.cohomology import schur_multiplier
from brpiclab.backend.group.builders import abelian, dihedral, pq_group

# third party imports
import pytest


@pytest.mark.parametrize("n, expected", [(3, [1, 3]), (9, [1, 9]), (15, [1, 3, 5, 15]), (45, [1, 5, 9, 45])])
def test_dihedral_l0_prediction(n, expected):
    assert dihedral_l0_prediction(n) == expected


@pytest.mark.parametrize("n, kernel, quotient", [(3, 1, 2), (9, 3, 2), (15, 4, 4), (21, 6, 4)])
def test_dihedral_extension_data(n, kernel, quotient):
    data = dihedral_extension_data(n)
    assert data["kernel_order"] == kernel
    assert data["quotient_order"] == quotient
    assert data["brpic_order"] == kernel * quotient
    assert data["split"] is None


@pytest.mark.parametrize("n", [0, 4, 1])
def test_dihedral_needs_odd(n):
    with pytest.raises(ValueError):
        dihedral_l0_prediction(n)


def test_family_detection(S3, S4, A4, D8, Q8):
    assert odd_dihedral_n(S3) == 3
    assert odd_dihedral_n(dihedral(18)) == 9
    assert odd_dihedral_n(pq_group(3, 7)) is None
    assert odd_dihedral_n(D8) is None
    assert pq_parameters(pq_group(3, 7)) == (3, 7)
    assert pq_parameters(S3) == (2, 3)
    for group in (S4, A4, D8, Q8, abelian((15,))):
        assert pq_parameters(group) is None
        assert family_block(group) is None


def test_family_block():
    block = family_block(dihedral(30))
    assert block["family"] == "odd dihedral"
    assert (block["kernel_order"], block["quotient_order"], block["brpic_order"]) == (4, 4, 16)
    assert block["l0_divisors"] == [1, 3, 5, 15]
    assert block["split"] is None
    assert family_block(pq_group(3, 13)) == {"family": "pq", "p": 3, "q": 13, "brpic_order": 8, "out_order": 4}


@pytest.mark.parametrize("p, q, expected", [(2, 3, 2), (2, 5, 4), (3, 7, 4), (3, 13, 8), (5, 11, 4)])
def test_pq_prediction(p, q, expected):
    assert pq_brpic_prediction(p, q) == expected


@pytest.mark.parametrize("p, q", [(3, 5), (4, 5), (2, 9)])
def test_pq_bad_parameters(p, q):
    with pytest.raises(ValueError):
        pq_brpic_prediction(p, q)


@pytest.mark.parametrize("factors", [(2,), (2, 2), (2, 4), (3, 3), (2, 2, 2), (2, 6)])
def test_abelian_schur(factors):
    assert abelian_schur_order(factors) == schur_multiplier(abelian(factors)).order


@pytest.mark.parametrize("group_name, p", [("S4", 2), ("S4", 3), ("A4", 2), ("D8", 2), ("V4", 2)])
def test_sylow_injectivity(group_name, p, request):
    assert sylow_injectivity(request.getfixturevalue(group_name), p)


@pytest.mark.parametrize("p, q", [(2, 5), (3, 7)])
def test_pq_against_enumeration(p, q):
    assert brpic_order(pq_group(p, q)) == pq_brpic_prediction(p, q)


@pytest.mark.slow
@pytest.mark.parametrize("n", [9, 15])
def test_dihedral_against_enumeration(n):
    assert brpic_order(dihedral(2 * n)) == dihedral_extension_data(n)["brpic_order"]


if __name__ == "__main__":
    pytest.main([__file__])
