#!/usr/bin/env python3
# package imports
from brpiclab.backend.cohomology.five_term import five_term_check
from brpiclab.backend.group.subgroups import complements, normal_abelian_subgroups

# third party imports
import pytest


def _split(group, order):
    normal = next(n for n in normal_abelian_subgroups(group) if n.order == order)
    return normal, complements(group, normal)[0]


def test_s4_over_klein(S4):
    normal, complement = _split(S4, 4)
    report = five_term_check(S4, normal, complement)
    assert report.passed
    assert report.schur_order == 2
    assert report.schur_complement_order == 1
    assert report.restriction_kernel_order == 2
    assert report.h1_dual_order == 1
    assert report.invariant_forms_order == 2
    assert report.image_in_forms_order == 2


def test_d8_over_rotations(D8):
    normal = next(
        n for n in normal_abelian_subgroups(D8) if n.order == 4 and any(D8.element_orders[x] == 4 for x in n)
    )
    report = five_term_check(D8, normal, complements(D8, normal)[0])
    assert report.passed
    assert report.h1_dual_order == 2
    assert report.invariant_forms_order == 1
    assert report.as_dict()["passed"]


def test_a4_over_klein(A4):
    normal, complement = _split(A4, 4)
    assert five_term_check(A4, normal, complement).passed


def test_not_a_decomposition(S4):
    normal, complement = _split(S4, 4)
    with pytest.raises(ValueError):
        five_term_check(S4, normal, normal)


if __name__ == "__main__":
    pytest.main([__file__])
