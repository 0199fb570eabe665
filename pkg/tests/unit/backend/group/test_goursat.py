#!/usr/bin/env python3
# package imports
from brpiclab.backend.diagnostics.checks import goursat_matches_brute_force
from brpiclab.backend.group.builders import cyclic
from brpiclab.backend.group.constructions import direct_product, opposite
from brpiclab.backend.group.goursat import goursat_full_subgroups

# third party imports
import pytest


@pytest.mark.parametrize(
    "left, right, count",
    [("S3", "S3", 8), ("V4", "V4", 16), ("D8", "C2", 4), ("C3", "C3", 3)],
)
def test_triple_counts(request, left, right, count):
    first, second = request.getfixturevalue(left), request.getfixturevalue(right)
    assert len(goursat_full_subgroups(first, second)) == count


def test_abelian_legs_only(S3):
    assert len(goursat_full_subgroups(S3, S3, abelian_legs_only=True)) == 7


def test_realized_subgroups_are_distinct_and_full(S3):
    product, _, _ = direct_product(S3, opposite(S3))
    triples = goursat_full_subgroups(S3, opposite(S3))
    realized = [t.realize(product) for t in triples]
    assert len({s.elements for s in realized}) == len(triples)
    for triple, sub in zip(triples, realized):
        assert sub.order == S3.order * triple.L2.order
        assert {c // 6 for c in sub.elements} == set(range(6))


@pytest.mark.parametrize("left, right", [("S3", "S3"), ("D8", "C2"), ("Q8", "C2"), ("V4", "V4"), ("A4", "C2")])
def test_brute_force(request, left, right):
    assert goursat_matches_brute_force(request.getfixturevalue(left), request.getfixturevalue(right))


@pytest.mark.slow
def test_brute_force_with_opposite(D8):
    assert goursat_matches_brute_force(D8, opposite(D8))
    assert goursat_matches_brute_force(cyclic(4), cyclic(6))


if __name__ == "__main__":
    pytest.main([__file__])
