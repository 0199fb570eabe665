#!/usr/bin/env python3
# package imports
from brpiclab.backend.cohomology.cohomology import (
    Cochain1,
    CohomologyClass2,
    coboundary,
    h1,
    h2,
    is_cocycle,
    is_cohomologous,
    pullback,
    restrict,
    schur_multiplier,
)
from brpiclab.backend.cohomology.module import GModule
from brpiclab.backend.group.automorphism import automorphism_group
from brpiclab.backend.group.builders import abelian, cyclic, pq_group
from brpiclab.backend.group.subgroups import abelianization_order

# third party imports
import numpy as np
import pytest


@pytest.mark.parametrize(
    "group_name, factors",
    [
        ("C2", ()),
        ("S3", ()),
        ("Q8", ()),
        ("V4", (2,)),
        ("D8", (2,)),
        ("A4", (2,)),
        ("S4", (2,)),
    ],
)
def test_schur_multiplier(group_name, factors, request):
    group = request.getfixturevalue(group_name)
    assert schur_multiplier(group).invariant_factors == factors


@pytest.mark.parametrize("factors, expected", [((2, 4), (2,)), ((6,), ()), ((2, 2, 2), (2, 2, 2)), ((3, 3), (3,))])
def test_schur_multiplier_abelian(factors, expected):
    assert schur_multiplier(abelian(factors)).invariant_factors == expected


def test_schur_multiplier_bad_modulus(S3):
    with pytest.raises(ValueError):
        schur_multiplier(S3, 4)


@pytest.mark.parametrize("group_name", ["C3", "V4", "S3", "D8", "Q8", "A4"])
def test_h2_trivial_coefficients(group_name, request):
    # H^2(G, Z/|G|) = M(G) + Ext(G_ab, Z/|G|)
    group = request.getfixturevalue(group_name)
    cohomology = h2(GModule.trivial(group, group.order))
    assert cohomology.order == schur_multiplier(group).order * abelianization_order(group)
    for gen in cohomology.generators:
        assert is_cocycle(gen)


def test_h1_is_characters(S3, V4, A4):
    assert h1(GModule.trivial(S3, 6)).order == 2
    assert h1(GModule.trivial(V4, 2)).order == 4
    assert h1(GModule.trivial(A4, 12)).order == 3


def test_h1_nontrivial_action():
    # C2 inverting Z/3: no crossed homomorphisms beyond principal ones
    module = GModule(cyclic(2), [3], np.array([[[1]], [[2]]]))
    assert h1(module).order == 1
    assert h2(module).order == 1


def test_module_validation():
    with pytest.raises(ValueError):
        # x -> 2x is not an involution of Z/5
        GModule(cyclic(2), [5], np.array([[[1]], [[2]]]))


def test_coboundary_is_trivial(D8):
    module = GModule.trivial(D8, 8)
    rng = np.random.default_rng(7)
    values = rng.integers(0, 8, size=(8, 1))
    values[0] = 0
    boundary = coboundary(Cochain1(module, values))
    assert is_cocycle(boundary)
    assert h2(module).is_zero(boundary)
    witness = is_cohomologous(boundary, CohomologyClass2.zero(module))
    assert witness is not None
    assert np.array_equal(coboundary(witness).values % 8, boundary.values % 8)


def test_nontrivial_class_not_cohomologous(C3):
    module = GModule.trivial(C3, 3)
    cohomology = h2(module)
    assert cohomology.invariant_factors == (3,)
    gen = cohomology.generators[0]
    assert is_cohomologous(gen, CohomologyClass2.zero(module)) is None
    assert cohomology.coordinates(gen.scale(2)).tolist() == [2]


def test_not_a_cocycle(C2):
    table = np.zeros((2, 2), dtype=np.int64)
    table[1, 0] = 1
    assert not is_cocycle(CohomologyClass2.from_scalar(C2, 2, table))


def test_restrict_and_pullback(D8):
    schur = schur_multiplier(D8)
    gen = schur.generators[0]
    rotation = next(x for x in range(D8.order) if D8.element_orders[x] == 4)
    restricted = restrict(gen, D8.generated_subgroup([rotation]))
    assert restricted.group.order == 4
    assert is_cocycle(restricted)
    # automorphisms fix the unique nonzero class
    for theta in automorphism_group(D8).maps:
        moved = pullback(gen, theta)
        assert not schur.is_zero(moved)


def test_nonabelian_schur_is_trivial():
    assert schur_multiplier(pq_group(3, 7)).order == 1


if __name__ == "__main__":
    pytest.main([__file__])
