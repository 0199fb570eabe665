#!/usr/bin/env python3
# package imports
from brpiclab.backend.bimodule.context import bimodule_context
from brpiclab.backend.bimodule.datum import (
    BimoduleDatum,
    canonical_image,
    identity_datum,
    inverse_datum,
    is_involution,
    orbit_key,
)
from brpiclab.backend.bimodule.enumerate import enumerate_invertible
from brpiclab.backend.cohomology.cohomology import CohomologyClass2
from brpiclab.backend.lagrangian.lagrangian import canonical_lagrangian

# third party imports
import numpy as np
import pytest


@pytest.mark.parametrize("group_name", ["C2", "S3", "D8", "Q8"])
def test_identity_datum(group_name, request):
    group = request.getfixturevalue(group_name)
    datum = identity_datum(group)
    assert datum.subgroup.order == group.order
    assert datum.L1.order == 1 and datum.L2.order == 1
    assert canonical_image(datum) == canonical_lagrangian(group)
    involution, witness = is_involution(datum)
    assert involution
    assert witness is not None


def test_identity_is_an_orbit(D8):
    keys = {orbit.key for orbit in enumerate_invertible(group=D8)}
    assert orbit_key(identity_datum(D8)) in keys


def test_inverse_is_involutive(S3):
    for orbit in enumerate_invertible(group=S3):
        flipped = inverse_datum(orbit.datum)
        twice = inverse_datum(flipped)
        assert twice.subgroup == orbit.datum.subgroup
        assert orbit_key(twice) == orbit_key(orbit.datum)


def test_legs_are_normal_abelian(D8):
    for orbit in enumerate_invertible(group=D8):
        datum = orbit.datum
        assert datum.L1.order == datum.L2.order
        assert datum.L1.is_normal and datum.L1.is_abelian
        assert datum.subgroup.order == D8.order * datum.L1.order
        lag = canonical_image(datum)
        assert lag.normal == datum.L1


def test_wrong_modulus(S3):
    datum = identity_datum(S3)
    local = datum.subgroup.group
    mu = CohomologyClass2.from_scalar(local, 2, np.zeros((6, 6), dtype=np.int64))
    with pytest.raises(ValueError):
        BimoduleDatum(bimodule_context(S3), datum.subgroup, mu)


def test_unrealized_subgroup(S3):
    context = bimodule_context(S3)
    trivial = context.product.trivial_subgroup()
    with pytest.raises(ValueError):
        context.triple_of(trivial)


if __name__ == "__main__":
    pytest.main([__file__])
