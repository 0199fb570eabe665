#!/usr/bin/env python3
"""Invertible ``Vec_G``-bimodule categories as data ``(L, mu)`` over ``G x G^op``."""
# package imports
from brpiclab.backend.bimodule.context import BimoduleContext, bimodule_context, conjugation_map, local_legs
from brpiclab.backend.cohomology.bicharacter import AlternatingBicharacter, alt_bicharacter, is_nondegenerate
from brpiclab.backend.cohomology.cohomology import Cochain1, CohomologyClass2, is_cohomologous, pullback
from brpiclab.backend.errors import CrossCheckError
from brpiclab.backend.group.finite_group import FiniteGroup, GroupMap, Subgroup
from brpiclab.backend.group.goursat import GoursatTriple
from brpiclab.backend.lagrangian.lagrangian import Lagrangian

# third party imports
import numpy as np

# standard imports
from dataclasses import dataclass
from functools import cached_property
import logging
from typing import Optional, Tuple

logger = logging.getLogger(__name__)


class BimoduleDatum:
    """A pair ``(L, mu)``: ``L`` realized by an admissible Goursat triple, ``mu`` a 2-cocycle on ``L``.

    Parameters
    ----------
    context:
        the :class:`BimoduleContext` of ``G``
    subgroup:
        ``L`` as a subgroup of ``G x G^op``
    mu:
        cocycle on ``subgroup.group`` with values in ``Z/|L|``
    validate:
        check the invertibility conditions
    """

    def __init__(self, context: BimoduleContext, subgroup: Subgroup, mu: CohomologyClass2, validate: bool = True):
        if mu.group != subgroup.group:
            msg = "cocycle does not live on the realized subgroup"
            logger.error(msg)
            raise ValueError(msg)
        if mu.modulus != subgroup.order:
            msg = f"cocycle values must lie in Z/{subgroup.order}"
            logger.error(msg)
            raise ValueError(msg)
        self.context = context
        self.subgroup = subgroup
        self.mu = mu
        self.triple: GoursatTriple = context.triple_of(subgroup)
        if validate:
            self.validate()

    @property
    def group(self) -> FiniteGroup:
        """The group ``G``."""
        return self.context.group

    @property
    def L1(self) -> Subgroup:
        """Left leg, a normal abelian subgroup of ``G``."""
        return self.triple.L1

    @property
    def L2(self) -> Subgroup:
        """Right leg, a normal abelian subgroup of ``G^op``."""
        return self.triple.L2

    @cached_property
    def legs(self) -> Tuple[Subgroup, Subgroup]:
        """``L1 x 1`` and ``1 x L2`` inside ``L``."""
        return local_legs(self.context.product, self.subgroup, self.group.order)

    @cached_property
    def alt(self) -> AlternatingBicharacter:
        """``Alt(mu)`` on ``L1 x L2``."""
        left, right = self.legs
        return alt_bicharacter(self.mu, left, right)

    def leg_form(self, side: int = 1) -> AlternatingBicharacter:
        """``Alt`` of ``mu`` restricted to ``L1 x L1`` (``side=1``) or ``L2 x L2`` (``side=2``), on the leg in ``G`` or ``G^op``."""
        local = self.legs[0] if side == 1 else self.legs[1]
        leg = self.L1 if side == 1 else self.L2
        values = alt_bicharacter(self.mu, local).values
        return AlternatingBicharacter(leg, leg, self.mu.modulus, values)

    def validate(self) -> None:
        """Raise ``ValueError`` unless the invertibility conditions hold."""
        if self.subgroup.order != self.L1.order * self.group.order or self.L1.order != self.L2.order:
            msg = "realized subgroup has the wrong order"
            logger.error(msg)
            raise ValueError(msg)
        if not (self.L1.is_abelian and self.L2.is_abelian):
            msg = "bimodule legs are not abelian"
            logger.error(msg)
            raise ValueError(msg)
        if not is_nondegenerate(self.alt):
            msg = "Alt(mu) is degenerate on L1 x L2"
            logger.error(msg)
            raise ValueError(msg)
        for side in (1, 2):
            leg = self.L1 if side == 1 else self.L2
            Lagrangian(leg, self.leg_form(side).rescale(leg.parent.order))

    def __repr__(self) -> str:
        return f"BimoduleDatum(|L|={self.subgroup.order}, |L1|={self.L1.order}) over {self.group.name}"


@dataclass(frozen=True)
class InvolutionWitness:
    """``p`` conjugates ``L`` onto ``L^v`` and ``d(cochain) = mu^p - (-mu^v)``."""

    conjugator: int
    cochain: Cochain1


def identity_datum(group: FiniteGroup) -> BimoduleDatum:
    """The regular bimodule: ``L = {(g, g^-1)}`` with the trivial cocycle."""
    context = bimodule_context(group)
    n = group.order
    codes = np.arange(n) * n + group.inverse
    subgroup = context.subgroup(codes)
    local = subgroup.group
    mu = CohomologyClass2.from_scalar(local, subgroup.order, np.zeros((n, n), dtype=np.int64))
    return BimoduleDatum(context, subgroup, mu)


def inverse_datum(datum: BimoduleDatum) -> BimoduleDatum:
    """``(L^v, -mu^v)`` with ``L^v = iota(L)``, ``iota(x, y) = (y^-1, x^-1)``, ``mu^v = mu o (iota x iota)``."""
    context = datum.context
    iota = context.involution
    flipped = iota.image_of(datum.subgroup)
    theta = GroupMap(
        datum.subgroup.group, flipped.group, flipped.position[iota.images[datum.subgroup.array]], check=False
    )
    return BimoduleDatum(context, flipped, -pullback(datum.mu, theta), validate=False)


def _locate(datum: BimoduleDatum) -> Tuple[int, int, tuple]:
    """Class index, canonical conjugator and class coordinates on the canonical member."""
    context = datum.context
    index, c = context.locate(datum.subgroup)
    data = context.class_data(index)
    canonical = context.canonical_subgroup(index)
    theta = conjugation_map(context.product, c, datum.subgroup, canonical)
    coords = tuple(int(v) for v in data.schur.coordinates(pullback(datum.mu, theta)))
    return index, c, coords


def orbit_key(datum: BimoduleDatum) -> tuple:
    """``(canonical L, orbit representative coordinates)``; equal keys mean equivalent data.

    Raises
    ------
    ValueError
        when the datum's class is not admissible
    """
    index, _, coords = _locate(datum)
    data = datum.context.class_data(index)
    if coords not in data.orbit_of:
        msg = "class of the datum is not admissible"
        logger.error(msg)
        raise ValueError(msg)
    orbit, _ = data.orbit_of[coords]
    return (data.codes, data.orbit_reps[orbit])


def is_involution(datum: BimoduleDatum) -> Tuple[bool, Optional[InvolutionWitness]]:
    """Whether the datum has order at most 2, with a conjugator and cochain as witness.

    Raises
    ------
    CrossCheckError
        when matching orbits do not produce a verified witness
    """
    context = datum.context
    product = context.product
    flipped = inverse_datum(datum)
    index_d, c_d, coords_d = _locate(datum)
    index_v, c_v, coords_v = _locate(flipped)
    if index_d != index_v:
        return False, None
    data = context.class_data(index_d)
    orbit_d, mover_d = data.orbit_of[coords_d]
    orbit_v, mover_v = data.orbit_of[coords_v]
    if orbit_d != orbit_v:
        return False, None
    n = product.mul(mover_v, product.inv(mover_d))
    p = product.mul(product.mul(product.inv(c_v), n), c_d)
    theta = conjugation_map(product, p, datum.subgroup, flipped.subgroup)
    cochain = is_cohomologous(pullback(datum.mu, theta), flipped.mu)
    if cochain is None:
        msg = "orbit match without a coboundary witness"
        logger.error(msg)
        raise CrossCheckError(msg)
    return True, InvolutionWitness(conjugator=p, cochain=cochain)


def canonical_image(datum: BimoduleDatum) -> Lagrangian:
    """Image of ``L_(1,1)`` under the datum: ``L_(L1, Alt(mu) on L1 x L1)``.

    Raises
    ------
    CrossCheckError
        when the restricted form fails the invariance check
    """
    group = datum.group
    form = datum.leg_form(1).rescale(group.order)
    try:
        return Lagrangian(datum.L1, form)
    except ValueError as e:
        msg = f"canonical image of a datum over {group.name} is not a Lagrangian"
        logger.error(msg)
        raise CrossCheckError(msg) from e
