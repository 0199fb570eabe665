#!/usr/bin/env python3
"""Subgroups of a direct product with full projections, enumerated as Goursat triples."""
# package imports
from brpiclab.backend.group.automorphism import automorphism_group, find_isomorphism
from brpiclab.backend.group.constructions import Quotient
from brpiclab.backend.group.finite_group import FiniteGroup, GroupMap, Subgroup
from brpiclab.backend.group.subgroups import normal_abelian_subgroups, normal_subgroups
from brpiclab.backend.util.caps import check_cap

# third party imports
import numpy as np

# standard imports
from dataclasses import dataclass
import logging
from typing import List

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoursatTriple:
    """``(L1 normal in G, L2 normal in H, phi: G/L1 -> H/L2)``.

    The realized subgroup is ``{(x, y) : phi(x L1) = y L2}``, coded as ``x * |H| + y``.
    """

    left: Quotient
    right: Quotient
    phi: GroupMap

    @property
    def L1(self) -> Subgroup:
        """Kernel leg in the left factor."""
        return self.left.normal

    @property
    def L2(self) -> Subgroup:
        """Kernel leg in the right factor."""
        return self.right.normal

    def realized_codes(self) -> np.ndarray:
        """Sorted product codes of the realized subgroup."""
        target = self.phi.images[self.left.projection.images]
        mask = target[:, None] == self.right.projection.images[None, :]
        return np.flatnonzero(mask.reshape(-1))

    def realize(self, product: FiniteGroup) -> Subgroup:
        """The realized subgroup inside ``product`` (built by ``direct_product``)."""
        return Subgroup(product, self.realized_codes(), check=False)

    def sort_key(self) -> tuple:
        """Legs by order and element set, then the isomorphism images."""
        return (self.L1.sort_key(), self.L2.sort_key(), self.phi.key)


def goursat_full_subgroups(left: FiniteGroup, right: FiniteGroup, abelian_legs_only: bool = False) -> List[GoursatTriple]:
    """All subgroups of ``left x right`` projecting onto both factors.

    Parameters
    ----------
    left, right:
        the factors
    abelian_legs_only:
        restrict both legs to abelian normal subgroups

    Returns
    -------
        triples sorted by legs, then by isomorphism
    """
    check_cap(left.order * right.order, "product_cap", what=f"product {left.name} x {right.name}")
    legs = normal_abelian_subgroups if abelian_legs_only else normal_subgroups
    left_legs = legs(left)
    right_legs = legs(right)
    triples = []
    for l1 in left_legs:
        q1 = Quotient(left, l1)
        autos = automorphism_group(q1.group)
        for l2 in right_legs:
            if left.order // l1.order != right.order // l2.order:
                continue
            q2 = Quotient(right, l2)
            base = find_isomorphism(q1.group, q2.group)
            if base is None:
                continue
            phis = sorted({base.compose(a).key: base.compose(a) for a in autos.maps}.values(), key=lambda m: m.key)
            triples.extend(GoursatTriple(q1, q2, phi) for phi in phis)
    triples.sort(key=GoursatTriple.sort_key)
    logger.debug(f"{left.name} x {right.name}: {len(triples)} Goursat triples")
    return triples
