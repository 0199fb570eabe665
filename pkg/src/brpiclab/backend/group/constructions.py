#!/usr/bin/env python3
"""Opposite groups, direct products and quotients of multiplication tables."""
# package imports
from brpiclab.backend.group.finite_group import FiniteGroup, GroupMap, Subgroup, SCAN_ORDER
from brpiclab.backend.util.caps import check_cap

# third party imports
import numpy as np

# standard imports
import logging
from typing import Tuple

logger = logging.getLogger(__name__)


def opposite(group: FiniteGroup) -> FiniteGroup:
    """``G^op``: same elements, ``x *op y = y * x``."""
    return FiniteGroup(group.table.T.copy(), name=f"{group.name}^op", generators=group.generators, validate=False)


def direct_product(left: FiniteGroup, right: FiniteGroup) -> Tuple[FiniteGroup, GroupMap, GroupMap]:
    """Componentwise product; the pair ``(g, h)`` has index ``g * |right| + h``.

    Parameters
    ----------
    left, right:
        the factors

    Returns
    -------
        the product and the two coordinate embeddings
    """
    n, m = left.order, right.order
    check_cap(n * m, "product_cap", what=f"product {left.name} x {right.name}")
    table = left.table[:, None, :, None] * m + right.table[None, :, None, :]
    table = table.reshape(n * m, n * m)
    gens = [g * m for g in left.generators] + list(right.generators)
    product = FiniteGroup(table, name=f"{left.name}x{right.name}", generators=gens, validate=n * m <= SCAN_ORDER)
    left_embedding = GroupMap(left, product, np.arange(n) * m, check=False)
    right_embedding = GroupMap(right, product, np.arange(m), check=False)
    logger.debug(f"direct product of order {n * m}")
    return product, left_embedding, right_embedding


def product_projections(product: FiniteGroup, left: FiniteGroup, right: FiniteGroup) -> Tuple[GroupMap, GroupMap]:
    """The coordinate projections of a product built by :func:`direct_product`."""
    m = right.order
    codes = np.arange(product.order)
    return GroupMap(product, left, codes // m, check=False), GroupMap(product, right, codes % m, check=False)


class Quotient:
    """``G/N`` with its projection and a section (smallest element of every coset)."""

    def __init__(self, group: FiniteGroup, normal: Subgroup):
        if not normal.is_normal:
            msg = f"subgroup of order {normal.order} is not normal in {group.name}"
            logger.error(msg)
            raise ValueError(msg)
        cosets = group.table[:, normal.array].min(axis=1)
        representatives = np.unique(cosets)
        label = np.searchsorted(representatives, cosets)
        k = len(representatives)
        table = label[group.table[np.ix_(representatives, representatives)]]
        gens = sorted({int(label[g]) for g in group.generators} - {0})
        self.parent = group
        self.normal = normal
        self.representatives = representatives
        self.group = FiniteGroup(table, name=f"{group.name}/{normal.order}", generators=gens,
                                 validate=k <= SCAN_ORDER)
        self.projection = GroupMap(group, self.group, label, check=False)

    def section(self, q: int) -> int:
        """Smallest element of the coset ``q``."""
        return int(self.representatives[q])


def quotient(group: FiniteGroup, normal: Subgroup) -> Tuple[FiniteGroup, GroupMap]:
    """Return ``G/N`` and the projection ``G -> G/N``.

    Raises
    ------
    ValueError
        when ``normal`` is not normal
    """
    q = Quotient(group, normal)
    return q.group, q.projection
