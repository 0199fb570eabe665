#!/usr/bin/env python3
"""Independent count of ``|BrPic(Vec_A)|`` for abelian ``A`` as the orthogonal group of ``A + A^``."""
# package imports
from brpiclab.backend.group.abelian import AbelianStructure
from brpiclab.backend.group.automorphism import homomorphisms
from brpiclab.backend.group.builders import abelian
from brpiclab.backend.group.constructions import direct_product
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.util.caps import check_cap

# third party imports
import numpy as np

# standard imports
import logging
from typing import List

logger = logging.getLogger(__name__)


def hyperbolic_form(group: FiniteGroup) -> tuple:
    """``A + A^`` with the quadratic form ``q(a, chi) = chi(a)``.

    Returns
    -------
        the product group (codes ``a * |A| + chi``) and ``q`` as an array over its elements, with
        values in ``Z/exponent``
    """
    structure = AbelianStructure(group)
    dual = abelian(structure.invariant_factors, name=f"{group.name}^")
    dual_structure = AbelianStructure(dual)
    product, _, _ = direct_product(group, dual)
    exponent = structure.exponent
    scale = np.array([exponent // d for d in structure.invariant_factors], dtype=np.int64)
    a_coords = np.array([structure.coordinates(x) for x in range(group.order)], dtype=np.int64).reshape(group.order, -1)
    chi_coords = np.array([dual_structure.coordinates(x) for x in range(dual.order)], dtype=np.int64).reshape(
        dual.order, -1
    )
    q = (a_coords * scale) @ chi_coords.T % exponent
    return product, q.reshape(-1), exponent


def orthogonal_oracle(group: FiniteGroup) -> int:
    """Number of automorphisms of ``A + A^`` preserving ``q(a, chi) = chi(a)``.

    Parameters
    ----------
    group:
        an abelian group of order at most ``oracle_cap``

    Returns
    -------
        ``|O(A + A^, q)|``, which equals ``|BrPic(Vec_A)|``

    Raises
    ------
    ValueError
        when ``group`` is not abelian
    """
    check_cap(group.order, "oracle_cap", what=f"orthogonal oracle for {group.name}")
    if not group.is_abelian:
        msg = f"the orthogonal oracle needs an abelian group, got {group.name}"
        logger.error(msg)
        raise ValueError(msg)
    product, q, exponent = hyperbolic_form(group)
    table = product.table
    gens: List[int] = list(product.generators)

    def polar(x: int, y: int) -> int:
        return int((q[table[x, y]] - q[x] - q[y]) % exponent)

    # q is fixed by its values on generators and the polar form on generator pairs
    def keeps_form(k: int, images: List[int]) -> bool:
        if q[images[k]] != q[gens[k]]:
            return False
        return all(polar(images[i], images[k]) == polar(gens[i], gens[k]) for i in range(k))

    count = sum(1 for _ in homomorphisms(product, product, injective=True, candidate_filter=keeps_form))
    logger.debug(f"O({group.name} + dual, q) has order {count}")
    return count
