#!/usr/bin/env python3
"""Group extensions ``1 -> A -> E -> Q -> 1`` built from a module and a 2-cocycle."""
# package imports
from brpiclab.backend.cohomology.cohomology import CohomologyClass2
from brpiclab.backend.cohomology.module import GModule
from brpiclab.backend.group.finite_group import FiniteGroup, GroupMap, SCAN_ORDER, Subgroup
from brpiclab.backend.util.caps import check_cap

# third party imports
import numpy as np

# standard imports
import logging
from typing import Optional

logger = logging.getLogger(__name__)


def _strides(moduli: np.ndarray) -> np.ndarray:
    """Mixed-radix strides, last summand fastest (the order of :meth:`GModule.elements`)."""
    r = len(moduli)
    strides = np.ones(r, dtype=np.int64)
    for k in range(r - 2, -1, -1):
        strides[k] = strides[k + 1] * moduli[k + 1]
    return strides


def extension_group(module: GModule, cocycle: Optional[CohomologyClass2] = None, name: str = "") -> FiniteGroup:
    """The group on pairs ``(a, q)`` with ``(a1, q1)(a2, q2) = (a1 + q1.a2 + f(q1, q2), q1 q2)``.

    Parameters
    ----------
    module:
        the kernel ``A`` with its ``Q``-action
    cocycle:
        normalized 2-cocycle ``f`` with coefficients in ``module``; ``None`` gives the semidirect product
    name:
        display name

    Returns
    -------
        a :class:`FiniteGroup` where ``(a, q)`` has index ``q * |A| + index(a)``
    """
    quotient = module.group
    size = module.order
    order = size * quotient.order
    check_cap(order, "product_cap", what="extension group")
    if cocycle is not None and cocycle.module != module:
        msg = "extension cocycle has different coefficients"
        logger.error(msg)
        raise ValueError(msg)
    elems = module.elements()
    strides = _strides(module.moduli)
    # acted[q, a] = q . a
    acted = np.einsum("qij,aj->qai", module.action, elems)
    f = cocycle.values if cocycle is not None else np.zeros((quotient.order, quotient.order, module.rank), dtype=np.int64)
    total = (
        elems[None, :, None, None, :]
        + acted[:, None, None, :, :]
        + f[:, None, :, None, :]
    )
    total = total % module.moduli if module.rank else total
    codes = (total * strides).sum(axis=-1) if module.rank else np.zeros(total.shape[:-1], dtype=np.int64)
    table = quotient.table[:, None, :, None] * size + codes
    table = table.reshape(order, order)
    generators = [int(q) * size for q in quotient.generators]
    generators += [int(s) for s in strides if module.rank]
    label = name or f"ext({quotient.name}, {tuple(int(d) for d in module.moduli)})"
    group = FiniteGroup(table, name=label, generators=generators, validate=order <= SCAN_ORDER)
    logger.debug(f"extension of order {order} over {quotient.name}")
    return group


def semidirect(module: GModule, name: str = "") -> FiniteGroup:
    """``A x| Q`` with ``(a1, q1)(a2, q2) = (a1 + q1.a2, q1 q2)``.

    The action is verified to be a homomorphism when ``module`` is constructed.
    """
    return extension_group(module, None, name=name or f"{tuple(int(d) for d in module.moduli)}x|{module.group.name}")


def extension_kernel(group: FiniteGroup, module: GModule) -> Subgroup:
    """The copy of ``A`` inside an extension built by :func:`extension_group`."""
    return Subgroup(group, range(module.order), check=False)


def extension_projection(group: FiniteGroup, module: GModule) -> GroupMap:
    """The projection ``(a, q) -> q``."""
    return GroupMap(group, module.group, np.arange(group.order) // module.order, check=False)
