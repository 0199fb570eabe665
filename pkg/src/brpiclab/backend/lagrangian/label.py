#!/usr/bin/env python3
"""Group labels ``G_(N, b)`` of Lagrangians: the group ``H`` with ``L_(N, b)`` equivalent to ``Rep(H)``."""
# package imports
from brpiclab.backend.cohomology.cohomology import h2
from brpiclab.backend.cohomology.extension import extension_group, semidirect
from brpiclab.backend.cohomology.module import GModule, dual_module
from brpiclab.backend.group.automorphism import is_isomorphic
from brpiclab.backend.group.constructions import Quotient
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.lagrangian.lagrangian import Lagrangian

# third party imports
import numpy as np

# standard imports
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
import logging
from typing import List, Optional

logger = logging.getLogger(__name__)


class LabelStatus(Enum):
    """How much is known about ``G_(N, b)``."""

    CANONICAL = "canonical-RepG"
    SEMIDIRECT = "semidirect"
    CANDIDATES = "candidate-set"
    UNLABELED = "unlabeled"


@dataclass
class LagrangianLabel:
    """A Lagrangian with its group label.

    ``groups`` holds the witness group for ``CANONICAL`` and ``SEMIDIRECT`` labels and the
    pairwise non-isomorphic candidates for ``CANDIDATES``.
    """

    subject: Lagrangian
    status: LabelStatus
    groups: List[FiniteGroup] = field(default_factory=list)

    @property
    def is_definite(self) -> bool:
        """Whether the label names a single group."""
        return self.status in (LabelStatus.CANONICAL, LabelStatus.SEMIDIRECT) or (
            self.status is LabelStatus.CANDIDATES and len(self.groups) == 1
        )

    @property
    def witness(self) -> Optional[FiniteGroup]:
        """The labelling group when the label is definite."""
        return self.groups[0] if self.is_definite else None


def dual_action_module(lagrangian: Lagrangian) -> GModule:
    """``N^`` as a ``G/N``-module with the contragredient conjugation action."""
    quotient = Quotient(lagrangian.group, lagrangian.normal)
    return dual_module(lagrangian.structure, quotient)


def extension_candidates(module: GModule) -> List[FiniteGroup]:
    """Extensions of ``module.group`` by ``module`` over every class of ``H^2``, up to isomorphism."""
    cohomology = h2(module)
    found: List[FiniteGroup] = []
    for coords in cohomology.all_coordinates():
        cocycle = cohomology.element(np.array(coords, dtype=np.int64)) if coords else None
        candidate = extension_group(module, cocycle)
        if any(is_isomorphic(candidate, known) is not None for known in found):
            continue
        found.append(candidate)
    logger.debug(f"{len(found)} non-isomorphic extensions from {cohomology.order} classes")
    return found


@lru_cache(maxsize=None)
def label(lagrangian: Lagrangian) -> LagrangianLabel:
    """Attach a group label to a Lagrangian.

    Parameters
    ----------
    lagrangian:
        the Lagrangian ``L_(N, b)``

    Returns
    -------
        ``CANONICAL`` for ``N = 1``; ``SEMIDIRECT`` with ``N^ x| G/N`` as witness for ``b = 0``;
        otherwise ``CANDIDATES`` holding every extension of ``G/N`` by ``N^`` with the given action
    """
    group = lagrangian.group
    if lagrangian.is_canonical:
        return LagrangianLabel(lagrangian, LabelStatus.CANONICAL, [group])
    module = dual_action_module(lagrangian)
    if lagrangian.form.is_zero:
        witness = semidirect(module)
        return LagrangianLabel(lagrangian, LabelStatus.SEMIDIRECT, [witness])
    candidates = extension_candidates(module)
    if not candidates:
        return LagrangianLabel(lagrangian, LabelStatus.UNLABELED)
    return LagrangianLabel(lagrangian, LabelStatus.CANDIDATES, candidates)


def in_l0_by_label(lagrangian: Lagrangian) -> Optional[bool]:
    """Decide ``L_(N, b)`` equivalent to ``Rep(G)`` from the label alone.

    Returns ``None`` when the label leaves the answer open: several candidates, one of them
    isomorphic to ``G``.
    """
    result = label(lagrangian)
    group = lagrangian.group
    if result.status is LabelStatus.CANONICAL:
        return True
    if result.is_definite:
        return is_isomorphic(result.witness, group) is not None
    if result.status is LabelStatus.CANDIDATES:
        if not any(is_isomorphic(candidate, group) is not None for candidate in result.groups):
            return False
    return None
