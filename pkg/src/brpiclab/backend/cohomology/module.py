#!/usr/bin/env python3
"""Finite G-modules ``Z/d_1 + ... + Z/d_r`` with the action given by integer matrices."""
# package imports
from brpiclab.backend.group.abelian import AbelianStructure
from brpiclab.backend.group.constructions import Quotient
from brpiclab.backend.group.finite_group import FiniteGroup, Subgroup

# third party imports
import numpy as np

# standard imports
import logging
from typing import Optional, Sequence, Union

logger = logging.getLogger(__name__)


class GModule:
    """A finite abelian group with a left action of ``group`` by automorphisms.

    Parameters
    ----------
    group:
        the acting group
    moduli:
        orders ``d_k`` of the cyclic summands; vectors are reduced coordinate-wise
    action:
        array of shape ``(|group|, r, r)``; column ``j`` of ``action[g]`` is ``g . e_j``.
        ``None`` means the trivial action.
    """

    def __init__(self, group: FiniteGroup, moduli: Sequence[int], action: Optional[np.ndarray] = None):
        moduli = np.array(moduli, dtype=np.int64).reshape(-1)
        r = len(moduli)
        if action is None:
            action = np.broadcast_to(np.eye(r, dtype=np.int64), (group.order, r, r)).copy()
        action = np.array(action, dtype=np.int64).reshape(group.order, r, r)
        if r:
            action = action % moduli[None, :, None]
        action.setflags(write=False)
        moduli.setflags(write=False)
        self.group = group
        self.moduli = moduli
        self.action = action
        self._validate()

    def _validate(self) -> None:
        if not self.rank:
            return
        if np.any(self.moduli < 1):
            raise ValueError("module moduli must be positive")
        if not np.array_equal(self.action[0], np.eye(self.rank, dtype=np.int64) % self.moduli[:, None]):
            msg = "identity element does not act trivially"
            logger.error(msg)
            raise ValueError(msg)
        # column j must have order dividing d_j
        if np.any((self.action * self.moduli[None, None, :]) % self.moduli[None, :, None]):
            msg = "action matrices are not well defined on the summands"
            logger.error(msg)
            raise ValueError(msg)
        table = self.group.table
        for s in self.group.generators:
            lhs = np.einsum("ij,hjk->hik", self.action[s], self.action) % self.moduli[None, :, None]
            if not np.array_equal(lhs, self.action[table[s]]):
                msg = f"action of {self.group.name} is not a homomorphism"
                logger.error(msg)
                raise ValueError(msg)

    @classmethod
    def trivial(cls, group: FiniteGroup, moduli: Union[int, Sequence[int]]) -> "GModule":
        """``Z/m`` (or a sum of such) with the trivial action."""
        moduli = [moduli] if np.isscalar(moduli) else list(moduli)
        return cls(group, moduli)

    @property
    def rank(self) -> int:
        """Number of cyclic summands."""
        return len(self.moduli)

    @property
    def order(self) -> int:
        """Number of elements."""
        return int(np.prod(self.moduli, dtype=np.int64)) if self.rank else 1

    @property
    def is_trivial_action(self) -> bool:
        """Whether every element acts as the identity."""
        return bool(np.array_equal(self.action, self.action[:1].repeat(self.group.order, axis=0)))

    def act(self, g: int, vector: Sequence[int]) -> np.ndarray:
        """``g . v``."""
        return (self.action[g] @ np.asarray(vector, dtype=np.int64)) % self.moduli

    def reduce(self, values: np.ndarray) -> np.ndarray:
        """Reduce an array whose last axis runs over the summands."""
        return np.asarray(values, dtype=np.int64) % self.moduli

    def elements(self) -> np.ndarray:
        """All module elements as coordinate rows."""
        if not self.rank:
            return np.zeros((1, 0), dtype=np.int64)
        return np.indices(self.moduli).reshape(self.rank, -1).T

    def key(self) -> tuple:
        """Hashable description."""
        return (self.group, self.moduli.tobytes(), self.action.tobytes())

    def __eq__(self, other) -> bool:
        return isinstance(other, GModule) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"GModule({self.group.name}, moduli={tuple(int(d) for d in self.moduli)})"


def conjugation_matrix(structure: AbelianStructure, g: int) -> np.ndarray:
    """Matrix of ``x -> g x g^-1`` on the normal abelian subgroup described by ``structure``."""
    conj = structure.subject.parent.conjugation
    return structure.automorphism_matrix([int(conj[g, b]) for b in structure.basis])


def dual_module(structure: AbelianStructure, quotient: Quotient) -> GModule:
    """``N^`` as a module over ``G/N`` with ``(q . chi)(n) = chi(s(q)^-1 n s(q))``.

    Characters use the dual basis of :class:`~brpiclab.backend.group.abelian.DualAbelian`.
    """
    return dual_module_over(structure, quotient.group, [quotient.section(q) for q in range(quotient.group.order)])


def dual_module_over(structure: AbelianStructure, group: FiniteGroup, lifts: Sequence[int]) -> GModule:
    """``N^`` as a module over ``group`` whose element ``q`` acts through the parent element ``lifts[q]``."""
    parent = structure.subject.parent
    d = structure.moduli
    r = structure.rank
    action = np.zeros((group.order, r, r), dtype=np.int64)
    for q, s in enumerate(lifts):
        a = conjugation_matrix(structure, parent.inv(int(s)))
        # (q.chi)_j = sum_i a_ij chi_i d_j / d_i
        action[q] = (a * d[None, :] // d[:, None]).T if r else a
    return GModule(group, d, action)


def module_of_subgroup(structure: AbelianStructure, acting: Subgroup) -> GModule:
    """Normal abelian subgroup as a module over ``acting`` (a subgroup of the same parent) by conjugation."""
    group = acting.group
    action = np.array([conjugation_matrix(structure, int(g)) for g in acting.elements], dtype=np.int64)
    return GModule(group, structure.moduli, action.reshape(group.order, structure.rank, structure.rank))
