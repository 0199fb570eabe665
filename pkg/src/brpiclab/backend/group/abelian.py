#!/usr/bin/env python3
"""Invariant-factor structure of abelian subgroups and their character groups."""
# package imports
from brpiclab.backend.cohomology.linalg import subquotient
from brpiclab.backend.group.finite_group import FiniteGroup, Subgroup

# third party imports
import numpy as np

# standard imports
from functools import cached_property
import logging
from typing import Sequence, Union

logger = logging.getLogger(__name__)


class AbelianStructure:
    """An abelian subgroup written as ``Z/d_1 + ... + Z/d_r`` with ``d_1 | d_2 | ... | d_r``.

    Parameters
    ----------
    subject:
        an abelian :class:`Subgroup`, or a :class:`FiniteGroup` meaning the whole group

    Attributes
    ----------
    invariant_factors:
        the ``d_i``
    basis:
        parent indices of the basis elements, ``basis[i]`` of order ``d_i``
    coordinate_table:
        coordinates of every element of ``subject``, aligned with ``subject.elements``
    """

    def __init__(self, subject: Union[Subgroup, FiniteGroup]):
        if isinstance(subject, FiniteGroup):
            subject = subject.whole()
        if not subject.is_abelian:
            msg = f"subgroup of order {subject.order} in {subject.parent.name} is not abelian"
            logger.error(msg)
            raise ValueError(msg)
        self.subject = subject
        parent = subject.parent
        gens = list(subject.generators)
        orders = [int(parent.element_orders[g]) for g in gens]

        # evaluate every coefficient tuple, last generator fastest
        values = np.zeros(1, dtype=np.int64)
        for g, o in zip(gens, orders):
            powers = np.zeros(o, dtype=np.int64)
            for k in range(1, o):
                powers[k] = parent.table[powers[k - 1], g]
            values = parent.table[values[:, None], powers[None, :]].reshape(-1)
        tuples = np.indices(orders).reshape(len(orders), -1).T if gens else np.zeros((1, 0), dtype=np.int64)
        relations = tuples[values == 0]
        exponent = int(np.lcm.reduce(orders)) if orders else 1
        self._quotient = subquotient(
            orders, alpha=relations.T, alpha_moduli=np.full(len(relations), exponent, dtype=np.int64)
        )
        self.invariant_factors = tuple(int(d) for d in self._quotient.invariant_factors)

        basis = []
        for gen in self._quotient.generators:
            element = 0
            for g, c in zip(gens, gen):
                for _ in range(int(c)):
                    element = int(parent.table[element, g])
            basis.append(element)
        self.basis = tuple(basis)

        first = {}
        for i, v in enumerate(values.tolist()):
            first.setdefault(v, i)
        lookup = np.array([first[x] for x in subject.elements], dtype=np.int64)
        self.coordinate_table = (
            self._quotient.coordinates(tuples[lookup])
            if self.rank
            else np.zeros((subject.order, 0), dtype=np.int64)
        )
        self.coordinate_table.setflags(write=False)
        logger.debug(f"abelian subgroup of order {subject.order}: factors {self.invariant_factors}")

    @property
    def rank(self) -> int:
        """Number of invariant factors."""
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        """Order of the subject."""
        return self.subject.order

    @property
    def exponent(self) -> int:
        """Largest invariant factor (1 for the trivial group)."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def moduli(self) -> np.ndarray:
        """Invariant factors as an array."""
        return np.array(self.invariant_factors, dtype=np.int64)

    def coordinates(self, x: int) -> np.ndarray:
        """Coordinates of the parent element ``x``."""
        pos = int(self.subject.position[x])
        if pos < 0:
            raise ValueError(f"element {x} is not in the subgroup")
        return self.coordinate_table[pos]

    def element(self, coordinates: Sequence[int]) -> int:
        """Parent index of ``sum c_i basis_i``."""
        parent = self.subject.parent
        result = 0
        for b, c, d in zip(self.basis, coordinates, self.invariant_factors):
            result = parent.mul(result, parent.power(b, int(c) % d))
        return result

    @cached_property
    def coordinate_index(self) -> dict:
        """Map from coordinate tuples to parent indices."""
        return {tuple(int(v) for v in row): x for row, x in zip(self.coordinate_table, self.subject.elements)}

    def automorphism_matrix(self, images: Sequence[int]) -> np.ndarray:
        """Matrix of an endomorphism given by the parent-index images of :attr:`basis`.

        Column ``j`` holds the coordinates of ``images[j]``.
        """
        if not self.rank:
            return np.zeros((0, 0), dtype=np.int64)
        return np.array([self.coordinates(y) for y in images], dtype=np.int64).T

    def __repr__(self) -> str:
        return f"AbelianStructure(factors={self.invariant_factors})"


class DualAbelian:
    """Character group ``Hom(A, Q/Z)`` of an abelian structure, in the dual basis.

    A character is a coordinate vector ``chi`` with ``chi_i`` in ``Z/d_i``; it sends the basis
    element ``e_i`` to ``chi_i / d_i``. Values are reported in ``Z/exponent``.
    """

    def __init__(self, structure: AbelianStructure):
        self.structure = structure
        self.invariant_factors = structure.invariant_factors
        self.exponent = structure.exponent
        self._scale = np.array([self.exponent // d for d in self.invariant_factors], dtype=np.int64)

    @property
    def order(self) -> int:
        """``|A^|``, equal to ``|A|``."""
        return int(np.prod(self.invariant_factors, dtype=np.int64)) if self.invariant_factors else 1

    def pairing(self, x: int, chi: Sequence[int]) -> int:
        """``<x, chi>`` in ``Z/exponent`` for a parent element ``x``."""
        coords = self.structure.coordinates(x)
        return int(np.sum(coords * np.asarray(chi, dtype=np.int64) * self._scale) % self.exponent)

    def values(self, chi: Sequence[int]) -> np.ndarray:
        """Values of ``chi`` on every element of the subject, aligned with ``subject.elements``."""
        table = self.structure.coordinate_table
        return (table * np.asarray(chi, dtype=np.int64) * self._scale).sum(axis=1) % self.exponent

    def characters(self) -> np.ndarray:
        """All characters as coordinate rows."""
        if not self.invariant_factors:
            return np.zeros((1, 0), dtype=np.int64)
        return np.indices(self.invariant_factors).reshape(len(self.invariant_factors), -1).T


def dual_abelian(subject: Union[Subgroup, FiniteGroup, AbelianStructure]) -> DualAbelian:
    """Character group of an abelian subgroup with its evaluation pairing.

    Raises
    ------
    ValueError
        when the subject is not abelian
    """
    structure = subject if isinstance(subject, AbelianStructure) else AbelianStructure(subject)
    return DualAbelian(structure)
