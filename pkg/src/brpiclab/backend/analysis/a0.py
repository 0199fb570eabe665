#!/usr/bin/env python3
"""The stabilizer ``A0(G) = H^2(G, k^x) x| Out(G)`` of ``Rep(G)`` and its action on Lagrangians."""
# package imports
from brpiclab.backend.bimodule.enumerate import class_at
from brpiclab.backend.cohomology.bicharacter import alt_bicharacter
from brpiclab.backend.cohomology.cohomology import CohomologyClass2, SchurMultiplier, pullback, schur_multiplier
from brpiclab.backend.errors import CrossCheckError
from brpiclab.backend.group.automorphism import AutomorphismGroup, automorphism_group
from brpiclab.backend.group.finite_group import FiniteGroup, GroupMap
from brpiclab.backend.lagrangian.lagrangian import Lagrangian

# third party imports
import numpy as np

# standard imports
from dataclasses import dataclass
from functools import lru_cache
import logging
from typing import List, Sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InducedElement:
    """The autoequivalence induced by an outer class ``a`` and a Schur class ``zeta``.

    Attributes
    ----------
    outer:
        index of the outer class in the transversal
    auto:
        transversal representative of the outer class
    coordinates:
        coordinates of ``zeta`` in the Schur multiplier
    zeta:
        representative cocycle with values in ``Z/|G|``
    """

    outer: int
    auto: GroupMap
    coordinates: tuple
    zeta: CohomologyClass2

    @property
    def is_identity(self) -> bool:
        """Whether this is ``(1, 0)``."""
        return self.outer == 0 and not any(self.coordinates)


class A0Group:
    """``A0(G)`` as an explicit table group.

    Element ``k * |H^2| + s`` is the pair (outer class ``k``, ``s``-th Schur class), so the
    identity is element 0. The product is
    ``(a, zeta)(a', zeta') = (a a', zeta' + zeta^(a'^-1))``, which makes :func:`act` a left
    action.
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.automorphisms: AutomorphismGroup = automorphism_group(group)
        self.schur: SchurMultiplier = schur_multiplier(group)
        self.classes: List[tuple] = list(self.schur.all_coordinates())
        self._class_index = {c: i for i, c in enumerate(self.classes)}
        self._factors = np.array(self.schur.invariant_factors, dtype=np.int64)
        aut = self.automorphisms
        self.elements: List[InducedElement] = [
            InducedElement(k, aut.outer(k), c, class_at(self.schur, c))
            for k in range(aut.out_order)
            for c in self.classes
        ]
        # pullback along a^-1 in Schur coordinates, one matrix per outer class
        self._inverse_pullback = [self.pullback_matrix(aut.outer(k).inverse()) for k in range(aut.out_order)]
        self.table = FiniteGroup(self._build_table(), name=f"A0({group.name})")
        logger.debug(f"{self.table.name}: order {self.order}")

    @property
    def order(self) -> int:
        """``|Out(G)| * |H^2(G, k^x)|``."""
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def pullback_matrix(self, theta: GroupMap) -> np.ndarray:
        """Matrix of ``zeta -> zeta^theta`` on Schur coordinates."""
        rank = self.schur.rank
        columns = [self.schur.coordinates(pullback(gen, theta)) for gen in self.schur.generators]
        return np.array(columns, dtype=np.int64).reshape(rank, rank).T

    def index(self, outer: int, coordinates: Sequence[int]) -> int:
        """Element index of a pair."""
        reduced = tuple(int(c) for c in np.asarray(coordinates, dtype=np.int64) % self._factors) if self.schur.rank else ()
        return outer * len(self.classes) + self._class_index[reduced]

    def multiply(self, i: int, j: int) -> int:
        """Index of ``elements[i] * elements[j]``."""
        first, second = self.elements[i], self.elements[j]
        aut = self.automorphisms
        outer = aut.outer_class(first.auto.compose(second.auto))
        if not self.schur.rank:
            return self.index(outer, ())
        moved = self._inverse_pullback[second.outer] @ np.array(first.coordinates, dtype=np.int64)
        return self.index(outer, moved + np.array(second.coordinates, dtype=np.int64))

    def _build_table(self) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                table[i, j] = self.multiply(i, j)
        return table

    def __repr__(self) -> str:
        return f"A0Group({self.group.name}, order={self.order})"


@lru_cache(maxsize=None)
def a0_group(group: FiniteGroup) -> A0Group:
    """All pairs (outer class, Schur class) with the semidirect multiplication.

    Parameters
    ----------
    group:
        the group ``G``

    Returns
    -------
        :class:`A0Group` of order ``|Out(G)| * |H^2(G, k^x)|``
    """
    return A0Group(group)


def act(element: InducedElement, lagrangian: Lagrangian) -> Lagrangian:
    """``(a, zeta) . L_(N, b) = L_(a(N), b^a + Alt(zeta^a) on a(N))``."""
    auto = element.auto
    image = auto.image_of(lagrangian.normal)
    moved = lagrangian.form.pullback(auto)
    twist = alt_bicharacter(pullback(element.zeta, auto), image)
    return Lagrangian(image, moved + twist)


def action_table(a0: A0Group, domain: Sequence[Lagrangian]) -> np.ndarray:
    """``result[e, i]`` is the index in ``domain`` of ``act(elements[e], domain[i])``.

    Raises
    ------
    CrossCheckError
        when an image falls outside ``domain``
    """
    position = {lag: i for i, lag in enumerate(domain)}
    result = np.empty((a0.order, len(domain)), dtype=np.int64)
    for e, element in enumerate(a0.elements):
        for i, lag in enumerate(domain):
            image = act(element, lag)
            if image not in position:
                msg = f"{a0.table.name} moves a Lagrangian outside the domain"
                logger.error(msg)
                raise CrossCheckError(msg)
            result[e, i] = position[image]
    return result
