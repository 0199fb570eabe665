#!/usr/bin/env python3
"""Lagrangian subcategories of the center of ``Vec_G`` as pairs (normal abelian ``N``, invariant form on ``N``)."""
# package imports
from brpiclab.backend.cohomology.bicharacter import AlternatingBicharacter, basis_matrix, form_from_matrix, invariant_classes
from brpiclab.backend.group.abelian import AbelianStructure
from brpiclab.backend.group.finite_group import FiniteGroup, Subgroup
from brpiclab.backend.group.subgroups import normal_abelian_subgroups

# third party imports
import numpy as np

# standard imports
from functools import cached_property, lru_cache
import logging
from typing import List

logger = logging.getLogger(__name__)


class Lagrangian:
    """The Lagrangian ``L_(N, b)``.

    Parameters
    ----------
    normal:
        normal abelian subgroup ``N`` of ``G``
    form:
        alternating bicharacter on ``N x N`` with values in ``Z/|G|``
    validate:
        check normality, the alternating property and invariance under the generators of ``G``

    Two instances are equal exactly when their element sets and value tables agree.
    """

    def __init__(self, normal: Subgroup, form: AlternatingBicharacter, validate: bool = True):
        group = normal.parent
        if form.left != normal or form.right != normal:
            msg = "form does not live on the normal subgroup"
            logger.error(msg)
            raise ValueError(msg)
        if form.modulus != group.order:
            form = form.rescale(group.order)
        self.group = group
        self.normal = normal
        self.form = form
        if validate:
            self.validate()

    def validate(self) -> None:
        """Raise ``ValueError`` unless ``(N, b)`` parameterizes a Lagrangian."""
        if not self.normal.is_normal or not self.normal.is_abelian:
            msg = f"subgroup of order {self.normal.order} is not normal abelian in {self.group.name}"
            logger.error(msg)
            raise ValueError(msg)
        if not self.form.is_alternating():
            msg = "Lagrangian form is not alternating"
            logger.error(msg)
            raise ValueError(msg)
        if not self.is_invariant():
            msg = f"form on subgroup of order {self.normal.order} is not invariant under {self.group.name}"
            logger.error(msg)
            raise ValueError(msg)

    def is_invariant(self) -> bool:
        """``b(gxg^-1, gyg^-1) = b(x, y)`` for every generator ``g``."""
        conj = self.group.conjugation
        pos = self.normal.position
        values = self.form.values
        for g in self.group.generators:
            moved = pos[conj[g, self.normal.array]]
            if not np.array_equal(values[np.ix_(moved, moved)], values):
                return False
        return True

    @property
    def is_canonical(self) -> bool:
        """Whether this is ``L_(1,1)``, the subcategory ``Rep(G)``."""
        return self.normal.order == 1

    @cached_property
    def structure(self) -> AbelianStructure:
        """Invariant-factor structure of ``N``."""
        return AbelianStructure(self.normal)

    def form_matrix(self) -> np.ndarray:
        """``b(e_i, e_j)`` on the invariant-factor basis of ``N``."""
        return basis_matrix(self.form, self.structure)

    def key(self) -> tuple:
        """Hashable canonical form."""
        return (self.normal.elements, self.form.values.tobytes())

    def sort_key(self) -> tuple:
        """By ``|N|``, trivial form first, then element set and values."""
        return (
            self.normal.order,
            not self.form.is_zero,
            self.normal.elements,
            tuple(int(v) for v in self.form.values.reshape(-1)),
        )

    def __lt__(self, other: "Lagrangian") -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other) -> bool:
        return isinstance(other, Lagrangian) and self.group == other.group and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def describe(self) -> dict:
        """Plain summary used in reports."""
        return {
            "normal_order": self.normal.order,
            "normal_elements": list(self.normal.elements),
            "normal_generators": list(self.normal.generators),
            "invariant_factors": list(self.structure.invariant_factors),
            "form_trivial": bool(self.form.is_zero),
            "form_matrix": self.form_matrix().tolist(),
        }

    def __repr__(self) -> str:
        mark = "1" if self.form.is_zero else "b"
        return f"Lagrangian(N of order {self.normal.order}, {mark}) in {self.group.name}"


def canonical_lagrangian(group: FiniteGroup) -> Lagrangian:
    """``L_(1,1)``: trivial subgroup with the zero form."""
    trivial = group.trivial_subgroup()
    zero = AlternatingBicharacter(trivial, trivial, group.order, np.zeros((1, 1), dtype=np.int64))
    return Lagrangian(trivial, zero, validate=False)


@lru_cache(maxsize=None)
def _enumerate(group: FiniteGroup) -> tuple:
    result = []
    for normal in normal_abelian_subgroups(group):
        for form in invariant_classes(normal, modulus=group.order):
            result.append(Lagrangian(normal, form, validate=False))
    result.sort()
    logger.debug(f"{group.name}: {len(result)} Lagrangians")
    return tuple(result)


def enumerate_lagrangians(group: FiniteGroup) -> List[Lagrangian]:
    """All Lagrangians of the center of ``Vec_G``, sorted canonically.

    Parameters
    ----------
    group:
        the group ``G``

    Returns
    -------
        one entry per pair (normal abelian ``N``, ``G``-invariant alternating form on ``N``)
    """
    return list(_enumerate(group))


def lagrangian_from_matrix(normal: Subgroup, matrix: np.ndarray) -> Lagrangian:
    """Build ``L_(N, b)`` from the basis matrix of ``b`` with values in ``Z/|G|``."""
    structure = AbelianStructure(normal)
    return Lagrangian(normal, form_from_matrix(structure, normal.parent.order, matrix))
