#!/usr/bin/env python3
"""Alternating bicharacters: the commutator pairing ``Alt(mu)`` of a 2-cocycle and invariant forms on abelian groups."""
# package imports
from brpiclab.backend.cohomology.cohomology import CohomologyClass2
from brpiclab.backend.cohomology.linalg import subquotient
from brpiclab.backend.group.abelian import AbelianStructure
from brpiclab.backend.group.finite_group import GroupMap, Subgroup

# third party imports
import numpy as np

# standard imports
from itertools import combinations
import logging
from math import gcd
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class AlternatingBicharacter:
    """A bimultiplicative pairing ``left x right -> Z/modulus``.

    ``values[i, j]`` is the value on ``(left.elements[i], right.elements[j])``; the value ``v``
    stands for ``v / modulus`` in ``Q/Z``.
    """

    def __init__(self, left: Subgroup, right: Subgroup, modulus: int, values: np.ndarray):
        if left.parent != right.parent:
            raise ValueError("bicharacter legs live in different groups")
        values = np.asarray(values, dtype=np.int64).reshape(left.order, right.order) % modulus
        values.setflags(write=False)
        self.left = left
        self.right = right
        self.modulus = int(modulus)
        self.values = values

    def __call__(self, x: int, y: int) -> int:
        i, j = self.left.position[x], self.right.position[y]
        if i < 0 or j < 0:
            raise ValueError(f"({x}, {y}) is outside the domain")
        return int(self.values[i, j])

    @property
    def is_square(self) -> bool:
        """Whether both legs are the same subgroup."""
        return self.left.elements == self.right.elements

    @property
    def is_zero(self) -> bool:
        """Whether every value vanishes."""
        return not self.values.any()

    def is_alternating(self) -> bool:
        """``b(x, x) = 0`` and ``b(y, x) = -b(x, y)`` on a square domain."""
        if not self.is_square:
            return False
        return not np.diagonal(self.values).any() and not ((self.values + self.values.T) % self.modulus).any()

    def is_bilinear(self) -> bool:
        """Full scan of multiplicativity in both slots."""
        table = self.left.parent.table
        lpos, rpos = self.left.position, self.right.position
        larr, rarr = self.left.array, self.right.array
        v = self.values
        m = self.modulus
        left_sum = v[lpos[table[larr[:, None], larr[None, :]]]]  # (x1 x2, y)
        if ((left_sum - v[:, None, :] - v[None, :, :]) % m).any():
            return False
        right_sum = v[:, rpos[table[rarr[:, None], rarr[None, :]]]]  # (x, y1 y2)
        return not ((right_sum - v[:, :, None] - v[:, None, :]) % m).any()

    def rescale(self, modulus: int) -> "AlternatingBicharacter":
        """Same pairing with values in ``Z/modulus``."""
        modulus = int(modulus)
        if modulus % self.modulus == 0:
            return AlternatingBicharacter(self.left, self.right, modulus, self.values * (modulus // self.modulus))
        factor = self.modulus // gcd(self.modulus, modulus)
        if self.modulus % modulus or np.any(self.values % factor):
            msg = f"values in Z/{self.modulus} do not fit in Z/{modulus}"
            logger.error(msg)
            raise ValueError(msg)
        return AlternatingBicharacter(self.left, self.right, modulus, self.values // factor)

    def restrict(self, left: Subgroup, right: Optional[Subgroup] = None) -> "AlternatingBicharacter":
        """Restriction to smaller legs."""
        right = left if right is None else right
        rows = self.left.position[left.array]
        cols = self.right.position[right.array]
        if (rows < 0).any() or (cols < 0).any():
            raise ValueError("restriction legs are not inside the domain")
        return AlternatingBicharacter(left, right, self.modulus, self.values[np.ix_(rows, cols)])

    def pullback(self, theta: GroupMap) -> "AlternatingBicharacter":
        """``b^theta(x, y) = b(theta^-1 x, theta^-1 y)`` on ``theta(left) x theta(right)``."""
        left = theta.image_of(self.left)
        right = theta.image_of(self.right)
        inv = theta.inverse().images
        rows = self.left.position[inv[left.array]]
        cols = self.right.position[inv[right.array]]
        return AlternatingBicharacter(left, right, self.modulus, self.values[np.ix_(rows, cols)])

    def __add__(self, other: "AlternatingBicharacter") -> "AlternatingBicharacter":
        if (self.left, self.right, self.modulus) != (other.left, other.right, other.modulus):
            raise ValueError("bicharacters have different domains")
        return AlternatingBicharacter(self.left, self.right, self.modulus, self.values + other.values)

    def __neg__(self) -> "AlternatingBicharacter":
        return AlternatingBicharacter(self.left, self.right, self.modulus, -self.values)

    def key(self) -> tuple:
        """Hashable canonical form."""
        return (self.left.elements, self.right.elements, self.modulus, self.values.tobytes())

    def __eq__(self, other) -> bool:
        return isinstance(other, AlternatingBicharacter) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"AlternatingBicharacter({self.left.order}x{self.right.order}, Z/{self.modulus})"


def alt_bicharacter(cocycle: CohomologyClass2, left: Subgroup, right: Optional[Subgroup] = None) -> AlternatingBicharacter:
    """``Alt(mu)(x, y) = mu(x, y) - mu(y, x)`` on commuting legs.

    Parameters
    ----------
    cocycle:
        a cocycle with cyclic coefficients
    left, right:
        subgroups of the cocycle's group whose elements commute pairwise; ``right`` defaults to ``left``

    Raises
    ------
    ValueError
        when some element of ``left`` does not commute with some element of ``right``
    """
    right = left if right is None else right
    group = cocycle.group
    if left.parent != group or right.parent != group:
        msg = "Alt legs are not subgroups of the cocycle's group"
        logger.error(msg)
        raise ValueError(msg)
    la, ra = left.array, right.array
    table = group.table
    if not np.array_equal(table[np.ix_(la, ra)], table[np.ix_(ra, la)].T):
        msg = "Alt legs do not commute"
        logger.error(msg)
        raise ValueError(msg)
    mu = cocycle.scalar
    values = mu[np.ix_(la, ra)] - mu[np.ix_(ra, la)].T
    return AlternatingBicharacter(left, right, cocycle.modulus, values)


def basis_matrix(form: AlternatingBicharacter, structure: AbelianStructure) -> np.ndarray:
    """``B[i, j] = b(e_i, e_j)`` on the invariant-factor basis of a square domain."""
    basis = structure.basis
    return np.array([[form(x, y) for y in basis] for x in basis], dtype=np.int64).reshape(len(basis), len(basis))


def form_from_matrix(structure: AbelianStructure, modulus: int, matrix: np.ndarray) -> AlternatingBicharacter:
    """Evaluate ``b(x, y) = sum x_i y_j B[i, j]`` on every pair of elements."""
    coords = structure.coordinate_table
    values = coords @ np.asarray(matrix, dtype=np.int64).reshape(structure.rank, structure.rank) @ coords.T \
        if structure.rank else np.zeros((structure.order, structure.order), dtype=np.int64)
    return AlternatingBicharacter(structure.subject, structure.subject, modulus, values)


def class_from_bicharacter(form: AlternatingBicharacter, structure: Optional[AbelianStructure] = None) -> CohomologyClass2:
    """Cocycle ``mu(x, y) = sum_{i<j} x_i y_j b(e_i, e_j)`` on the domain group, with ``Alt(mu) = b``.

    The result lives on ``form.left.group`` (element ``i`` is ``form.left.elements[i]``).

    Raises
    ------
    ValueError
        when ``form`` is not alternating
    """
    if not form.is_alternating():
        msg = "class_from_bicharacter needs an alternating form on a square domain"
        logger.error(msg)
        raise ValueError(msg)
    structure = AbelianStructure(form.left) if structure is None else structure
    if structure.rank:
        upper = np.triu(basis_matrix(form, structure), k=1)
        coords = structure.coordinate_table
        table = coords @ upper @ coords.T
    else:
        table = np.zeros((form.left.order, form.left.order), dtype=np.int64)
    return CohomologyClass2.from_scalar(form.left.group, form.modulus, table)


def is_nondegenerate(form: AlternatingBicharacter) -> bool:
    """Whether ``x -> b(x, .)`` and ``y -> b(., y)`` are both injective."""
    rows_zero = ~form.values.any(axis=1)
    cols_zero = ~form.values.any(axis=0)
    return int(rows_zero.sum()) == 1 and int(cols_zero.sum()) == 1


def _pair_units(structure: AbelianStructure, modulus: int) -> List[tuple]:
    """Free entries ``(i, j, g, step)`` of an alternating basis matrix with values ``k * step``, ``k`` in ``Z/g``."""
    d = structure.invariant_factors
    units = []
    for i, j in combinations(range(len(d)), 2):
        g = gcd(d[i], d[j])
        if g > 1:
            units.append((i, j, g, modulus // g))
    return units


def invariant_classes(
    normal: Subgroup, modulus: Optional[int] = None, acting: Optional[Sequence[int]] = None
) -> List[AlternatingBicharacter]:
    """All alternating forms on ``normal`` invariant under conjugation by ``acting``.

    Parameters
    ----------
    normal:
        a normal abelian subgroup of ``G = normal.parent``
    modulus:
        value group ``Z/modulus``, default ``|G|``
    acting:
        conjugating elements, default the generators of ``G``

    Returns
    -------
        the forms, zero first, then by increasing basis coordinates
    """
    group = normal.parent
    if not normal.is_normal or not normal.is_abelian:
        msg = "invariant classes need a normal abelian subgroup"
        logger.error(msg)
        raise ValueError(msg)
    modulus = group.order if modulus is None else int(modulus)
    structure = AbelianStructure(normal)
    if modulus % structure.exponent:
        raise ValueError(f"modulus {modulus} is not a multiple of the exponent {structure.exponent}")
    acting = list(group.generators) if acting is None else [int(g) for g in acting]
    units = _pair_units(structure, modulus)
    r = structure.rank
    if not units:
        return [form_from_matrix(structure, modulus, np.zeros((r, r), dtype=np.int64))]

    def unit_matrix(i, j, step):
        b = np.zeros((r, r), dtype=np.int64)
        b[i, j], b[j, i] = step, -step
        return b

    conj = group.conjugation
    rows = []
    for g in acting:
        a = structure.automorphism_matrix([int(conj[g, e]) for e in structure.basis])
        for i, j, _, _ in units:
            row = []
            for k, l, _, step in units:
                moved = a.T @ unit_matrix(k, l, step) @ a - unit_matrix(k, l, step)
                row.append(int(moved[i, j]))
            rows.append(row)
    beta = np.array(rows, dtype=np.int64).reshape(-1, len(units)) if rows else None
    kernel = subquotient(
        [u[2] for u in units],
        beta=beta,
        beta_moduli=np.full(len(rows), modulus, dtype=np.int64) if rows else None,
    )
    forms = []
    for coords in (np.indices(kernel.invariant_factors).reshape(kernel.rank, -1).T if kernel.rank else [()]):
        ks = kernel.combine(coords) if kernel.rank else np.zeros(len(units), dtype=np.int64)
        b = sum((int(k) * unit_matrix(i, j, step) for k, (i, j, _, step) in zip(ks, units)),
                np.zeros((r, r), dtype=np.int64))
        forms.append((tuple(int(k) for k in ks), form_from_matrix(structure, modulus, b)))
    forms.sort(key=lambda item: item[0])
    logger.debug(f"{len(forms)} invariant forms on a normal subgroup of order {normal.order}")
    return [f for _, f in forms]
