#!/usr/bin/env python3
"""Shared data for bimodule classification over ``G x G^op``.

The invertible bimodule categories are the pairs ``(L, mu)`` with ``L`` a subgroup of
``P = G x G^op`` realized by a Goursat triple with abelian legs of equal order, and ``mu`` a class
in ``H^2(L, k^x)`` whose ``Alt`` pairing ``L1 x L2 -> k^x`` is non-degenerate. Two pairs are
equivalent when an element of ``P`` conjugates one onto the other up to cohomology. This module
splits the realized subgroups into ``P``-conjugacy classes and, per class, computes the orbits of
the normalizer on the admissible classes of the canonical member.
"""
# package imports
from brpiclab.backend.cohomology.bicharacter import AlternatingBicharacter, alt_bicharacter, is_nondegenerate
from brpiclab.backend.cohomology.cohomology import SchurMultiplier, pullback, schur_multiplier
from brpiclab.backend.group.constructions import direct_product, opposite
from brpiclab.backend.group.finite_group import FiniteGroup, GroupMap, Subgroup
from brpiclab.backend.group.goursat import GoursatTriple, goursat_full_subgroups
from brpiclab.backend.util.caps import check_cap

# third party imports
import numpy as np

# standard imports
from dataclasses import dataclass, field
from functools import lru_cache
import logging
from typing import Dict, List, Tuple

logger = logging.getLogger(__name__)


def conjugate_codes(product: FiniteGroup, p: int, codes: np.ndarray) -> np.ndarray:
    """``p x p^-1`` for every ``x`` in ``codes``."""
    return product.table[product.table[p, codes], product.inverse[p]]


def local_legs(product: FiniteGroup, subgroup: Subgroup, n: int) -> Tuple[Subgroup, Subgroup]:
    """``L1 x 1`` and ``1 x L2`` as subgroups of ``subgroup.group``."""
    codes = subgroup.array
    left = np.flatnonzero(codes % n == 0)
    right = np.flatnonzero(codes < n)
    local = subgroup.group
    return Subgroup(local, left, check=False), Subgroup(local, right, check=False)


@dataclass
class ClassData:
    """Admissible classes on the canonical member ``L0`` of one conjugacy class.

    Attributes
    ----------
    codes:
        element codes of ``L0`` in ``P``
    class_size:
        number of conjugates of ``L0``
    normalizer_generators:
        elements of ``P`` that, together with ``L0``, generate the normalizer of ``L0``
    schur:
        ``H^2(L0, k^x)`` with values in ``Z/|L0|``
    orbit_of:
        admissible class coordinates -> (orbit index, mover) where the class is the pullback of the
        orbit representative along conjugation by the mover
    orbit_reps:
        smallest coordinates of each orbit
    orbit_lengths:
        number of classes in each orbit
    """

    codes: tuple
    class_size: int
    normalizer_generators: List[int]
    schur: SchurMultiplier
    orbit_of: Dict[tuple, Tuple[int, int]] = field(default_factory=dict)
    orbit_reps: List[tuple] = field(default_factory=list)
    orbit_lengths: List[int] = field(default_factory=list)

    @property
    def order(self) -> int:
        """``|L0|``."""
        return len(self.codes)


def _relative_generators(product: FiniteGroup, subgroup: Subgroup, elements: np.ndarray) -> List[int]:
    """Elements that generate ``elements`` together with ``subgroup``."""
    chosen: List[int] = []
    span = np.zeros(product.order, dtype=bool)
    span[subgroup.array] = True
    for x in elements:
        if span[x]:
            continue
        chosen.append(int(x))
        span[:] = False
        span[product.closure(list(subgroup.generators) + chosen)] = True
    return chosen


def conjugation_map(product: FiniteGroup, p: int, source: Subgroup, target: Subgroup) -> GroupMap:
    """``x -> p x p^-1`` from ``source.group`` to ``target.group``."""
    images = target.position[conjugate_codes(product, p, source.array)]
    if np.any(images < 0):
        msg = "conjugation does not carry the subgroup onto the target"
        logger.error(msg)
        raise ValueError(msg)
    return GroupMap(source.group, target.group, images, check=False)


def analyze_class(group: FiniteGroup, codes: tuple, class_size: int) -> ClassData:
    """Schur classes, admissible classes and normalizer orbits for one canonical subgroup.

    Parameters
    ----------
    group:
        the group ``G``
    codes:
        element codes of the canonical member ``L0`` in ``G x G^op``
    class_size:
        number of conjugates of ``L0``

    Returns
    -------
        :class:`ClassData`
    """
    product = product_of(group)
    n = group.order
    subgroup = Subgroup(product, codes, check=False)
    local = subgroup.group
    modulus = subgroup.order
    schur = schur_multiplier(local, modulus)
    left, right = local_legs(product, subgroup, n)

    # Alt is linear in the class coordinates
    alt_tables = [alt_bicharacter(gen, left, right).values for gen in schur.generators]

    def alt_of(coords: tuple) -> AlternatingBicharacter:
        values = np.zeros((left.order, right.order), dtype=np.int64)
        for c, table in zip(coords, alt_tables):
            values = values + int(c) * table
        return AlternatingBicharacter(left, right, modulus, values)

    admissible = [coords for coords in schur.all_coordinates() if is_nondegenerate(alt_of(coords))]

    conj_all = product.table[product.table[:, subgroup.array], product.inverse[:, None]]
    normalizer = np.flatnonzero(subgroup.mask[conj_all].all(axis=1))
    movers = _relative_generators(product, subgroup, normalizer)

    factors = np.array(schur.invariant_factors, dtype=np.int64)
    matrices = []
    for p in movers:
        theta = conjugation_map(product, p, subgroup, subgroup)
        columns = [schur.coordinates(pullback(gen, theta)) for gen in schur.generators]
        matrices.append(np.array(columns, dtype=np.int64).reshape(len(columns), schur.rank).T)

    data = ClassData(codes=tuple(codes), class_size=class_size, normalizer_generators=movers, schur=schur)
    remaining = set(admissible)
    for start in admissible:
        if start not in remaining:
            continue
        found = {start: 0}
        queue = [start]
        while queue:
            current = queue.pop()
            vector = np.array(current, dtype=np.int64)
            for p, matrix in zip(movers, matrices):
                moved = tuple(int(v) for v in (matrix @ vector) % factors) if schur.rank else ()
                if moved not in found:
                    found[moved] = product.mul(p, found[current])
                    queue.append(moved)
        rep = min(found)
        back = product.inv(found[rep])
        index = len(data.orbit_reps)
        for coords, e in found.items():
            data.orbit_of[coords] = (index, product.mul(e, back))
        data.orbit_reps.append(rep)
        data.orbit_lengths.append(len(found))
        remaining -= set(found)
    logger.debug(
        f"subgroup of order {modulus}: {schur.order} classes, {len(admissible)} admissible, "
        f"{len(data.orbit_reps)} orbits"
    )
    return data


@lru_cache(maxsize=None)
def product_of(group: FiniteGroup) -> FiniteGroup:
    """``G x G^op`` with codes ``x * |G| + y``."""
    product, _, _ = direct_product(group, opposite(group))
    return product


class BimoduleContext:
    """``G``, ``G^op``, ``P = G x G^op``, the admissible Goursat triples and their conjugacy classes.

    Parameters
    ----------
    group:
        the group ``G``, at most ``bimodule_cap``
    """

    def __init__(self, group: FiniteGroup):
        check_cap(group.order, "bimodule_cap", what=f"bimodule enumeration for {group.name}")
        self.group = group
        self.opposite = opposite(group)
        self.product = product_of(group)
        n = group.order
        triples = goursat_full_subgroups(group, self.opposite, abelian_legs_only=True)
        self.triples: List[GoursatTriple] = [t for t in triples if t.L1.order == t.L2.order]
        self.by_codes: Dict[tuple, GoursatTriple] = {
            tuple(int(c) for c in t.realized_codes()): t for t in self.triples
        }
        inv = group.inverse
        codes = np.arange(n * n)
        self.involution = GroupMap(self.product, self.product, inv[codes % n] * n + inv[codes // n], check=False)
        self._member: Dict[tuple, Tuple[int, int]] = {}
        self.classes: List[Tuple[tuple, int]] = []
        self._data: Dict[int, ClassData] = {}
        self._build_classes()
        logger.debug(f"{group.name}: {len(self.triples)} admissible triples in {len(self.classes)} classes")

    def _build_classes(self) -> None:
        product = self.product
        remaining = set(self.by_codes)
        found_classes = []
        while remaining:
            start = min(remaining)
            found = {start: 0}
            queue = [start]
            while queue:
                current = queue.pop()
                arr = np.array(current, dtype=np.int64)
                for t in product.generators:
                    moved = tuple(sorted(int(v) for v in conjugate_codes(product, t, arr)))
                    if moved not in found:
                        found[moved] = product.mul(t, found[current])
                        queue.append(moved)
            if not set(found) <= remaining:
                msg = "conjugation left the admissible subgroups"
                logger.error(msg)
                raise RuntimeError(msg)
            canonical = min(found)
            c0 = found[canonical]
            found_classes.append((canonical, c0, found))
            remaining -= set(found)
        found_classes.sort(key=lambda item: (self.by_codes[item[0]].L1.order, self.by_codes[item[0]].sort_key()))
        for index, (canonical, c0, found) in enumerate(found_classes):
            self.classes.append((canonical, len(found)))
            for member, e in found.items():
                # e start e^-1 = member, so (c0 e^-1) member (c0 e^-1)^-1 = canonical
                self._member[member] = (index, self.product.mul(c0, self.product.inv(e)))

    def subgroup(self, codes) -> Subgroup:
        """Wrap codes as a subgroup of ``P``."""
        return Subgroup(self.product, codes, check=False)

    def triple_of(self, subgroup: Subgroup) -> GoursatTriple:
        """The admissible triple realizing ``subgroup``.

        Raises
        ------
        ValueError
            when the subgroup does not come from an admissible triple
        """
        triple = self.by_codes.get(subgroup.elements)
        if triple is None:
            msg = "subgroup is not realized by a Goursat triple with abelian legs of equal order"
            logger.error(msg)
            raise ValueError(msg)
        return triple

    def locate(self, subgroup: Subgroup) -> Tuple[int, int]:
        """Class index and an element ``c`` with ``c L c^-1`` the canonical member."""
        self.triple_of(subgroup)
        return self._member[subgroup.elements]

    def install(self, index: int, data: ClassData) -> None:
        """Store precomputed class data."""
        self._data[index] = data

    def class_data(self, index: int) -> ClassData:
        """Class data, computed on first use."""
        if index not in self._data:
            codes, size = self.classes[index]
            self._data[index] = analyze_class(self.group, codes, size)
        return self._data[index]

    def canonical_subgroup(self, index: int) -> Subgroup:
        """Canonical member of class ``index``."""
        return self.subgroup(self.classes[index][0])

    def has_data(self, index: int) -> bool:
        """Whether class data is present."""
        return index in self._data


@lru_cache(maxsize=None)
def bimodule_context(group: FiniteGroup) -> BimoduleContext:
    """Cached :class:`BimoduleContext`."""
    return BimoduleContext(group)

