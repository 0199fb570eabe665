#!/usr/bin/env python3
"""Homomorphism search by backtracking on generator images, automorphism groups and isomorphism tests."""
# package imports
from brpiclab.backend.group.finite_group import FiniteGroup, GroupMap
from brpiclab.backend.group.subgroups import abelianization_order, conjugacy_classes
from brpiclab.backend.util.caps import check_cap

# third party imports
import numpy as np

# standard imports
from functools import cached_property, lru_cache
import logging
from typing import Callable, Iterator, List, Optional, Sequence

logger = logging.getLogger(__name__)


def _extend(source: FiniteGroup, target: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> Optional[np.ndarray]:
    """Extend generator images to the subgroup they generate, or ``None`` if inconsistent.

    Returns an array over ``source`` with ``-1`` outside the generated subgroup.
    """
    image = np.full(source.order, -1, dtype=np.int64)
    image[0] = 0
    queue = [0]
    s_table, t_table = source.table, target.table
    i = 0
    while i < len(queue):
        x = queue[i]
        fx = image[x]
        for g, h in zip(gens, images):
            y = s_table[x, g]
            fy = t_table[fx, h]
            if image[y] < 0:
                image[y] = fy
                queue.append(int(y))
            elif image[y] != fy:
                return None
        i += 1
    return image


def homomorphisms(
    source: FiniteGroup,
    target: FiniteGroup,
    injective: bool = False,
    surjective: bool = False,
    candidate_filter: Optional[Callable[[int, List[int]], bool]] = None,
) -> Iterator[GroupMap]:
    """Yield homomorphisms ``source -> target`` in lexicographic order of generator images.

    Parameters
    ----------
    source, target:
        the groups
    injective:
        restrict to injective maps (generator images keep their orders)
    surjective:
        restrict to surjective maps
    candidate_filter:
        optional ``filter(k, images)`` called after choosing the image of generator ``k``;
        returning ``False`` prunes the branch

    Returns
    -------
        an iterator of :class:`GroupMap`
    """
    gens = list(source.generators)
    s_orders = source.element_orders
    t_orders = target.element_orders
    candidates = []
    for g in gens:
        if injective:
            candidates.append(np.flatnonzero(t_orders == s_orders[g]).tolist())
        else:
            candidates.append(np.flatnonzero(s_orders[g] % t_orders == 0).tolist())

    def search(k: int, chosen: List[int]):
        partial = _extend(source, target, gens[:k], chosen)
        if partial is None:
            return
        if injective:
            defined = partial[partial >= 0]
            if len(np.unique(defined)) != len(defined):
                return
        if k == len(gens):
            if surjective and len(np.unique(partial)) != target.order:
                return
            yield GroupMap(source, target, partial, check=False)
            return
        for h in candidates[k]:
            trial = chosen + [h]
            if candidate_filter is not None and not candidate_filter(k, trial):
                continue
            yield from search(k + 1, trial)

    yield from search(0, [])


def find_isomorphism(source: FiniteGroup, target: FiniteGroup) -> Optional[GroupMap]:
    """First isomorphism found by backtracking, or ``None``."""
    if source.order != target.order:
        return None
    for iso in homomorphisms(source, target, injective=True):
        return iso
    return None


def invariants(group: FiniteGroup) -> tuple:
    """Cheap isomorphism invariants used to prune searches."""
    orders = np.sort(group.element_orders)
    classes = sorted(len(c) for c in conjugacy_classes(group))
    return (
        group.order,
        group.is_abelian,
        tuple(orders.tolist()),
        group.center.order,
        abelianization_order(group),
        tuple(classes),
    )


def is_isomorphic(source: FiniteGroup, target: FiniteGroup) -> Optional[GroupMap]:
    """Return an isomorphism ``source -> target`` when one exists, otherwise ``None``."""
    if source.order != target.order:
        return None
    if invariants(source) != invariants(target):
        return None
    return find_isomorphism(source, target)


class AutomorphismGroup:
    """``Aut(G)`` with ``Inn(G)`` and a transversal of ``Out(G)``.

    Automorphisms are sorted by their image tuples, so the identity comes first. The transversal
    holds the smallest automorphism of every ``Inn``-coset, again identity first.
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        maps = sorted(homomorphisms(group, group, injective=True), key=lambda m: m.key)
        self.maps: List[GroupMap] = maps
        self.index = {m.key: i for i, m in enumerate(maps)}
        inner = sorted({self.index[tuple(int(v) for v in group.conjugation[g])] for g in range(group.order)})
        self.inner: List[int] = inner
        coset_index = np.full(len(maps), -1, dtype=np.int64)
        transversal = []
        for i, m in enumerate(maps):
            if coset_index[i] >= 0:
                continue
            pos = len(transversal)
            transversal.append(i)
            for j in inner:
                coset_index[self.index[m.compose(maps[j]).key]] = pos
        self.transversal: List[int] = transversal
        self.coset_index = coset_index
        logger.debug(f"{group.name}: |Aut|={len(maps)}, |Inn|={len(inner)}, |Out|={len(transversal)}")

    @property
    def order(self) -> int:
        """``|Aut(G)|``."""
        return len(self.maps)

    @property
    def out_order(self) -> int:
        """``|Out(G)|``."""
        return len(self.transversal)

    def outer(self, k: int) -> GroupMap:
        """Transversal representative of the ``k``-th outer class."""
        return self.maps[self.transversal[k]]

    def outer_class(self, auto: GroupMap) -> int:
        """Index of the outer class containing ``auto``."""
        return int(self.coset_index[self.index[auto.key]])

    def compose(self, i: int, j: int) -> int:
        """Index of ``maps[i] o maps[j]``."""
        return self.index[self.maps[i].compose(self.maps[j]).key]

    @cached_property
    def out_group(self) -> FiniteGroup:
        """``Out(G)`` as a table group on the transversal."""
        k = self.out_order
        table = np.empty((k, k), dtype=np.int64)
        for a in range(k):
            for b in range(k):
                table[a, b] = self.outer_class(self.outer(a).compose(self.outer(b)))
        return FiniteGroup(table, name=f"Out({self.group.name})")

    def __repr__(self) -> str:
        return f"AutomorphismGroup({self.group.name}, order={self.order}, out={self.out_order})"


@lru_cache(maxsize=None)
def automorphism_group(group: FiniteGroup) -> AutomorphismGroup:
    """All automorphisms of ``group`` with inner subgroup and outer transversal."""
    check_cap(group.order, "analysis_cap")
    return AutomorphismGroup(group)
