#!/usr/bin/env python3
"""Subgroup lattices, normal subgroups, conjugacy and Sylow subgroups of table groups."""
# package imports
from brpiclab.backend.group.finite_group import FiniteGroup, Subgroup

# third party imports
import numpy as np
from sympy import factorint

# standard imports
from functools import lru_cache
import logging
from typing import List

logger = logging.getLogger(__name__)


def cyclic_subgroups(group: FiniteGroup) -> List[Subgroup]:
    """All cyclic subgroups, canonically sorted."""
    seen = {}
    for x in range(group.order):
        elements = tuple(group.closure([x]).tolist())
        seen.setdefault(elements, Subgroup(group, elements, check=False))
    return sorted(seen.values())


def _join_closure(group: FiniteGroup, seeds: List[Subgroup], joiners: List[int]) -> List[Subgroup]:
    """Close ``seeds`` under joining with the subgroups generated by ``joiners``."""
    found = {s.elements: s for s in seeds}
    queue = list(seeds)
    while queue:
        current = queue.pop()
        for x in joiners:
            if current.mask[x]:
                continue
            joined = group.closure(list(current.generators) + [x])
            key = tuple(joined.tolist())
            if key not in found:
                sub = Subgroup(group, key, check=False)
                found[key] = sub
                queue.append(sub)
    return sorted(found.values())


@lru_cache(maxsize=None)
def all_subgroups(group: FiniteGroup) -> List[Subgroup]:
    """Every subgroup of ``group``, sorted by order then element set.

    Built by joining cyclic subgroups until nothing new appears.
    """
    cyclics = cyclic_subgroups(group)
    joiners = [c.generators[0] for c in cyclics if c.order > 1]
    result = _join_closure(group, cyclics, joiners)
    logger.debug(f"{group.name}: {len(result)} subgroups")
    return result


def normal_closure(group: FiniteGroup, elements) -> Subgroup:
    """Smallest normal subgroup containing ``elements``."""
    conj = group.conjugation
    seeds = np.unique(conj[:, np.asarray(list(elements), dtype=np.int64)])
    return group.generated_subgroup(seeds.tolist())


@lru_cache(maxsize=None)
def normal_subgroups(group: FiniteGroup) -> List[Subgroup]:
    """Every normal subgroup, sorted canonically (joins of normal closures of single elements)."""
    closures = {}
    for x in range(group.order):
        sub = normal_closure(group, [x])
        closures.setdefault(sub.elements, sub)
    found = dict(closures)
    queue = list(closures.values())
    while queue:
        current = queue.pop()
        for other in closures.values():
            if other.is_subgroup_of(current):
                continue
            joined = group.generated_subgroup(list(current.generators) + list(other.generators))
            if joined.elements not in found:
                found[joined.elements] = joined
                queue.append(joined)
    return sorted(found.values())


def normal_abelian_subgroups(group: FiniteGroup) -> List[Subgroup]:
    """Normal abelian subgroups including the trivial one, sorted by order then element set."""
    return [n for n in normal_subgroups(group) if n.is_abelian]


def conjugacy_classes(group: FiniteGroup) -> List[tuple]:
    """Conjugacy classes as sorted tuples, ordered by smallest element."""
    conj = group.conjugation
    seen = np.zeros(group.order, dtype=bool)
    classes = []
    for x in range(group.order):
        if seen[x]:
            continue
        cls = np.unique(conj[:, x])
        seen[cls] = True
        classes.append(tuple(int(c) for c in cls))
    return classes


def commutator_subgroup(group: FiniteGroup) -> Subgroup:
    """Derived subgroup ``[G, G]``."""
    table, inv = group.table, group.inverse
    ids = np.arange(group.order)
    comms = table[table[ids[:, None], ids[None, :]], table[inv[:, None], inv[None, :]]]
    return group.generated_subgroup(np.unique(comms).tolist())


def abelianization_order(group: FiniteGroup) -> int:
    """``|G / [G, G]|``."""
    return group.order // commutator_subgroup(group).order


def normalizer(group: FiniteGroup, sub: Subgroup) -> Subgroup:
    """``N_G(H)``."""
    conj = group.conjugation[:, sub.array]
    keep = sub.mask[conj].all(axis=1)
    return Subgroup(group, np.flatnonzero(keep), check=False)


def core(group: FiniteGroup, sub: Subgroup) -> Subgroup:
    """Largest normal subgroup of ``group`` inside ``sub``: the intersection of all conjugates."""
    conj = group.conjugation
    inside = np.ones(group.order, dtype=bool)
    for g in range(group.order):
        inside &= sub.mask[conj[group.inverse[g]]]
    return Subgroup(group, np.flatnonzero(inside), check=False)


def conjugates(group: FiniteGroup, sub: Subgroup) -> List[Subgroup]:
    """Distinct conjugates of ``sub``, sorted."""
    found = {}
    for g in range(group.order):
        c = sub.conjugate(g)
        found.setdefault(c.elements, c)
    return sorted(found.values())


def _is_prime_power_of(n: int, p: int) -> bool:
    return set(factorint(n)) <= {p}


def sylow_subgroup(group: FiniteGroup, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup, grown one normalizing element at a time."""
    target = p ** factorint(group.order).get(p, 0)
    current = group.trivial_subgroup()
    orders = group.element_orders
    while current.order < target:
        norm = normalizer(group, current)
        grown = None
        for x in norm.elements:
            if current.mask[x] or not _is_prime_power_of(int(orders[x]), p):
                continue
            candidate = group.generated_subgroup(list(current.generators) + [x])
            if _is_prime_power_of(candidate.order, p):
                grown = candidate
                break
        if grown is None:
            msg = f"could not grow a {p}-subgroup of {group.name} past order {current.order}"
            logger.error(msg)
            raise RuntimeError(msg)
        current = grown
    return current


def left_cosets(group: FiniteGroup, sub: Subgroup) -> List[tuple]:
    """Left cosets ``gH`` as sorted tuples, ordered by smallest element."""
    rows = np.sort(group.table[:, sub.array], axis=1)
    unique = np.unique(rows, axis=0)
    return [tuple(int(v) for v in row) for row in unique]


def coset_action(group: FiniteGroup, sub: Subgroup) -> np.ndarray:
    """Permutation action on left cosets: ``action[g, i]`` is the coset ``g * coset_i``."""
    cosets = left_cosets(group, sub)
    label = np.empty(group.order, dtype=np.int64)
    for i, coset in enumerate(cosets):
        label[list(coset)] = i
    reps = np.array([c[0] for c in cosets], dtype=np.int64)
    return label[group.table[:, reps]]


def complements(group: FiniteGroup, normal: Subgroup) -> List[Subgroup]:
    """Subgroups ``T`` with ``N T = G`` and ``N`` meeting ``T`` trivially."""
    size = group.order // normal.order
    return [
        t
        for t in all_subgroups(group)
        if t.order == size and t.intersection(normal).order == 1
    ]
