#!/usr/bin/env python3
"""Named families of finite groups built from presentations or permutations."""
# package imports
from brpiclab.backend.errors import GroupSpecError
from brpiclab.backend.group.finite_group import FiniteGroup, SCAN_ORDER

# third party imports
import numpy as np
from sympy import isprime
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup
from sympy.ntheory import primitive_root

# standard imports
import logging
from typing import Callable, Hashable, Sequence

logger = logging.getLogger(__name__)


def from_generators(
    identity: Hashable, generators: Sequence[Hashable], mul: Callable, name: str = "G"
) -> FiniteGroup:
    """Build a multiplication table by closing ``generators`` under ``mul``.

    Elements are numbered in breadth-first order over generator words, so the identity
    is 0 and the numbering is reproducible.

    Parameters
    ----------
    identity:
        the identity element in the native representation
    generators:
        native generators; the identity and repeats are skipped
    mul:
        native product
    name:
        display name of the result

    Returns
    -------
        validated :class:`FiniteGroup`
    """
    gens = []
    for g in generators:
        if g != identity and g not in gens:
            gens.append(g)
    elements = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
        i += 1
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for a, x in enumerate(elements):
        for b, y in enumerate(elements):
            table[a, b] = index[mul(x, y)]
    logger.debug(f"built {name} of order {n} from {len(gens)} generators")
    return FiniteGroup(table, name=name, generators=[index[g] for g in gens], validate=n <= SCAN_ORDER)


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order ``n``."""
    if n < 1:
        raise GroupSpecError(f"cyclic group needs a positive order, got {n}")
    return from_generators(0, [1 % n], lambda a, b: (a + b) % n, name=f"C{n}")


def abelian(invariant_factors: Sequence[int], name: str = "") -> FiniteGroup:
    """Direct sum of cyclic groups ``Z/d_1 + ... + Z/d_r``."""
    factors = tuple(int(d) for d in invariant_factors if int(d) > 1)
    if not factors:
        return from_generators(0, [], lambda a, b: 0, name=name or "C1")
    zero = tuple(0 for _ in factors)
    gens = []
    for i in range(len(factors)):
        gens.append(tuple(1 if j == i else 0 for j in range(len(factors))))

    def mul(a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, factors))

    return from_generators(zero, gens, mul, name=name or "x".join(f"C{d}" for d in factors))


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group with ``order`` elements, written ``D<order>``.

    Elements are ``(k, e)`` standing for ``r^k s^e``; the generators are ``r`` then ``s``.
    """
    if order < 2 or order % 2:
        msg = f"dihedral groups have even order, got D{order}"
        logger.error(msg)
        raise GroupSpecError(msg)
    n = order // 2

    def mul(a, b):
        k1, e1 = a
        k2, e2 = b
        return ((k1 + (-1) ** e1 * k2) % n, (e1 + e2) % 2)

    return from_generators((0, 0), [(1 % n, 0), (0, 1)], mul, name=f"D{order}")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order ``4n``; ``dicyclic(2)`` is the quaternion group."""
    if n < 1:
        raise GroupSpecError(f"dicyclic groups need n >= 1, got {n}")
    m = 2 * n

    def mul(a, b):
        k1, e1 = a
        k2, e2 = b
        if e1 == 0:
            return ((k1 + k2) % m, e2)
        if e2 == 0:
            return ((k1 - k2) % m, 1)
        return ((k1 - k2 + n) % m, 0)

    name = "Q8" if n == 2 else f"Dic{n}"
    return from_generators((0, 0), [(1, 0), (0, 1)], mul, name=name)


def quaternion() -> FiniteGroup:
    """The quaternion group Q8."""
    return dicyclic(2)


def _permutation_group(perms: Sequence[Permutation], degree: int, name: str) -> FiniteGroup:
    identity = Permutation(list(range(max(degree, 1))))
    gens = [Permutation(p.array_form + list(range(p.size, max(degree, 1)))) for p in perms]
    return from_generators(identity, gens, lambda a, b: a * b, name=name)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group S_n."""
    if n < 1:
        raise GroupSpecError(f"symmetric groups need n >= 1, got {n}")
    return _permutation_group(SymmetricGroup(n).generators, n, f"S{n}")


def alternating(n: int) -> FiniteGroup:
    """Alternating group A_n."""
    if n < 1:
        raise GroupSpecError(f"alternating groups need n >= 1, got {n}")
    gens = AlternatingGroup(n).generators if n > 2 else []
    return _permutation_group(gens, n, f"A{n}")


def permutation_group(cycles: Sequence[Sequence[Sequence[int]]], name: str = "") -> FiniteGroup:
    """Group generated by permutations given in cycle notation (points are 1-based).

    Parameters
    ----------
    cycles:
        one entry per generator, each a list of cycles
    name:
        display name
    """
    points = [p for gen in cycles for cyc in gen for p in cyc]
    if any(p < 1 for p in points):
        raise GroupSpecError("permutation points are 1-based")
    degree = max(points, default=1)
    perms = []
    for gen in cycles:
        perm = Permutation(list(range(degree)))
        for cyc in gen:
            if len(set(cyc)) != len(cyc):
                raise GroupSpecError(f"cycle {tuple(cyc)} repeats a point")
            if len(cyc) > 1:
                perm = perm * Permutation([[p - 1 for p in cyc]], size=degree)
        perms.append(perm)
    return _permutation_group(perms, degree, name or "perm")


def pq_group(p: int, q: int) -> FiniteGroup:
    """Nonabelian group of order ``p*q`` with presentation ``x^q = y^p = 1, y x y^-1 = x^a``.

    ``a`` has multiplicative order ``p`` modulo ``q``; elements are ``(i, j)`` for ``x^i y^j``.
    """
    if not (isprime(p) and isprime(q)):
        msg = f"pq({p},{q}) needs two primes"
        logger.error(msg)
        raise GroupSpecError(msg)
    if (q - 1) % p:
        msg = f"pq({p},{q}) needs q = 1 mod p"
        logger.error(msg)
        raise GroupSpecError(msg)
    a = pow(int(primitive_root(q)), (q - 1) // p, q)
    powers = [pow(a, j, q) for j in range(p)]

    def mul(u, v):
        i1, j1 = u
        i2, j2 = v
        return ((i1 + powers[j1] * i2) % q, (j1 + j2) % p)

    return from_generators((0, 0), [(1, 0), (0, 1)], mul, name=f"pq({p},{q})")


def generalized_dihedral(base: FiniteGroup, name: str = "") -> FiniteGroup:
    """``Dih(A) = A x| Z/2`` with the generator of Z/2 acting by inversion on the abelian group ``A``."""
    if not base.is_abelian:
        msg = f"{base.name} is not abelian"
        logger.error(msg)
        raise ValueError(msg)
    table, inverse = base.table, base.inverse

    def mul(u, v):
        a1, e1 = u
        a2, e2 = v
        a2 = int(inverse[a2]) if e1 else a2
        return (int(table[a1, a2]), (e1 + e2) % 2)

    gens = [(g, 0) for g in base.generators] + [(0, 1)]
    return from_generators((0, 0), gens, mul, name=name or f"Dih({base.name})")


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """``(Z/p)^k``."""
    return abelian([p] * k)
