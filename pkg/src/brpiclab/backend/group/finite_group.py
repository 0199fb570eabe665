#!/usr/bin/env python3
"""Finite groups stored as dense multiplication tables, their subgroups and homomorphisms."""
# third party imports
import numpy as np

# standard imports
from functools import cached_property
import logging
from typing import Iterable, Optional, Sequence

logger = logging.getLogger(__name__)

# full associativity scans are run up to this order
SCAN_ORDER = 64


class FiniteGroup:
    """A finite group given by its multiplication table.

    Elements are the integers ``0 .. order-1``; ``0`` is the identity and
    ``table[x, y]`` is the index of ``x*y``.

    Parameters
    ----------
    table:
        square array of element indices
    name:
        display name
    generators:
        optional generating set, a greedy one is computed when omitted
    validate:
        run the identity, Latin-square and (up to order 64) associativity scans
    """

    def __init__(
        self,
        table: np.ndarray,
        name: str = "G",
        generators: Optional[Sequence[int]] = None,
        validate: bool = True,
    ):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            msg = f"multiplication table must be a non-empty square array, got shape {table.shape}"
            logger.error(msg)
            raise ValueError(msg)
        table.setflags(write=False)
        self._table = table
        self.name = name
        if validate:
            self._validate()
        inverse = np.argmax(table == 0, axis=1).astype(np.int64)
        inverse.setflags(write=False)
        self._inverse = inverse
        self._generators = None if generators is None else tuple(int(g) for g in generators if int(g) != 0)
        self._hash = None

    def _validate(self) -> None:
        """Check identity, Latin-square property and associativity."""
        n = self.order
        table = self._table
        ids = np.arange(n)
        if table.min() < 0 or table.max() >= n:
            raise ValueError(f"{self.name}: table entries out of range")
        if not (np.array_equal(table[0], ids) and np.array_equal(table[:, 0], ids)):
            msg = f"{self.name}: index 0 is not a two-sided identity"
            logger.error(msg)
            raise ValueError(msg)
        if not (np.all(np.sort(table, axis=1) == ids) and np.all(np.sort(table, axis=0) == ids[:, None])):
            msg = f"{self.name}: table is not a Latin square"
            logger.error(msg)
            raise ValueError(msg)
        if n <= SCAN_ORDER:
            lhs = table[table]
            rhs = table[ids[:, None, None], table[None, :, :]]
            if not np.array_equal(lhs, rhs):
                msg = f"{self.name}: table is not associative"
                logger.error(msg)
                raise ValueError(msg)

    # basic arithmetic
    @property
    def order(self) -> int:
        """Number of elements."""
        return int(self._table.shape[0])

    @property
    def table(self) -> np.ndarray:
        """Read-only multiplication table."""
        return self._table

    @property
    def inverse(self) -> np.ndarray:
        """Read-only array of inverses."""
        return self._inverse

    def mul(self, x: int, y: int) -> int:
        """Return ``x*y``."""
        return int(self._table[x, y])

    def inv(self, x: int) -> int:
        """Return the inverse of ``x``."""
        return int(self._inverse[x])

    def power(self, x: int, k: int) -> int:
        """Return ``x**k`` for any integer ``k``."""
        if k < 0:
            x, k = self.inv(x), -k
        result = 0
        base = int(x)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def conj(self, g: int, x: int) -> int:
        """Return ``g x g^-1``."""
        return int(self.conjugation[g, x])

    def commutes(self, x: int, y: int) -> bool:
        """Return whether ``x`` and ``y`` commute."""
        return self._table[x, y] == self._table[y, x]

    @cached_property
    def conjugation(self) -> np.ndarray:
        """Array with ``conjugation[g, x] = g x g^-1``."""
        result = self._table[self._table, self._inverse[:, None]]
        result.setflags(write=False)
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Order of every element."""
        n = self.order
        ids = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        current = ids.copy()
        for k in range(1, n + 1):
            hit = (current == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            current = self._table[current, ids]
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        """Whether the table is symmetric."""
        return bool(np.array_equal(self._table, self._table.T))

    @cached_property
    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        return int(np.lcm.reduce(self.element_orders))

    # generation
    def closure(self, generators: Iterable[int]) -> np.ndarray:
        """Return the sorted elements of the subgroup generated by ``generators``."""
        gens = [int(g) for g in generators if int(g) != 0]
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        elements = [0]
        table = self._table
        i = 0
        while i < len(elements):
            x = elements[i]
            for g in gens:
                y = int(table[x, g])
                if not seen[y]:
                    seen[y] = True
                    elements.append(y)
            i += 1
        return np.flatnonzero(seen)

    @property
    def generators(self) -> tuple:
        """A small generating set, chosen greedily by decreasing element order."""
        if self._generators is None:
            self._generators = greedy_generators(self, range(self.order))
        return self._generators

    # structure
    def subgroup(self, elements: Iterable[int]) -> "Subgroup":
        """Wrap a set of elements as a :class:`Subgroup` (closure is checked)."""
        return Subgroup(self, elements)

    def generated_subgroup(self, generators: Iterable[int]) -> "Subgroup":
        """Return the subgroup generated by ``generators``."""
        return Subgroup(self, self.closure(generators), check=False)

    @cached_property
    def center(self) -> "Subgroup":
        """The center Z(G)."""
        conj = self.conjugation
        gens = list(self.generators)
        fixed = np.ones(self.order, dtype=bool)
        for g in gens:
            fixed &= conj[g] == np.arange(self.order)
        return Subgroup(self, np.flatnonzero(fixed), check=False)

    def trivial_subgroup(self) -> "Subgroup":
        """The subgroup {1}."""
        return Subgroup(self, [0], check=False)

    def whole(self) -> "Subgroup":
        """G as a subgroup of itself."""
        return Subgroup(self, range(self.order), check=False)

    # comparison
    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, FiniteGroup) and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self._table.tobytes()))
        return self._hash

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def greedy_generators(group: FiniteGroup, candidates: Iterable[int]) -> tuple:
    """Pick generators of the subgroup spanned by ``candidates``, largest element orders first.

    Parameters
    ----------
    group:
        the ambient group
    candidates:
        elements of the subgroup to be generated

    Returns
    -------
        tuple of element indices, never containing the identity
    """
    candidates = [int(c) for c in candidates if int(c) != 0]
    orders = group.element_orders
    ordered = sorted(candidates, key=lambda x: (-int(orders[x]), x))
    target = set(candidates)
    target.add(0)
    chosen: list = []
    span = {0}
    for x in ordered:
        if len(span) == len(target):
            break
        if x not in span:
            chosen.append(x)
            span = set(group.closure(chosen).tolist())
    return tuple(chosen)


def _span_size(table: np.ndarray, generators: Sequence[int]) -> int:
    seen = np.zeros(table.shape[0], dtype=bool)
    seen[0] = True
    frontier = np.zeros(1, dtype=np.int64)
    gens = np.asarray(generators, dtype=np.int64)
    while frontier.size:
        reached = table[frontier][:, gens].reshape(-1)
        frontier = np.unique(reached[~seen[reached]])
        seen[frontier] = True
    return int(seen.sum())


def small_generating_set(group: FiniteGroup, attempts: int = 8) -> tuple:
    """A generating set of at most two elements when one is found, else the greedy one.

    Pairs ``(a, b)`` are tried with ``a`` among the ``attempts`` elements of largest order and
    ``b`` outside ``<a>``, both by decreasing order then index, so the choice is deterministic.
    """
    greedy = group.generators
    if len(greedy) <= 2:
        return greedy
    n = group.order
    orders = group.element_orders
    ranked = sorted(range(1, n), key=lambda x: (-int(orders[x]), x))
    for a in ranked[:attempts]:
        cyclic = set(group.closure([a]).tolist())
        for b in ranked:
            if b not in cyclic and _span_size(group.table, (a, b)) == n:
                logger.debug(f"{group.name}: two generators ({a}, {b}) instead of {len(greedy)}")
                return (a, b)
    return greedy


class Subgroup:
    """A subgroup of a :class:`FiniteGroup`, stored as a sorted tuple of element indices."""

    def __init__(self, parent: FiniteGroup, elements: Iterable[int], check: bool = True):
        self.parent = parent
        self.elements = tuple(sorted({int(e) for e in elements}))
        if check:
            self._check()

    def _check(self) -> None:
        mask = self.mask
        if not mask[0]:
            raise ValueError("subgroup does not contain the identity")
        e = np.array(self.elements)
        products = self.parent.table[np.ix_(e, e)]
        if not mask[products].all() or not mask[self.parent.inverse[e]].all():
            msg = f"element set of size {len(e)} is not closed in {self.parent.name}"
            logger.error(msg)
            raise ValueError(msg)

    @property
    def order(self) -> int:
        """Number of elements."""
        return len(self.elements)

    @cached_property
    def array(self) -> np.ndarray:
        """Elements as an integer array."""
        result = np.array(self.elements, dtype=np.int64)
        result.setflags(write=False)
        return result

    @cached_property
    def mask(self) -> np.ndarray:
        """Boolean membership mask over the parent."""
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[list(self.elements)] = True
        return mask

    @cached_property
    def position(self) -> np.ndarray:
        """Map parent index -> position in :attr:`elements` (-1 when absent)."""
        pos = np.full(self.parent.order, -1, dtype=np.int64)
        pos[self.array] = np.arange(self.order)
        return pos

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    @cached_property
    def is_normal(self) -> bool:
        """Whether every generator of the parent conjugates the subgroup into itself."""
        conj = self.parent.conjugation
        return all(self.mask[conj[g, self.array]].all() for g in self.parent.generators)

    @cached_property
    def is_abelian(self) -> bool:
        """Whether the elements commute pairwise."""
        block = self.parent.table[np.ix_(self.array, self.array)]
        return bool(np.array_equal(block, block.T))

    @cached_property
    def generators(self) -> tuple:
        """Greedy generating set inside the parent."""
        return greedy_generators(self.parent, self.elements)

    @cached_property
    def group(self) -> FiniteGroup:
        """The subgroup as a standalone :class:`FiniteGroup`; element ``i`` is ``elements[i]``."""
        block = self.parent.table[np.ix_(self.array, self.array)]
        table = self.position[block]
        gens = [int(self.position[g]) for g in self.generators]
        return FiniteGroup(table, name=f"{self.parent.name}[{self.order}]", generators=gens,
                           validate=self.order <= SCAN_ORDER)

    def conjugate(self, g: int) -> "Subgroup":
        """Return ``g H g^-1``."""
        return Subgroup(self.parent, self.parent.conjugation[g, self.array], check=False)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        """Containment test."""
        return bool(other.mask[self.array].all())

    def intersection(self, other: "Subgroup") -> "Subgroup":
        """Intersection of two subgroups of the same parent."""
        return Subgroup(self.parent, np.flatnonzero(self.mask & other.mask), check=False)

    def sort_key(self) -> tuple:
        """Canonical order: by size, then element set."""
        return (self.order, self.elements)

    def __lt__(self, other: "Subgroup") -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup) or self.elements != other.elements:
            return False
        return self.parent is other.parent or self.parent == other.parent

    def __hash__(self) -> int:
        return hash(self.elements)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


class GroupMap:
    """A homomorphism between two finite groups, given by the image of every element."""

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images: Sequence[int], check: bool = True):
        images = np.array(images, dtype=np.int64)
        if images.shape != (source.order,):
            raise ValueError(f"expected {source.order} images, got shape {images.shape}")
        images.setflags(write=False)
        self.source = source
        self.target = target
        self.images = images
        if check and not self.is_homomorphism():
            msg = f"map {source.name} -> {target.name} is not a homomorphism"
            logger.error(msg)
            raise ValueError(msg)

    @classmethod
    def identity(cls, group: FiniteGroup) -> "GroupMap":
        """Identity map of ``group``."""
        return cls(group, group, np.arange(group.order), check=False)

    def is_homomorphism(self) -> bool:
        """Full scan of ``f(xy) = f(x) f(y)``."""
        img = self.images
        return bool(np.array_equal(self.target.table[img[:, None], img[None, :]], img[self.source.table]))

    @cached_property
    def is_bijective(self) -> bool:
        """Whether the map is a bijection."""
        return self.source.order == self.target.order and len(np.unique(self.images)) == self.source.order

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def compose(self, other: "GroupMap") -> "GroupMap":
        """Return ``self o other``."""
        return GroupMap(other.source, self.target, self.images[other.images], check=False)

    def inverse(self) -> "GroupMap":
        """Inverse of a bijective map."""
        if not self.is_bijective:
            msg = "only bijective maps can be inverted"
            logger.error(msg)
            raise ValueError(msg)
        inv = np.empty(self.source.order, dtype=np.int64)
        inv[self.images] = np.arange(self.source.order)
        return GroupMap(self.target, self.source, inv, check=False)

    def image_of(self, subgroup: Subgroup) -> Subgroup:
        """Image of a subgroup of the source."""
        return Subgroup(self.target, self.images[subgroup.array], check=False)

    def kernel(self) -> Subgroup:
        """Kernel as a subgroup of the source."""
        return Subgroup(self.source, np.flatnonzero(self.images == 0), check=False)

    @property
    def key(self) -> tuple:
        """Hashable image tuple."""
        return tuple(int(i) for i in self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupMap) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    def __repr__(self) -> str:
        return f"GroupMap({self.source.name} -> {self.target.name})"
