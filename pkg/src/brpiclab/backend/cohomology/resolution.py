#!/usr/bin/env python3
"""The Cayley-graph complex of a finite group.

With a generating set ``S``, the Cayley graph has vertices ``G`` and edges ``(h, s)`` from ``h``
to ``hs``. Its chain complex ``Z[G]^S -> Z[G] -> Z`` is the start of a free resolution whose next
term maps onto the cycle module. A breadth-first spanning tree from the identity gives one
fundamental cycle per non-tree edge, so

* ``H^2(G, A) = Hom_G(cycles, A) / (restrictions of A^S)``, and
* ``H^1(G, A) = ker(A^S -> Hom_G(cycles, A)) / (principal crossed homomorphisms)``,

where a ``G``-map on the cycles is stored as its values ``y_e`` on the fundamental cycles.
"""
# package imports
from brpiclab.backend.cohomology.module import GModule
from brpiclab.backend.group.finite_group import FiniteGroup, small_generating_set

# third party imports
import numpy as np

# standard imports
from functools import lru_cache
import logging

logger = logging.getLogger(__name__)


class CayleyComplex:
    """Spanning tree, fundamental cycles and the matrices built from them.

    Parameters
    ----------
    group:
        the group; edges are labelled by :func:`small_generating_set`; there are
        ``(|S| - 1) |G| + 1`` fundamental cycles
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.generators = tuple(small_generating_set(group))
        n, s = group.order, len(self.generators)
        table = group.table
        parent = np.full(n, -1, dtype=np.int64)
        parent_gen = np.full(n, -1, dtype=np.int64)
        tree = np.zeros((n, s), dtype=bool)
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        order = [0]
        i = 0
        while i < len(order):
            x = order[i]
            for j, g in enumerate(self.generators):
                y = int(table[x, g])
                if not seen[y]:
                    seen[y] = True
                    parent[y], parent_gen[y] = x, j
                    tree[x, j] = True
                    order.append(y)
            i += 1
        self.bfs_order = np.array(order[1:], dtype=np.int64)
        self.parent = parent
        self.parent_gen = parent_gen
        edge_index = np.full((n, s), -1, dtype=np.int64)
        heads, gens = np.nonzero(~tree)
        edge_index[heads, gens] = np.arange(len(heads))
        self.edge_index = edge_index
        self.edge_heads = heads.astype(np.int64)
        self.edge_gens = gens.astype(np.int64)
        self.generator_elements = np.array(self.generators, dtype=np.int64)
        self.edge_tails = table[self.edge_heads, self.generator_elements[self.edge_gens]]
        logger.debug(f"{group.name}: {s} generators, {self.num_cycles} fundamental cycles")

    @property
    def order(self) -> int:
        """Order of the group."""
        return self.group.order

    @property
    def num_generators(self) -> int:
        """``|S|``."""
        return len(self.generators)

    @property
    def num_cycles(self) -> int:
        """Number of non-tree edges."""
        return len(self.edge_heads)

    # cycle module as a Z[G]-module
    def walk_counts(self, t: int) -> np.ndarray:
        """Signed non-tree edge counts along the translated tree paths ``t . P_x``, one row per ``x``."""
        n, cycles = self.order, self.num_cycles
        counts = np.zeros((n, cycles), dtype=np.int64)
        table = self.group.table
        for x in self.bfs_order:
            p, j = self.parent[x], self.parent_gen[x]
            counts[x] = counts[p]
            idx = self.edge_index[table[t, p], j]
            if idx >= 0:
                counts[x, idx] += 1
        return counts

    def cycle_coefficients(self, t: int) -> np.ndarray:
        """Row ``e`` holds the coordinates of ``t . Z_e`` in the basis of fundamental cycles."""
        counts = self.walk_counts(t)
        coef = counts[self.edge_heads] - counts[self.edge_tails]
        translated = self.edge_index[self.group.table[t, self.edge_heads], self.edge_gens]
        rows = np.flatnonzero(translated >= 0)
        np.add.at(coef, (rows, translated[rows]), 1)
        return coef

    def relation_matrix(self, module: GModule) -> np.ndarray:
        """Equivariance constraints on cycle values: one block ``Coef_t (x) I - I (x) M_t`` per generator."""
        r, cycles = module.rank, self.num_cycles
        blocks = []
        eye_r = np.eye(r, dtype=np.int64)
        eye_e = np.eye(cycles, dtype=np.int64)
        for t in self.generators:
            coef = self.cycle_coefficients(t)
            blocks.append(np.kron(coef, eye_r) - np.kron(eye_e, module.action[t]))
        if not blocks:
            return np.zeros((0, cycles * r), dtype=np.int64)
        return np.vstack(blocks)

    def relation_moduli(self, module: GModule) -> np.ndarray:
        """Row moduli for :meth:`relation_matrix`."""
        return np.tile(module.moduli, self.num_generators * self.num_cycles)

    def cycle_moduli(self, module: GModule) -> np.ndarray:
        """Moduli of the cycle-value coordinates ``(e, k)``."""
        return np.tile(module.moduli, self.num_cycles)

    def _path_accumulator(self, module: GModule) -> np.ndarray:
        """``acc[x]`` is the ``r x (s r)`` matrix giving the value of the tree path ``P_x`` on generator lifts."""
        n, r, s = self.order, module.rank, self.num_generators
        acc = np.zeros((n, r, s * r), dtype=np.int64)
        for x in self.bfs_order:
            p, j = self.parent[x], self.parent_gen[x]
            acc[x] = acc[p]
            acc[x, :, j * r : (j + 1) * r] += module.action[p]
            acc[x] %= module.moduli[:, None] if r else 1
        return acc

    def generator_matrix(self, module: GModule) -> np.ndarray:
        """Map ``A^S -> cycle values``: the loop values when generator ``s`` is lifted with an offset ``a_s``."""
        r, s = module.rank, self.num_generators
        acc = self._path_accumulator(module)
        blocks = acc[self.edge_heads] - acc[self.edge_tails]
        for row, (h, j) in enumerate(zip(self.edge_heads, self.edge_gens)):
            blocks[row, :, j * r : (j + 1) * r] += module.action[h]
        matrix = blocks.reshape(self.num_cycles * r, s * r)
        return matrix % self.cycle_moduli(module)[:, None] if r else matrix

    def principal_matrix(self, module: GModule) -> np.ndarray:
        """Map ``A -> A^S``, ``a -> (s.a - a)_s``."""
        r = module.rank
        eye = np.eye(r, dtype=np.int64)
        blocks = [module.action[t] - eye for t in self.generators]
        if not blocks:
            return np.zeros((0, r), dtype=np.int64)
        return np.vstack(blocks)

    # cochains
    def cycle_values(self, cocycle: np.ndarray, module: GModule) -> np.ndarray:
        """Flattened cycle values ``y_(e, k)`` of a normalized 2-cocycle table of shape ``(n, n, r)``."""
        lifts = self.tree_potential(cocycle, module)
        gens = self.generator_elements
        heads, tails = self.edge_heads, self.edge_tails
        values = lifts[heads] + cocycle[heads, gens[self.edge_gens]] - lifts[tails]
        return (values % module.moduli).reshape(-1)

    def cocycle_from_cycles(self, values: np.ndarray, module: GModule) -> np.ndarray:
        """Normalized 2-cocycle table whose cycle values are ``values``.

        ``f(g, h)`` is the sum of the cycle values met by the walk ``g . P_h``.
        """
        n, r, s = self.order, module.rank, self.num_generators
        if not r:
            return np.zeros((n, n, 0), dtype=np.int64)
        edge_values = np.zeros((n, s, r), dtype=np.int64)
        edge_values[self.edge_heads, self.edge_gens] = np.asarray(values, dtype=np.int64).reshape(-1, r)
        table = np.zeros((n, n, r), dtype=np.int64)
        ids = np.arange(n)
        for x in self.bfs_order:
            p, j = self.parent[x], self.parent_gen[x]
            table[:, x] = (table[:, p] + edge_values[self.group.table[ids, p], j]) % module.moduli
        return table

    def extend_crossed(self, values: np.ndarray, module: GModule) -> np.ndarray:
        """Crossed homomorphism ``lam(ps) = lam(p) + p.lam(s)`` from its values on the generators."""
        n, r = self.order, module.rank
        if not r:
            return np.zeros((n, 0), dtype=np.int64)
        on_gens = np.asarray(values, dtype=np.int64).reshape(-1, r)
        lam = np.zeros((n, r), dtype=np.int64)
        for x in self.bfs_order:
            p, j = self.parent[x], self.parent_gen[x]
            lam[x] = (lam[p] + module.action[p] @ on_gens[j]) % module.moduli
        return lam

    def tree_potential(self, cocycle: np.ndarray, module: GModule) -> np.ndarray:
        """``u(ps) = u(p) + f(p, s)`` along the tree."""
        n, r = self.order, module.rank
        u = np.zeros((n, r), dtype=np.int64)
        gens = self.generator_elements
        for x in self.bfs_order:
            p, j = self.parent[x], self.parent_gen[x]
            u[x] = (u[p] + cocycle[p, gens[j]]) % module.moduli
        return u


@lru_cache(maxsize=None)
def cayley_complex(group: FiniteGroup) -> CayleyComplex:
    """Cached :class:`CayleyComplex` of ``group``."""
    return CayleyComplex(group)
