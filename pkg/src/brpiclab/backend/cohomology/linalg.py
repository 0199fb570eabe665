#!/usr/bin/env python3
"""Exact linear algebra over finite abelian groups written as sums of cyclic groups Z/m.

Every "kernel modulo image" in the package goes through :func:`subquotient`. The work is done one
prime at a time over the chain ring Z/p^e with a Smith elimination that always pivots on an entry
of minimal p-adic valuation; the prime parts are reassembled into invariant-factor form by CRT.
"""
# third party imports
import numpy as np
from sympy import factorint
from sympy.ntheory.modular import crt

# standard imports
from dataclasses import dataclass, field
from functools import lru_cache
import logging
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _factor(m: int) -> dict:
    return {int(p): int(e) for p, e in factorint(int(m)).items()}


def prime_exponents(moduli: Sequence[int], primes: Sequence[int]) -> dict:
    """Return ``{p: array of v_p(m) for m in moduli}``."""
    result = {}
    for p in primes:
        result[p] = np.array([_factor(m).get(p, 0) for m in moduli], dtype=np.int64)
    return result


def primes_of(*moduli_lists: Sequence[int]) -> list:
    """Sorted primes dividing any of the given moduli."""
    primes = set()
    for moduli in moduli_lists:
        for m in set(int(x) for x in moduli):
            primes.update(_factor(m))
    return sorted(primes)


@lru_cache(maxsize=None)
def crt_idempotent(prime_power: int, modulus: int) -> int:
    """The residue that is 1 mod ``prime_power`` and 0 mod ``modulus // prime_power``."""
    if prime_power == 1:
        return 0
    other = modulus // prime_power
    if other == 1:
        return 1
    value, _ = crt([prime_power, other], [1, 0])
    return int(value)


@dataclass
class SmithForm:
    """Result of :func:`chain_smith`.

    ``valuations[i]`` and ``units[i]`` describe the i-th diagonal entry ``p**v * u`` after the
    recorded row and column operations; ``rows`` and ``cols``/``cols_inv`` are the transforms when
    tracked, so that ``rows @ A @ cols`` is diagonal modulo ``p**e``.
    """

    p: int
    e: int
    valuations: List[int]
    units: List[int]
    rows: Optional[np.ndarray] = None
    cols: Optional[np.ndarray] = None
    cols_inv: Optional[np.ndarray] = None

    @property
    def rank(self) -> int:
        """Number of nonzero diagonal entries."""
        return len(self.valuations)


def _find_pivot(work: np.ndarray, k: int, p: int, e: int) -> Optional[tuple]:
    """``(v, i, j)`` for an entry of minimal valuation ``v`` in ``work[k:, k:]``, or ``None``.

    A unit in column ``k`` is taken first; the full search only runs when that column has none.
    """
    units = np.flatnonzero(work[k:, k] % p)
    if units.size:
        return 0, k + int(units[0]), k
    sub = work[k:, k:]
    rows, cols = np.nonzero(sub)
    if not rows.size:
        return None
    values = sub[rows, cols]
    for v in range(e):
        hit = np.flatnonzero(values % p ** (v + 1))
        if hit.size:
            return v, k + int(rows[hit[0]]), k + int(cols[hit[0]])
    return None


def chain_smith(matrix: np.ndarray, p: int, e: int, track_rows: bool = False, track_cols: bool = False) -> SmithForm:
    """Diagonalize ``matrix`` over Z/p^e.

    Parameters
    ----------
    matrix:
        integer matrix, reduced modulo ``p**e`` on entry
    p, e:
        the chain ring is Z/p^e
    track_rows:
        accumulate the row transform
    track_cols:
        accumulate the column transform and its inverse

    Returns
    -------
        :class:`SmithForm`
    """
    q = p**e
    work = np.array(matrix, dtype=np.int64) % q
    nrows, ncols = work.shape
    rows = np.eye(nrows, dtype=np.int64) if track_rows else None
    cols = np.eye(ncols, dtype=np.int64) if track_cols else None
    cols_inv = np.eye(ncols, dtype=np.int64) if track_cols else None
    valuations: List[int] = []
    units: List[int] = []

    k = 0
    while k < min(nrows, ncols):
        pivot = _find_pivot(work, k, p, e)
        if pivot is None:
            break
        v, i, j = pivot
        if i != k:
            work[[k, i]] = work[[i, k]]
            if track_rows:
                rows[[k, i]] = rows[[i, k]]
        if j != k:
            work[:, [k, j]] = work[:, [j, k]]
            if track_cols:
                cols[:, [k, j]] = cols[:, [j, k]]
                cols_inv[[k, j]] = cols_inv[[j, k]]
        scale = p**v
        unit = int(work[k, k]) // scale
        unit_inv = pow(unit, -1, q)

        # only rows with a nonzero entry under the pivot change
        below = k + 1 + np.flatnonzero(work[k + 1 :, k])
        if below.size:
            factors = (work[below, k] // scale) * unit_inv % q
            pivot_row = work[k, k:]
            work[below, k:] = (work[below, k:] - factors[:, None] * pivot_row[None, :]) % q
            if track_rows:
                rows[below] = (rows[below] - factors[:, None] * rows[k][None, :]) % q

        right = k + 1 + np.flatnonzero(work[k, k + 1 :])
        if right.size:
            factors = (work[k, right] // scale) * unit_inv % q
            work[k, right] = 0
            if track_cols:
                cols[:, right] = (cols[:, right] - cols[:, k : k + 1] * factors[None, :]) % q
                cols_inv[k] = (cols_inv[k] + factors @ cols_inv[right]) % q

        valuations.append(v)
        units.append(unit)
        k += 1

    return SmithForm(p, e, valuations, units, rows, cols, cols_inv)


@dataclass
class _PrimePart:
    """The p-primary part of a subquotient, in chain-ring coordinates."""

    p: int
    e: int
    exps: np.ndarray  # v_p of the ambient moduli
    kernel_inv: np.ndarray  # maps a lifted ambient vector to kernel coordinates (before division)
    kernel_shift: np.ndarray  # divide kernel coordinate i by p**shift[i]
    kernel_orders: np.ndarray  # p-power order of every kept kernel coordinate
    kernel_basis: np.ndarray  # kept kernel generators as lifted ambient vectors (rows)
    quotient_cols: np.ndarray  # new coordinates = kernel coordinates @ quotient_cols
    orders: List[int] = field(default_factory=list)  # p-power orders of the cyclic factors
    index: List[int] = field(default_factory=list)  # columns of quotient_cols kept
    generators: Optional[np.ndarray] = None  # lifted ambient vectors of the cyclic generators

    def coordinates(self, lifted: np.ndarray) -> np.ndarray:
        """Cyclic-factor coordinates of lifted ambient vectors (batch in rows)."""
        q = self.p**self.e
        z = (lifted @ self.kernel_inv.T) % q
        divisor = self.p**self.kernel_shift
        if np.any(z % divisor):
            raise ValueError("vector does not lie in the kernel")
        kcoords = (z // divisor) % self.kernel_orders
        new = (kcoords @ self.quotient_cols) % q
        if not self.index:
            return np.zeros((lifted.shape[0], 0), dtype=np.int64)
        return new[:, self.index] % np.array(self.orders, dtype=np.int64)


class Subquotient:
    """``ker(beta) / im(alpha)`` inside the ambient group ``Y = sum Z/moduli[j]``.

    The result is in invariant-factor form ``Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ...``.
    :attr:`generators` holds one ambient vector per factor and :meth:`coordinates` maps any vector
    of the kernel to its coordinates.
    """

    def __init__(self, moduli: np.ndarray, beta: Optional[np.ndarray], beta_moduli: Optional[np.ndarray],
                 parts: List[_PrimePart]):
        self.moduli = moduli
        self._beta = beta
        self._beta_moduli = beta_moduli
        self._parts = parts
        self._assemble()

    def _assemble(self) -> None:
        per_prime = []
        for part in self._parts:
            ranked = sorted(range(len(part.orders)), key=lambda i: -part.orders[i])
            per_prime.append((part, ranked))
        width = max((len(ranked) for _, ranked in per_prime), default=0)
        factors = []
        generators = []
        layout = []  # for factor k: list of (part index, local cyclic index, order)
        for k in range(width):
            d = 1
            gen = np.zeros(len(self.moduli), dtype=np.int64)
            pieces = []
            for idx, (part, ranked) in enumerate(per_prime):
                if k >= len(ranked):
                    continue
                local = ranked[k]
                order = part.orders[local]
                d *= order
                pieces.append((idx, local, order))
                gen = (gen + self._embed(part, part.generators[local])) % self.moduli
            factors.append(d)
            generators.append(gen)
            layout.append(pieces)
        order = sorted(range(width), key=lambda k: factors[k])
        self.invariant_factors = tuple(int(factors[k]) for k in order)
        self.generators = (
            np.array([generators[k] for k in order], dtype=np.int64)
            if width
            else np.zeros((0, len(self.moduli)), dtype=np.int64)
        )
        self._layout = [layout[k] for k in order]
        self._idempotents = [
            [crt_idempotent(piece[2], self.invariant_factors[i]) for piece in pieces]
            for i, pieces in enumerate(self._layout)
        ]

    def _embed(self, part: _PrimePart, vector: np.ndarray) -> np.ndarray:
        """CRT-embed a p-part vector into the ambient group."""
        out = np.zeros(len(self.moduli), dtype=np.int64)
        for j, m in enumerate(self.moduli):
            a = int(part.exps[j])
            if a == 0:
                continue
            pa = part.p**a
            out[j] = (int(vector[j]) % pa) * crt_idempotent(pa, int(m)) % int(m)
        return out

    @property
    def order(self) -> int:
        """Order of the subquotient."""
        return int(np.prod(self.invariant_factors, dtype=object)) if self.invariant_factors else 1

    @property
    def rank(self) -> int:
        """Number of invariant factors."""
        return len(self.invariant_factors)

    def in_kernel(self, vectors: np.ndarray) -> bool:
        """Whether every row of ``vectors`` lies in ker(beta)."""
        vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
        if self._beta is None or self._beta.shape[0] == 0:
            return True
        return not np.any((vectors @ self._beta.T) % self._beta_moduli)

    def coordinates(self, vectors: np.ndarray) -> np.ndarray:
        """Invariant-factor coordinates of kernel vectors.

        Parameters
        ----------
        vectors:
            one ambient vector or a batch of them in rows

        Returns
        -------
            array of shape ``(k,)`` or ``(batch, k)``
        """
        vectors = np.asarray(vectors, dtype=np.int64)
        single = vectors.ndim == 1
        batch = np.atleast_2d(vectors) % self.moduli if len(self.moduli) else np.atleast_2d(vectors)
        if not self.in_kernel(batch):
            msg = "vector is not in the kernel of the constraint map"
            logger.error(msg)
            raise ValueError(msg)
        local = []
        for part in self._parts:
            lifted = batch % (part.p**part.exps)
            local.append(part.coordinates(lifted))
        out = np.zeros((batch.shape[0], self.rank), dtype=np.int64)
        for i, pieces in enumerate(self._layout):
            d = self.invariant_factors[i]
            total = np.zeros(batch.shape[0], dtype=np.int64)
            for (idx, lc, _), idem in zip(pieces, self._idempotents[i]):
                total = (total + local[idx][:, lc] * idem) % d
            out[:, i] = total
        return out[0] if single else out

    def combine(self, coordinates: Sequence[int]) -> np.ndarray:
        """Ambient vector ``sum c_i * generators[i]``."""
        coords = np.asarray(coordinates, dtype=np.int64)
        if self.rank == 0:
            return np.zeros(len(self.moduli), dtype=np.int64)
        return (coords @ self.generators) % self.moduli

    def is_zero(self, vector: np.ndarray) -> bool:
        """Whether a kernel vector is zero in the subquotient."""
        return not np.any(self.coordinates(vector))

    def __repr__(self) -> str:
        return f"Subquotient(invariant_factors={self.invariant_factors})"


def subquotient(
    moduli: Sequence[int],
    beta: Optional[np.ndarray] = None,
    beta_moduli: Optional[Sequence[int]] = None,
    alpha: Optional[np.ndarray] = None,
    alpha_moduli: Optional[Sequence[int]] = None,
) -> Subquotient:
    """Compute ``ker(beta) / im(alpha)`` in ``Y = sum Z/moduli[j]``.

    Parameters
    ----------
    moduli:
        orders of the cyclic summands of ``Y``
    beta:
        integer matrix of shape ``(rows, len(moduli))``; row ``k`` is read modulo ``beta_moduli[k]``.
        ``None`` means the kernel is all of ``Y``.
    beta_moduli:
        moduli of the target summands of ``beta``
    alpha:
        integer matrix of shape ``(len(moduli), cols)`` whose columns are images of the generators of
        the source ``sum Z/alpha_moduli[i]``; ``None`` means no image.
    alpha_moduli:
        moduli of the source summands of ``alpha``

    Returns
    -------
        :class:`Subquotient`
    """
    moduli = np.array(moduli, dtype=np.int64).reshape(-1)
    n = len(moduli)
    if n == 0:
        return Subquotient(moduli, None, None, [])
    if beta is not None:
        beta = np.array(beta, dtype=np.int64).reshape(-1, n)
        beta_moduli = np.array(beta_moduli, dtype=np.int64).reshape(-1)
        if beta.shape[0] != len(beta_moduli):
            raise ValueError("beta rows and beta_moduli disagree")
    else:
        beta = np.zeros((0, n), dtype=np.int64)
        beta_moduli = np.zeros(0, dtype=np.int64)
    if alpha is not None:
        alpha = np.array(alpha, dtype=np.int64).reshape(n, -1)
        alpha_moduli = np.array(alpha_moduli, dtype=np.int64).reshape(-1)
        if alpha.shape[1] != len(alpha_moduli):
            raise ValueError("alpha columns and alpha_moduli disagree")
    else:
        alpha = np.zeros((n, 0), dtype=np.int64)
        alpha_moduli = np.zeros(0, dtype=np.int64)

    parts = []
    for p in primes_of(moduli):
        part = _prime_part(p, moduli, beta, beta_moduli, alpha, alpha_moduli)
        if part is not None:
            parts.append(part)
    logger.debug(f"subquotient of {n} summands, {beta.shape[0]} constraints, {alpha.shape[1]} image generators")
    return Subquotient(moduli, beta if beta.shape[0] else None, beta_moduli, parts)


def _prime_part(p, moduli, beta, beta_moduli, alpha, alpha_moduli) -> Optional[_PrimePart]:
    n = len(moduli)
    a = prime_exponents(moduli, [p])[p]
    b = prime_exponents(beta_moduli, [p])[p]
    c = prime_exponents(alpha_moduli, [p])[p]
    e = int(max(a.max(initial=0), b.max(initial=0), c.max(initial=0)))
    if a.max(initial=0) == 0:
        return None
    q = p**e

    # kernel of beta on the lifted p-part: scale row k by p^(e - b_k)
    if beta.shape[0]:
        scaled = (beta % q) * (p ** (e - b))[:, None] % q
        smith = chain_smith(scaled, p, e, track_cols=True)
        kernel_inv = smith.cols_inv
        kernel_cols = smith.cols
        shift = np.zeros(n, dtype=np.int64)
        shift[: smith.rank] = e - np.array(smith.valuations, dtype=np.int64)
        korders = np.full(n, q, dtype=np.int64)
        korders[: smith.rank] = p ** np.array(smith.valuations, dtype=np.int64)
    else:
        kernel_inv = np.eye(n, dtype=np.int64)
        kernel_cols = np.eye(n, dtype=np.int64)
        shift = np.zeros(n, dtype=np.int64)
        korders = np.full(n, q, dtype=np.int64)
    keep = np.flatnonzero(korders > 1)
    kernel_inv = kernel_inv[keep]
    shift = shift[keep]
    korders = korders[keep]
    kernel_basis = (kernel_cols[:, keep] * (p**shift)[None, :] % q).T
    kdim = len(keep)

    def kcoords(lifted: np.ndarray) -> np.ndarray:
        z = (lifted @ kernel_inv.T) % q
        return (z // p**shift) % korders

    # relations: image of alpha, the summand orders of Y, and the orders of the kernel coordinates
    relations = []
    usable = np.flatnonzero(c > 0)
    if len(usable):
        relations.append(kcoords((alpha[:, usable].T % q) % (p**a)))
    bounded = np.flatnonzero(a < e)
    if len(bounded):
        dmat = np.zeros((len(bounded), n), dtype=np.int64)
        dmat[np.arange(len(bounded)), bounded] = p ** a[bounded]
        relations.append(kcoords(dmat))
    small = np.flatnonzero(korders < q)
    if len(small):
        own = np.zeros((len(small), kdim), dtype=np.int64)
        own[np.arange(len(small)), small] = korders[small]
        relations.append(own)
    relmat = np.vstack(relations) if relations else np.zeros((0, kdim), dtype=np.int64)

    if kdim == 0:
        return None
    if relmat.shape[0]:
        smith2 = chain_smith(relmat, p, e, track_cols=True)
        qcols, qinv = smith2.cols, smith2.cols_inv
        qorders = np.full(kdim, q, dtype=np.int64)
        qorders[: smith2.rank] = p ** np.array(smith2.valuations, dtype=np.int64)
    else:
        qcols = np.eye(kdim, dtype=np.int64)
        qinv = np.eye(kdim, dtype=np.int64)
        qorders = np.full(kdim, q, dtype=np.int64)

    index = [int(i) for i in np.flatnonzero(qorders > 1)]
    orders = [int(qorders[i]) for i in index]
    generators = (qinv[index] @ kernel_basis) % q if index else np.zeros((0, n), dtype=np.int64)
    generators = generators % (p**a)
    logger.debug(f"p={p}: kernel rank {kdim}, quotient orders {orders}")
    return _PrimePart(
        p=p,
        e=e,
        exps=a,
        kernel_inv=kernel_inv,
        kernel_shift=shift,
        kernel_orders=korders,
        kernel_basis=kernel_basis,
        quotient_cols=qcols,
        orders=orders,
        index=index,
        generators=generators,
    )


def solve(
    alpha: np.ndarray, alpha_moduli: Sequence[int], target_moduli: Sequence[int], target: Sequence[int]
) -> Optional[np.ndarray]:
    """Find ``x`` with ``alpha @ x = target``, or ``None`` when there is no solution.

    Parameters
    ----------
    alpha:
        integer matrix of shape ``(len(target_moduli), len(alpha_moduli))``
    alpha_moduli:
        moduli of the unknowns
    target_moduli:
        moduli of the equations
    target:
        right-hand side

    Returns
    -------
        a solution reduced modulo ``alpha_moduli``
    """
    alpha_moduli = np.array(alpha_moduli, dtype=np.int64).reshape(-1)
    target_moduli = np.array(target_moduli, dtype=np.int64).reshape(-1)
    target = np.array(target, dtype=np.int64).reshape(-1) % np.maximum(target_moduli, 1)
    m, n = len(alpha_moduli), len(target_moduli)
    alpha = np.array(alpha, dtype=np.int64).reshape(n, m)
    solution = np.zeros(m, dtype=np.int64)
    for p in primes_of(alpha_moduli, target_moduli):
        a = prime_exponents(alpha_moduli, [p])[p]
        b = prime_exponents(target_moduli, [p])[p]
        e = int(max(a.max(initial=0), b.max(initial=0)))
        q = p**e
        rhs = target % (p**b)
        if a.max(initial=0) == 0:
            if np.any(rhs):
                return None
            continue
        columns = np.where(a[None, :] > 0, alpha % q, 0)
        slack = np.diag(p**b).astype(np.int64)
        system = np.hstack([columns, slack]) % q
        smith = chain_smith(system, p, e, track_rows=True, track_cols=True)
        s = (smith.rows @ rhs) % q
        w = np.zeros(system.shape[1], dtype=np.int64)
        for i, (v, unit) in enumerate(zip(smith.valuations, smith.units)):
            if s[i] % p**v:
                return None
            w[i] = (int(s[i]) // p**v) * pow(unit, -1, q) % q
        if np.any(s[smith.rank :] % q):
            return None
        x = (smith.cols @ w) % q
        for i in range(m):
            if a[i] == 0:
                continue
            pa = p ** int(a[i])
            solution[i] = (solution[i] + (int(x[i]) % pa) * crt_idempotent(pa, int(alpha_moduli[i]))) % alpha_moduli[i]
    if np.any((alpha @ solution - target) % np.maximum(target_moduli, 1)):
        return None
    return solution
