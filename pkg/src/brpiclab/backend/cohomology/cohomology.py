#!/usr/bin/env python3
"""First and second cohomology of finite groups with finite coefficients, and Schur multipliers.

Coefficients in ``k^x`` are written additively: a value ``v`` in ``Z/N`` stands for the root of
unity ``exp(2 pi i v / N)``, so the trivial class is ``0``.
"""
# package imports
from brpiclab.backend.cohomology.linalg import Subquotient, solve, subquotient
from brpiclab.backend.cohomology.module import GModule
from brpiclab.backend.cohomology.resolution import cayley_complex
from brpiclab.backend.group.finite_group import FiniteGroup, GroupMap, Subgroup
from brpiclab.backend.util.caps import check_cap

# third party imports
import numpy as np

# standard imports
from functools import lru_cache
import logging
from typing import Iterator, Optional, Sequence, Union

logger = logging.getLogger(__name__)


def _same_coefficients(a, b) -> None:
    if a.group != b.group or a.module != b.module:
        msg = "cochains live on different groups or coefficient modules"
        logger.error(msg)
        raise ValueError(msg)


class Cochain1:
    """A normalized 1-cochain ``G -> A``, stored as an array of shape ``(|G|, r)``."""

    def __init__(self, module: GModule, values: np.ndarray):
        values = module.reduce(np.asarray(values, dtype=np.int64).reshape(module.group.order, module.rank))
        if module.rank and np.any(values[0]):
            msg = "1-cochain is not normalized"
            logger.error(msg)
            raise ValueError(msg)
        self.module = module
        self.values = values

    @property
    def group(self) -> FiniteGroup:
        """Domain group."""
        return self.module.group

    @classmethod
    def zero(cls, module: GModule) -> "Cochain1":
        """The zero cochain."""
        return cls(module, np.zeros((module.group.order, module.rank), dtype=np.int64))

    def __call__(self, g: int) -> np.ndarray:
        return self.values[g]

    def __add__(self, other: "Cochain1") -> "Cochain1":
        _same_coefficients(self, other)
        return Cochain1(self.module, self.values + other.values)

    def __neg__(self) -> "Cochain1":
        return Cochain1(self.module, -self.values)

    def __sub__(self, other: "Cochain1") -> "Cochain1":
        return self + (-other)

    def __repr__(self) -> str:
        return f"Cochain1({self.module!r})"


class CohomologyClass2:
    """A normalized 2-cocycle representing a class in ``H^2``, stored as ``(|G|, |G|, r)``.

    Equality of instances is equality of cocycle tables; use :func:`is_cohomologous` or the
    coordinates of a :class:`CohomologyGroup` to compare classes.
    """

    def __init__(self, module: GModule, values: np.ndarray):
        n = module.group.order
        self.module = module
        self.values = module.reduce(np.asarray(values, dtype=np.int64).reshape(n, n, module.rank))

    @property
    def group(self) -> FiniteGroup:
        """Domain group."""
        return self.module.group

    @property
    def modulus(self) -> int:
        """Modulus of scalar coefficients ``Z/m``."""
        if self.module.rank != 1:
            raise ValueError("modulus is only defined for cyclic coefficients")
        return int(self.module.moduli[0])

    @property
    def scalar(self) -> np.ndarray:
        """The table ``(|G|, |G|)`` for cyclic coefficients."""
        if self.module.rank != 1:
            raise ValueError("scalar table is only defined for cyclic coefficients")
        return self.values[..., 0]

    @classmethod
    def zero(cls, module: GModule) -> "CohomologyClass2":
        """The zero cocycle."""
        n = module.group.order
        return cls(module, np.zeros((n, n, module.rank), dtype=np.int64))

    @classmethod
    def from_scalar(cls, group: FiniteGroup, modulus: int, table: np.ndarray) -> "CohomologyClass2":
        """Cocycle with values in ``Z/modulus`` and trivial action."""
        return cls(GModule.trivial(group, modulus), np.asarray(table)[..., None])

    def __call__(self, g: int, h: int):
        values = self.values[g, h]
        return int(values[0]) if self.module.rank == 1 else values

    def __add__(self, other: "CohomologyClass2") -> "CohomologyClass2":
        _same_coefficients(self, other)
        return CohomologyClass2(self.module, self.values + other.values)

    def __neg__(self) -> "CohomologyClass2":
        return CohomologyClass2(self.module, -self.values)

    def __sub__(self, other: "CohomologyClass2") -> "CohomologyClass2":
        return self + (-other)

    def scale(self, k: int) -> "CohomologyClass2":
        """``k * f``."""
        return CohomologyClass2(self.module, self.values * int(k))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CohomologyClass2)
            and self.module == other.module
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash((self.module, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"CohomologyClass2({self.module!r})"


def coboundary(cochain: Cochain1) -> CohomologyClass2:
    """``(d lam)(g, h) = g.lam(h) - lam(gh) + lam(g)``."""
    module = cochain.module
    lam = cochain.values
    table = module.group.table
    acted = np.einsum("gij,hj->ghi", module.action, lam)
    return CohomologyClass2(module, acted - lam[table] + lam[:, None, :])


def is_cocycle(cocycle: CohomologyClass2) -> bool:
    """Full scan of normalization and of ``g.f(h,k) - f(gh,k) + f(g,hk) - f(g,h) = 0``."""
    module = cocycle.module
    f = cocycle.values
    if module.rank == 0:
        return True
    if np.any(f[0]) or np.any(f[:, 0]):
        return False
    table = module.group.table
    for g in range(module.group.order):
        acted = np.einsum("ij,hkj->hki", module.action[g], f)
        defect = acted - f[table[g]] + f[g][table] - f[g][:, None, :]
        if np.any(defect % module.moduli):
            return False
    return True


def cycle_values(cocycle: CohomologyClass2) -> np.ndarray:
    """Values of a cocycle on the fundamental cycles of the Cayley complex of its group."""
    return cayley_complex(cocycle.group).cycle_values(cocycle.values, cocycle.module)


class CohomologyGroup:
    """``H^1`` or ``H^2`` in invariant-factor form with explicit generating cochains.

    Parameters
    ----------
    degree:
        1 or 2
    module:
        coefficient module
    quotient:
        the subquotient computed on the Cayley complex
    """

    def __init__(self, degree: int, module: GModule, quotient: Subquotient):
        self.degree = degree
        self.module = module
        self.quotient = quotient
        self.complex = cayley_complex(module.group)
        self.invariant_factors = tuple(int(d) for d in quotient.invariant_factors)
        self.generators = [self._from_vector(v) for v in quotient.generators]

    @property
    def group(self) -> FiniteGroup:
        """Domain group."""
        return self.module.group

    @property
    def order(self) -> int:
        """Number of classes."""
        return int(np.prod(self.invariant_factors, dtype=np.int64)) if self.invariant_factors else 1

    @property
    def rank(self) -> int:
        """Number of invariant factors."""
        return len(self.invariant_factors)

    def is_trivial(self) -> bool:
        """Whether the group has one element."""
        return self.order == 1

    def _from_vector(self, vector: np.ndarray):
        if self.degree == 1:
            return Cochain1(self.module, self.complex.extend_crossed(vector, self.module))
        return CohomologyClass2(self.module, self.complex.cocycle_from_cycles(vector, self.module))

    def _to_vector(self, cochain) -> np.ndarray:
        if self.degree == 1:
            return cochain.values[self.complex.generator_elements].reshape(-1)
        return self.complex.cycle_values(cochain.values, self.module)

    def coordinates(self, cochain: Union[Cochain1, CohomologyClass2]) -> np.ndarray:
        """Coordinates of the class of ``cochain`` in the invariant-factor basis."""
        if cochain.module != self.module:
            msg = "cochain has different coefficients"
            logger.error(msg)
            raise ValueError(msg)
        return self.quotient.coordinates(self._to_vector(cochain))

    def element(self, coordinates: Sequence[int]):
        """Representative cocycle of the class with the given coordinates."""
        return self._from_vector(self.quotient.combine(coordinates))

    def all_coordinates(self) -> Iterator[tuple]:
        """Every coordinate tuple, lexicographically."""
        if not self.invariant_factors:
            yield ()
            return
        for row in np.indices(self.invariant_factors).reshape(self.rank, -1).T:
            yield tuple(int(v) for v in row)

    def is_zero(self, cochain) -> bool:
        """Whether ``cochain`` represents the trivial class."""
        return not np.any(self.coordinates(cochain))

    def __repr__(self) -> str:
        return f"CohomologyGroup(H^{self.degree}, {self.module!r}, factors={self.invariant_factors})"


@lru_cache(maxsize=None)
def h2(module: GModule) -> CohomologyGroup:
    """``H^2(G, A)`` as cycle values modulo restrictions of ``A^S``.

    Parameters
    ----------
    module:
        the coefficients together with the group

    Returns
    -------
        :class:`CohomologyGroup` of degree 2
    """
    group = module.group
    check_cap(group.order, "product_cap", what=f"cohomology of {group.name}")
    cx = cayley_complex(group)
    quotient = subquotient(
        cx.cycle_moduli(module),
        beta=cx.relation_matrix(module),
        beta_moduli=cx.relation_moduli(module),
        alpha=cx.generator_matrix(module),
        alpha_moduli=np.tile(module.moduli, cx.num_generators),
    )
    result = CohomologyGroup(2, module, quotient)
    logger.debug(f"H^2({group.name}, {tuple(module.moduli)}) = {result.invariant_factors}")
    return result


@lru_cache(maxsize=None)
def h1(module: GModule) -> CohomologyGroup:
    """``H^1(G, A)``: crossed homomorphisms modulo principal ones, via their values on the generators."""
    group = module.group
    check_cap(group.order, "product_cap", what=f"cohomology of {group.name}")
    cx = cayley_complex(group)
    quotient = subquotient(
        np.tile(module.moduli, cx.num_generators),
        beta=cx.generator_matrix(module),
        beta_moduli=cx.cycle_moduli(module),
        alpha=cx.principal_matrix(module),
        alpha_moduli=module.moduli,
    )
    result = CohomologyGroup(1, module, quotient)
    logger.debug(f"H^1({group.name}, {tuple(module.moduli)}) = {result.invariant_factors}")
    return result


class SchurMultiplier(CohomologyGroup):
    """``H^2(G, k^x)`` as ``H^2(G, Z/N)`` modulo the image of the characters of ``G``.

    Representative cocycles take values in ``Z/N``.
    """

    def __init__(self, group: FiniteGroup, modulus: int):
        module = GModule.trivial(group, modulus)
        self.ambient = h2(module)
        self.characters = h1(module)
        images = []
        n = modulus
        table = group.table
        for chi in self.characters.generators:
            c = chi.values[:, 0]
            delta = (c[:, None] + c[None, :] - c[table]) // n
            images.append(self.ambient.coordinates(CohomologyClass2(module, delta[..., None])))
        if images and self.ambient.rank:
            outer = subquotient(
                self.ambient.invariant_factors,
                alpha=np.array(images, dtype=np.int64).T,
                alpha_moduli=self.characters.invariant_factors,
            )
        else:
            outer = subquotient(self.ambient.invariant_factors)
        self.modulus = modulus
        super().__init__(2, module, outer)

    def _from_vector(self, vector: np.ndarray) -> CohomologyClass2:
        return self.ambient.element(vector)

    def _to_vector(self, cochain) -> np.ndarray:
        return self.ambient.coordinates(cochain)

    def __repr__(self) -> str:
        return f"SchurMultiplier({self.group.name}, factors={self.invariant_factors})"


@lru_cache(maxsize=None)
def schur_multiplier(group: FiniteGroup, modulus: Optional[int] = None) -> SchurMultiplier:
    """``H^2(G, k^x)`` with representatives valued in ``Z/modulus`` (default ``|G|``)."""
    modulus = group.order if modulus is None else int(modulus)
    if modulus % group.exponent:
        msg = f"modulus {modulus} is not a multiple of the exponent of {group.name}"
        logger.error(msg)
        raise ValueError(msg)
    result = SchurMultiplier(group, modulus)
    logger.debug(f"Schur multiplier of {group.name}: {result.invariant_factors}")
    return result


def restrict(cocycle: CohomologyClass2, subgroup: Subgroup) -> CohomologyClass2:
    """Restriction to ``subgroup`` of the cocycle's group, as a cocycle on ``subgroup.group``."""
    module = cocycle.module
    if subgroup.parent != cocycle.group:
        msg = "restriction target is not a subgroup of the cocycle's group"
        logger.error(msg)
        raise ValueError(msg)
    idx = subgroup.array
    restricted = GModule(subgroup.group, module.moduli, module.action[idx])
    return CohomologyClass2(restricted, cocycle.values[np.ix_(idx, idx)])


def pullback(cocycle: CohomologyClass2, theta: GroupMap) -> CohomologyClass2:
    """``f^theta = f o (theta^-1 x theta^-1)`` on the target of the isomorphism ``theta``."""
    if not theta.is_bijective:
        msg = "pullback needs a bijective map"
        logger.error(msg)
        raise ValueError(msg)
    if theta.source != cocycle.group:
        msg = "pullback map does not start at the cocycle's group"
        logger.error(msg)
        raise ValueError(msg)
    inv = theta.inverse().images
    module = cocycle.module
    if module.is_trivial_action:
        moved = GModule.trivial(theta.target, module.moduli)
    else:
        moved = GModule(theta.target, module.moduli, module.action[inv])
    return CohomologyClass2(moved, cocycle.values[np.ix_(inv, inv)])


def is_cohomologous(first: CohomologyClass2, second: CohomologyClass2) -> Optional[Cochain1]:
    """Return ``lam`` with ``d lam = first - second``, or ``None`` when the classes differ.

    Raises
    ------
    ValueError
        when the cocycles have different groups or coefficients
    """
    _same_coefficients(first, second)
    module = first.module
    cx = cayley_complex(module.group)
    diff = first - second
    target = cx.cycle_values(diff.values, module)
    on_gens = solve(
        cx.generator_matrix(module),
        np.tile(module.moduli, cx.num_generators),
        cx.cycle_moduli(module),
        target,
    )
    if on_gens is None:
        return None
    lam1 = np.zeros((module.group.order, module.rank), dtype=np.int64)
    if module.rank:
        lam1[cx.generator_elements] = on_gens.reshape(-1, module.rank)
    first_step = Cochain1(module, lam1)
    rest = diff - coboundary(first_step)
    potential = cx.tree_potential(rest.values, module)
    witness = first_step - Cochain1(module, potential)
    if coboundary(witness) != diff:
        msg = "coboundary witness failed verification"
        logger.error(msg)
        raise RuntimeError(msg)
    return witness
