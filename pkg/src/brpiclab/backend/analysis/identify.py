#!/usr/bin/env python3
"""Identify ``BrPic(Vec_G)`` by filtering a finite catalog of groups against computed constraints."""
# package imports
from brpiclab.backend.analysis.l0 import PermutationRep
from brpiclab.backend.errors import OrderCapError
from brpiclab.backend.group.automorphism import is_isomorphic
from brpiclab.backend.group.builders import (
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    generalized_dihedral,
    symmetric,
)
from brpiclab.backend.group.constructions import direct_product
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.group.subgroups import all_subgroups, coset_action, core
from brpiclab.backend.util.caps import check_cap, current_caps
from brpiclab.backend.util.functions import parallel_map

# third party imports
import param
from sympy import divisors
from sympy.combinatorics import Permutation, PermutationGroup

# standard imports
from dataclasses import dataclass, field
from functools import lru_cache, partial
import logging
from typing import Callable, List, Optional, Tuple

logger = logging.getLogger(__name__)

# cyclic factors allowed next to a nonabelian catalog group
SMALL_CYCLIC = (2, 3, 4)


@dataclass(frozen=True)
class CatalogEntry:
    """A named group with a picklable builder."""

    name: str
    build: Callable[[], FiniteGroup]


def _abelian_factor_lists(order: int, smallest: int = 2) -> List[Tuple[int, ...]]:
    """Invariant-factor lists ``d_1 | d_2 | ...`` with product ``order``."""
    if order == 1:
        return [()]
    result = []
    for d in divisors(order):
        if d < smallest or d % smallest:
            continue
        for rest in _abelian_factor_lists(order // d, d):
            if all(r % d == 0 for r in rest):
                result.append((d,) + rest)
    return result


def _named_product(base: Callable[[], FiniteGroup], k: int, name: str) -> FiniteGroup:
    product, _, _ = direct_product(base(), cyclic(k))
    product.name = name
    return product


def _named_dihedral(base_factors: Tuple[int, ...], name: str) -> FiniteGroup:
    return generalized_dihedral(abelian(base_factors), name=name)


def _nonabelian_bases(order: int) -> List[CatalogEntry]:
    """Symmetric, alternating, dihedral and dicyclic groups of the given order."""
    entries = []
    named = {6: ("S3", partial(symmetric, 3)), 12: ("A4", partial(alternating, 4)), 24: ("S4", partial(symmetric, 4))}
    if order in named:
        entries.append(CatalogEntry(*named[order]))
    if order >= 6 and order % 2 == 0:
        entries.append(CatalogEntry(f"D{order}", partial(dihedral, order)))
    if order >= 8 and order % 4 == 0:
        n = order // 4
        entries.append(CatalogEntry("Q8" if n == 2 else f"Dic{n}", partial(dicyclic, n)))
    return entries


def catalog_entries(order: int) -> List[CatalogEntry]:
    """Candidate groups of one order before isomorphism deduplication."""
    entries = _nonabelian_bases(order)
    for factors in _abelian_factor_lists(order):
        name = "x".join(f"C{d}" for d in factors) or "C1"
        entries.append(CatalogEntry(name, partial(abelian, factors, name)))
    for k in SMALL_CYCLIC:
        if order % k == 0:
            for base in _nonabelian_bases(order // k):
                name = f"{base.name}xC{k}"
                entries.append(CatalogEntry(name, partial(_named_product, base.build, k, name)))
    if order % 2 == 0:
        for factors in _abelian_factor_lists(order // 2):
            if len(factors) > 1:
                name = "Dih(" + "x".join(f"C{d}" for d in factors) + ")"
                entries.append(CatalogEntry(name, partial(_named_dihedral, factors, name)))
    return entries


@lru_cache(maxsize=None)
def catalog(order: int) -> Tuple[Tuple[str, FiniteGroup], ...]:
    """Pairwise non-isomorphic catalog groups of ``order``, first name kept.

    Raises
    ------
    OrderCapError
        when ``order`` exceeds ``catalog_cap``
    """
    check_cap(order, "catalog_cap", what="catalog search")
    kept: List[Tuple[str, FiniteGroup]] = []
    for entry in catalog_entries(order):
        candidate = entry.build()
        if any(is_isomorphic(candidate, known) is not None for _, known in kept):
            continue
        kept.append((entry.name, candidate))
    logger.debug(f"catalog of order {order}: {[name for name, _ in kept]}")
    return tuple(kept)


def name_of(group: FiniteGroup) -> Optional[str]:
    """Catalog name of a group isomorphic to ``group``, if any."""
    try:
        entries = catalog(group.order)
    except OrderCapError:
        return None
    for name, known in entries:
        if is_isomorphic(group, known) is not None:
            return name
    return None


@dataclass(frozen=True)
class Constraints:
    """What is known about ``BrPic(Vec_G)`` without building it.

    Attributes
    ----------
    order:
        ``|BrPic(Vec_G)|``
    a0:
        ``A0(G)`` as a table group, the stabilizer of one point of ``L0(G)``
    degree:
        ``|L0(G)|``
    kernel_order:
        order of the kernel of the action on ``L0(G)``
    a0_image_order:
        order of the image of ``A0`` in ``Sym(L0)``
    a0_orbit_lengths:
        sorted orbit lengths of ``A0`` on ``L0(G)``
    involutions:
        number of elements of order at most 2, identity included
    """

    order: int
    a0: FiniteGroup
    degree: int
    kernel_order: int
    a0_image_order: int
    a0_orbit_lengths: tuple
    involutions: int

    @classmethod
    def from_action(cls, order: int, action: PermutationRep, involutions: int) -> "Constraints":
        """Collect the constraints from the ``A0`` action and the involution census."""
        return cls(
            order=order,
            a0=action.a0.table,
            degree=action.degree,
            kernel_order=action.kernel.order,
            a0_image_order=action.image_order,
            a0_orbit_lengths=action.orbit_lengths,
            involutions=involutions,
        )

    def as_dict(self) -> dict:
        """Plain view for reports."""
        return {
            "order": self.order,
            "a0_order": self.a0.order,
            "degree": self.degree,
            "kernel_order": self.kernel_order,
            "a0_image_order": self.a0_image_order,
            "a0_orbit_lengths": list(self.a0_orbit_lengths),
            "involutions": self.involutions,
        }


def _point_stabilizer_matches(candidate: FiniteGroup, constraints: Constraints) -> bool:
    """Whether some subgroup isomorphic to ``A0`` has the computed core and point-stabilizer action."""
    for sub in all_subgroups(candidate):
        if sub.order != constraints.a0.order:
            continue
        if core(candidate, sub).order != constraints.kernel_order:
            continue
        if is_isomorphic(sub.group, constraints.a0) is None:
            continue
        action = coset_action(candidate, sub)
        stabilizer = PermutationGroup([Permutation([int(v) for v in action[h]]) for h in sub.array])
        lengths = tuple(sorted(len(orbit) for orbit in stabilizer.orbits()))
        if int(stabilizer.order()) == constraints.a0_image_order and lengths == constraints.a0_orbit_lengths:
            return True
    return False


def satisfies(candidate: FiniteGroup, constraints: Constraints) -> bool:
    """Check every constraint against one candidate."""
    if candidate.order != constraints.order:
        return False
    if int((candidate.element_orders <= 2).sum()) != constraints.involutions:
        return False
    return _point_stabilizer_matches(candidate, constraints)


@dataclass
class Identification:
    """Surviving catalog names together with the constraints they were filtered by."""

    candidates: List[str]
    constraints: Constraints
    examined: List[str] = field(default_factory=list)
    skipped: str = ""

    @property
    def recognized(self) -> bool:
        """Whether at least one catalog group survived."""
        return bool(self.candidates)

    @property
    def status(self) -> str:
        """Short verdict for reports."""
        if self.skipped:
            return f"skipped: {self.skipped}"
        if not self.candidates:
            return "unrecognized: constraints emitted"
        # the catalog does not hold every group of every order
        return "unique within catalog" if len(self.candidates) == 1 else "ambiguous within catalog"

    def as_dict(self) -> dict:
        """Plain view for reports."""
        return {
            "candidates": list(self.candidates),
            "status": self.status,
            "examined": list(self.examined),
            "constraints": self.constraints.as_dict(),
        }


class identify_brpic(param.ParameterizedFunction):
    """
    Filter the built-in catalog by the constraints known for ``BrPic(Vec_G)``.

    A survivor has the right order and the right number of elements of order at most 2, and
    contains a subgroup isomorphic to ``A0(G)`` of index ``|L0(G)|`` whose core has the order of
    the computed kernel and which acts on its cosets like ``A0(G)`` acts on ``L0(G)``.

    Parameters
    ----------
    constraints: Constraints
        Output of :meth:`Constraints.from_action`.
    max_workers: int = 1
        Number of cores used to test catalog groups; 0 picks a value for the host.
    tqdm_class: tqdm.tqdm
        Class to be used for rendering tqdm progress

    Returns
    -------
        :class:`Identification`; an empty candidate list is a valid answer
    """

    constraints = param.ClassSelector(class_=Constraints, doc="Constraints on BrPic(Vec_G).")
    max_workers = param.Integer(default=1, bounds=(0, None), doc="Number of cores to use for parallel processing.")
    tqdm_class = param.ClassSelector(class_=object, doc="Progress bar to render with")

    def __call__(self, **params):
        """See class level documentation for help."""
        logger.info("Executing BrPic identification")
        _ = self.instance(**params)
        params = param.ParamOverrides(self, params)
        val = self._identify(params.constraints, params.max_workers, params.tqdm_class)
        logger.info("FINISHED Executing BrPic identification")
        return val

    def _identify(self, constraints: Constraints, max_workers: int, tqdm_class) -> Identification:
        if constraints.order > current_caps().catalog_cap:
            logger.warning(f"identification skipped: order {constraints.order} is above catalog_cap")
            return Identification([], constraints, skipped="order above catalog_cap")
        entries = catalog(constraints.order)
        groups = [group for _, group in entries]
        verdicts = parallel_map(
            partial(satisfies, constraints=constraints),
            groups,
            max_workers=max_workers,
            desc=f"Filtering groups of order {constraints.order}",
            tqdm_class=tqdm_class,
        )
        survivors = [name for (name, _), ok in zip(entries, verdicts) if ok]
        if not survivors:
            logger.warning(f"no catalog group of order {constraints.order} satisfies the constraints")
        return Identification(survivors, constraints, [name for name, _ in entries])
