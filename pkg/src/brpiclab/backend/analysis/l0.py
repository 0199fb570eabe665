#!/usr/bin/env python3
"""The set of Lagrangians equivalent to ``Rep(G)``, the order of ``BrPic(Vec_G)`` and the permutation image of ``A0``."""
# package imports
from brpiclab.backend.analysis.a0 import A0Group, a0_group, action_table
from brpiclab.backend.bimodule.datum import canonical_image
from brpiclab.backend.bimodule.enumerate import BimoduleOrbit, enumerate_invertible
from brpiclab.backend.errors import CrossCheckError
from brpiclab.backend.group.finite_group import FiniteGroup, Subgroup
from brpiclab.backend.lagrangian.lagrangian import Lagrangian, canonical_lagrangian

# third party imports
import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

# standard imports
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
import logging
from typing import Dict, List, Optional

logger = logging.getLogger(__name__)


def image_census(orbits: List[BimoduleOrbit]) -> Dict[Lagrangian, int]:
    """How many elements of ``BrPic(Vec_G)`` send ``Rep(G)`` to each Lagrangian."""
    return dict(Counter(canonical_image(orbit.datum) for orbit in orbits))


def l0_set(group: FiniteGroup, orbits: Optional[List[BimoduleOrbit]] = None) -> List[Lagrangian]:
    """Canonical images of all invertible bimodule categories, sorted canonically.

    Parameters
    ----------
    group:
        the group ``G``
    orbits:
        precomputed output of :class:`enumerate_invertible`

    Returns
    -------
        the Lagrangians equivalent to ``Rep(G)``; ``L_(1,1)`` comes first

    Raises
    ------
    CrossCheckError
        when ``L_(1,1)`` is missing from the images
    """
    orbits = enumerate_invertible(group=group) if orbits is None else orbits
    result = sorted(image_census(orbits))
    if not result or result[0] != canonical_lagrangian(group):
        msg = f"canonical Lagrangian of {group.name} is not an image of any bimodule category"
        logger.error(msg)
        raise CrossCheckError(msg)
    return result


def brpic_order(group: FiniteGroup, orbits: Optional[List[BimoduleOrbit]] = None) -> int:
    """``|H^2(G, k^x)| * |Out(G)| * |L0(G)|``, checked against the number of bimodule orbits.

    Raises
    ------
    CrossCheckError
        when the two counts differ
    """
    orbits = enumerate_invertible(group=group) if orbits is None else orbits
    a0 = a0_group(group)
    order = a0.order * len(l0_set(group, orbits))
    if order != len(orbits):
        msg = f"{group.name}: order formula gives {order} but there are {len(orbits)} bimodule orbits"
        logger.error(msg)
        raise CrossCheckError(msg)
    return order


def cycle_string(permutation: Permutation) -> str:
    """One-based cycle notation without fixed points, ``"1"`` for the identity."""
    cycles = permutation.cyclic_form
    if not cycles:
        return "1"
    sep = "" if permutation.size < 10 else ","
    return "".join("(" + sep.join(str(i + 1) for i in cycle) + ")" for cycle in cycles)


@dataclass
class PermutationRep:
    """``A0(G)`` acting on the ordered list ``domain``.

    Attributes
    ----------
    a0:
        the acting group
    domain:
        the Lagrangians equivalent to ``Rep(G)``
    images:
        ``images[e, i]``, index of the image of ``domain[i]`` under element ``e``
    """

    a0: A0Group
    domain: List[Lagrangian]
    images: np.ndarray

    @property
    def degree(self) -> int:
        """``|L0(G)|``."""
        return len(self.domain)

    @cached_property
    def perms(self) -> List[Permutation]:
        """One permutation per element of ``A0``."""
        return [Permutation([int(v) for v in row], size=self.degree) for row in self.images]

    @cached_property
    def kernel(self) -> Subgroup:
        """Elements of ``A0`` fixing every point."""
        fixed = np.flatnonzero((self.images == np.arange(self.degree)).all(axis=1))
        return Subgroup(self.a0.table, fixed, check=False)

    @cached_property
    def image(self) -> PermutationGroup:
        """The image of ``A0`` in ``Sym(L0)``."""
        return PermutationGroup(self.perms)

    @property
    def image_order(self) -> int:
        """``|A0| / |kernel|``."""
        return int(self.image.order())

    @property
    def orbit_lengths(self) -> tuple:
        """Sorted lengths of the ``A0``-orbits on the domain."""
        return tuple(sorted(len(orbit) for orbit in self.image.orbits()))

    def image_cycles(self) -> List[str]:
        """Distinct images in cycle notation, identity first."""
        found = sorted({cycle_string(p) for p in self.perms}, key=lambda s: (s != "1", len(s), s))
        return found

    def is_homomorphism(self) -> bool:
        """Whether ``images`` respects the multiplication of ``A0``."""
        table = self.a0.table.table
        composed = self.images[:, self.images]  # [e, f, i] -> e(f(i))
        return bool(np.array_equal(composed, self.images[table]))


def a0_permutation(group: FiniteGroup, domain: Optional[List[Lagrangian]] = None) -> PermutationRep:
    """Action of ``A0(G)`` on ``L0(G)``.

    Every element of ``A(G)`` fixing all of ``L0(G)`` fixes ``Rep(G)`` and therefore lies in
    ``A0(G)``, so the kernel computed here is the kernel of the full action and the image of
    ``A(G)`` has order ``|BrPic| / |kernel|``.

    Raises
    ------
    CrossCheckError
        when some element of ``A0`` moves ``L_(1,1)`` or the action is not a homomorphism
    """
    domain = l0_set(group) if domain is None else domain
    a0 = a0_group(group)
    rep = PermutationRep(a0, list(domain), action_table(a0, domain))
    start = domain.index(canonical_lagrangian(group))
    if np.any(rep.images[:, start] != start):
        msg = f"an element of {a0.table.name} moves the canonical Lagrangian"
        logger.error(msg)
        raise CrossCheckError(msg)
    if not rep.is_homomorphism():
        msg = f"{a0.table.name} does not act on the Lagrangians of {group.name}"
        logger.error(msg)
        raise CrossCheckError(msg)
    logger.debug(f"{group.name}: A0 image of order {rep.image_order} on {rep.degree} points")
    return rep
