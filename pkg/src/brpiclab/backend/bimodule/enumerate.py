#!/usr/bin/env python3
"""Enumerate invertible ``Vec_G``-bimodule categories up to equivalence."""
# package imports
from brpiclab.backend.bimodule.context import BimoduleContext, analyze_class, bimodule_context
from brpiclab.backend.bimodule.datum import BimoduleDatum, is_involution
from brpiclab.backend.cohomology.cohomology import CohomologyClass2, CohomologyGroup
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.util.functions import parallel_map

# third party imports
import numpy as np
import param

# standard imports
from dataclasses import dataclass
from functools import partial
import logging
from typing import List, Optional

logger = logging.getLogger(__name__)


def class_at(cohomology: CohomologyGroup, coordinates: tuple) -> CohomologyClass2:
    """Representative cocycle with the given coordinates, the zero cocycle for a trivial group."""
    if not cohomology.rank:
        return CohomologyClass2.zero(cohomology.module)
    return cohomology.element(np.array(coordinates, dtype=np.int64))


@dataclass(frozen=True)
class BimoduleOrbit:
    """One element of ``BrPic(Vec_G)``.

    Attributes
    ----------
    datum:
        representative on the canonical subgroup of its conjugacy class, cocycle at the smallest
        coordinates of the orbit
    class_index:
        index of the conjugacy class of ``L``
    coordinates:
        Schur coordinates of the representative class
    size:
        number of pairs (conjugate of ``L``, class on it) in the orbit
    """

    datum: BimoduleDatum
    class_index: int
    coordinates: tuple
    size: int

    @property
    def key(self) -> tuple:
        """Same shape as :func:`brpiclab.backend.bimodule.datum.orbit_key`."""
        return (self.datum.subgroup.elements, self.coordinates)

    def describe(self) -> dict:
        """Plain summary used in reports."""
        return {
            "class_index": self.class_index,
            "subgroup_order": self.datum.subgroup.order,
            "left_leg": list(self.datum.L1.elements),
            "right_leg": list(self.datum.L2.elements),
            "coordinates": list(self.coordinates),
            "size": self.size,
        }


class enumerate_invertible(param.ParameterizedFunction):
    """
    Enumerate the invertible bimodule categories over ``Vec_G`` up to equivalence.

    The realized subgroups of ``G x G^op`` with abelian legs of equal order are split into
    conjugacy classes; each class is analysed independently, which is where the worker
    pool is used. The result does not depend on the number of workers.

    Parameters
    ----------
    group: FiniteGroup
        The group ``G``, at most ``bimodule_cap``.
    max_workers: int = 1
        Number of cores for the per-class analysis; 0 picks a value for the host.
    tqdm_class: tqdm.tqdm
        Class to be used for rendering tqdm progress

    Returns
    -------
        list of :class:`BimoduleOrbit` ordered by class, then by representative coordinates
    """

    group = param.ClassSelector(class_=FiniteGroup, doc="The group G.")
    max_workers = param.Integer(default=1, bounds=(0, None), doc="Number of cores to use for parallel processing.")
    tqdm_class = param.ClassSelector(class_=object, doc="Progress bar to render with")

    def __call__(self, **params):
        """See class level documentation for help."""
        logger.info("Executing Bimodule enumeration")
        _ = self.instance(**params)
        params = param.ParamOverrides(self, params)
        val = self._enumerate(params.group, params.max_workers, params.tqdm_class)
        logger.info("FINISHED Executing Bimodule enumeration")
        return val

    def _analyze(self, context: BimoduleContext, max_workers: int, tqdm_class) -> None:
        pending = [i for i in range(len(context.classes)) if not context.has_data(i)]
        rst = parallel_map(
            partial(analyze_class, context.group),
            [context.classes[i][0] for i in pending],
            [context.classes[i][1] for i in pending],
            max_workers=max_workers,
            desc=f"Analysing subgroup classes of {context.group.name}",
            tqdm_class=tqdm_class,
        )
        for index, data in zip(pending, rst):
            context.install(index, data)

    def _enumerate(self, group: FiniteGroup, max_workers: int, tqdm_class) -> List[BimoduleOrbit]:
        context = bimodule_context(group)
        self._analyze(context, max_workers, tqdm_class)
        orbits = []
        for index in range(len(context.classes)):
            data = context.class_data(index)
            subgroup = context.canonical_subgroup(index)
            for rep, length in zip(data.orbit_reps, data.orbit_lengths):
                datum = BimoduleDatum(context, subgroup, class_at(data.schur, rep))
                orbits.append(BimoduleOrbit(datum, index, rep, data.class_size * length))
        logger.info(f"{group.name}: {len(orbits)} invertible bimodule categories")
        return orbits


def involution_census(group: FiniteGroup, orbits: Optional[List[BimoduleOrbit]] = None) -> int:
    """Number of elements of order at most 2 in ``BrPic(Vec_G)``, identity included."""
    orbits = enumerate_invertible(group=group) if orbits is None else orbits
    count = sum(1 for orbit in orbits if is_involution(orbit.datum)[0])
    logger.debug(f"{group.name}: {count} orbits of order at most 2")
    return count
