#!/usr/bin/env python3
"""Run the whole Brauer-Picard pipeline on one group and collect a serializable report."""
# package imports
from brpiclab.backend.analysis.a0 import a0_group
from brpiclab.backend.analysis.families import family_block
from brpiclab.backend.analysis.identify import Constraints, identify_brpic, name_of
from brpiclab.backend.analysis.l0 import a0_permutation, brpic_order, image_census, l0_set
from brpiclab.backend.bimodule.context import bimodule_context
from brpiclab.backend.bimodule.enumerate import enumerate_invertible, involution_census
from brpiclab.backend.cohomology.cohomology import schur_multiplier
from brpiclab.backend.diagnostics.checks import check_result
from brpiclab.backend.group.automorphism import automorphism_group
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.lagrangian.label import in_l0_by_label, label
from brpiclab.backend.lagrangian.lagrangian import Lagrangian, enumerate_lagrangians
from brpiclab.backend.util.caps import check_cap

# third party imports
import param

# standard imports
import logging
import time
from typing import List, Optional

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def group_block(group: FiniteGroup, spec: str = "") -> dict:
    """Name, order and generators of ``G``."""
    return {
        "spec": spec or group.name,
        "name": group.name,
        "order": group.order,
        "abelian": bool(group.is_abelian),
        "exponent": group.exponent,
        "center_order": group.center.order,
        "generators": list(group.generators),
    }


def schur_block(group: FiniteGroup) -> dict:
    """Invariant factors of ``H^2(G, k^x)``."""
    schur = schur_multiplier(group)
    return {"invariant_factors": list(schur.invariant_factors), "order": schur.order}


def out_block(group: FiniteGroup) -> dict:
    """Orders of ``Aut``, ``Inn`` and ``Out`` with a catalog name for ``Out``."""
    automorphisms = automorphism_group(group)
    return {
        "aut_order": automorphisms.order,
        "inner_order": len(automorphisms.inner),
        "order": automorphisms.out_order,
        "structure": name_of(automorphisms.out_group),
    }


def aut_block(group: FiniteGroup) -> dict:
    """Orders of ``Aut`` and ``Inn`` and the outer transversal as images of the generators of ``G``."""
    automorphisms = automorphism_group(group)
    generators = list(group.generators)
    return {
        "order": automorphisms.order,
        "inner_order": len(automorphisms.inner),
        "out_order": automorphisms.out_order,
        "generators": generators,
        "outer_representatives": [
            [int(automorphisms.outer(k).images[g]) for g in generators] for k in range(automorphisms.out_order)
        ],
    }


def lagrangian_rows(lagrangians: List[Lagrangian], l0: Optional[List[Lagrangian]] = None) -> List[dict]:
    """One row per Lagrangian with its label, and its ``L0`` membership when ``l0`` is given."""
    members = None if l0 is None else set(l0)
    rows = []
    for index, lag in enumerate(lagrangians):
        result = label(lag)
        row = {"index": index + 1}
        row.update(lag.describe())
        row["label_status"] = result.status.value
        row["label_groups"] = [name_of(g) or f"order {g.order}" for g in result.groups]
        if members is not None:
            row["in_l0"] = lag in members
        rows.append(row)
    return rows


class full_report(param.ParameterizedFunction):
    """
    Compute every invariant of ``BrPic(Vec_G)`` this package knows and gather the cross-checks.

    Parameters
    ----------
    group: FiniteGroup
        The group ``G``.
    spec: str = ""
        Group specification the group was built from, echoed in the report.
    max_workers: int = 1
        Number of cores for bimodule enumeration and catalog filtering; 0 picks a value for the host.
    include_timing: bool = False
        Add the wall-clock time; off by default so reports are reproducible byte for byte.

    Returns
    -------
        report dictionary following the packaged report schema
    """

    group = param.ClassSelector(class_=FiniteGroup, doc="The group G.")
    spec = param.String(default="", doc="Group specification echoed in the report.")
    max_workers = param.Integer(default=1, bounds=(0, None), doc="Number of cores to use for parallel processing.")
    include_timing = param.Boolean(default=False, doc="Record the wall-clock time in the report.")

    def __call__(self, **params):
        """See class level documentation for help."""
        logger.info("Executing Brauer-Picard report")
        _ = self.instance(**params)
        params = param.ParamOverrides(self, params)
        val = self._report(params.group, params.spec, params.max_workers, params.include_timing)
        logger.info("FINISHED Executing Brauer-Picard report")
        return val

    def _report(self, group: FiniteGroup, spec: str, max_workers: int, include_timing: bool) -> dict:
        check_cap(group.order, "analysis_cap", what=f"analysis of {group.name}")
        start = time.perf_counter()
        lagrangians = enumerate_lagrangians(group)
        orbits = enumerate_invertible(group=group, max_workers=max_workers)
        l0 = l0_set(group, orbits)
        order = brpic_order(group, orbits)
        action = a0_permutation(group, l0)
        involutions = involution_census(group, orbits)
        constraints = Constraints.from_action(order, action, involutions)
        identification = identify_brpic(constraints=constraints, max_workers=max_workers)
        context = bimodule_context(group)

        rows = lagrangian_rows(lagrangians, l0)
        position = {lag: i for i, lag in enumerate(lagrangians)}
        census = image_census(orbits)
        checks = [
            check_result(
                "order_formula",
                order == a0_group(group).order * len(l0) == len(orbits),
                f"|A0| * |L0| = {a0_group(group).order} * {len(l0)}, orbits = {len(orbits)}",
            ),
            check_result(
                "image_census",
                set(census.values()) == {len(orbits) // len(l0)},
                f"each member of L0 is the image of {sorted(set(census.values()))} orbits",
            ),
            check_result("a0_action_homomorphism", action.is_homomorphism()),
            check_result("a0_kernel_index", action.image_order * action.kernel.order == action.a0.order),
        ]
        disagreements = []
        for lag in lagrangians:
            verdict = in_l0_by_label(lag)
            if verdict is not None and verdict != (lag in census):
                disagreements.append(position[lag] + 1)
        checks.append(
            check_result("label_agrees_with_l0", not disagreements, f"disagreeing Lagrangians: {disagreements}")
        )

        report = {
            "schema_version": SCHEMA_VERSION,
            "group": group_block(group, spec),
            "schur": schur_block(group),
            "out": out_block(group),
            "lagrangians": rows,
            "l0": [position[lag] + 1 for lag in l0],
            "bimodules": {
                "classes": len(context.classes),
                "admissible_subgroups": len(context.triples),
                "orbits": len(orbits),
                "involutions": involutions,
            },
            "brpic": {
                "order": order,
                "a0_order": action.a0.order,
                "a0_structure": name_of(action.a0.table),
                "kernel_order": action.kernel.order,
                "a0_image": action.image_cycles(),
                "full_image_order": order // action.kernel.order,
                "identification": identification.as_dict(),
            },
            "checks": checks,
        }
        family = family_block(group)
        if family is not None:
            report["brpic"]["family"] = family
        if include_timing:
            report["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
        return report
