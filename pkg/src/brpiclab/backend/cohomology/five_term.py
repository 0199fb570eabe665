#!/usr/bin/env python3
"""Orders in the exact sequence of a split extension ``G = N x| T`` with ``N`` abelian.

For such ``G`` the Schur multiplier splits as ``H^2(T) x M(G)`` with ``M(G)`` the kernel of the
restriction to ``T``, and there is an exact sequence

    0 -> H^1(T, N^) -> M(G) -> H^2(N)^T -> H^2(T, N^)

whose middle map is restriction to ``N``. :func:`five_term_check` computes every term and checks
the orders this forces.
"""
# package imports
from brpiclab.backend.cohomology.bicharacter import alt_bicharacter, invariant_classes
from brpiclab.backend.cohomology.cohomology import h1, h2, restrict, schur_multiplier
from brpiclab.backend.cohomology.linalg import subquotient
from brpiclab.backend.cohomology.module import dual_module_over
from brpiclab.backend.group.abelian import AbelianStructure
from brpiclab.backend.group.finite_group import FiniteGroup, Subgroup

# third party imports
import numpy as np

# standard imports
from dataclasses import asdict, dataclass
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiveTermReport:
    """Orders of the terms and the verdict of each exactness check."""

    schur_order: int
    schur_complement_order: int
    restriction_kernel_order: int
    h1_dual_order: int
    invariant_forms_order: int
    h2_dual_order: int
    image_in_forms_order: int
    splitting_holds: bool
    left_exact_holds: bool
    right_exact_holds: bool

    @property
    def passed(self) -> bool:
        """Whether every order relation holds."""
        return self.splitting_holds and self.left_exact_holds and self.right_exact_holds

    def as_dict(self) -> dict:
        """Plain dictionary view for reports."""
        result = asdict(self)
        result["passed"] = self.passed
        return result


def _check_decomposition(group: FiniteGroup, normal: Subgroup, complement: Subgroup) -> None:
    if normal.parent != group or complement.parent != group:
        msg = "decomposition subgroups do not live in the group"
        logger.error(msg)
        raise ValueError(msg)
    if not normal.is_normal or not normal.is_abelian:
        msg = "the normal factor must be a normal abelian subgroup"
        logger.error(msg)
        raise ValueError(msg)
    if normal.intersection(complement).order != 1 or normal.order * complement.order != group.order:
        msg = f"subgroups of orders {normal.order} and {complement.order} do not split {group.name}"
        logger.error(msg)
        raise ValueError(msg)


def five_term_check(group: FiniteGroup, normal: Subgroup, complement: Subgroup) -> FiveTermReport:
    """Compute the terms of the sequence for ``G = N x| T`` and test their orders.

    Parameters
    ----------
    group:
        the group ``G``
    normal:
        normal abelian subgroup ``N``
    complement:
        a complement ``T`` of ``N``

    Returns
    -------
        :class:`FiveTermReport`

    Raises
    ------
    ValueError
        when ``(N, T)`` is not a semidirect decomposition of ``G``
    """
    _check_decomposition(group, normal, complement)
    modulus = group.order
    schur = schur_multiplier(group)
    schur_t = schur_multiplier(complement.group, modulus)

    # restriction H^2(G) -> H^2(T) in coordinates; the kernel is M(G)
    if schur.rank and schur_t.rank:
        columns = [schur_t.coordinates(restrict(gen, complement)) for gen in schur.generators]
        res_matrix = np.array(columns, dtype=np.int64).T
        kernel = subquotient(schur.invariant_factors, beta=res_matrix, beta_moduli=schur_t.invariant_factors)
    else:
        kernel = subquotient(schur.invariant_factors)
    image_t = schur.order // kernel.order

    structure = AbelianStructure(normal)
    dual = dual_module_over(structure, complement.group, complement.elements)
    h1_dual = h1(dual)
    h2_dual = h2(dual)
    forms = invariant_classes(normal, modulus=modulus, acting=complement.generators)

    # image of M(G) in the invariant forms on N
    images = set()
    for coords in (np.indices(kernel.invariant_factors).reshape(kernel.rank, -1).T if kernel.rank else [()]):
        schur_coords = kernel.combine(coords) if kernel.rank else np.zeros(schur.rank, dtype=np.int64)
        images.add(alt_bicharacter(schur.element(schur_coords), normal).key())

    report = FiveTermReport(
        schur_order=schur.order,
        schur_complement_order=schur_t.order,
        restriction_kernel_order=kernel.order,
        h1_dual_order=h1_dual.order,
        invariant_forms_order=len(forms),
        h2_dual_order=h2_dual.order,
        image_in_forms_order=len(images),
        splitting_holds=image_t == schur_t.order,
        left_exact_holds=h1_dual.order * len(images) == kernel.order,
        right_exact_holds=(
            images <= {form.key() for form in forms}
            and len(forms) % len(images) == 0
            and h2_dual.order % (len(forms) // len(images)) == 0
        ),
    )
    logger.info(f"five-term check on {group.name}: {'passed' if report.passed else 'FAILED'}")
    return report
