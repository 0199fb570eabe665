#!/usr/bin/env python3
"""Property suites run by ``brpic-lab check``: cohomology, Goursat, bicharacter, action and order cross-checks."""
# package imports
from brpiclab.backend.analysis.a0 import a0_group, action_table, act
from brpiclab.backend.analysis.families import (
    abelian_schur_order,
    dihedral_extension_data,
    dihedral_l0_prediction,
    odd_dihedral_n,
    pq_brpic_prediction,
    pq_parameters,
    sylow_injectivity,
)
from brpiclab.backend.analysis.l0 import PermutationRep, a0_permutation, brpic_order, l0_set
from brpiclab.backend.analysis.oracle import orthogonal_oracle
from brpiclab.backend.bimodule.datum import canonical_image, is_involution
from brpiclab.backend.bimodule.enumerate import enumerate_invertible
from brpiclab.backend.cohomology.bicharacter import (
    alt_bicharacter,
    basis_matrix,
    class_from_bicharacter,
    form_from_matrix,
)
from brpiclab.backend.cohomology.cohomology import h2, is_cocycle, schur_multiplier
from brpiclab.backend.cohomology.five_term import five_term_check
from brpiclab.backend.cohomology.module import GModule
from brpiclab.backend.group.abelian import AbelianStructure
from brpiclab.backend.group.automorphism import automorphism_group
from brpiclab.backend.group.builders import abelian, cyclic
from brpiclab.backend.group.constructions import direct_product, opposite
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.group.goursat import goursat_full_subgroups
from brpiclab.backend.group.subgroups import abelianization_order, all_subgroups, complements, normal_abelian_subgroups
from brpiclab.backend.lagrangian.label import in_l0_by_label
from brpiclab.backend.lagrangian.lagrangian import canonical_lagrangian, enumerate_lagrangians
from brpiclab.backend.util.caps import current_caps

# third party imports
import numpy as np
import param
from sympy import factorint, nextprime

# standard imports
from itertools import product as cartesian
import logging
from typing import Callable, List

logger = logging.getLogger(__name__)

GOURSAT_BRUTE_FORCE_ORDER = 64


def check_result(name: str, passed: bool, details: str = "") -> dict:
    """One entry of a ``checks`` array."""
    if not passed:
        logger.warning(f"check {name} failed: {details}")
    return {"name": name, "passed": bool(passed), "details": details}


# cohomology


def check_cocycles(group: FiniteGroup) -> dict:
    """Full cocycle-identity scan of every generator of ``H^2(G, Z/|G|)`` and of the Schur multiplier."""
    module = GModule.trivial(group, group.order)
    generators = list(h2(module).generators) + list(schur_multiplier(group).generators)
    bad = [i for i, gen in enumerate(generators) if not is_cocycle(gen)]
    return check_result("cocycle_identity", not bad, f"{len(generators)} generators scanned, failures at {bad}")


def check_h2_order(group: FiniteGroup) -> dict:
    """``|H^2(G, Z/|G|)| = |H^2(G, k^x)| * |G^ab|``."""
    full = h2(GModule.trivial(group, group.order)).order
    schur = schur_multiplier(group).order
    ab = abelianization_order(group)
    details = f"|H^2(G, Z/{group.order})| = {full}, |M| * |G^ab| = {schur} * {ab}"
    return check_result("h2_order", full == schur * ab, details)


def check_coprime_vanishing(group: FiniteGroup) -> dict:
    """``H^2(G, Z/m) = 0`` for the smallest prime ``m`` not dividing ``|G|``."""
    m = 2
    while group.order % m == 0:
        m = nextprime(m)
    order = h2(GModule.trivial(group, m)).order
    return check_result("coprime_vanishing", order == 1, f"|H^2(G, Z/{m})| = {order}")


def check_sylow_injectivity(group: FiniteGroup) -> dict:
    """Restriction to every Sylow subgroup is injective on the matching primary part."""
    primes = sorted(factorint(group.order)) if group.order > 1 else []
    failing = [p for p in primes if not sylow_injectivity(group, p)]
    return check_result("sylow_injectivity", not failing, f"primes {primes}, failing {failing}")


def check_five_term(group: FiniteGroup) -> dict:
    """Exactness orders for the first splitting ``G = N x| T`` with ``N`` normal abelian and proper."""
    for normal in sorted(normal_abelian_subgroups(group), key=lambda s: -s.order):
        if normal.order in (1, group.order):
            continue
        found = complements(group, normal)
        if found:
            report = five_term_check(group, normal, found[0])
            return check_result("five_term", report.passed, f"N of order {normal.order}: {report.as_dict()}")
    return check_result("five_term", True, "skipped: no proper split normal abelian subgroup")


# subgroups of products


def goursat_matches_brute_force(left: FiniteGroup, right: FiniteGroup) -> bool:
    """Whether Goursat triples realize exactly the subgroups of ``left x right`` with full projections."""
    product, _, _ = direct_product(left, right)
    n, m = left.order, right.order
    realized = {tuple(int(c) for c in t.realized_codes()) for t in goursat_full_subgroups(left, right)}
    brute = {
        sub.elements
        for sub in all_subgroups(product)
        if len({c // m for c in sub.elements}) == n and len({c % m for c in sub.elements}) == m
    }
    logger.debug(f"{left.name} x {right.name}: {len(realized)} triples, {len(brute)} full subgroups")
    return realized == brute


def check_goursat(group: FiniteGroup) -> dict:
    """Goursat against brute force on ``G x G^op`` and ``G x C2`` when small enough."""
    pairs = []
    if group.order ** 2 <= GOURSAT_BRUTE_FORCE_ORDER:
        pairs.append((group, opposite(group)))
    if 2 * group.order <= GOURSAT_BRUTE_FORCE_ORDER:
        pairs.append((group, cyclic(2)))
    if not pairs:
        return check_result("goursat_brute_force", True, "skipped: products too large for brute force")
    failing = [f"{a.name}x{b.name}" for a, b in pairs if not goursat_matches_brute_force(a, b)]
    tried = [f"{a.name}x{b.name}" for a, b in pairs]
    return check_result("goursat_brute_force", not failing, f"tried {tried}, failing {failing}")


# bicharacters


def alternating_matrices(structure: AbelianStructure, modulus: int):
    """Every alternating basis matrix ``B`` over ``Z/d_1 + ... + Z/d_r`` with values in ``Z/modulus``."""
    d = structure.invariant_factors
    slots = [(i, j) for i in range(len(d)) for j in range(i + 1, len(d))]
    steps = [np.gcd(d[i], d[j]) for i, j in slots]
    for choice in cartesian(*(range(int(s)) for s in steps)):
        matrix = np.zeros((len(d), len(d)), dtype=np.int64)
        for (i, j), t, s in zip(slots, choice, steps):
            matrix[i, j] = t * (modulus // s)
            matrix[j, i] = -matrix[i, j] % modulus
        yield matrix


def bicharacter_round_trip(group: FiniteGroup) -> bool:
    """``matrix -> form -> cocycle -> Alt -> matrix`` is the identity for every alternating form on abelian ``G``."""
    structure = AbelianStructure(group)
    modulus = structure.exponent
    for matrix in alternating_matrices(structure, modulus):
        form = form_from_matrix(structure, modulus, matrix)
        if not (form.is_alternating() and form.is_bilinear()):
            return False
        cocycle = class_from_bicharacter(form, structure)
        alt = alt_bicharacter(cocycle, cocycle.group.whole())
        if not np.array_equal(alt.values, form.values):
            return False
        if not np.array_equal(basis_matrix(form, structure) % modulus, matrix % modulus):
            return False
    return True


def check_bicharacters(group: FiniteGroup) -> dict:
    """Round trips on ``G`` when abelian, and always on ``C2xC2`` and ``C2xC4``."""
    subjects = [abelian((2, 2)), abelian((2, 4))]
    if group.is_abelian:
        subjects.insert(0, group)
    failing = [g.name for g in subjects if not bicharacter_round_trip(g)]
    return check_result("bicharacter_round_trip", not failing, f"tried {[g.name for g in subjects]}, failing {failing}")


# the action of A0


def check_action(group: FiniteGroup) -> List[dict]:
    """Action axioms on all Lagrangians, the fixed canonical point and label invariance."""
    a0 = a0_group(group)
    lagrangians = enumerate_lagrangians(group)
    rep = PermutationRep(a0, lagrangians, action_table(a0, lagrangians))
    start = lagrangians.index(canonical_lagrangian(group))
    moved = int(np.count_nonzero(rep.images[:, start] != start))
    results = [
        check_result("action_axioms", rep.is_homomorphism(), f"{a0.order} elements on {len(lagrangians)} Lagrangians"),
        check_result("canonical_fixed", moved == 0, f"{moved} elements move L(1,1)"),
    ]
    changed = []
    for element in a0.elements:
        for i, lag in enumerate(lagrangians):
            before, after = in_l0_by_label(lag), in_l0_by_label(act(element, lag))
            if before is not None and after is not None and before != after:
                changed.append(i + 1)
    results.append(check_result("label_invariance", not changed, f"labels changed at {sorted(set(changed))}"))
    return results


def check_order_formula(group: FiniteGroup, orbits: list) -> dict:
    """Bimodule orbit count against ``|Schur| * |Out| * |L0|``."""
    a0 = a0_group(group)
    l0 = l0_set(group, orbits)
    expected = a0.schur.order * a0.automorphisms.out_order * len(l0)
    return check_result(
        "order_formula",
        expected == len(orbits),
        f"|Schur| * |Out| * |L0| = {a0.schur.order} * {a0.automorphisms.out_order} * {len(l0)}, orbits = {len(orbits)}",
    )


# closed forms


def check_families(group: FiniteGroup, orbits: list) -> List[dict]:
    """Compare with the closed forms for odd dihedral, ``pq`` and small abelian groups."""
    results = []
    order = brpic_order(group, orbits)
    l0 = l0_set(group, orbits)
    n = odd_dihedral_n(group)
    if n is not None:
        data = dihedral_extension_data(n)
        supports = sorted(lag.normal.order for lag in l0)
        predicted = sorted(n // b for b in dihedral_l0_prediction(n))
        trivial = all(lag.form.is_zero for lag in l0)
        action = a0_permutation(group, l0)
        details = f"supports {supports}, predicted {predicted}"
        results.append(check_result("dihedral_l0", supports == predicted and trivial, details))
        results.append(check_result(
            "dihedral_order",
            order == data["brpic_order"] and order // action.kernel.order == data["quotient_order"],
            f"order {order}, image {order // action.kernel.order}, predicted {data}",
        ))
    pq = pq_parameters(group)
    if pq is not None:
        p, q = pq
        lagrangians = enumerate_lagrangians(group)
        out = automorphism_group(group).out_order
        home = canonical_lagrangian(group)
        moving = [o for o in orbits if canonical_image(o.datum) != home]
        non_involutions = sum(1 for o in moving if not is_involution(o.datum)[0])
        results.append(check_result(
            "pq_prediction",
            order == pq_brpic_prediction(p, q) and out == (q - 1) // p and len(lagrangians) == len(l0) == 2,
            f"order {order}, |Out| {out}, |L| {len(lagrangians)}, |L0| {len(l0)}",
        ))
        details = f"{non_involutions} of {len(moving)} moving orbits"
        results.append(check_result("pq_involutions", non_involutions == 0, details))
    if group.is_abelian:
        factors = AbelianStructure(group).invariant_factors
        schur = schur_multiplier(group).order
        details = f"factors {factors}, |M| = {schur}"
        results.append(check_result("abelian_schur", schur == abelian_schur_order(factors), details))
        if group.order <= current_caps().oracle_cap:
            oracle = orthogonal_oracle(group)
            results.append(check_result("orthogonal_oracle", oracle == order, f"oracle {oracle}, order {order}"))
    return results


class run_checks(param.ParameterizedFunction):
    """
    Run every property suite on one group.

    Parameters
    ----------
    group: FiniteGroup
        The group to check.
    max_workers: int = 1
        Number of cores for bimodule enumeration; 0 picks a value for the host.

    Returns
    -------
        list of ``{"name", "passed", "details"}`` dictionaries
    """

    group = param.ClassSelector(class_=FiniteGroup, doc="The group to check.")
    max_workers = param.Integer(default=1, bounds=(0, None), doc="Number of cores to use for parallel processing.")

    def __call__(self, **params):
        """See class level documentation for help."""
        logger.info("Executing property checks")
        _ = self.instance(**params)
        params = param.ParamOverrides(self, params)
        val = self._run(params.group, params.max_workers)
        logger.info("FINISHED Executing property checks")
        return val

    def _run(self, group: FiniteGroup, max_workers: int) -> List[dict]:
        suites: List[Callable[[FiniteGroup], dict]] = [
            check_cocycles,
            check_h2_order,
            check_coprime_vanishing,
            check_sylow_injectivity,
            check_five_term,
            check_goursat,
            check_bicharacters,
        ]
        results = [suite(group) for suite in suites]
        results.extend(check_action(group))
        orbits = enumerate_invertible(group=group, max_workers=max_workers)
        results.append(check_order_formula(group, orbits))
        results.extend(check_families(group, orbits))
        failed = [r["name"] for r in results if not r["passed"]]
        logger.info(f"{group.name}: {len(results) - len(failed)} of {len(results)} checks passed")
        return results
