#!/usr/bin/env python3
"""Closed-form predictions for dihedral, ``pq`` and abelian groups, and Sylow injectivity of the Schur multiplier."""
# package imports
from brpiclab.backend.bimodule.enumerate import class_at
from brpiclab.backend.cohomology.cohomology import restrict, schur_multiplier
from brpiclab.backend.group.automorphism import is_isomorphic
from brpiclab.backend.group.builders import dihedral
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.group.subgroups import sylow_subgroup

# third party imports
from sympy import divisors, factorint, isprime, totient

# standard imports
import logging
from math import gcd, lcm
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


def _check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        msg = f"dihedral predictions need an odd n >= 3, got {n}"
        logger.error(msg)
        raise ValueError(msg)


def dihedral_l0_prediction(n: int) -> List[int]:
    """Divisors ``b`` of odd ``n`` with ``gcd(b, n/b) = 1``.

    ``L0(D_2n)`` is the set of ``L_(<r^b>, 1)`` for these ``b``; there are ``2^k`` of them with
    ``k`` the number of primes dividing ``n``.
    """
    _check_odd(n)
    return [int(b) for b in divisors(n) if gcd(b, n // b) == 1]


def dihedral_extension_data(n: int) -> dict:
    """Orders in ``1 -> (Z/n)^x / {+-1} -> BrPic(Vec_D2n) -> (Z/2)^k -> 1`` for odd ``n``.

    Whether the sequence splits is not decided, and reported as ``None``.
    """
    _check_odd(n)
    kernel = int(totient(n)) // 2
    quotient = 2 ** len(factorint(n))
    return {
        "n": n,
        "kernel_order": kernel,
        "quotient_order": quotient,
        "brpic_order": kernel * quotient,
        "split": None,
    }


def pq_brpic_prediction(p: int, q: int) -> int:
    """``2 (q - 1) / p`` for the nonabelian group of order ``p q``; ``|Out| = (q - 1)/p`` and ``|L| = |L0| = 2``."""
    if not (isprime(p) and isprime(q)) or (q - 1) % p:
        msg = f"pq({p},{q}) needs primes with q = 1 mod p"
        logger.error(msg)
        raise ValueError(msg)
    return 2 * (q - 1) // p


def abelian_schur_order(invariant_factors: Sequence[int]) -> int:
    """``prod_(i<j) gcd(d_i, d_j)``."""
    d = [int(x) for x in invariant_factors]
    result = 1
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            result *= gcd(d[i], d[j])
    return result


def _class_order(coordinates: Sequence[int], factors: Sequence[int]) -> int:
    return lcm(1, *(d // gcd(int(c), d) for c, d in zip(coordinates, factors)))


def sylow_injectivity(group: FiniteGroup, p: int) -> bool:
    """Whether restriction to a Sylow ``p``-subgroup is injective on the ``p``-part of the Schur multiplier.

    Parameters
    ----------
    group:
        the group ``G``
    p:
        a prime

    Returns
    -------
        ``True`` when no nontrivial class of ``p``-power order restricts to a trivial class
    """
    schur = schur_multiplier(group)
    sylow = sylow_subgroup(group, p)
    local = schur_multiplier(sylow.group, group.order)
    for coords in schur.all_coordinates():
        order = _class_order(coords, schur.invariant_factors)
        if order == 1 or set(factorint(order)) != {p}:
            continue
        if local.is_zero(restrict(class_at(schur, coords), sylow)):
            logger.debug(f"{group.name}: class {coords} of order {order} dies on the Sylow {p}-subgroup")
            return False
    return True


def pq_parameters(group: FiniteGroup) -> Optional[tuple]:
    """``(p, q)`` when ``group`` is nonabelian of order ``p q`` with ``q = 1 mod p``, else ``None``."""
    primes = factorint(group.order)
    if group.is_abelian or len(primes) != 2 or any(e != 1 for e in primes.values()):
        return None
    p, q = sorted(primes)
    return (p, q) if (q - 1) % p == 0 else None


def odd_dihedral_n(group: FiniteGroup) -> Optional[int]:
    """``n`` when ``group`` is isomorphic to ``D_2n`` with ``n`` odd and at least 3, else ``None``."""
    n = group.order // 2
    if group.order % 2 or n < 3 or n % 2 == 0:
        return None
    return n if is_isomorphic(group, dihedral(group.order)) is not None else None


def family_block(group: FiniteGroup) -> Optional[dict]:
    """Closed-form predictions for ``group`` when it belongs to a worked family, for the report.

    Odd dihedral groups get the orders of the extension and the divisors ``b`` of the predicted
    ``L0``; ``pq`` groups get the predicted orders of ``BrPic`` and ``Out``.
    """
    n = odd_dihedral_n(group)
    if n is not None:
        block = {"family": "odd dihedral"}
        block.update(dihedral_extension_data(n))
        block["l0_divisors"] = dihedral_l0_prediction(n)
        return block
    pq = pq_parameters(group)
    if pq is not None:
        p, q = pq
        return {"family": "pq", "p": p, "q": q, "brpic_order": pq_brpic_prediction(p, q), "out_order": (q - 1) // p}
    return None
