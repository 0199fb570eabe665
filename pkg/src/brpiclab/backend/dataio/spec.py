#!/usr/bin/env python3
"""Group specifications: parsing, canonical printing and construction of the group.

Grammar::

    spec    := factor ('x' factor)*
    factor  := 'S' n | 'A' n | 'D' order | 'Q8' | 'C' n | 'pq(' p ',' q ')'
             | 'perm:[' cycles (';' cycles)* ']' | 'table:' path

``D<order>`` takes the order of the dihedral group, so ``D8`` has 8 elements and an odd argument
is rejected. ``table:`` consumes the rest of the string and cannot be followed by ``x``.
"""
# package imports
from brpiclab.backend.dataio.validate import validate_group_table
from brpiclab.backend.errors import GroupSpecError, JSONValidationError
from brpiclab.backend.group.builders import alternating, cyclic, dihedral, permutation_group, pq_group, quaternion, symmetric
from brpiclab.backend.group.constructions import direct_product
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.util.caps import check_cap

# third party imports
from sympy.combinatorics import Permutation, PermutationGroup

# standard imports
from dataclasses import dataclass
import json
import logging
from math import factorial, prod
from pathlib import Path
from typing import List, Tuple, Union

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyNode:
    """``S``, ``A``, ``D``, ``C`` with their argument, or ``Q`` with 8."""

    family: str
    n: int

    def __str__(self) -> str:
        return f"{self.family}{self.n}"


@dataclass(frozen=True)
class PqNode:
    """Nonabelian group of order ``p q``."""

    p: int
    q: int

    def __str__(self) -> str:
        return f"pq({self.p},{self.q})"


@dataclass(frozen=True)
class PermNode:
    """Generators in cycle notation with 1-based points."""

    generators: Tuple[Tuple[Tuple[int, ...], ...], ...]

    def __str__(self) -> str:
        gens = ["".join("(" + ",".join(str(p) for p in cyc) + ")" for cyc in gen) for gen in self.generators]
        return "perm:[" + ";".join(gens) + "]"


@dataclass(frozen=True)
class TableNode:
    """Multiplication table read from a JSON file."""

    path: str

    def __str__(self) -> str:
        return f"table:{self.path}"


@dataclass(frozen=True)
class ProductNode:
    """Direct product of two or more factors."""

    factors: tuple

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)


SpecNode = Union[FamilyNode, PqNode, PermNode, TableNode, ProductNode]


@dataclass(frozen=True)
class GroupSpec:
    """A parsed specification; ``canonical()`` prints it back so that parsing is stable."""

    raw: str
    node: SpecNode

    def canonical(self) -> str:
        """Canonical spelling."""
        return str(self.node)

    @property
    def family(self) -> str:
        """Family letter, ``pq``, ``perm``, ``table`` or ``product``."""
        if isinstance(self.node, FamilyNode):
            return self.node.family
        return {PqNode: "pq", PermNode: "perm", TableNode: "table", ProductNode: "product"}[type(self.node)]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: int = None) -> GroupSpecError:
        position = self.pos if position is None else position
        msg = f"{message} at position {position} in {self.text!r}"
        logger.error(msg)
        return GroupSpecError(msg, position)

    def peek(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def expect(self, token: str) -> None:
        if not self.peek(token):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a number")
        return int(self.text[start : self.pos])

    def spec(self) -> SpecNode:
        factors = [self.factor()]
        while self.peek("x"):
            if isinstance(factors[-1], TableNode):
                raise self.error("table: must be the last factor")
            self.pos += 1
            factors.append(self.factor())
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return factors[0] if len(factors) == 1 else ProductNode(tuple(factors))

    def factor(self) -> SpecNode:
        start = self.pos
        if self.peek("table:"):
            self.pos += len("table:")
            path = self.text[self.pos :]
            if not path:
                raise self.error("missing table path")
            self.pos = len(self.text)
            return TableNode(path)
        if self.peek("perm:"):
            self.pos += len("perm:")
            return self.permutation()
        if self.peek("pq("):
            self.pos += len("pq(")
            p = self.integer()
            self.expect(",")
            q = self.integer()
            self.expect(")")
            return PqNode(p, q)
        if self.peek("Q8"):
            self.pos += 2
            return FamilyNode("Q", 8)
        if self.pos < len(self.text) and self.text[self.pos] in "SADC":
            family = self.text[self.pos]
            self.pos += 1
            n = self.integer()
            if n < 1:
                raise self.error(f"{family} needs a positive argument", start)
            if family == "D" and n % 2:
                raise self.error(f"D{n}: dihedral labels give the group order, which must be even", start)
            return FamilyNode(family, n)
        raise self.error("expected a group")

    def permutation(self) -> PermNode:
        self.expect("[")
        generators: List[tuple] = []
        while True:
            self.skip_spaces()
            cycles = []
            while self.peek("("):
                self.pos += 1
                points = [self.integer()]
                while self.peek(","):
                    self.pos += 1
                    points.append(self.integer())
                self.expect(")")
                cycles.append(tuple(points))
            if not cycles:
                raise self.error("expected a cycle")
            generators.append(tuple(cycles))
            self.skip_spaces()
            if self.peek(";"):
                self.pos += 1
                continue
            self.expect("]")
            return PermNode(tuple(generators))


def parse_spec(text: str) -> GroupSpec:
    """Parse a group specification.

    Parameters
    ----------
    text:
        e.g. ``"D8"``, ``"C2xC4"``, ``"pq(3,7)"``, ``"perm:[(1,2,3);(1,2)]"``

    Returns
    -------
        :class:`GroupSpec`

    Raises
    ------
    GroupSpecError
        with the offending position
    """
    text = text.strip()
    if not text:
        raise GroupSpecError("empty group specification", 0)
    return GroupSpec(text, _Parser(text).spec())


def load_group_table(path: Union[str, Path]) -> FiniteGroup:
    """Read and validate a JSON table file with ``order`` and row-major ``table``."""
    path = Path(path)
    try:
        with open(path, "r") as handle:
            document = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        msg = f"cannot read group table {path}: {e}"
        logger.error(msg)
        raise GroupSpecError(msg) from e
    try:
        validate_group_table(document)
    except JSONValidationError as e:
        raise GroupSpecError(f"invalid group table {path}: {e}") from e
    try:
        return FiniteGroup(document["table"], name=document.get("name", path.stem))
    except ValueError as e:
        raise GroupSpecError(f"table in {path} is not a group: {e}") from e


def expected_order(node: SpecNode) -> int:
    """Order of the group a node describes, without building it."""
    if isinstance(node, ProductNode):
        return prod(expected_order(f) for f in node.factors)
    if isinstance(node, PqNode):
        return node.p * node.q
    if isinstance(node, PermNode):
        degree = max(p for gen in node.generators for cyc in gen for p in cyc)
        perms = [Permutation([[p - 1 for p in cyc] for cyc in gen], size=degree) for gen in node.generators]
        return int(PermutationGroup(perms).order())
    if isinstance(node, TableNode):
        return 0
    return {"S": factorial(node.n), "A": max(1, factorial(node.n) // 2), "D": node.n, "Q": 8, "C": node.n}[node.family]


def _build(node: SpecNode) -> FiniteGroup:
    if isinstance(node, ProductNode):
        group = _build(node.factors[0])
        for factor in node.factors[1:]:
            group, _, _ = direct_product(group, _build(factor))
        group.name = str(node)
        return group
    if isinstance(node, PqNode):
        return pq_group(node.p, node.q)
    if isinstance(node, PermNode):
        return permutation_group([[list(c) for c in gen] for gen in node.generators], name=str(node))
    if isinstance(node, TableNode):
        return load_group_table(node.path)
    builders = {"S": symmetric, "A": alternating, "D": dihedral, "C": cyclic}
    if node.family == "Q":
        return quaternion()
    return builders[node.family](node.n)


def build_group(spec: Union[str, GroupSpec]) -> FiniteGroup:
    """Parse if needed, check the analysis cap and build the group.

    Raises
    ------
    GroupSpecError
        on syntax errors, unknown families or invalid tables
    OrderCapError
        when the group exceeds ``analysis_cap``
    """
    spec = parse_spec(spec) if isinstance(spec, str) else spec
    order = expected_order(spec.node)
    if order:
        check_cap(order, "analysis_cap", what=spec.canonical())
    group = _build(spec.node)
    check_cap(group.order, "analysis_cap", what=spec.canonical())
    logger.info(f"built {spec.canonical()} of order {group.order}")
    return group
