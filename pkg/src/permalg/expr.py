"""Expression trees over generators and their expansion into the word basis.

Trees have five node kinds: generator leaves, template slots, associative
products, commutators ``[a,b] = ab - ba`` and anticommutators
``{a,b} = ab + ba``.  Sums and scalar multiples are not tree nodes; they
live in :class:`ExprSum`, a formal rational combination of trees, and all
product helpers expand bilinearly over it.  Identity checking substitutes
generators for slots and expands: because the tree operations are defined
in every perm algebra, an identity holds in all of them exactly when the
distinct-generator substitution expands to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .perm import PermPolynomial, format_linear

__all__ = [
    "Anti",
    "Comm",
    "ExprSum",
    "IdentityTemplate",
    "IdentityVerdict",
    "Leaf",
    "Node",
    "Prod",
    "Slot",
    "UnboundSlotError",
    "associator",
    "check_identity",
    "expand_node",
    "left_normed",
    "node_slots",
    "node_str",
    "set_partition_patterns",
]


@dataclass(frozen=True)
class Leaf:
    index: int


@dataclass(frozen=True)
class Slot:
    index: int


@dataclass(frozen=True)
class Prod:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Comm:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Anti:
    left: "Node"
    right: "Node"


Node = Union[Leaf, Slot, Prod, Comm, Anti]

_BINARY = (Prod, Comm, Anti)


class UnboundSlotError(ValueError):
    pass


def expand_node(e: Node) -> PermPolynomial:
    """Multiply the tree out into the canonical word basis."""
    if isinstance(e, Leaf):
        return PermPolynomial.generator(e.index)
    if isinstance(e, Slot):
        raise UnboundSlotError(f"unbound template slot {_slot_name(e.index)}")
    l = expand_node(e.left)
    r = expand_node(e.right)
    if isinstance(e, Prod):
        return l * r
    if isinstance(e, Comm):
        return l * r - r * l
    return l * r + r * l


def node_slots(e: Node) -> frozenset[int]:
    if isinstance(e, Leaf):
        return frozenset()
    if isinstance(e, Slot):
        return frozenset((e.index,))
    return node_slots(e.left) | node_slots(e.right)


def substitute_node(e: Node, mapping: Mapping[int, Node]) -> Node:
    if isinstance(e, Leaf):
        return e
    if isinstance(e, Slot):
        try:
            return mapping[e.index]
        except KeyError:
            raise UnboundSlotError(f"no substitution for slot {_slot_name(e.index)}") from None
    return type(e)(substitute_node(e.left, mapping), substitute_node(e.right, mapping))


def node_size(e: Node) -> int:
    if isinstance(e, (Leaf, Slot)):
        return 1
    return node_size(e.left) + node_size(e.right)


def node_key(e: Node):
    """Deterministic structural sort key (size first, then shape)."""
    if isinstance(e, Leaf):
        return (1, 0, e.index)
    if isinstance(e, Slot):
        return (1, 1, e.index)
    tag = {Prod: 2, Comm: 3, Anti: 4}[type(e)]
    return (node_size(e), tag, node_key(e.left), node_key(e.right))


def _slot_name(i: int) -> str:
    return chr(ord("a") + i - 1) if 1 <= i <= 26 else f"s{i}"


def node_str(e: Node, name: Callable[[int], str] | None = None) -> str:
    name = name or (lambda i: f"x{i}")
    if isinstance(e, Leaf):
        return name(e.index)
    if isinstance(e, Slot):
        return _slot_name(e.index)
    if isinstance(e, Comm):
        return f"[{node_str(e.left, name)},{node_str(e.right, name)}]"
    if isinstance(e, Anti):
        return f"{{{node_str(e.left, name)},{node_str(e.right, name)}}}"
    # associative product: keep left-normed chains flat
    left = node_str(e.left, name)
    right = node_str(e.right, name)
    if isinstance(e.right, Prod):
        right = f"({right})"
    return f"{left}*{right}"


class ExprSum:
    """Formal rational combination of expression trees."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Fraction | int, Node]] = ()):
        data: dict[Node, Fraction] = {}
        for coeff, node in terms:
            c = data.get(node, _ZERO) + Fraction(coeff)
            if c:
                data[node] = c
            elif node in data:
                del data[node]
        self._terms = tuple(sorted(data.items(), key=lambda kv: node_key(kv[0])))

    @classmethod
    def of(cls, node: Node) -> "ExprSum":
        return cls(((Fraction(1), node),))

    @classmethod
    def zero(cls) -> "ExprSum":
        return cls()

    @property
    def terms(self) -> tuple[tuple[Node, Fraction], ...]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExprSum):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: "ExprSum") -> "ExprSum":
        if not isinstance(other, ExprSum):
            return NotImplemented
        return ExprSum(
            [(c, n) for n, c in self._terms] + [(c, n) for n, c in other._terms]
        )

    def __sub__(self, other: "ExprSum") -> "ExprSum":
        if not isinstance(other, ExprSum):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "ExprSum":
        return ExprSum((-c, n) for n, c in self._terms)

    def __rmul__(self, coeff) -> "ExprSum":
        if isinstance(coeff, (int, Fraction)):
            return ExprSum((Fraction(coeff) * c, n) for n, c in self._terms)
        return NotImplemented

    def _combine(self, other: "ExprSum", ctor) -> "ExprSum":
        return ExprSum(
            (ca * cb, ctor(na, nb))
            for na, ca in self._terms
            for nb, cb in other._terms
        )

    def prod(self, other: "ExprSum") -> "ExprSum":
        return self._combine(wrap(other), Prod)

    def comm(self, other: "ExprSum") -> "ExprSum":
        return self._combine(wrap(other), Comm)

    def anti(self, other: "ExprSum") -> "ExprSum":
        return self._combine(wrap(other), Anti)

    def substitute(self, mapping: Mapping[int, Node]) -> "ExprSum":
        return ExprSum((c, substitute_node(n, mapping)) for n, c in self._terms)

    def slots(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for n, _ in self._terms:
            out |= node_slots(n)
        return out

    def expand(self) -> PermPolynomial:
        out = PermPolynomial.zero()
        for node, coeff in self._terms:
            out = out + expand_node(node).scale(coeff)
        return out

    def __str__(self) -> str:
        return format_linear((c, node_str(n)) for n, c in self._terms)

    def __repr__(self) -> str:
        return f"ExprSum({self})"


_ZERO = Fraction(0)


def wrap(x: "ExprSum | Node") -> ExprSum:
    return x if isinstance(x, ExprSum) else ExprSum.of(x)


def associator(a: "ExprSum | Node", b: "ExprSum | Node", c: "ExprSum | Node") -> ExprSum:
    """``<a,b,c> = {{a,b},c} - {a,{b,c}}``, the anticommutator associator."""
    a, b, c = wrap(a), wrap(b), wrap(c)
    return a.anti(b).anti(c) - a.anti(b.anti(c))


def left_normed(kind: type, leaves: Sequence[Node | int]) -> Node:
    """Fold letters into a left-normed chain of the given binary node kind."""
    nodes = [Leaf(x) if isinstance(x, int) else x for x in leaves]
    if not nodes:
        raise ValueError("need at least one letter")
    acc = nodes[0]
    for n in nodes[1:]:
        acc = kind(acc, n)
    return acc


class IdentityTemplate:
    """A candidate law ``lhs = rhs`` over slot variables."""

    def __init__(self, lhs: "ExprSum | Node", rhs: "ExprSum | Node", name: str = ""):
        self.lhs = wrap(lhs)
        self.rhs = wrap(rhs)
        self.name = name
        used = self.lhs.slots() | self.rhs.slots()
        if not used:
            raise ValueError("template has no slots")
        self.arity = max(used)
        if used != frozenset(range(1, self.arity + 1)):
            raise ValueError("slots must be contiguous starting at 1")
        if not self.rhs.slots() <= self.lhs.slots():
            raise ValueError("rhs uses slots absent from lhs")

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass
class IdentityVerdict:
    holds: bool
    mode: str
    counterexample: tuple[int, ...] | None = None
    residual: PermPolynomial | None = None

    def __bool__(self) -> bool:
        return self.holds


def set_partition_patterns(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted-growth strings of length ``n``: one generator pattern per
    way of identifying slot variables."""

    def rec(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, top + 2):
            yield from rec(prefix + [v], max(top, v))

    yield from rec([1], 1) if n else iter(())


def check_identity(template: IdentityTemplate, mode: str = "multilinear") -> IdentityVerdict:
    """Decide whether the template is a law of perm algebras.

    ``multilinear`` substitutes one tuple of distinct generators, which is
    already universal for tree templates.  ``polarized`` additionally runs
    every identification pattern of the slots (sound in characteristic 0),
    reporting the first failing substitution.
    """
    if template.arity > 6:
        raise ValueError("templates with more than 6 slots are not supported")
    if mode not in ("multilinear", "polarized"):
        raise ValueError(f"unknown mode {mode!r}")
    diff = template.lhs - template.rhs
    patterns: list[tuple[int, ...]] = [tuple(range(1, template.arity + 1))]
    if mode == "polarized":
        patterns += [p for p in set_partition_patterns(template.arity) if p != patterns[0]]
    for pattern in patterns:
        mapping = {slot: Leaf(gen) for slot, gen in enumerate(pattern, start=1)}
        residual = diff.substitute(mapping).expand()
        if residual:
            return IdentityVerdict(False, mode, pattern, residual)
    return IdentityVerdict(True, mode)
