"""Text grammar for expressions and identity templates.

Grammar (loosest to tightest): leading unary minus, then ``+``/``-``, then
juxtaposition or ``*``.  Atoms are generators (``x1``, ``e2``, or names
registered for the session), rational scalars ``p`` or ``p/q``, bracket
forms ``[a,b]`` (commutator), ``{a,b}`` (anticommutator), ``<a,b,c>``
(associator), parentheses, and, in envelope expressions, dotted letters
spelled ``d(name)``.  Template parsing binds every name to a slot in order
of first appearance and accepts ``lhs = rhs``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .expr import (
    ExprSum,
    IdentityTemplate,
    Leaf,
    Prod,
    Slot,
    associator,
)

__all__ = [
    "ExprSyntaxError",
    "GeneratorTable",
    "parse_envelope_expr",
    "parse_expr",
    "parse_template",
    "parse_word",
]


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GeneratorTable:
    """Session name table for generators.

    With ``auto_indexed`` (the default free-algebra mode) names of the form
    ``x<digits>`` or ``e<digits>`` resolve to that index; anything else is
    an unknown generator.  An explicit table maps fixed labels to indices.
    """

    _INDEXED = re.compile(r"^[xe]([1-9][0-9]*)$")

    def __init__(self, names: dict[str, int] | None = None, auto_indexed: bool = True):
        self.names = dict(names or {})
        self.auto_indexed = auto_indexed

    def resolve(self, name: str) -> int | None:
        if name in self.names:
            return self.names[name]
        if self.auto_indexed:
            m = self._INDEXED.match(name)
            if m:
                return int(m.group(1))
        return None


_TOKEN = re.compile(
    r"\s*(?:(?P<number>[0-9]+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[-+*/(),=\[\]{}<>]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprSyntaxError(f"unexpected character {stripped[0]!r}", pos)
        if m.lastgroup:
            tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    return tokens


_ATOM_START = {"number", "name"}
_ATOM_SYMS = {"(", "[", "{", "<"}


class _Parser:
    def __init__(
        self,
        text: str,
        table: GeneratorTable,
        slot_mode: bool = False,
        envelope: bool = False,
        slots: dict[str, int] | None = None,
    ):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.table = table
        self.slot_mode = slot_mode
        self.envelope = envelope
        self.slots = slots if slots is not None else {}

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, sym: str):
        kind, text, at = self.next()
        if kind != "sym" or text != sym:
            raise ExprSyntaxError(f"expected {sym!r}", at)

    def parse(self) -> ExprSum:
        expr = self.expression()
        kind, text, at = self.peek()
        if kind is not None:
            raise ExprSyntaxError(f"unexpected {text!r}", at)
        return expr

    def expression(self) -> ExprSum:
        kind, text, _ = self.peek()
        if kind == "sym" and text == "-":
            self.next()
            return -self.expression()
        return self.sum()

    def sum(self) -> ExprSum:
        acc = self.product()
        while True:
            kind, text, _ = self.peek()
            if kind == "sym" and text in "+-":
                self.next()
                term = self.product()
                acc = acc + term if text == "+" else acc - term
            else:
                return acc

    def product(self) -> ExprSum:
        coeff = Fraction(1)
        factors: list[ExprSum] = []
        first = True
        while True:
            kind, text, at = self.peek()
            if kind == "number":
                coeff *= self.rational()
            elif kind == "name" or (kind == "sym" and text in _ATOM_SYMS):
                factors.append(self.atom())
            elif kind == "sym" and text == "*":
                if first:
                    raise ExprSyntaxError("unexpected '*'", at)
                self.next()
                nkind, ntext, nat = self.peek()
                if not (nkind in _ATOM_START or (nkind == "sym" and ntext in _ATOM_SYMS)):
                    raise ExprSyntaxError("expected a factor after '*'", nat)
                continue
            else:
                break
            first = False
        if first:
            kind, text, at = self.peek()
            raise ExprSyntaxError("expected an expression", at)
        if not factors:
            if coeff == 0:
                return ExprSum.zero()
            _, _, at = self.peek()
            raise ExprSyntaxError("scalar without a monomial", at)
        acc = factors[0]
        for f in factors[1:]:
            acc = acc.prod(f)
        return coeff * acc

    def rational(self) -> Fraction:
        kind, text, at = self.next()
        num = int(text)
        kind, nxt, _ = self.peek()
        if kind == "sym" and nxt == "/":
            self.next()
            dkind, dtext, dat = self.next()
            if dkind != "number":
                raise ExprSyntaxError("expected a denominator", dat)
            den = int(dtext)
            if den == 0:
                raise ExprSyntaxError("zero denominator", dat)
            return Fraction(num, den)
        return Fraction(num)

    def atom(self) -> ExprSum:
        kind, text, at = self.next()
        if kind == "name":
            if self.envelope and text == "d":
                nxt_kind, nxt_text, _ = self.peek()
                if nxt_kind == "sym" and nxt_text == "(":
                    self.next()
                    name_kind, name_text, name_at = self.next()
                    if name_kind != "name":
                        raise ExprSyntaxError("expected a letter inside d(...)", name_at)
                    idx = self.table.resolve(name_text)
                    if idx is None:
                        raise ExprSyntaxError(f"unknown generator {name_text!r}", name_at)
                    self.expect(")")
                    return ExprSum.of(Leaf(idx + _DOT_OFFSET))
            if self.slot_mode:
                if text not in self.slots:
                    self.slots[text] = len(self.slots) + 1
                return ExprSum.of(Slot(self.slots[text]))
            idx = self.table.resolve(text)
            if idx is None:
                raise ExprSyntaxError(f"unknown generator {text!r}", at)
            return ExprSum.of(Leaf(idx))
        if kind == "sym" and text == "(":
            inner = self.expression()
            self.expect(")")
            return inner
        if kind == "sym" and text == "[":
            if self.envelope:
                raise ExprSyntaxError("brackets are not part of envelope expressions", at)
            left = self.expression()
            self.expect(",")
            right = self.expression()
            self.expect("]")
            return left.comm(right)
        if kind == "sym" and text == "{":
            if self.envelope:
                raise ExprSyntaxError("brackets are not part of envelope expressions", at)
            left = self.expression()
            self.expect(",")
            right = self.expression()
            self.expect("}")
            return left.anti(right)
        if kind == "sym" and text == "<":
            if self.envelope:
                raise ExprSyntaxError("brackets are not part of envelope expressions", at)
            a = self.expression()
            self.expect(",")
            b = self.expression()
            self.expect(",")
            c = self.expression()
            self.expect(">")
            return associator(a, b, c)
        raise ExprSyntaxError(f"unexpected {text!r}", at)


_DOT_OFFSET = 1_000_000  # leaf indices above this encode dotted envelope letters


def parse_expr(text: str, table: GeneratorTable | None = None) -> ExprSum:
    """Parse a free-algebra expression into a formal combination of trees."""
    return _Parser(text, table or GeneratorTable()).parse()


def parse_template(text: str) -> IdentityTemplate:
    """Parse ``lhs = rhs`` with every name bound to a slot; ``rhs`` may be 0."""
    if text.count("=") != 1:
        raise ExprSyntaxError("template must contain exactly one '='", text.find("=") if "=" in text else len(text))
    left_text, right_text = text.split("=")
    slots: dict[str, int] = {}
    table = GeneratorTable(auto_indexed=False)
    lhs = _Parser(left_text, table, slot_mode=True, slots=slots).parse()
    rhs = _Parser(right_text, table, slot_mode=True, slots=slots).parse()
    return IdentityTemplate(lhs, rhs, name=text.strip())


def parse_word(text: str, table: GeneratorTable | None = None) -> tuple[int, ...]:
    """Parse a plain left-normed product word and return its letters."""
    expr = parse_expr(text, table)
    if len(expr.terms) != 1:
        raise ExprSyntaxError("expected a single product word", 0)
    node, coeff = expr.terms[0]
    if coeff != 1:
        raise ExprSyntaxError("expected a word without a coefficient", 0)
    letters: list[int] = []

    def flatten(n) -> None:
        if isinstance(n, Leaf):
            letters.append(n.index)
            return
        if isinstance(n, Prod):
            flatten(n.left)
            if isinstance(n.right, Prod):
                raise ExprSyntaxError("word must be left-normed", 0)
            flatten(n.right)
            return
        raise ExprSyntaxError("expected a plain product of generators", 0)

    flatten(node)
    return tuple(letters)


def parse_envelope_expr(
    text: str, labels: Sequence[str]
) -> list[tuple[Fraction, int, tuple[int, ...]]]:
    """Parse an envelope expression over the given letters.

    Returns (coefficient, dotted letter index, plain letter indices) triples
    in original 1-based indices; every product must carry exactly one dot.
    """
    table = GeneratorTable({lbl: i for i, lbl in enumerate(labels, start=1)}, auto_indexed=False)
    expr = _Parser(text, table, envelope=True).parse()
    out: list[tuple[Fraction, int, tuple[int, ...]]] = []
    for node, coeff in expr.terms:
        letters: list[int] = []

        def flatten(n) -> None:
            if isinstance(n, Leaf):
                letters.append(n.index)
                return
            if isinstance(n, Prod):
                flatten(n.left)
                flatten(n.right)
                return
            raise ExprSyntaxError("envelope expressions use products only", 0)

        flatten(node)
        dotted = [i - _DOT_OFFSET for i in letters if i > _DOT_OFFSET]
        plain = [i for i in letters if i <= _DOT_OFFSET]
        if len(dotted) != 1:
            raise ExprSyntaxError(
                f"each envelope word needs exactly one dotted letter, found {len(dotted)}", 0
            )
        out.append((coeff, dotted[0], tuple(plain)))
    return out
