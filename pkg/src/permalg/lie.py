"""Commutator-side analysis: the Lie-element criterion and its oracle.

The commutator subalgebra of the free perm algebra generated by the
letters is a free metabelian Lie algebra.  A polynomial is a commutator
expression in the letters precisely when the composite of ``head`` (keep
words whose first letter exceeds the second) and ``dynkin`` (left-normed
bracketing) fixes it; ``lie_span_oracle`` rebuilds the same subspace by
brute-force bracket closure, independently of that criterion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .expr import Comm, ExprSum, Leaf, left_normed, node_str
from .linalg import Subspace
from .perm import PermMonomial, PermPolynomial, enumerate_basis

__all__ = [
    "MLMonomial",
    "NotLieElement",
    "dynkin",
    "head",
    "is_lie",
    "lie_express",
    "lie_span_oracle",
    "ml_basis",
]


def head(f: PermPolynomial) -> PermPolynomial:
    """Keep degree-1 terms and words whose head exceeds the first tail letter."""
    kept = []
    for m, c in f.terms():
        if not m.tail or m.head > m.tail[0]:
            kept.append((m, c))
    return PermPolynomial(kept)


def dynkin(f: PermPolynomial) -> PermPolynomial:
    """Left-normed bracketing of each word, expanded back into the word basis.

    A word ``h t1 t2 ... tm`` maps to ``[[..[x_h, x_t1], ..], x_tm]``; in a
    perm algebra a product annihilates commutators on its right, so the
    bracket collapses to ``[x_h, x_t1] * x_t2 ... x_tm``, i.e. exactly two
    words.  Length-1 words are fixed.
    """
    out: list[tuple[PermMonomial, Fraction]] = []
    for m, c in f.terms():
        if not m.tail:
            out.append((m, c))
            continue
        swapped = PermMonomial(m.tail[0], tuple(sorted((m.head,) + m.tail[1:])))
        out.append((m, c))
        out.append((swapped, -c))
    return PermPolynomial(out)


def is_lie(f: PermPolynomial) -> bool:
    """Exact commutator-expressibility test: ``dynkin(head(f)) == f``."""
    return dynkin(head(f)) == f


class NotLieElement(ValueError):
    """Raised with the defect ``f - dynkin(head(f))`` when ``f`` is not Lie."""

    def __init__(self, defect: PermPolynomial):
        super().__init__(f"not a Lie element; defect {defect}")
        self.defect = defect


def lie_express(f: PermPolynomial) -> ExprSum:
    """Write a Lie element as a combination of left-normed commutator words."""
    defect = f - dynkin(head(f))
    if defect:
        raise NotLieElement(defect)
    terms = []
    for m, c in head(f).terms():
        if not m.tail:
            terms.append((c, Leaf(m.head)))
        else:
            terms.append((c, left_normed(Comm, m.word())))
    return ExprSum(terms)


class MLMonomial(NamedTuple):
    """Free-basis bracket word ``[[..[[x_first, x_second], x_r1], ..], x_rm]``.

    Constraints: ``first > second`` and ``second <= r1 <= ... <= rm``, so the
    second letter is the minimum of the whole word.
    """

    first: int
    second: int
    rest: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return 2 + len(self.rest)

    def letters(self) -> tuple[int, ...]:
        return (self.first, self.second, *self.rest)

    def expr(self):
        return left_normed(Comm, self.letters())

    def expand(self) -> PermPolynomial:
        # collapses to [x_first, x_second] * rest (see dynkin)
        bracket = PermPolynomial.from_word((self.first, self.second)) - PermPolynomial.from_word(
            (self.second, self.first)
        )
        out = bracket
        for i in self.rest:
            out = out * PermPolynomial.generator(i)
        return out

    def __str__(self) -> str:
        return node_str(self.expr())


def _nondecreasing(low: int, k: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(low, k + 1):
        for rest in _nondecreasing(first, k, length - 1):
            yield (first, *rest)


def ml_basis(
    k: int, n: int, multidegree: Sequence[int] | None = None
) -> list[MLMonomial]:
    """Free metabelian basis words of degree ``n`` on ``k`` generators."""
    if n < 2:
        raise ValueError("bracket words need degree >= 2")
    if k < 1:
        raise ValueError("need k >= 1")
    if multidegree is not None:
        md = tuple(multidegree)
        if len(md) != k:
            raise ValueError(f"multidegree must have length {k}")
        if sum(md) != n:
            raise ValueError(f"multidegree total {sum(md)} != degree {n}")
        letters: list[int] = []
        for i, e in enumerate(md, start=1):
            letters.extend([i] * e)
        second = letters[0]  # the minimum letter
        out = []
        for first in sorted(set(letters[1:])):
            if first <= second:
                continue
            rest = list(letters)
            rest.remove(second)
            rest.remove(first)
            out.append(MLMonomial(first, second, tuple(rest)))
        return out
    out = []
    for second in range(1, k + 1):
        for first in range(second + 1, k + 1):
            for rest in _nondecreasing(second, k, n - 2):
                out.append(MLMonomial(first, second, rest))
    return sorted(out)


def _splits(md: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ordered decompositions of a multidegree into two nonzero parts."""

    def rec(i: int, left: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(md):
            yield tuple(left)
            return
        for e in range(md[i] + 1):
            yield from rec(i + 1, left + [e])

    for alpha in rec(0, []):
        beta = tuple(a - b for a, b in zip(md, alpha))
        if any(alpha) and any(beta):
            yield alpha, beta


@lru_cache(maxsize=None)
def _lie_component(md: tuple[int, ...]) -> Subspace:
    """Bracket-closure span of one multidegree slice, built inductively."""
    k = len(md)
    n = sum(md)
    space = Subspace(enumerate_basis(k, n, md))
    if n == 1:
        gen = md.index(1) + 1
        space.add(PermPolynomial.generator(gen))
        return space
    for alpha, beta in _splits(md):
        for u in _lie_component(alpha).basis():
            for v in _lie_component(beta).basis():
                space.add(u * v - v * u)
    return space


def lie_span_oracle(
    k: int, n: int, multidegree: Sequence[int] | None = None
) -> Subspace:
    """Degree-``n`` slice of the commutator subalgebra, by brute-force closure."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    if multidegree is not None:
        md = tuple(multidegree)
        if len(md) != k or sum(md) != n:
            raise ValueError("multidegree must have length k and total n")
        return _lie_component(md)
    space = Subspace(enumerate_basis(k, n))
    for md in sorted(_all_multidegrees(k, n)):
        for p in _lie_component(md).basis():
            space.add(p)
    return space


def _all_multidegrees(k: int, n: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for e in range(n + 1):
        for rest in _all_multidegrees(k - 1, n - e):
            yield (e, *rest)
