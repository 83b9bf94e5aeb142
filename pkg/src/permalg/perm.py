"""Exact arithmetic in the free perm algebra.

A perm algebra is an associative algebra obeying right-commutativity
``abc = acb``.  Every product of generators therefore equals a word whose
letters after the first are sorted non-decreasingly, and those canonical
words form a linear basis of the free algebra.  Elements are sparse
rational combinations of canonical words with exact coefficients.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "PermMonomial",
    "PermPolynomial",
    "canonicalize",
    "dimension",
    "enumerate_basis",
    "format_linear",
    "mono_key",
]


class PermMonomial(NamedTuple):
    """Canonical basis word: ``head`` followed by a sorted ``tail``."""

    head: int
    tail: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return 1 + len(self.tail)

    def word(self) -> tuple[int, ...]:
        """Letters in word order, head first."""
        return (self.head, *self.tail)

    def multidegree(self, k: int) -> tuple[int, ...]:
        """Exponent vector over generators ``1..k``."""
        counts = Counter(self.word())
        top = max(counts)
        if top > k:
            raise ValueError(f"monomial mentions x{top} beyond {k} generators")
        return tuple(counts.get(i, 0) for i in range(1, k + 1))

    def __str__(self) -> str:
        return "*".join(f"x{i}" for i in self.word())


def canonicalize(word: Sequence[int]) -> PermMonomial:
    """Canonical form of a generator word.

    Right-commutativity lets every letter after the first commute with its
    neighbours, so the representative keeps the head and sorts the rest.
    """
    if len(word) == 0:
        raise ValueError("empty monomial")
    if any(i < 1 for i in word):
        raise ValueError("generator indices are 1-based")
    return PermMonomial(word[0], tuple(sorted(word[1:])))


def mono_key(m: PermMonomial) -> tuple[int, tuple[int, ...]]:
    """Total order used for echelon pivots and printed output: head, then tail."""
    return (m.head, m.tail)


def format_linear(items: Iterable[tuple[Fraction, str]]) -> str:
    """Render ``coeff * text`` terms as a signed sum; empty input prints ``0``."""
    parts: list[str] = []
    for coeff, text in items:
        if coeff == 0:
            continue
        mag = abs(coeff)
        body = text if mag == 1 else f"{mag}*{text}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"


class PermPolynomial:
    """Sparse rational combination of canonical monomials.

    Instances are immutable in use: every operation returns a fresh value,
    zero coefficients are never stored, and the zero polynomial has no terms.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[PermMonomial, Fraction | int]
        | Iterable[tuple[PermMonomial, Fraction | int]] = (),
    ):
        data: dict[PermMonomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            if not isinstance(mono, PermMonomial):
                raise TypeError(f"expected PermMonomial, got {type(mono).__name__}")
            c = data.get(mono, _ZERO) + Fraction(coeff)
            if c:
                data[mono] = c
            elif mono in data:
                del data[mono]
        self._terms = data

    @classmethod
    def zero(cls) -> "PermPolynomial":
        return cls()

    @classmethod
    def generator(cls, i: int) -> "PermPolynomial":
        return cls.from_word((i,))

    @classmethod
    def from_word(cls, word: Sequence[int], coeff: Fraction | int = 1) -> "PermPolynomial":
        return cls(((canonicalize(word), coeff),))

    @classmethod
    def from_monomial(cls, mono: PermMonomial, coeff: Fraction | int = 1) -> "PermPolynomial":
        return cls(((mono, coeff),))

    def terms(self) -> list[tuple[PermMonomial, Fraction]]:
        """Terms sorted in the printing/echelon order."""
        return sorted(self._terms.items(), key=lambda kv: mono_key(kv[0]))

    def coefficient(self, mono: PermMonomial) -> Fraction:
        return self._terms.get(mono, _ZERO)

    def support(self) -> set[PermMonomial]:
        return set(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PermPolynomial):
            return self._terms == other._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "PermPolynomial":
        return PermPolynomial({m: -c for m, c in self._terms.items()})

    def __add__(self, other: "PermPolynomial") -> "PermPolynomial":
        if not isinstance(other, PermPolynomial):
            return NotImplemented
        data = dict(self._terms)
        for m, c in other._terms.items():
            s = data.get(m, _ZERO) + c
            if s:
                data[m] = s
            elif m in data:
                del data[m]
        out = PermPolynomial.__new__(PermPolynomial)
        out._terms = data
        return out

    def __sub__(self, other: "PermPolynomial") -> "PermPolynomial":
        if not isinstance(other, PermPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff: Fraction | int) -> "PermPolynomial":
        c = Fraction(coeff)
        if not c:
            return PermPolynomial()
        out = PermPolynomial.__new__(PermPolynomial)
        out._terms = {m: v * c for m, v in self._terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, PermPolynomial):
            data: dict[PermMonomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    prod = PermMonomial(m1.head, tuple(sorted(m1.tail + m2.word())))
                    s = data.get(prod, _ZERO) + c1 * c2
                    if s:
                        data[prod] = s
                    elif prod in data:
                        del data[prod]
            out = PermPolynomial.__new__(PermPolynomial)
            out._terms = data
            return out
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def max_generator(self) -> int:
        return max((max(m.word()) for m in self._terms), default=0)

    def max_degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {m.degree for m in self._terms}
        return len(degrees) <= 1

    def homogeneous_components(self) -> dict[int, "PermPolynomial"]:
        """Split by total degree; keys ascending."""
        buckets: dict[int, dict[PermMonomial, Fraction]] = {}
        for m, c in self._terms.items():
            buckets.setdefault(m.degree, {})[m] = c
        out = {}
        for d in sorted(buckets):
            p = PermPolynomial.__new__(PermPolynomial)
            p._terms = buckets[d]
            out[d] = p
        return out

    def multidegree_components(self, k: int | None = None) -> dict[tuple[int, ...], "PermPolynomial"]:
        """Split by exponent vector over generators ``1..k``; keys ascending."""
        if k is None:
            k = self.max_generator()
        buckets: dict[tuple[int, ...], dict[PermMonomial, Fraction]] = {}
        for m, c in self._terms.items():
            buckets.setdefault(m.multidegree(k), {})[m] = c
        out = {}
        for md in sorted(buckets):
            p = PermPolynomial.__new__(PermPolynomial)
            p._terms = buckets[md]
            out[md] = p
        return out

    def __str__(self) -> str:
        return format_linear((c, str(m)) for m, c in self.terms())

    def __repr__(self) -> str:
        return f"PermPolynomial({self})"


_ZERO = Fraction(0)


def dimension(k: int, n: int) -> int:
    """Number of canonical words of degree ``n`` on ``k`` generators.

    One of ``k`` heads times a multiset of ``n - 1`` tail letters:
    ``k * C(n + k - 2, n - 1)``.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    return k * comb(n + k - 2, n - 1)


def enumerate_basis(
    k: int, n: int, multidegree: Sequence[int] | None = None
) -> list[PermMonomial]:
    """All canonical monomials of degree ``n`` on generators ``1..k``.

    With ``multidegree`` (an exponent vector of length ``k``) only the words
    with that exact letter content are produced.  Order: head index, then
    tail lexicographic.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    if multidegree is not None:
        md = tuple(multidegree)
        if len(md) != k:
            raise ValueError(f"multidegree must have length {k}")
        if any(e < 0 for e in md):
            raise ValueError("multidegree entries must be non-negative")
        if sum(md) != n:
            raise ValueError(f"multidegree total {sum(md)} != degree {n}")
        letters: list[int] = []
        for i, e in enumerate(md, start=1):
            letters.extend([i] * e)
        out = []
        for head in sorted(set(letters)):
            rest = list(letters)
            rest.remove(head)
            out.append(PermMonomial(head, tuple(rest)))
        return out
    return [
        PermMonomial(head, tail)
        for head in range(1, k + 1)
        for tail in combinations_with_replacement(range(1, k + 1), n - 1)
    ]
