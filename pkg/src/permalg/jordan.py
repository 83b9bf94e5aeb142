"""Anticommutator-side analysis of the free perm algebra.

Covers the degree-four laws of the anticommutator product, constructive
expression of word polynomials through anticommutators, degree-truncated
ideal slices in both the associative and the anticommutator ambient, the
two-generator exceptional-quotient witness in the sense of Cohn, and the
``f``-combination normal form for the abstract anticommutator calculus.

Conventions: ``{a,b} = ab + ba``; the associator is
``<a,b,c> = {{a,b},c} - {a,{b,c}}``; and

    f(a;b,c) = -1/4*((ab)c - 3*(bc)a + (ac)b)

with juxtaposition read as the anticommutator product.  ``f(a;b,c)``
expands to the single word ``a*b*c`` (head ``a``), which is what makes the
``f``-elements a basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .expr import (
    Anti,
    ExprSum,
    IdentityTemplate,
    IdentityVerdict,
    Leaf,
    Node,
    Slot,
    associator,
    check_identity,
    left_normed,
    wrap,
)
from .linalg import Subspace
from .perm import PermMonomial, PermPolynomial, enumerate_basis

__all__ = [
    "FElement",
    "IdentitySuiteReport",
    "NotJordanElement",
    "CohnWitnessReport",
    "bn_basis",
    "cohn_witness",
    "expand_bn",
    "f_comb",
    "ideal_component",
    "jordan_express",
    "sj_span",
    "to_bn",
    "verify_J_identities",
    "verify_perm_plus_identities",
]

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


# ---------------------------------------------------------------------------
# identity suites


@dataclass
class IdentitySuiteReport:
    """Outcome of a batch of identity checks plus frozen expansion checks."""

    verdicts: list[tuple[str, IdentityVerdict]] = field(default_factory=list)
    expansions: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.holds for _, v in self.verdicts) and all(ok for _, ok in self.expansions)

    def failures(self) -> list[str]:
        out = [name for name, v in self.verdicts if not v.holds]
        out += [name for name, ok in self.expansions if not ok]
        return out


def _mono(head: int, tail: Sequence[int]) -> PermMonomial:
    return PermMonomial(head, tuple(sorted(tail)))


def verify_perm_plus_identities() -> IdentitySuiteReport:
    """Degree-four laws of the anticommutator product, with the two frozen
    expansions that drive their proofs checked term for term."""
    a, b, c, d = (Slot(i) for i in range(1, 5))
    report = IdentitySuiteReport()
    templates = [
        ("anticommutator symmetry", IdentityTemplate(wrap(a).anti(b), wrap(b).anti(a))),
        (
            "anticommutator interchange",
            IdentityTemplate(wrap(a).anti(b).anti(wrap(c).anti(d)), wrap(a).anti(d).anti(wrap(b).anti(c))),
        ),
        (
            "associator exchange",
            IdentityTemplate(
                2 * associator(wrap(a).anti(b), c, d),
                associator(wrap(a).anti(b), d, c)
                + associator(wrap(a).anti(c), b, d)
                + associator(wrap(b).anti(c), a, d),
            ),
        ),
    ]
    for name, t in templates:
        report.verdicts.append((name, check_identity(t)))

    x1, x2, x3, x4 = (Leaf(i) for i in range(1, 5))
    double_anti = wrap(x1).anti(x2).anti(wrap(x3).anti(x4)).expand()
    expected = PermPolynomial(
        [
            (_mono(1, (2, 3, 4)), 2),
            (_mono(2, (1, 3, 4)), 2),
            (_mono(3, (1, 2, 4)), 2),
            (_mono(4, (1, 2, 3)), 2),
        ]
    )
    report.expansions.append(("{{a,b},{c,d}} expansion", double_anti == expected))

    assoc = associator(wrap(x1).anti(x2), x3, x4).expand()
    expected = PermPolynomial(
        [
            (_mono(1, (2, 3, 4)), -1),
            (_mono(2, (1, 3, 4)), -1),
            (_mono(4, (1, 2, 3)), 2),
        ]
    )
    report.expansions.append(("<{a,b},c,d> expansion", assoc == expected))
    return report


def f_comb(a: "ExprSum | Node", b: "ExprSum | Node", c: "ExprSum | Node") -> ExprSum:
    """``f(a;b,c) = -1/4*((ab)c - 3*(bc)a + (ac)b)`` over the anticommutator."""
    a, b, c = wrap(a), wrap(b), wrap(c)
    return (
        (-_QUARTER) * a.anti(b).anti(c)
        + Fraction(3, 4) * b.anti(c).anti(a)
        + (-_QUARTER) * a.anti(c).anti(b)
    )


def verify_J_identities() -> IdentitySuiteReport:
    """Laws of the abstract commutative calculus built on ``f``, verified
    inside the word algebra with juxtaposition read as the anticommutator."""
    a, b, c, d, e = (Slot(i) for i in range(1, 6))
    A, B, C, D, E = (wrap(s) for s in (a, b, c, d, e))
    report = IdentitySuiteReport()
    templates = [
        (
            "degree-4 expansion law",
            IdentityTemplate(
                A.anti(B).anti(C.anti(D)),
                -2 * A.anti(B).anti(C).anti(D)
                + A.anti(B).anti(D).anti(C)
                + A.anti(C).anti(B).anti(D)
                + B.anti(C).anti(A).anti(D),
            ),
        ),
        ("f argument symmetry", IdentityTemplate(f_comb(a, b, c), f_comb(a, c, b))),
        (
            "triple product decomposition",
            IdentityTemplate(
                A.anti(B).anti(C),
                f_comb(a, b, c) + f_comb(b, a, c) + 2 * f_comb(c, a, b),
            ),
        ),
        (
            "argument shift",
            IdentityTemplate(f_comb(A, B, C.anti(D)), f_comb(A, B.anti(C), D)),
        ),
        (
            "append law",
            IdentityTemplate(
                f_comb(a, b, c).anti(D),
                _HALF * f_comb(A, B, C.anti(D)) + _HALF * f_comb(D, A, B.anti(C)),
            ),
        ),
        (
            "third-argument reassociation",
            IdentityTemplate(
                f_comb(A, B, C.anti(D).anti(E)), f_comb(A, B, C.anti(D.anti(E)))
            ),
        ),
    ]
    for name, t in templates:
        report.verdicts.append((name, check_identity(t)))

    got = f_comb(Leaf(1), Leaf(2), Leaf(3)).expand()
    report.expansions.append(
        ("f(x1;x2,x3) is the word x1*x2*x3", got == PermPolynomial.from_word((1, 2, 3)))
    )
    got = f_comb(Leaf(1), Leaf(1), Leaf(1)).expand()
    report.expansions.append(
        ("f(x1;x1,x1) is the word x1*x1*x1", got == PermPolynomial.from_word((1, 1, 1)))
    )
    return report


# ---------------------------------------------------------------------------
# anticommutator spans and Jordan expressibility


def _sub_multidegrees(md: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    def rec(i: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(md):
            yield tuple(acc)
            return
        for v in range(md[i] + 1):
            yield from rec(i + 1, acc + [v])

    yield from rec(0, [])


@lru_cache(maxsize=None)
def _sj_component(md: tuple[int, ...]) -> Subspace:
    """Witness-carrying span of one multidegree slice of the anticommutator
    subalgebra, built by closing lower slices under the product."""
    k = len(md)
    n = sum(md)
    space = Subspace(enumerate_basis(k, n, md))
    if n == 1:
        gen = md.index(1) + 1
        space.add(PermPolynomial.generator(gen), ExprSum.of(Leaf(gen)))
        return space
    for alpha in _sub_multidegrees(md):
        beta = tuple(a - b for a, b in zip(md, alpha))
        if not any(alpha) or not any(beta) or alpha > beta:
            continue  # the product is symmetric; one orientation suffices
        left = _sj_component(alpha)
        right = _sj_component(beta)
        for u, uw in zip(left.basis(), left.expressions):
            for v, vw in zip(right.basis(), right.expressions):
                space.add(u * v + v * u, uw.anti(vw))
    return space


def sj_span(k: int, n: int) -> Subspace:
    """Degree-``n`` slice of the anticommutator subalgebra, with an
    expression witness attached to every basis row."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    space = Subspace(enumerate_basis(k, n))
    for md in sorted(_degree_multidegrees(k, n)):
        part = _sj_component(md)
        for p, w in zip(part.basis(), part.expressions):
            space.add(p, w)
    return space


def _degree_multidegrees(k: int, n: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for e in range(n + 1):
        for rest in _degree_multidegrees(k - 1, n - e):
            yield (e, *rest)


class NotJordanElement(ValueError):
    """Raised with the offending component when no anticommutator expression exists."""

    def __init__(self, component: PermPolynomial):
        super().__init__(f"not a Jordan element; offending component {component}")
        self.component = component


def jordan_express(g: PermPolynomial) -> ExprSum:
    """An anticommutator expression whose expansion equals ``g`` exactly.

    Works one multidegree component at a time against the witnessed spans;
    degree >= 3 components always succeed, degree 2 needs the symmetric
    part only, and antisymmetric degree-2 content raises
    :class:`NotJordanElement`.
    """
    if g.is_zero:
        return ExprSum.zero()
    k = g.max_generator()
    result = ExprSum.zero()
    for md, comp in g.multidegree_components(k).items():
        if sum(md) == 1:
            gen = md.index(1) + 1
            result = result + ExprSum(((comp.coefficient(PermMonomial(gen)), Leaf(gen)),))
            continue
        witness = _sj_component(md).witness_for(comp, ExprSum.zero())
        if witness is None:
            raise NotJordanElement(comp)
        result = result + witness
    return result


# ---------------------------------------------------------------------------
# truncated ideal slices and the exceptional-quotient witness


def ideal_component(
    ambient: str,
    generators: Sequence[PermPolynomial],
    multidegree: Sequence[int],
    *,
    bound: int = 8,
) -> Subspace:
    """One multidegree slice of the ideal generated by ``generators``.

    ``ambient="perm"`` closes under one-letter products on both sides (the
    two-sided associative ideal); ``ambient="jordan"`` closes under the
    anticommutator with every slice of the anticommutator subalgebra.
    Generators must each be homogeneous in every letter separately.
    """
    if ambient not in ("perm", "jordan"):
        raise ValueError(f"unknown ambient {ambient!r}")
    target = tuple(multidegree)
    k = len(target)
    if sum(target) > bound:
        raise ValueError(f"multidegree total {sum(target)} exceeds bound {bound}")
    by_mdeg: dict[tuple[int, ...], list[PermPolynomial]] = {}
    for g in generators:
        if g.is_zero:
            continue
        comps = g.multidegree_components(k)
        if len(comps) != 1:
            raise ValueError(f"inhomogeneous generator {g}")
        md = next(iter(comps))
        by_mdeg.setdefault(md, []).append(g)

    memo: dict[tuple[int, ...], Subspace] = {}

    def slice_of(md: tuple[int, ...]) -> Subspace:
        if md in memo:
            return memo[md]
        space = Subspace(enumerate_basis(k, sum(md), md))
        memo[md] = space
        for g in by_mdeg.get(md, ()):
            space.add(g)
        if ambient == "perm":
            for i in range(1, k + 1):
                if md[i - 1] == 0:
                    continue
                lower_md = tuple(e - (1 if j == i - 1 else 0) for j, e in enumerate(md))
                if sum(lower_md) == 0:
                    continue
                letter = PermPolynomial.generator(i)
                for p in slice_of(lower_md).basis():
                    space.add(letter * p)
                    space.add(p * letter)
        else:
            for delta in _sub_multidegrees(md):
                rest = tuple(a - b for a, b in zip(md, delta))
                if not any(delta) or not any(rest):
                    continue
                mult = _sj_component(delta)
                for p in slice_of(rest).basis():
                    for s in mult.basis():
                        space.add(p * s + s * p)
        return space

    return slice_of(target)


@dataclass
class CohnWitnessReport:
    """Membership evidence that the two-generator quotient by
    ``({x,y}, x^3, y^2)`` admits no anticommutator realization."""

    witness: PermPolynomial
    ideal_slice_dim: int
    perm_slice_dim: int
    sj_slice_dim: int
    in_ideal_slice: bool
    in_perm_slice: bool
    in_sj_slice: bool
    generator_texts: tuple[str, ...]
    note: str

    @property
    def exceptional(self) -> bool:
        return (not self.in_ideal_slice) and self.in_perm_slice and self.in_sj_slice

    def as_dict(self) -> dict:
        return {
            "witness": str(self.witness),
            "generators": list(self.generator_texts),
            "slice": [2, 1],
            "ideal_slice_dim": self.ideal_slice_dim,
            "perm_slice_dim": self.perm_slice_dim,
            "sj_slice_dim": self.sj_slice_dim,
            "witness_in_ideal_slice": self.in_ideal_slice,
            "witness_in_perm_slice": self.in_perm_slice,
            "witness_in_sj_slice": self.in_sj_slice,
            "exceptional_quotient": self.exceptional,
            "note": self.note,
        }


def cohn_witness() -> CohnWitnessReport:
    """Run the two-generator exceptional-quotient computation.

    The quotient of the anticommutator subalgebra on ``x, y`` by the ideal
    generated by ``{x,y}``, the cube of ``x`` and the square of ``y`` is
    4-dimensional with basis ``x, y, x^2, {x^2,y}``.  The witness
    ``b = {x^2,y}`` lies in the associative ideal slice and in the
    anticommutator subalgebra, but not in the anticommutator ideal slice,
    so no anticommutator realization of the quotient exists.
    """
    x, y = Leaf(1), Leaf(2)
    g_pair = wrap(x).anti(y)
    g_cube = _HALF * wrap(x).anti(wrap(x).anti(x))
    g_square = _HALF * wrap(y).anti(y)
    gens = [g_pair.expand(), g_cube.expand(), g_square.expand()]
    target = (2, 1)
    ideal_slice = ideal_component("jordan", gens, target)
    perm_slice = ideal_component("perm", gens, target)
    sj_slice = _sj_component(target)
    b = (wrap(x).prod(x)).anti(y).expand()  # x*x*y + y*x*x
    return CohnWitnessReport(
        witness=b,
        ideal_slice_dim=ideal_slice.dim,
        perm_slice_dim=perm_slice.dim,
        sj_slice_dim=sj_slice.dim,
        in_ideal_slice=ideal_slice.contains(b),
        in_perm_slice=perm_slice.contains(b),
        in_sj_slice=sj_slice.contains(b),
        generator_texts=(str(g_pair), str(g_cube), str(g_square)),
        note=(
            "the cube generator is the anticommutator cube 1/2*{x,{x,x}}, "
            "whose expansion 2*x*x*x spans the same ideal as the word cube"
        ),
    )


# ---------------------------------------------------------------------------
# the f-element basis and the rewriting map into it


class FElement(NamedTuple):
    """Basis element ``f(x_head; x_a1, x_a2 * ... * x_am)`` with sorted args."""

    head: int
    args: tuple[int, ...]

    @property
    def degree(self) -> int:
        return 1 + len(self.args)

    def expr(self) -> ExprSum:
        if len(self.args) < 2:
            raise ValueError("f-elements have degree >= 3")
        return f_comb(Leaf(self.head), Leaf(self.args[0]), left_normed(Anti, self.args[1:]))

    def expand(self) -> PermPolynomial:
        return self.expr().expand()

    def __str__(self) -> str:
        rest = "*".join(f"x{i}" for i in self.args[1:])
        return f"f(x{self.head};x{self.args[0]},{rest})"


def f_element(head: int, args: Iterable[int]) -> FElement:
    return FElement(head, tuple(sorted(args)))


def bn_basis(k: int, n: int) -> list[FElement]:
    """All degree-``n`` ``f``-elements on ``k`` generators; the index set is
    the same head-plus-sorted-multiset scheme as the word basis, so the
    count equals ``dimension(k, n)``."""
    if n < 3:
        raise ValueError("f-element basis starts at degree 3")
    if k < 1:
        raise ValueError("need k >= 1")
    from itertools import combinations_with_replacement

    return [
        FElement(head, args)
        for head in range(1, k + 1)
        for args in combinations_with_replacement(range(1, k + 1), n - 1)
    ]


def to_bn(word: Sequence[int]) -> list[tuple[Fraction, FElement]]:
    """Rewrite a left-normed product word into ``f``-elements.

    Degree 3 is the triple product decomposition; longer words append one
    letter at a time through the append law, re-sorting arguments via the
    shift and reassociation laws.  The output expands to exactly the same
    polynomial as the left-normed anticommutator reading of the word.
    """
    w = tuple(word)
    if len(w) < 3:
        raise ValueError("word must have length >= 3")
    if any(i < 1 for i in w):
        raise ValueError("generator indices are 1-based")
    combo: dict[FElement, Fraction] = {}

    def put(fe: FElement, c: Fraction) -> None:
        s = combo.get(fe, Fraction(0)) + c
        if s:
            combo[fe] = s
        elif fe in combo:
            del combo[fe]

    if len(w) == 3:
        a, b, c = w
        put(f_element(a, (b, c)), Fraction(1))
        put(f_element(b, (a, c)), Fraction(1))
        put(f_element(c, (a, b)), Fraction(2))
    else:
        x = w[-1]
        for coeff, fe in to_bn(w[:-1]):
            put(f_element(fe.head, fe.args + (x,)), coeff * _HALF)
            put(f_element(x, (fe.head,) + fe.args), coeff * _HALF)
    return [(combo[fe], fe) for fe in sorted(combo)]


def expand_bn(combination: Iterable[tuple[Fraction, FElement]]) -> PermPolynomial:
    out = PermPolynomial.zero()
    for coeff, fe in combination:
        out = out + fe.expand().scale(coeff)
    return out
