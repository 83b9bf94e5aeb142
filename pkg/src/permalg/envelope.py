"""Enveloping algebra construction for metabelian Lie algebras.

A metabelian Lie algebra embeds into a perm algebra; the enveloping perm
algebra is realized inside a commutative polynomial ring on two copies of
the basis, one plain and one dotted, restricted to polynomials linear in
the dotted letters.  After splitting the basis into Y (spanning the
derived subalgebra) and Z (a complement, ordered after Y) the defining
relations become a terminating, confluent rewriting system

    y = 0                              (plain derived letters vanish)
    y' z    -> [y,z]'                  (a dotted Y letter absorbs any plain letter)
    z_i' z_j -> z_j' z_i + [z_i,z_j]'  for i > j  (the dot moves to the minimum)

whose normal forms are exactly ``y'`` and ``z_i1' z_i2 ... z_in`` with
``i1 <= ... <= in``.  Both overlap families reduce to zero for every valid
input, which is what certifies the normal forms as a linear basis.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import ceil, comb, log
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Sequence

from .perm import format_linear

__all__ = [
    "AlgebraFormatError",
    "BasisSplit",
    "CompositionReport",
    "EmbedReport",
    "Envelope",
    "EnvelopeMonomial",
    "GrowthReport",
    "InvalidLieAlgebra",
    "LieValidationReport",
    "MetabelianLieAlgebra",
    "RewriteRule",
    "StrategyAgreementReport",
    "load_algebra",
    "split_basis",
]

Vec = dict[int, Fraction]

_ZERO = Fraction(0)


def _vec_add(a: Vec, b: Vec, scale: Fraction = Fraction(1)) -> Vec:
    out = dict(a)
    for i, c in b.items():
        s = out.get(i, _ZERO) + scale * c
        if s:
            out[i] = s
        elif i in out:
            del out[i]
    return out


class AlgebraFormatError(ValueError):
    """Malformed structure-constant input."""


@dataclass
class LieValidationReport:
    jacobi_violations: list[tuple[tuple[int, int, int], Vec]] = field(default_factory=list)
    metabelian_violations: list[tuple[tuple[int, int, int, int], Vec]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.jacobi_violations and not self.metabelian_violations


class InvalidLieAlgebra(ValueError):
    def __init__(self, report: LieValidationReport):
        jac = [t for t, _ in report.jacobi_violations]
        met = [t for t, _ in report.metabelian_violations]
        super().__init__(f"invalid algebra: jacobi violations {jac}, metabelian violations {met}")
        self.report = report


class MetabelianLieAlgebra:
    """Finite-dimensional Lie algebra given by labels and structure constants.

    Brackets are stored for index pairs ``i < j`` only; the other
    orientation follows by antisymmetry.  ``validate`` checks the Jacobi
    identity on basis triples and the metabelian law on basis quadruples.
    """

    def __init__(
        self,
        dim: int,
        labels: Sequence[str] | None = None,
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction | int | str]] | None = None,
    ):
        if dim < 1:
            raise AlgebraFormatError("dimension must be at least 1")
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(1, dim + 1))
        if len(self.labels) != dim:
            raise AlgebraFormatError(f"expected {dim} labels, got {len(self.labels)}")
        if len(set(self.labels)) != dim:
            raise AlgebraFormatError("labels must be unique")
        self.table: dict[tuple[int, int], Vec] = {}
        for (i, j), value in (brackets or {}).items():
            if not (1 <= i < j <= dim):
                raise AlgebraFormatError(f"bracket pair ({i},{j}) must satisfy 1 <= i < j <= dim")
            vec: Vec = {}
            for b, coeff in value.items():
                if not 1 <= b <= dim:
                    raise AlgebraFormatError(f"bracket value index {b} out of range")
                c = Fraction(coeff)
                if c:
                    vec[b] = vec.get(b, _ZERO) + c
            vec = {b: c for b, c in vec.items() if c}
            if vec:
                self.table[(i, j)] = vec

    @classmethod
    def from_dict(cls, data: Mapping) -> "MetabelianLieAlgebra":
        try:
            dim = int(data["dim"])
        except (KeyError, TypeError, ValueError):
            raise AlgebraFormatError("missing or bad 'dim'") from None
        labels = data.get("basis")
        entries = data.get("brackets", [])
        brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
        if not isinstance(entries, list):
            raise AlgebraFormatError("'brackets' must be a list")
        for entry in entries:
            try:
                i, j = int(entry["i"]), int(entry["j"])
            except (KeyError, TypeError, ValueError):
                raise AlgebraFormatError(f"bad bracket entry {entry!r}") from None
            if i >= j:
                raise AlgebraFormatError(f"bracket pair ({i},{j}) must have i < j")
            if (i, j) in brackets:
                raise AlgebraFormatError(f"duplicate bracket pair ({i},{j})")
            vec: dict[int, Fraction] = {}
            for item in entry.get("value", []):
                try:
                    b, text = item
                except (TypeError, ValueError):
                    raise AlgebraFormatError(f"bad bracket value item {item!r}") from None
                try:
                    coeff = _parse_rational(text)
                except ValueError as exc:
                    raise AlgebraFormatError(str(exc)) from None
                vec[int(b)] = vec.get(int(b), _ZERO) + coeff
            brackets[(i, j)] = vec
        return cls(dim, labels, brackets)

    def bracket_basis(self, i: int, j: int) -> Vec:
        """``[e_i, e_j]`` for any pair of basis indices."""
        if i == j:
            return {}
        if i < j:
            return dict(self.table.get((i, j), {}))
        return {b: -c for b, c in self.table.get((j, i), {}).items()}

    def bracket(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, ci in u.items():
            for j, cj in v.items():
                if i == j:
                    continue
                out = _vec_add(out, self.bracket_basis(i, j), ci * cj)
        return out

    def validate(self) -> LieValidationReport:
        report = LieValidationReport()
        basis = [{i: Fraction(1)} for i in range(1, self.dim + 1)]
        for i in range(1, self.dim + 1):
            for j in range(i + 1, self.dim + 1):
                for k in range(j + 1, self.dim + 1):
                    r = self.bracket(self.bracket_basis(i, j), basis[k - 1])
                    r = _vec_add(r, self.bracket(self.bracket_basis(j, k), basis[i - 1]))
                    r = _vec_add(r, self.bracket(self.bracket_basis(k, i), basis[j - 1]))
                    if r:
                        report.jacobi_violations.append(((i, j, k), r))
        pairs = [(i, j) for i in range(1, self.dim + 1) for j in range(i + 1, self.dim + 1)]
        for a, b in pairs:
            for c, d in pairs:
                if (a, b) > (c, d):
                    continue
                r = self.bracket(self.bracket_basis(a, b), self.bracket_basis(c, d))
                if r:
                    report.metabelian_violations.append(((a, b, c, d), r))
        return report

    def vector_str(self, v: Vec) -> str:
        items = sorted(v.items())
        return format_linear((c, self.labels[i - 1]) for i, c in items)

    def __repr__(self) -> str:
        return f"MetabelianLieAlgebra(dim={self.dim}, labels={self.labels})"


def _parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"rational must be 'p' or 'p/q', got {text!r}")
    s = text.strip()
    body = s[1:] if s[:1] == "-" else s
    if not body or not all(part.isdigit() and part for part in body.split("/", 1)):
        raise ValueError(f"rational must be 'p' or 'p/q', got {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"rational {text!r} has a zero denominator") from None


def load_algebra(path: str | Path) -> MetabelianLieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise AlgebraFormatError(f"invalid JSON: {exc}") from None
    return MetabelianLieAlgebra.from_dict(data)


# ---------------------------------------------------------------------------
# basis splitting


@dataclass
class BasisSplit:
    """Basis reordered (and, if needed, changed) so the derived subalgebra
    comes first.

    ``algebra`` is the adapted copy: indices ``1..y_count`` span the derived
    subalgebra, the rest are the complement.  ``new_in_old`` holds the
    adapted basis vectors in original coordinates.
    """

    algebra: MetabelianLieAlgebra
    original: MetabelianLieAlgebra
    y_count: int
    new_in_old: tuple[tuple[Fraction, ...], ...]
    _old_to_new: tuple[tuple[Fraction, ...], ...]

    @property
    def y_indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.y_count + 1))

    @property
    def z_indices(self) -> tuple[int, ...]:
        return tuple(range(self.y_count + 1, self.algebra.dim + 1))

    @property
    def changed_basis(self) -> bool:
        """True when some adapted vector is not an original basis vector
        (pure reorderings do not count)."""
        for row in self.new_in_old:
            support = [c for c in row if c]
            if len(support) != 1 or support[0] != 1:
                return True
        return False

    def to_adapted(self, v: Vec) -> Vec:
        """Coordinates of an original-basis vector over the adapted basis."""
        dense = [v.get(i, _ZERO) for i in range(1, self.original.dim + 1)]
        out: Vec = {}
        for r, row in enumerate(self._old_to_new, start=1):
            c = sum(row[i] * dense[i] for i in range(len(dense)))
            if c:
                out[r] = c
        return out


def _dense(v: Vec, dim: int) -> list[Fraction]:
    return [v.get(i, _ZERO) for i in range(1, dim + 1)]


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pr = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pr] = aug[pr], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def split_basis(algebra: MetabelianLieAlgebra) -> BasisSplit:
    """Choose the derived-first adapted basis.

    Original basis vectors lying in the derived subalgebra are preferred;
    only when they fail to span it are echelon rows of the bracket span
    adjoined (changing the basis, with fresh ``y<r>`` labels for the
    synthesized vectors).
    """
    from .linalg import Span

    n = algebra.dim
    derived = Span(n)
    for pair in sorted(algebra.table):
        derived.add(_dense(algebra.table[pair], n))
    in_derived = [
        i for i in range(1, n + 1) if derived.contains([Fraction(1 if j == i else 0) for j in range(1, n + 1)])
    ]
    y_rows: list[list[Fraction]] = []
    chosen = Span(n)
    for i in in_derived:
        e = [Fraction(1 if j == i else 0) for j in range(1, n + 1)]
        if chosen.add(list(e)):
            y_rows.append(e)
    for row in derived.rows:
        if chosen.add(list(row)):
            y_rows.append(list(row))
    z_rows: list[list[Fraction]] = []
    completion = Span(n)
    for row in y_rows:
        completion.add(list(row))
    for i in range(1, n + 1):
        e = [Fraction(1 if j == i else 0) for j in range(1, n + 1)]
        if completion.add(list(e)):
            z_rows.append(e)

    new_rows = y_rows + z_rows
    labels: list[str] = []
    synth = 0
    for row in new_rows:
        ones = [i for i, c in enumerate(row) if c]
        if len(ones) == 1 and row[ones[0]] == 1:
            labels.append(algebra.labels[ones[0]])
        else:
            synth += 1
            base = f"y{synth}"
            while base in labels or base in algebra.labels:
                base += "_"
            labels.append(base)

    transpose = [[new_rows[r][c] for r in range(n)] for c in range(n)]
    old_to_new = _invert(transpose)

    def to_new(v: Vec) -> Vec:
        dense = _dense(v, n)
        out: Vec = {}
        for r in range(n):
            c = sum(old_to_new[r][i] * dense[i] for i in range(n))
            if c:
                out[r + 1] = c
        return out

    brackets: dict[tuple[int, int], Vec] = {}
    for r in range(1, n + 1):
        for s in range(r + 1, n + 1):
            u = {i + 1: c for i, c in enumerate(new_rows[r - 1]) if c}
            v = {i + 1: c for i, c in enumerate(new_rows[s - 1]) if c}
            w = to_new(algebra.bracket(u, v))
            if w:
                brackets[(r, s)] = w
    adapted = MetabelianLieAlgebra(n, labels, brackets)
    return BasisSplit(
        algebra=adapted,
        original=algebra,
        y_count=len(y_rows),
        new_in_old=tuple(tuple(row) for row in new_rows),
        _old_to_new=tuple(tuple(row) for row in old_to_new),
    )


# ---------------------------------------------------------------------------
# the rewriting system


class EnvelopeMonomial(NamedTuple):
    """Commutative word with one dotted letter and a sorted plain tail.

    Indices refer to the adapted basis (derived-subalgebra letters first).
    """

    dot: int
    tail: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return 1 + len(self.tail)


def env_monomial(dot: int, tail: Iterable[int] = ()) -> EnvelopeMonomial:
    return EnvelopeMonomial(dot, tuple(sorted(tail)))


EnvElement = dict[EnvelopeMonomial, Fraction]


def _env_put(acc: EnvElement, m: EnvelopeMonomial, c: Fraction) -> None:
    s = acc.get(m, _ZERO) + c
    if s:
        acc[m] = s
    elif m in acc:
        del acc[m]


def env_key(m: EnvelopeMonomial, y_count: int) -> tuple:
    """Degree-lexicographic order with dotted derived letters smallest."""
    return (m.degree, 0 if m.dot <= y_count else 1, m.dot, m.tail)


@dataclass(frozen=True)
class RewriteRule:
    """Length-two redex and its strictly smaller reduct."""

    redex: EnvelopeMonomial
    reduct: tuple[tuple[EnvelopeMonomial, Fraction], ...]

    def reduct_element(self) -> EnvElement:
        return dict(self.reduct)


@dataclass
class CompositionEntry:
    kind: str  # "y-overlap" or "z-overlap"
    letters: tuple[str, ...]
    trivial: bool
    residual: str


@dataclass
class CompositionReport:
    entries: list[CompositionEntry]

    @property
    def all_trivial(self) -> bool:
        return all(e.trivial for e in self.entries)


@dataclass
class EmbedReport:
    checked: int
    failures: list[tuple[str, str, str, str]]  # label_i, label_j, got, expected

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class StrategyAgreementReport:
    seed: int
    words: int
    disagreements: int

    @property
    def ok(self) -> bool:
        return self.disagreements == 0


@dataclass
class GrowthReport:
    """Basis counts per degree with two slope estimates.

    ``loglog_slope`` is the plain least-squares slope of log cumulative
    count against log degree over the top half of the range; it converges
    slowly, so ``slope`` additionally extrapolates the successive slopes
    against 1/degree (least squares again) and is the headline figure.
    """

    degrees: tuple[int, ...]
    per_degree: tuple[int, ...]
    cumulative: tuple[int, ...]
    window: tuple[int, int]
    loglog_slope: float
    slope: float


def _ls_fit(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """Least squares ``y = a + b*x``; returns (a, b)."""
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    var = sum((x - mx) ** 2 for x in xs)
    if var == 0:
        return my, 0.0
    b = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / var
    return my - b * mx, b


class Envelope:
    """The enveloping perm algebra of a validated metabelian Lie algebra."""

    def __init__(self, algebra: MetabelianLieAlgebra):
        report = algebra.validate()
        if not report.ok:
            raise InvalidLieAlgebra(report)
        self.split = split_basis(algebra)
        self.algebra = self.split.algebra
        self.original = algebra
        self.y_count = self.split.y_count
        self.dim = self.algebra.dim
        self.z_indices = self.split.z_indices

    # -- letters and printing

    def is_y(self, idx: int) -> bool:
        return idx <= self.y_count

    def label(self, idx: int) -> str:
        return self.algebra.labels[idx - 1]

    def monomial_str(self, m: EnvelopeMonomial, unicode: bool = False) -> str:
        lbl = self.label(m.dot)
        dotted = f"{lbl[0]}̇{lbl[1:]}" if unicode else f"d({lbl})"
        parts = [dotted] + [self.label(i) for i in m.tail]
        return "*".join(parts)

    def element_str(self, e: EnvElement, unicode: bool = False) -> str:
        ordered = sorted(e.items(), key=lambda kv: env_key(kv[0], self.y_count), reverse=True)
        return format_linear((c, self.monomial_str(m, unicode)) for m, c in ordered)

    # -- relations

    def dotted(self, v: Vec) -> EnvElement:
        """Dotted image of an adapted-coordinates vector."""
        out: EnvElement = {}
        for i, c in sorted(v.items()):
            _env_put(out, EnvelopeMonomial(i), c)
        return out

    def rules(self) -> list[RewriteRule]:
        out = []
        for y in range(1, self.y_count + 1):
            for z in self.z_indices:
                image = self.dotted(self.algebra.bracket_basis(y, z))
                out.append(RewriteRule(EnvelopeMonomial(y, (z,)), tuple(sorted(image.items()))))
        for j in self.z_indices:
            for i in self.z_indices:
                if i <= j:
                    continue
                reduct: EnvElement = {EnvelopeMonomial(j, (i,)): Fraction(1)}
                for m, c in self.dotted(self.algebra.bracket_basis(i, j)).items():
                    _env_put(reduct, m, c)
                out.append(RewriteRule(EnvelopeMonomial(i, (j,)), tuple(sorted(reduct.items()))))
        return out

    def rule_str(self, rule: RewriteRule, unicode: bool = False) -> str:
        return (
            f"{self.monomial_str(rule.redex, unicode)} -> "
            f"{self.element_str(rule.reduct_element(), unicode)}"
        )

    # -- reduction

    def is_normal(self, m: EnvelopeMonomial) -> bool:
        if any(self.is_y(t) for t in m.tail):
            return False
        if self.is_y(m.dot):
            return not m.tail
        return not m.tail or m.dot <= m.tail[0]

    def _step(self, m: EnvelopeMonomial, strategy: str) -> EnvElement | None:
        """One rewriting step, or None when the monomial is normal."""
        y_tail = [t for t in m.tail if self.is_y(t)]
        if y_tail:
            return {}
        if not m.tail:
            return None
        pick = min if strategy == "leftmost" else max
        if self.is_y(m.dot):
            z = pick(m.tail)
            rest = _drop_one(m.tail, z)
            out: EnvElement = {}
            for b, c in sorted(self.algebra.bracket_basis(m.dot, z).items()):
                _env_put(out, EnvelopeMonomial(b, rest), c)
            return out
        smaller = [t for t in m.tail if t < m.dot]
        if not smaller:
            return None
        j = pick(smaller)
        rest = _drop_one(m.tail, j)
        out = {EnvelopeMonomial(j, tuple(sorted(rest + (m.dot,)))): Fraction(1)}
        for b, c in sorted(self.algebra.bracket_basis(m.dot, j).items()):
            _env_put(out, EnvelopeMonomial(b, rest), c)
        return out

    def normal_form(self, element: EnvElement, strategy: str = "leftmost") -> EnvElement:
        """Confluent reduction to the basis monomials.

        Always rewrites the largest pending monomial; every rule strictly
        decreases the degree-lexicographic order, so this terminates.
        """
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown strategy {strategy!r}")
        work: EnvElement = {}
        for m, c in element.items():
            _env_put(work, m, c)
        result: EnvElement = {}
        while work:
            m = max(work, key=lambda mm: env_key(mm, self.y_count))
            c = work.pop(m)
            step = self._step(m, strategy)
            if step is None:
                _env_put(result, m, c)
                continue
            for m2, c2 in step.items():
                _env_put(work, m2, c * c2)
        return result

    # -- composition (overlap) checking

    def check_compositions(self) -> CompositionReport:
        """Reduce every one-dot overlap word both ways; all differences must
        vanish for the rules to be a complete rewriting system."""
        entries: list[CompositionEntry] = []
        zs = list(self.z_indices)
        for y in range(1, self.y_count + 1):
            for bi in range(len(zs)):
                for bj in range(bi + 1, len(zs)):
                    zj, zi = zs[bi], zs[bj]  # zi > zj
                    word = env_monomial(y, (zi, zj))
                    first_i = self._apply_to(word, absorb=zi)
                    first_j = self._apply_to(word, absorb=zj)
                    diff = self._difference(first_i, first_j)
                    entries.append(
                        CompositionEntry(
                            "y-overlap",
                            (self.label(y), self.label(zi), self.label(zj)),
                            not diff,
                            self.element_str(diff),
                        )
                    )
        for a in range(len(zs)):
            for b in range(a + 1, len(zs)):
                for c in range(b + 1, len(zs)):
                    zk, zj, zi = zs[a], zs[b], zs[c]  # zi > zj > zk
                    word = env_monomial(zi, (zj, zk))
                    first_j = self._apply_to(word, absorb=zj)
                    first_k = self._apply_to(word, absorb=zk)
                    diff = self._difference(first_j, first_k)
                    entries.append(
                        CompositionEntry(
                            "z-overlap",
                            (self.label(zi), self.label(zj), self.label(zk)),
                            not diff,
                            self.element_str(diff),
                        )
                    )
        return CompositionReport(entries)

    def _apply_to(self, m: EnvelopeMonomial, absorb: int) -> EnvElement:
        """Apply the unique length-two rule involving the dot and ``absorb``,
        then reduce fully."""
        rest = _drop_one(m.tail, absorb)
        out: EnvElement = {}
        if self.is_y(m.dot):
            for b, c in sorted(self.algebra.bracket_basis(m.dot, absorb).items()):
                _env_put(out, EnvelopeMonomial(b, rest), c)
        else:
            _env_put(out, EnvelopeMonomial(absorb, tuple(sorted(rest + (m.dot,)))), Fraction(1))
            for b, c in sorted(self.algebra.bracket_basis(m.dot, absorb).items()):
                _env_put(out, EnvelopeMonomial(b, rest), c)
        return self.normal_form(out)

    def _difference(self, a: EnvElement, b: EnvElement) -> EnvElement:
        out = dict(a)
        for m, c in b.items():
            _env_put(out, m, -c)
        return out

    # -- basis and growth

    def basis_degree(self, n: int) -> list[EnvelopeMonomial]:
        if n < 1:
            raise ValueError("degree must be >= 1")
        if n == 1:
            return [EnvelopeMonomial(i) for i in range(1, self.dim + 1)]
        return [
            EnvelopeMonomial(word[0], word[1:])
            for word in combinations_with_replacement(self.z_indices, n)
        ]

    def basis_up_to(self, d: int) -> dict[int, list[EnvelopeMonomial]]:
        if d < 1:
            raise ValueError("degree bound must be >= 1")
        return {n: self.basis_degree(n) for n in range(1, d + 1)}

    def degree_count(self, n: int) -> int:
        if n == 1:
            return self.dim
        nz = len(self.z_indices)
        return comb(n + nz - 1, n)

    def gk_estimate(self, dmax: int) -> GrowthReport:
        """Growth of cumulative basis counts, with slope estimates taken
        over the top half of the degree range."""
        if dmax < 4:
            raise ValueError("need dmax >= 4")
        degrees = tuple(range(1, dmax + 1))
        per_degree = tuple(self.degree_count(n) for n in degrees)
        cumulative = []
        total = 0
        for c in per_degree:
            total += c
            cumulative.append(total)
        start = max(2, ceil(dmax / 2))
        window = list(range(start, dmax + 1))
        logs = {d: log(cumulative[d - 1]) for d in range(1, dmax + 1)}
        _, raw = _ls_fit([log(d) for d in window], [logs[d] for d in window])
        succ = [(logs[d] - logs[d - 1]) / (log(d) - log(d - 1)) for d in window]
        intercept, _ = _ls_fit([1.0 / d for d in window], succ)
        return GrowthReport(
            degrees=degrees,
            per_degree=per_degree,
            cumulative=tuple(cumulative),
            window=(start, dmax),
            loglog_slope=raw,
            slope=intercept,
        )

    # -- embedding

    def embed_check(self) -> EmbedReport:
        """Every adapted basis pair must satisfy
        ``nf(x_i' x_j - x_j' x_i) = [x_i,x_j]'`` and the dotted letters are
        pairwise distinct normal monomials."""
        failures: list[tuple[str, str, str, str]] = []
        checked = 0
        for i in range(1, self.dim + 1):
            if not self.is_normal(EnvelopeMonomial(i)):
                failures.append((self.label(i), "", "degree-1 letter not normal", ""))
        for i in range(1, self.dim + 1):
            for j in range(i + 1, self.dim + 1):
                lhs: EnvElement = {}
                _env_put(lhs, EnvelopeMonomial(i, (j,)), Fraction(1))
                _env_put(lhs, EnvelopeMonomial(j, (i,)), Fraction(-1))
                got = self.normal_form(lhs)
                expected = self.dotted(self.algebra.bracket_basis(i, j))
                checked += 1
                if got != expected:
                    failures.append(
                        (
                            self.label(i),
                            self.label(j),
                            self.element_str(got),
                            self.element_str(expected),
                        )
                    )
        return EmbedReport(checked=checked, failures=failures)

    # -- randomized strategy agreement

    def strategy_agreement(
        self, words: int, seed: int, max_degree: int = 6
    ) -> StrategyAgreementReport:
        rng = random.Random(seed)
        disagreements = 0
        for _ in range(words):
            degree = rng.randint(1, max_degree)
            dot = rng.randint(1, self.dim)
            tail = tuple(sorted(rng.randint(1, self.dim) for _ in range(degree - 1)))
            element = {EnvelopeMonomial(dot, tail): Fraction(1)}
            if self.normal_form(element, "leftmost") != self.normal_form(element, "rightmost"):
                disagreements += 1
        return StrategyAgreementReport(seed=seed, words=words, disagreements=disagreements)

    # -- input in original coordinates

    def element_from_original(
        self, terms: Iterable[tuple[Fraction, int, Sequence[int]]]
    ) -> EnvElement:
        """Build an element from (coefficient, dotted original index, plain
        original indices) triples, expanding multilinearly through the
        basis adaptation."""
        out: EnvElement = {}
        for coeff, dot_idx, tail_idxs in terms:
            dot_vec = self.split.to_adapted({dot_idx: Fraction(1)})
            parts: list[tuple[Fraction, int, tuple[int, ...]]] = [
                (coeff * c, i, ()) for i, c in sorted(dot_vec.items())
            ]
            for t in tail_idxs:
                t_vec = sorted(self.split.to_adapted({t: Fraction(1)}).items())
                parts = [
                    (c * tc, dot, tail + (ti,))
                    for c, dot, tail in parts
                    for ti, tc in t_vec
                ]
            for c, dot, tail in parts:
                _env_put(out, env_monomial(dot, tail), c)
        return out


def _drop_one(tail: tuple[int, ...], letter: int) -> tuple[int, ...]:
    out = list(tail)
    out.remove(letter)
    return tuple(out)
