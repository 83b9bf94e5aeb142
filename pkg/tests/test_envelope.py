import random
from fractions import Fraction

import pytest

from permalg.envelope import (
    AlgebraFormatError,
    Envelope,
    EnvelopeMonomial,
    InvalidLieAlgebra,
    MetabelianLieAlgebra,
    env_monomial,
    load_algebra,
    split_basis,
)
from permalg.parser import parse_envelope_expr

HEISENBERG = {
    "dim": 3,
    "basis": ["e1", "e2", "e3"],
    "brackets": [{"i": 1, "j": 2, "value": [[3, "1"]]}],
}
SL2 = {
    "dim": 3,
    "basis": ["e1", "e2", "e3"],
    "brackets": [
        {"i": 1, "j": 2, "value": [[3, "1"]]},
        {"i": 1, "j": 3, "value": [[1, "-2"]]},
        {"i": 2, "j": 3, "value": [[2, "2"]]},
    ],
}


def heisenberg():
    return MetabelianLieAlgebra.from_dict(HEISENBERG)


def abelian(dim):
    return MetabelianLieAlgebra(dim)


def random_metabelian(dim: int, rng: random.Random) -> MetabelianLieAlgebra:
    """Seeded valid metabelian algebras from two stock families."""
    brackets = {}
    if rng.random() < 0.5 and dim >= 2:
        # one outer derivation acting on an abelian ideal spanned by e2..ed
        for j in range(2, dim + 1):
            vec = {
                b: Fraction(rng.randint(-3, 3))
                for b in range(2, dim + 1)
                if rng.random() < 0.6
            }
            vec = {b: c for b, c in vec.items() if c}
            if vec:
                brackets[(1, j)] = vec
    else:
        # two-step nilpotent: brackets of the first block land in the center
        m = max(2, dim - 1)
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                vec = {
                    b: Fraction(rng.randint(-2, 2))
                    for b in range(m + 1, dim + 1)
                    if rng.random() < 0.8
                }
                vec = {b: c for b, c in vec.items() if c}
                if vec:
                    brackets[(i, j)] = vec
    return MetabelianLieAlgebra(dim, brackets=brackets)


def test_validate_examples():
    assert heisenberg().validate().ok
    assert abelian(3).validate().ok
    report = MetabelianLieAlgebra.from_dict(SL2).validate()
    assert not report.ok
    assert not report.jacobi_violations  # sl2 is a Lie algebra
    assert report.metabelian_violations


def test_from_dict_validation_errors():
    with pytest.raises(AlgebraFormatError, match="i < j"):
        MetabelianLieAlgebra.from_dict(
            {"dim": 2, "basis": ["a", "b"], "brackets": [{"i": 2, "j": 1, "value": []}]}
        )
    with pytest.raises(AlgebraFormatError, match="duplicate"):
        MetabelianLieAlgebra.from_dict(
            {
                "dim": 2,
                "basis": ["a", "b"],
                "brackets": [
                    {"i": 1, "j": 2, "value": [[1, "1"]]},
                    {"i": 1, "j": 2, "value": [[2, "1"]]},
                ],
            }
        )
    with pytest.raises(AlgebraFormatError, match="rational"):
        MetabelianLieAlgebra.from_dict(
            {"dim": 2, "basis": ["a", "b"], "brackets": [{"i": 1, "j": 2, "value": [[1, "1.5"]]}]}
        )
    with pytest.raises(AlgebraFormatError, match="unique"):
        MetabelianLieAlgebra(2, labels=["a", "a"])


def test_envelope_rejects_invalid():
    with pytest.raises(InvalidLieAlgebra):
        Envelope(MetabelianLieAlgebra.from_dict(SL2))


def test_split_basis_examples():
    split = split_basis(heisenberg())
    assert split.algebra.labels == ("e3", "e1", "e2")
    assert split.y_count == 1
    assert not split.changed_basis  # reordering only
    split_ab = split_basis(abelian(3))
    assert split_ab.y_count == 0
    affine = MetabelianLieAlgebra(2, ["e1", "e2"], {(1, 2): {2: 1}})
    split_aff = split_basis(affine)
    assert split_aff.algebra.labels == ("e2", "e1")
    assert split_aff.y_count == 1


def test_split_basis_change_when_needed():
    skew = MetabelianLieAlgebra(2, ["e1", "e2"], {(1, 2): {1: 1, 2: 1}})
    split = split_basis(skew)
    assert split.changed_basis
    assert split.y_count == 1
    assert split.algebra.labels[0] == "y1"
    # the adapted algebra is still a valid metabelian Lie algebra
    assert split.algebra.validate().ok


def test_relations_heisenberg():
    env = Envelope(heisenberg())
    rendered = [env.rule_str(r) for r in env.rules()]
    assert rendered == [
        "d(e3)*e1 -> 0",
        "d(e3)*e2 -> 0",
        "d(e2)*e1 -> d(e1)*e2 - d(e3)",
    ]


def test_relations_abelian():
    env = Envelope(abelian(3))
    rendered = [env.rule_str(r) for r in env.rules()]
    assert rendered == [
        "d(e2)*e1 -> d(e1)*e2",
        "d(e3)*e1 -> d(e1)*e3",
        "d(e3)*e2 -> d(e2)*e3",
    ]


def test_relations_affine_sign():
    # [e2,e1] = -e2 goes into the rule verbatim, so the reduct is -d(e2)
    env = Envelope(MetabelianLieAlgebra(2, ["e1", "e2"], {(1, 2): {2: 1}}))
    rendered = [env.rule_str(r) for r in env.rules()]
    assert rendered == ["d(e2)*e1 -> -d(e2)"]


def test_normal_form_examples():
    env = Envelope(heisenberg())
    element = env.element_from_original(parse_envelope_expr("d(e2)*e1", ("e1", "e2", "e3")))
    nf = env.normal_form(element)
    assert env.element_str(nf) == "d(e1)*e2 - d(e3)"
    element = env.element_from_original(parse_envelope_expr("d(e2)*e1*e1", ("e1", "e2", "e3")))
    assert env.element_str(env.normal_form(element)) == "d(e1)*e1*e2"
    normal = {env_monomial(2, (2, 3)): Fraction(1)}
    assert env.normal_form(normal) == normal


def test_normal_form_strategies_agree_on_corpus(rng):
    algebras = [heisenberg(), abelian(3)] + [random_metabelian(d, rng) for d in (2, 3, 4, 5)]
    for algebra in algebras:
        env = Envelope(algebra)
        for _ in range(40):
            degree = rng.randint(1, 6)
            dot = rng.randint(1, env.dim)
            tail = tuple(sorted(rng.randint(1, env.dim) for _ in range(degree - 1)))
            element = {EnvelopeMonomial(dot, tail): Fraction(1)}
            left = env.normal_form(element, "leftmost")
            right = env.normal_form(element, "rightmost")
            assert left == right
            for m in left:
                assert env.is_normal(m)


def test_normal_form_terminates_at_degree_ten(rng):
    env = Envelope(random_metabelian(4, rng))
    for _ in range(20):
        dot = rng.randint(1, env.dim)
        tail = tuple(sorted(rng.randint(1, env.dim) for _ in range(9)))
        nf = env.normal_form({EnvelopeMonomial(dot, tail): Fraction(1)})
        for m in nf:
            assert env.is_normal(m)


def test_check_compositions():
    assert Envelope(heisenberg()).check_compositions().all_trivial
    assert Envelope(abelian(3)).check_compositions().all_trivial


def test_compositions_trivial_on_random_corpus(rng):
    for d in (2, 3, 4, 5):
        env = Envelope(random_metabelian(d, rng))
        assert env.check_compositions().all_trivial


def test_basis_up_to_heisenberg():
    env = Envelope(heisenberg())
    basis = env.basis_up_to(8)
    assert {env.monomial_str(m) for m in basis[1]} == {"d(e1)", "d(e2)", "d(e3)"}
    for n in range(2, 9):
        assert len(basis[n]) == n + 1
        for m in basis[n]:
            lbl = env.label(m.dot)
            tail_lbls = [env.label(i) for i in m.tail]
            assert lbl in ("e1", "e2")
            if lbl == "e2":
                assert all(t == "e2" for t in tail_lbls)
            else:
                assert all(t in ("e1", "e2") for t in tail_lbls)
    counts = [env.degree_count(n) for n in range(1, 9)]
    assert counts == [3, 3, 4, 5, 6, 7, 8, 9]


def test_basis_abelian_counts():
    env = Envelope(abelian(3))
    for d in range(1, 7):
        expected = (d + 1) * (d + 2) // 2 if d >= 2 else 3
        assert len(env.basis_degree(d)) == expected
        assert env.degree_count(d) == expected


def test_degree_count_matches_enumeration(rng):
    for d in (2, 3, 4, 5):
        env = Envelope(random_metabelian(d, rng))
        for n in range(1, 7):
            assert env.degree_count(n) == len(env.basis_degree(n))


def test_gk_estimates():
    heis = Envelope(heisenberg())
    g = heis.gk_estimate(12)
    assert abs(g.slope - 2) <= 0.25
    ab3 = Envelope(abelian(3))
    assert abs(ab3.gk_estimate(12).slope - 3) <= 0.25
    ab1 = Envelope(abelian(1))
    assert abs(ab1.gk_estimate(12).slope - 1) <= 0.25
    assert g.cumulative[-1] == sum(g.per_degree)
    with pytest.raises(ValueError):
        heis.gk_estimate(3)


def test_embed_check_examples():
    assert Envelope(heisenberg()).embed_check().ok
    assert Envelope(abelian(3)).embed_check().ok
    affine = Envelope(MetabelianLieAlgebra(2, ["e1", "e2"], {(1, 2): {2: 1}}))
    assert affine.embed_check().ok


def test_embed_pair_reduction():
    env = Envelope(heisenberg())
    idx = {lbl: i + 1 for i, lbl in enumerate(env.algebra.labels)}
    lhs = {
        EnvelopeMonomial(idx["e1"], (idx["e2"],)): Fraction(1),
        EnvelopeMonomial(idx["e2"], (idx["e1"],)): Fraction(-1),
    }
    nf = env.normal_form(lhs)
    assert nf == {EnvelopeMonomial(idx["e3"]): Fraction(1)}


def test_embed_check_on_random_corpus(rng):
    for d in (2, 3, 4, 5):
        env = Envelope(random_metabelian(d, rng))
        assert env.embed_check().ok


def test_element_from_original_with_changed_basis():
    skew = MetabelianLieAlgebra(2, ["e1", "e2"], {(1, 2): {1: 1, 2: 1}})
    env = Envelope(skew)
    element = env.element_from_original(parse_envelope_expr("d(e1)*e2", ("e1", "e2")))
    nf = env.normal_form(element)
    # embedding consistency: nf(d(e1)*e2 - d(e2)*e1) must be the dotted bracket
    other = env.element_from_original(parse_envelope_expr("d(e2)*e1", ("e1", "e2")))
    diff = dict(nf)
    for m, c in env.normal_form(other).items():
        s = diff.get(m, Fraction(0)) - c
        if s:
            diff[m] = s
        elif m in diff:
            del diff[m]
    expected = env.normal_form(
        env.element_from_original([(Fraction(1), 1, ()), (Fraction(1), 2, ())])
    )
    assert diff == expected  # [e1,e2] = e1 + e2


def test_load_algebra(tmp_path):
    path = tmp_path / "alg.json"
    path.write_text('{"dim": 2, "basis": ["a", "b"], "brackets": []}')
    algebra = load_algebra(path)
    assert algebra.dim == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(AlgebraFormatError):
        load_algebra(bad)
