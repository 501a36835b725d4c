"""Normed spaces: norm recipes, vector arithmetic, and the axiom suite."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ultrachain import (
    DomainMismatch,
    NormSpec,
    PadicField,
    SpecMismatch,
    Vector,
    add,
    check_norm_axioms,
    norm,
    parse_norm,
    parse_vector,
    scale,
    sub,
    vector,
    zero_vector,
)
from ultrachain.spaces import format_vector

F = Fraction
SUP = NormSpec()
L1 = NormSpec("l1")
LINF = NormSpec("linf")


# ---------------------------------------------------------------------------
# NormSpec
# ---------------------------------------------------------------------------


def test_norm_spec_defaults_to_unweighted_sup():
    assert SUP.kind == "sup"
    assert SUP.weights == ()
    assert SUP.weight(0) == 1 and SUP.weight(5) == 1
    assert SUP.selector() == "sup"


def test_norm_spec_weights_are_fractions():
    spec = NormSpec("sup", (1, "1/3"))
    assert spec.weights == (F(1), F(1, 3))
    assert spec.selector() == "sup:1,1/3"
    assert spec.weight(1) == F(1, 3)


def test_parse_norm_round_trip():
    for selector in ("sup", "l1", "linf", "sup:1,1/3", "sup:2"):
        assert parse_norm(selector).selector() == selector


def test_norm_spec_rejects_bad_input():
    with pytest.raises(ValueError):
        NormSpec("l2")
    with pytest.raises(ValueError):
        NormSpec("l1", (F(1),))
    with pytest.raises(ValueError):
        NormSpec("sup", (F(0),))
    with pytest.raises(ValueError):
        NormSpec("sup", (F(-1, 2),))


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


def test_vector_arithmetic(p3):
    x = vector(p3, (1, F(1, 3)))
    y = vector(p3, (2, 3))
    assert add(x, y).coords == (F(3), F(10, 3))
    assert sub(x, y).coords == (F(-1), F(-8, 3))
    assert scale(F(3), x).coords == (F(3), F(1))
    assert zero_vector(p3, 2).coords == (F(0), F(0))


def test_vector_space_mismatches(p2, p3):
    with pytest.raises(DomainMismatch):
        add(vector(p2, (1,)), vector(p3, (1,)))
    with pytest.raises(DomainMismatch):
        sub(vector(p3, (1,)), vector(p3, (1, 2)))


def test_vector_formatting(p3, tadic3):
    x = vector(p3, (1, F(-1, 2)))
    assert str(x) == "(1, -1/2)"
    assert parse_vector(p3, format_vector(x)) == x
    u = vector(tadic3, ("1 + t", "t^-1"))
    assert str(u) == "(1 + t, t^-1)"
    assert parse_vector(tadic3, str(u)) == u


def test_parse_vector_rejects_empty(p3):
    with pytest.raises(ValueError):
        parse_vector(p3, "()")


def test_vector_str_round_trip_is_field_aware(rationals):
    v = parse_vector(rationals, "(3/4, -2, 0)")
    assert v.coords == (F(3, 4), F(-2), F(0))
    assert v.dim == 3


# ---------------------------------------------------------------------------
# norms
# ---------------------------------------------------------------------------


def test_sup_norm_over_padic(p2):
    x = vector(p2, (2, 3))
    assert norm(x, SUP) == 1  # max{1/2, 1}
    assert norm(vector(p2, (4, 8)), SUP) == F(1, 4)
    assert norm(zero_vector(p2, 3), SUP) == 0


def test_weighted_sup_norm(p2):
    spec = NormSpec("sup", (F(1), F(1, 3)))
    x = vector(p2, (2, 1))
    assert norm(x, spec) == F(1, 2)  # max{1 * 1/2, 1/3 * 1}
    y = vector(p2, (4, 1))
    assert norm(y, spec) == F(1, 3)


def test_l1_and_linf_over_rationals(rationals):
    x = vector(rationals, (F(3), F(-4)))
    assert norm(x, L1) == 7
    assert norm(x, LINF) == 4
    assert norm(x, SUP) == 4  # unweighted sup == linf on the baseline


def test_archimedean_norms_rejected_on_ultrametric_backends(p3):
    with pytest.raises(SpecMismatch):
        norm(vector(p3, (1,)), L1)
    with pytest.raises(SpecMismatch):
        norm(vector(p3, (1,)), LINF)


def test_weight_count_must_match_dimension(p3):
    spec = NormSpec("sup", (F(1), F(2)))
    with pytest.raises(ValueError):
        norm(vector(p3, (1,)), spec)


def test_norm_homogeneity_exact(p5):
    spec = NormSpec("sup", (F(2), F(1, 5)))
    x = vector(p5, (F(3), F(1, 5)))
    c = F(50, 7)
    assert norm(scale(c, x), spec) == p5.abs_value(c) * norm(x, spec)


@given(
    st.lists(st.fractions(max_denominator=100), min_size=2, max_size=2),
    st.lists(st.fractions(max_denominator=100), min_size=2, max_size=2),
)
def test_sup_norm_is_ultrametric_on_padic(a, b):
    p3 = PadicField(3)
    x, y = vector(p3, a), vector(p3, b)
    assert norm(add(x, y), SUP) <= max(norm(x, SUP), norm(y, SUP))


# ---------------------------------------------------------------------------
# norm axiom suite
# ---------------------------------------------------------------------------


def _grid_vectors(field, scalars, dim):
    return [Vector(field, coords) for coords in product(scalars, repeat=dim)]


def test_norm_axioms_pass_on_padic_sup(p2):
    scalars = [F(0), F(1), F(-1), F(2), F(1, 2)]
    vectors = _grid_vectors(p2, scalars, 2)
    report = check_norm_axioms(SUP, p2, vectors, scalars)
    assert report.passed
    assert report.kind == "norm"
    for name in ("definiteness", "homogeneity", "subadditivity", "ultrametric", "isosceles"):
        clause = report[name]
        assert clause.applicable and clause.holds


def test_norm_axioms_isosceles_counts_unequal_pairs_only(p3):
    vectors = [vector(p3, (1,)), vector(p3, (3,))]
    report = check_norm_axioms(SUP, p3, vectors)
    # norms are 1 and 1/3: of the 4 ordered pairs, 2 have unequal norms
    assert report["isosceles"].checked == 2
    assert report.passed


def test_norm_axioms_on_rationals_mark_ultrametric_inapplicable(rationals):
    scalars = [F(0), F(1), F(-2), F(1, 2)]
    vectors = _grid_vectors(rationals, scalars, 2)
    for spec in (L1, LINF):
        report = check_norm_axioms(spec, rationals, vectors, scalars)
        assert report.passed
        ultra = report["ultrametric"]
        assert not ultra.applicable and ultra.holds is None
        assert "NOT-APPLICABLE" in ultra.note


def test_norm_axioms_catch_a_broken_norm():
    # a backend whose magnitude vanishes everywhere must fail definiteness
    class BrokenField(PadicField):
        def abs_value(self, a):
            return F(0)

    broken = BrokenField(2)
    report = check_norm_axioms(SUP, broken, [vector(broken, (1,))])
    assert not report.passed
    assert not report["definiteness"].holds


def test_norm_axioms_over_tadic(tadic3):
    scalars = [tadic3.coerce(s) for s in ("0", "1", "t", "1 + t", "2", "t^-1")]
    vectors = _grid_vectors(tadic3, scalars, 1)
    report = check_norm_axioms(SUP, tadic3, vectors, scalars)
    assert report.passed
    assert report["ultrametric"].checked == len(vectors) ** 2
