import itertools
import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from springer_k.polynomials import (
    Polynomial,
    TruncatedPowerSeries,
    VariableSpace,
    binomial,
    complete_symmetric,
    elementary_symmetric,
    embed,
    series_coefficient,
    substitute,
)

SPACE = VariableSpace.of(x=3, u=2)
x1, x2, x3 = SPACE.gens("x")
u1, u2 = SPACE.gens("u")
DOCS = Path(__file__).resolve().parents[1] / "docs"


def e_oracle(k, args, space):
    total = space.zero()
    for combo in itertools.combinations(args, k):
        term = space.one()
        for a in combo:
            term = term * a
        total = total + term
    return total


def h_oracle(k, args, space):
    total = space.zero() if k else space.one()
    if k == 0:
        return total
    for combo in itertools.combinations_with_replacement(args, k):
        term = space.one()
        for a in combo:
            term = term * a
        total = total + term
    return total


def test_ring_examples():
    assert (x1 + u1) + (x1 - u1) == x1.scale(2)
    assert (x1 * 0).is_zero()
    assert (x1 - u1) * (x1 + u1) == x1 ** 2 - u1 ** 2


def test_mismatched_spaces_rejected():
    other = VariableSpace.of(x=3)
    with pytest.raises(ValueError):
        x1 + other.var("x1")


def test_substitute_examples():
    target = VariableSpace.of(u=2)
    assert substitute(x1 - u1, {"x1": u1}).is_zero()
    h2 = complete_symmetric(2, [u1, u2])
    assert substitute(h2, {"u1": 1, "u2": 1}, VariableSpace.of()).constant_value() == 3
    assert substitute(x1 * x2, {"x1": u2, "x2": u1}) == u1 * u2
    assert substitute(x1 * x2, {"x1": target.var("u2"), "x2": target.var("u1"), "u1": target.var("u1"), "u2": target.var("u2")}, target) == target.var("u1") * target.var("u2")


def test_substitute_total_rejects_unmapped():
    target = VariableSpace.of(u=2)
    with pytest.raises(KeyError):
        substitute(x1 * u1, {"u1": target.var("u1")}, target, total=True)


def test_elementary_examples():
    assert elementary_symmetric(2, [x1, x2, x3]) == x1 * x2 + x1 * x3 + x2 * x3
    assert elementary_symmetric(0, [x1, x2]) == 1
    assert elementary_symmetric(4, [x1, x2, x3]).is_zero()


def test_complete_examples():
    assert complete_symmetric(2, [u1, u2]) == u1 ** 2 + u1 * u2 + u2 ** 2
    assert complete_symmetric(2, [u1, u1]) == (u1 ** 2).scale(3)
    assert complete_symmetric(1, [], SPACE).is_zero()
    assert complete_symmetric(0, [], SPACE) == 1
    with pytest.raises(ValueError):
        complete_symmetric(1, [])


def test_symmetric_functions_match_enumeration():
    args = [x1, x2, x3, u1, u2]
    for m in range(len(args) + 1):
        for k in range(6):
            assert elementary_symmetric(k, args[:m], SPACE) == e_oracle(k, args[:m], SPACE)
            assert complete_symmetric(k, args[:m], SPACE) == h_oracle(k, args[:m], SPACE)


def test_symmetric_functions_are_symmetric():
    args = [x1, x2, u1, x3]
    for perm in itertools.permutations(args):
        for k in range(4):
            assert elementary_symmetric(k, list(perm)) == elementary_symmetric(k, args)
            assert complete_symmetric(k, list(perm)) == complete_symmetric(k, args)


def test_newton_style_identity():
    space = VariableSpace.of(a=6)
    gens = space.gens("a")
    for m in range(7):
        for d in range(1, 7):
            total = space.zero()
            for k in range(d + 1):
                total = total + (elementary_symmetric(k, gens[:m], space) * complete_symmetric(d - k, gens[:m], space)).scale((-1) ** k)
            assert total.is_zero(), (m, d)


def test_series_coefficient_examples():
    assert series_coefficient([x1], [], 1) == x1
    assert series_coefficient([], [u1], 2) == u1 ** 2
    assert series_coefficient([x1, x2], [u1], 2) == x1 * x2 - (x1 + x2) * u1 + u1 ** 2


def test_series_coefficient_bridge():
    space = VariableSpace.of(a=4, b=4)
    A, B = space.gens("a"), space.gens("b")
    for na in range(5):
        for nb in range(5):
            for d in range(7):
                expected = space.zero()
                for k in range(d + 1):
                    expected = expected + (e_oracle(k, A[:na], space) * h_oracle(d - k, B[:nb], space)).scale((-1) ** (d - k))
                assert series_coefficient(A[:na], B[:nb], d, space) == expected


def test_power_series_truncation():
    s = TruncatedPowerSeries.linear(u1, 3) * TruncatedPowerSeries.inverse_linear(u1, 3)
    assert s[0] == 1 and all(s[d].is_zero() for d in (1, 2, 3))
    with pytest.raises(IndexError):
        s[4]


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    q, d, k = 3, 2, 1
    assert binomial(q + d - k - 1, q - 1) == 3


def test_text_form():
    p = (x1 ** 2) * u1 - (u1 ** 2).scale(3)
    assert p.to_text() == "x1^2*u1 - 3*u1^2"
    assert SPACE.zero().to_text() == "0"
    assert (x1.scale(Fraction(-1, 2)) + 5).to_text() == "-1/2*x1 + 5"
    assert x1.to_text({"x": "y"}) == "y1"


def test_json_form_matches_schema():
    p = (x1 ** 2) * u1 - (u1 ** 2).scale(3)
    terms = json.loads(p.to_json())
    assert terms == [{"coeff": "1", "monomial": {"x1": 2, "u1": 1}}, {"coeff": "-3", "monomial": {"u1": 2}}]
    jsonschema.validate(terms, json.loads((DOCS / "polynomial.schema.json").read_text()))
    assert Polynomial.from_terms(SPACE, terms) == p


def test_embed_renames_family():
    flag = VariableSpace.of(x=3, t=2)
    assert embed(x1 + u2, flag, {"u": "t"}) == flag.var("x1") + flag.var("t2")
    assert embed(SPACE.const(4), flag) == 4


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.tuples(*[st.integers(0, 2)] * SPACE.nvars)


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(monos, coeffs, max_size=4))
    return Polynomial(SPACE, terms)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p - p).is_zero()
    assert all(c != 0 for c in (p * q).terms.values())


@settings(max_examples=60, deadline=None)
@given(polys())
def test_text_round_trip(p):
    assert Polynomial.parse(SPACE, p.to_text()) == p
    assert Polynomial.from_terms(SPACE, p.to_terms()) == p
