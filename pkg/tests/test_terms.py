"""Term construction and the reverse lexicographic order."""

import pytest
from hypothesis import given, strategies as st

from orekit.termorder import (Term, LaurentTerm, BOTTOM, compare_revlex,
                              revlex_key, min_term, format_term, parse_term)


def T(**kw):
    return Term.from_dict({int(k[1:]): v for k, v in kw.items()})


def LT(**kw):
    return LaurentTerm.from_dict({int(k[1:]): v for k, v in kw.items()})


class TestConstruction:
    def test_one(self):
        assert Term.one().is_one()
        assert Term.one().total_degree() == 0
        assert Term.var(0, 0) == Term.one()

    def test_zero_exponents_dropped(self):
        assert Term.from_dict({0: 2, 1: 0}) == Term.var(0, 2)

    def test_indices_must_increase(self):
        with pytest.raises(ValueError):
            Term(((1, 1), (0, 1)))
        with pytest.raises(ValueError):
            Term(((0, 1), (0, 1)))

    def test_plain_rejects_negative(self):
        with pytest.raises(ValueError):
            Term.var(0, -1)
        assert LaurentTerm.var(0, -1).exp(0) == -1

    def test_mul_merges_exponents(self):
        assert T(x0=1, x1=2).mul(T(x0=3)) == T(x0=4, x1=2)
        assert LT(x0=1).mul(LT(x0=-1)) == LaurentTerm.one()

    def test_pow_and_inverse(self):
        assert T(x0=2, x1=1).pow(3) == T(x0=6, x1=3)
        assert LT(x0=2).inverse() == LT(x0=-2)
        with pytest.raises(ValueError):
            T(x0=1).inverse()
        with pytest.raises(ValueError):
            T(x0=1).pow(-1)

    def test_split_at(self):
        low, high = T(x0=1, x1=2, x2=3).split_at(2)
        assert low == T(x0=1, x1=2)
        assert high == T(x2=3)

    def test_format_parse_roundtrip(self):
        for t in (Term.one(), T(x0=1), T(x0=2, x2=1), LT(x0=-1, x1=2)):
            laurent = isinstance(t, LaurentTerm)
            assert parse_term(format_term(t), laurent=laurent) == t
        assert format_term(T(x0=2, x1=1)) == "x0^2*x1"
        with pytest.raises(ValueError):
            parse_term("y3")


class TestOrder:
    def test_greatest_variable_decides(self):
        # any power of a lower variable stays below the next variable
        assert T(x0=5) < T(x1=1)
        assert T(x0=1, x1=1) < T(x1=2)
        assert T(x0=1) < T(x0=2)
        assert Term.one() < T(x0=1)

    def test_chain(self):
        chain = [Term.one(), T(x0=1), T(x0=2), T(x1=1), T(x0=1, x1=1),
                 T(x1=2), T(x2=1)]
        for a, b in zip(chain, chain[1:]):
            assert a < b and b > a and not b < a

    def test_bottom_below_everything(self):
        assert BOTTOM < Term.one()
        assert BOTTOM < LT(x0=-5)
        assert not BOTTOM < BOTTOM
        assert BOTTOM <= BOTTOM
        assert compare_revlex(BOTTOM, BOTTOM) == 0
        assert compare_revlex(BOTTOM, Term.one()) == -1

    def test_laurent_negative(self):
        assert LT(x0=-1) < LaurentTerm.one() < LT(x0=1)
        assert LT(x1=-1) < LT(x0=3, x1=-1) < LT(x0=-4)

    def test_revlex_key_matches(self):
        terms = [Term.one(), T(x0=3), T(x1=1), T(x0=1, x1=2), T(x0=2, x1=1)]
        by_cmp = sorted(terms)
        by_key = sorted(terms, key=lambda t: revlex_key(t, 2))
        assert by_cmp == by_key


small_exps = st.dictionaries(st.integers(0, 3), st.integers(1, 4),
                             max_size=3)
laurent_exps = st.dictionaries(st.integers(0, 3),
                               st.integers(-4, 4).filter(bool), max_size=3)


@given(small_exps, small_exps)
def test_order_total_and_antisymmetric(d1, d2):
    t, u = Term.from_dict(d1), Term.from_dict(d2)
    c = compare_revlex(t, u)
    assert c == -compare_revlex(u, t)
    assert (c == 0) == (t == u)


@given(small_exps, small_exps, small_exps)
def test_order_transitive(d1, d2, d3):
    a, b, c = (Term.from_dict(d) for d in (d1, d2, d3))
    if a <= b and b <= c:
        assert a <= c


@given(laurent_exps, laurent_exps, laurent_exps)
def test_order_translation_invariant(d1, d2, d3):
    t, u = LaurentTerm.from_dict(d1), LaurentTerm.from_dict(d2)
    v = LaurentTerm.from_dict(d3)
    assert (t < u) == (t.mul(v) < u.mul(v))


@given(st.lists(small_exps, min_size=1, max_size=6))
def test_min_term_agrees_with_comparisons(ds):
    terms = [Term.from_dict(d) for d in ds]
    assert min_term(terms) == sorted(terms)[0]


@given(st.lists(laurent_exps, min_size=1, max_size=6))
def test_min_term_laurent(ds):
    terms = [LaurentTerm.from_dict(d) for d in ds]
    assert min_term(terms) == sorted(terms)[0]


def test_min_term_empty():
    with pytest.raises(ValueError):
        min_term([])
