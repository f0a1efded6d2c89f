"""Skew polynomial arithmetic: products, conjugations, valuations."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from orekit.rings import build_ring
from orekit.termorder import Term, LaurentTerm, BOTTOM
from orekit.orecore import (SpecError, VarRule, SkewPolyRingSpec,
                            enumerate_terms, terms_in_box, geom_degree_sum,
                            alpha_power_closed, padic_valuation, digit_sum,
                            padic_margin, fib_power, order_of_alpha,
                            laurent_localize, regularity_bounded)
from orekit.family5 import Family5Params, family5_spec


def plain_spec(ring_name="zmod:6", nvars=1):
    return SkewPolyRingSpec(build_ring(ring_name), nvars)


def shear_spec():
    return family5_spec(Family5Params(2, 2, 2, 1, 1))


def inner_spec():
    # x a = a x + (c a - a c) for a fixed noncentral c: a true derivation
    tri = build_ring("tri2:zmod:2")
    c = (0, 0, 1)
    delta = {a: tri.sub(tri.mul(c, a), tri.mul(a, c)) for a in tri.elements}
    return SkewPolyRingSpec(tri, 1, {0: VarRule(delta_coeff=delta)},
                            name="inner shift")


def swap_laurent_spec():
    r = build_ring("product:zmod:2,zmod:2")
    swap = {a: (a[1], a[0]) for a in r.elements}
    return SkewPolyRingSpec(r, 2, {0: VarRule(coeff_map=swap,
                                              coeff_map_inv=swap)},
                            mode="laurent", name="swap laurent")


class TestBasics:
    def test_parse_format_roundtrip(self):
        spec = plain_spec("zmod:6", 2)
        for text in ("0", "1", "x0", "2*x0^2*x1 + x0 + 5"):
            f = spec.parse(text)
            assert spec.parse(repr(f)) == f

    def test_add_sub_neg(self):
        spec = plain_spec()
        f, g = spec.parse("2*x0 + 1"), spec.parse("3*x0 + 5")
        assert f + g == spec.parse("5*x0")
        assert f - f == spec.zero_poly()
        assert -f == spec.parse("4*x0 + 5")

    def test_scalar_and_dunder_mul(self):
        spec = plain_spec()
        f = spec.parse("x0 + 3")
        assert 2 * f == spec.parse("2*x0") + spec.parse("6")
        assert f * 2 == spec.parse("2*x0")  # 3*2 = 0 mod 6

    def test_leading_data(self):
        spec = plain_spec("zmod:6", 2)
        f = spec.parse("2*x0^3 + 3*x1 + 1")
        lt, lc = f.leading_data()
        assert lt == Term.var(1) and lc == 3
        assert spec.zero_poly().leading_data() == (BOTTOM, 0)

    def test_degrees(self):
        spec = plain_spec("zmod:6", 2)
        f = spec.parse("x0^2*x1 + x0^3")
        assert f.deg_in(0) == 3 and f.deg_in(1) == 1
        assert f.total_degree() == 3
        assert spec.zero_poly().total_degree() == -1

    def test_coefficient_access(self):
        spec = plain_spec()
        f = spec.parse("2*x0^2 + 3")
        assert f.coefficient(Term.var(0, 2)) == 2
        assert f.coefficient(Term.var(0)) == 0
        assert f.coefficient_set() == {2, 3}
        assert f.map_coeffs(lambda c: (2 * c) % 6) == spec.parse("4*x0^2")


class TestFrozenProducts:
    def test_shear_rule(self):
        spec = shear_spec()
        y_times_x = spec.multiply(spec.var(1), spec.var(0))
        assert y_times_x == spec.parse("x0*x1 + 2*x0^2*x1")

    def test_shear_square(self):
        spec = shear_spec()
        xy = spec.parse("x0*x1")
        assert spec.multiply(xy, xy) == spec.parse(
            "x0^2*x1^2 + 2*x0^3*x1^2")

    def test_inner_derivation_rule(self):
        spec = inner_spec()
        tri = spec.ring
        c = (0, 0, 1)
        for a in tri.elements:
            got = spec.multiply(spec.var(0), spec.const(a))
            delta = tri.sub(tri.mul(c, a), tri.mul(a, c))
            want = spec.poly({Term.var(0): a, Term.one(): delta})
            assert got == want

    def test_laurent_inverse_cancels(self):
        spec = swap_laurent_spec()
        x, xinv = spec.var(0), spec.var(0, -1)
        assert spec.multiply(x, xinv) == spec.one()
        assert spec.multiply(xinv, x) == spec.one()

    def test_laurent_conjugation(self):
        spec = swap_laurent_spec()
        a = spec.ring.parse_element("(1,0)")
        got = spec.multiply(spec.var(0), spec.const(a))
        swapped = spec.ring.parse_element("(0,1)")
        assert got == spec.poly({LaurentTerm.var(0): swapped})


def poly_strategy(spec, terms, max_terms=3):
    ring = spec.ring
    pairs = st.lists(st.tuples(st.sampled_from(terms),
                               st.sampled_from(list(ring.elements))),
                     max_size=max_terms)
    return pairs.map(lambda ps: sum((spec.term(t, c) for t, c in ps),
                                    spec.zero_poly()))


SPECS = {
    "shear": (shear_spec(), enumerate_terms(2, 3)),
    "inner": (inner_spec(), enumerate_terms(1, 3)),
    "swap-laurent": (swap_laurent_spec(), enumerate_terms(2, 2, laurent=True)),
}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(SPECS)), st.data())
def test_multiply_associative(key, data):
    spec, terms = SPECS[key]
    polys = poly_strategy(spec, terms)
    f, g, h = data.draw(polys), data.draw(polys), data.draw(polys)
    assert (f * g) * h == f * (g * h)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(SPECS)), st.data())
def test_multiply_distributes(key, data):
    spec, terms = SPECS[key]
    polys = poly_strategy(spec, terms)
    f, g, h = data.draw(polys), data.draw(polys), data.draw(polys)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_laurent_leading_coefficient_law(data):
    # single pair of terms reaches the top slot, so the product's
    # coefficient there is exactly lc(f) * (lt(f) acting on lc(g))
    spec, terms = SPECS["swap-laurent"]
    polys = poly_strategy(spec, terms)
    f, g = data.draw(polys), data.draw(polys)
    if f.is_zero() or g.is_zero():
        return
    tf, cf = f.leading_data()
    tg, cg = g.leading_data()
    top = tf.mul(tg)
    prod = f * g
    assert prod.leading_data()[0] <= top
    expect = spec.ring.mul(cf, spec.conjugate_coeff(tf, cg))
    assert prod.coefficient(top) == expect
    assert (prod.leading_data()[0] == top) == (expect != spec.ring.zero)


# conjugation by the top variable lives on polynomials in the lower ones
LOWER_TERMS = [t for t in enumerate_terms(2, 3) if t.max_var < 1]


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_alpha_inverse_roundtrip(data):
    spec, _ = SPECS["shear"]
    polys = poly_strategy(spec, LOWER_TERMS)
    f = data.draw(polys)
    assert spec.apply_alpha_inv(1, spec.apply_alpha(1, f)) == f


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 4), st.data())
def test_power_endo_is_iterated_alpha(m, data):
    spec, _ = SPECS["shear"]
    polys = poly_strategy(spec, LOWER_TERMS)
    f = data.draw(polys)
    step = f
    for _ in range(m):
        step = spec.apply_alpha(1, step)
    assert spec.apply_power_endo(1, m, f) == step


class TestClosedFormula:
    def test_matches_iteration_small(self):
        spec = shear_spec()
        for n in range(4):
            for m in range(4):
                target = spec.term(Term.var(0, n)) if n else spec.one()
                lhs = alpha_power_closed(n, m, 2, 2, 2, spec=spec)
                assert lhs == spec.apply_power_endo(1, m, target)

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            alpha_power_closed(1, 1, 4, 2, 2)


class TestPadic:
    def test_valuation_brute_force(self):
        for p in (2, 3, 5):
            for n in range(1, 40):
                v, k = 0, n
                while k % p == 0:
                    v, k = v + 1, k // p
                assert padic_valuation(p, n) == v

    def test_factorial_formula(self):
        for p in (2, 3, 5):
            for n in range(1, 30):
                assert padic_valuation(p, math.factorial(n)) \
                    == (n - digit_sum(p, n)) // (p - 1)

    def test_margin_fields(self):
        m = padic_margin(2, 2, 3)
        assert m.value >= 2 + 1
        assert m.factorial_val == (3 - m.digit_sum) // (2 - 1)
        with pytest.raises(ValueError):
            padic_margin(2, 2, 0)
        with pytest.raises(ValueError):
            padic_margin(2, 2, 5)


class TestFib:
    def test_pair_recursion(self):
        fibs = [0, 1]
        while len(fibs) < 20:
            fibs.append(fibs[-1] + fibs[-2])
        for n in range(1, 18):
            assert fib_power(n) == (fibs[n - 1], fibs[n])

    def test_orders(self):
        assert {m: order_of_alpha(m) for m in (2, 3, 5, 10)} \
            == {2: 3, 3: 8, 5: 20, 10: 60}
        assert order_of_alpha(0) == math.inf
        assert order_of_alpha(1) == 1


class TestEnumeration:
    def test_plain_counts(self):
        assert len(enumerate_terms(1, 4)) == 5
        assert len(enumerate_terms(2, 3)) == 10  # C(5, 2)
        assert len(enumerate_terms(3, 2)) == 10  # C(5, 3)

    def test_laurent_counts(self):
        assert len(enumerate_terms(1, 2, laurent=True)) == 5
        terms = enumerate_terms(2, 1, laurent=True)
        assert len(terms) == 5 and LaurentTerm.var(0, -1) in terms

    def test_box(self):
        box = terms_in_box([(0, 2), (0, 1)])
        assert len(box) == 6
        assert Term.from_dict({0: 2, 1: 1}) in box
        lbox = terms_in_box([(-1, 1)], laurent=True)
        assert len(lbox) == 3

    def test_geom_degree_sum(self):
        for e in (2, 3):
            for m in range(5):
                assert geom_degree_sum(m, e) == sum(e ** i for i in range(m))


class TestLocalize:
    def test_fraction_group_basis(self):
        loc = laurent_localize([Term.var(0, 2), Term.var(0, 3)])
        assert loc.basis == [LaurentTerm.var(0)]
        assert loc.expressions == [[2], [3]]

    def test_two_vars(self):
        loc = laurent_localize([Term.from_dict({0: 1, 1: 1}),
                                Term.var(1, 2)])
        assert loc.nvars == 2
        covered = {tuple(v) for v in
                   ([b.exp(0), b.exp(1)] for b in loc.basis)}
        assert len(covered) == 2


class TestRegularity:
    def test_unit_term_regular(self):
        spec = plain_spec("zmod:6")
        res = regularity_bounded(spec, spec.var(0), 3)
        assert res.status == "regular" and res.certified_to is None

    def test_zero_divisor_found(self):
        spec = plain_spec("zmod:6")
        res = regularity_bounded(spec, spec.parse("2*x0 + 4"), 3)
        assert res.status == "zero-divisor"
        assert (res.witness * spec.parse("2*x0 + 4")).is_zero() \
            or (spec.parse("2*x0 + 4") * res.witness).is_zero()

    def test_regular_binomial(self):
        spec = plain_spec("zmod:6")
        res = regularity_bounded(spec, spec.parse("x0 + 5"), 3)
        assert res.status == "regular" and res.certified_to == 3
