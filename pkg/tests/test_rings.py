"""Finite coefficient rings, annihilators, subrings, the zoo."""

import pytest
from hypothesis import given, settings, strategies as st

from orekit.rings import (RingSpecError, ZModRing, BigIntRing, build_ring,
                          left_annihilator, right_annihilator,
                          is_left_regular, is_regular, validate_endo,
                          identity_endo, subring_closure, all_subrings,
                          SubRing, standard_zoo)


class TestBuildRing:
    def test_zmod(self):
        r = build_ring("zmod:6")
        assert isinstance(r, ZModRing) and len(r) == 6
        assert r.add(4, 5) == 3 and r.mul(4, 5) == 2 and r.neg(2) == 4
        assert r.spec_string() == "zmod:6"

    def test_product(self):
        r = build_ring("product:zmod:2,zmod:3")
        assert len(r) == 6
        a, b = r.parse_element("(1,2)"), r.parse_element("(1,1)")
        assert r.mul(a, b) == r.parse_element("(1,2)")
        assert not hasattr(r, "n")

    def test_nested_product(self):
        r = build_ring("product:zmod:2,product:zmod:2,zmod:2")
        assert len(r) == 8 and r.commutative

    def test_tri2_noncommutative(self):
        r = build_ring("tri2:zmod:2")
        assert len(r) == 8 and not r.commutative
        bad = [(a, b) for a in r.elements for b in r.elements
               if r.mul(a, b) != r.mul(b, a)]
        assert bad

    def test_bigint(self):
        r = build_ring("bigint")
        assert isinstance(r, BigIntRing)
        assert r.mul(resolution := 10**9, 3) == 3 * resolution

    def test_bad_specs(self):
        for spec in ("zmod:1", "zmod:x", "nonsense:9", "product:zmod:2",
                     "tri2:bigint"):
            with pytest.raises(RingSpecError):
                build_ring(spec)

    def test_units_and_inverse(self):
        r = build_ring("zmod:6")
        assert sorted(r.units()) == [1, 5]
        assert r.inverse(5) == 5
        with pytest.raises(ValueError):
            r.inverse(2)


class TestAnnihilators:
    def test_zmod6(self):
        r = build_ring("zmod:6")
        assert sorted(left_annihilator(r, 2)) == [0, 3]
        assert sorted(left_annihilator(r, 3)) == [0, 2, 4]
        assert sorted(left_annihilator(r, 1)) == [0]
        assert [a for a in r.elements if is_regular(r, a)] == [1, 5]

    def test_sides_differ_on_tri2(self):
        r = build_ring("tri2:zmod:2")
        onesided = [a for a in r.elements
                    if sorted(left_annihilator(r, a))
                    != sorted(right_annihilator(r, a))]
        assert onesided

    def test_regular_iff_trivial_annihilators(self):
        r = build_ring("zmod:12")
        for a in r.elements:
            expected = set(left_annihilator(r, a)) == {0}
            assert is_left_regular(r, a) == expected


class TestEndos:
    def test_identity_validates(self):
        r = build_ring("zmod:9")
        ok, witness = validate_endo(r, identity_endo(r))
        assert ok and witness is None

    def test_nonmultiplicative_rejected(self):
        r = build_ring("zmod:4")
        data = identity_endo(r)
        data.mapping = {a: (a + 1) % 4 for a in r.elements}
        ok, witness = validate_endo(r, data)
        assert not ok and witness[0] in ("additive", "multiplicative", "one")

    def test_noninjective_automorphism_rejected(self):
        r = build_ring("zmod:4")
        data = identity_endo(r)
        data.mapping = {a: (2 * a) % 4 for a in r.elements}
        ok, witness = validate_endo(r, data)
        assert not ok


class TestSubrings:
    def test_closure_contains_one(self):
        r = build_ring("zmod:6")
        carrier = subring_closure(r, [1])
        assert carrier == frozenset(r.elements)

    def test_diagonal_subring(self):
        r = build_ring("product:zmod:2,zmod:2")
        zero, one = r.zero, r.one
        diag = subring_closure(r, [one])
        assert diag == frozenset({zero, one})
        sub = SubRing(r, diag)
        assert len(sub) == 2 and sub.mul(one, one) == one

    def test_all_subrings_zmod_trivial(self):
        # 1 generates everything, so zmod rings have one unital subring
        r = build_ring("zmod:12")
        assert all_subrings(r) == [frozenset(r.elements)]

    def test_all_subrings_product(self):
        r = build_ring("product:zmod:2,zmod:2")
        subs = all_subrings(r)
        assert frozenset({r.zero, r.one}) in subs
        assert frozenset(r.elements) in subs
        assert len(subs) == 2


def test_standard_zoo_contents():
    zoo = standard_zoo(60)
    assert "zmod:2" in zoo and "zmod:60" in zoo
    assert "tri2:zmod:2" in zoo
    assert "product:zmod:4,zmod:4" in zoo
    assert len([s for s in zoo if s.startswith("zmod:")]) == 59
    small = standard_zoo(8)
    assert "zmod:60" not in small and "tri2:zmod:2" in small
    for spec in small:
        build_ring(spec)


ring_names = st.sampled_from(["zmod:4", "zmod:6", "zmod:9",
                              "product:zmod:2,zmod:3", "tri2:zmod:2"])


@settings(max_examples=50)
@given(ring_names, st.data())
def test_ring_identities(name, data):
    r = build_ring(name)
    elem = st.sampled_from(list(r.elements))
    a, b, c = data.draw(elem), data.draw(elem), data.draw(elem)
    assert r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
    assert r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c))
    assert r.add(a, r.neg(a)) == r.zero
    assert r.sub(a, b) == r.add(a, r.neg(b))
    assert r.mul_int(3, a) == r.sum([a, a, a])
