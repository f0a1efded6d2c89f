"""Acceptance gate: twelve criteria, one pass/fail line each.

Every expected value is either computed by an independent oracle inside
the test or asserted exactly; runtime budgets are part of the criteria.
Run with -s to see the per-criterion lines.
"""

import json
import math
import random
import time
import warnings

import pytest

from orekit.rings import build_ring, standard_zoo, left_annihilator
from orekit.termorder import Term
from orekit.orecore import (SkewPolyRingSpec, alpha_power_closed,
                            padic_valuation, digit_sum, padic_margin,
                            order_of_alpha)
from orekit.family5 import (Family5Params, family5_spec, order_certificate,
                            closure_sweep, ne_witness, in_term_set)
from orekit.modlattice import (regular_module, enumerate_submodules,
                               classify_submodule, uniform_dimension,
                               is_essential, essential_pair_survey)
from orekit.subext import (SubextensionSpec, subext_full, lift_ideal_check,
                           singular_slice_check, nicify, is_nice_set,
                           free_words_distinct, build_named_example)
from orekit.vericli import SuiteConfig, run_suite, main


warnings.filterwarnings("ignore", message="r = 1")


def line(n, detail):
    print(f"[criterion {n:2d}] PASS: {detail}")


def distinct_primes(n):
    out, k = 0, 2
    while k * k <= n:
        if n % k == 0:
            out += 1
            while n % k == 0:
                n //= k
        k += 1
    return out + (1 if n > 1 else 0)


def even_span(ring):
    spec = SkewPolyRingSpec(ring, 1)
    return SubextensionSpec(spec, lambda t: t.exp(0) % 2 == 0,
                            name="even-exponent span",
                            generators=("x0^2",))


def test_c01_valuation_sweep():
    # v_p(C(p^r, n) p^n) >= r + 1 for 1 <= n <= p^r, with Legendre exact
    t0 = time.perf_counter()
    margins = 0
    for p in (2, 3, 5):
        for r in (1, 2, 3):
            for n in range(1, p ** r + 1):
                m = padic_margin(p, r, n)
                assert m.value >= r + 1
                assert padic_valuation(p, math.factorial(n)) \
                    == (n - digit_sum(p, n)) // (p - 1)
                margins += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"budget 1 s exceeded: {elapsed:.2f} s"
    line(1, f"{margins} margins with exact factorial valuations "
            f"in {elapsed:.2f} s")


def test_c02_conjugation_order():
    # alpha has order exactly p^r over Z/p^(r+1), by repeated substitution
    t0 = time.perf_counter()
    for triple in ((2, 2, 2), (2, 2, 3), (3, 2, 2)):
        rep = order_certificate(Family5Params(*triple))
        assert rep.iterate_fixes and rep.smaller_moves, triple
        assert rep.closed_fixes and rep.ok
        assert rep.order == triple[0] ** triple[1]
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"budget 10 s exceeded: {elapsed:.2f} s"
    line(2, f"three parameter triples certified in {elapsed:.2f} s")


def test_c03_closed_formula():
    # the closed coefficient formula equals iterated substitution
    comparisons = 0
    for (p, r, e) in ((2, 2, 2), (2, 2, 3), (3, 2, 2)):
        spec = family5_spec(Family5Params(p, r, e))
        for n in range(6):
            for m in range(6):
                target = spec.term(Term.var(0, n)) if n else spec.one()
                assert alpha_power_closed(n, m, p, r, e, spec=spec) \
                    == spec.apply_power_endo(1, m, target), (p, r, e, n, m)
                comparisons += 1
    line(3, f"{comparisons} exact polynomial equalities")


def test_c04_closure_and_witnesses():
    # every stratum pair to y-degree 6 stays inside the span and every
    # group-span term to exponent 20 gets a checked central witness
    t0 = time.perf_counter()
    totals = []
    for args in ((2, 2, 2, 1, 1), (2, 2, 3, 1, 2)):
        params = Family5Params(*args)
        spec = family5_spec(params)
        bad, pairs = closure_sweep(params, spec, 6)
        assert bad is None, f"{args}: {bad}"
        witnessed = 0
        for a in range(21):
            for b in range(21):
                t = Term.from_dict({0: a, 1: b})
                if not in_term_set(params, t, "group"):
                    continue
                w = ne_witness(params, t)
                assert in_term_set(params, w.multiplier, "monoid")
                assert in_term_set(params, w.product, "monoid")
                witnessed += 1
        totals.append((pairs, witnessed))
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"budget 60 s exceeded: {elapsed:.2f} s"
    line(4, f"pairs/witnesses per parameter set {totals} in {elapsed:.2f} s")


def test_c05_uniform_dimension_zoo():
    # certificate route == max-independent route; == omega(n) on Z/n
    checked = 0
    for name in standard_zoo(60):
        ring = build_ring(name)
        cert = uniform_dimension(regular_module(ring, validate=False))
        assert cert.dim == cert.max_independent == len(cert.family), name
        if name.startswith("zmod:"):
            assert cert.dim == distinct_primes(int(name.split(":")[1])), name
        checked += 1
    line(5, f"{checked} zoo rings, both routes equal "
            "(number-theoretic oracle on Z/n)")


def test_c06_lifting_suite():
    # every uniform/essential left ideal lifts with no fail and no
    # bounded-inconclusive at (D1, D2) = (2, 4)
    counts = {"uniform": 0, "essential": 0}
    for name in ("zmod:4", "zmod:6", "zmod:12"):
        ring = build_ring(name)
        mod = regular_module(ring)
        lat = enumerate_submodules(mod)
        spec = SkewPolyRingSpec(ring, 1)
        for sub in (subext_full(spec), even_span(ring)):
            for ideal in lat.members:
                if len(ideal) <= 1:
                    continue
                cl = classify_submodule(mod, ideal, lat)
                for kind, applies in (("uniform", cl.uniform),
                                      ("essential", cl.essential)):
                    if not applies:
                        continue
                    rep = lift_ideal_check(sub, sorted(ideal), kind, 2, 4)
                    assert rep.verdict == "pass", \
                        (name, sub.name, kind, sorted(ideal), rep.detail)
                    counts[kind] += 1
    assert counts["uniform"] and counts["essential"]
    line(6, f"{counts['uniform']} uniform and {counts['essential']} "
            "essential lifts, zero fail or inconclusive")


def test_c07_singular_slices():
    # semiprime coefficients force a zero slice; Z/4 matches the
    # coefficient formula |sing|^(member terms) exactly
    for name in ("zmod:6", "zmod:30"):
        ring = build_ring(name)
        spec = SkewPolyRingSpec(ring, 1)
        for sub in (subext_full(spec), even_span(ring)):
            rep = singular_slice_check(sub, 4)
            assert rep.verdict == "pass" and rep.slice_order == 1, \
                (name, sub.name, rep.slice_order)
    ring = build_ring("zmod:4")
    sub = subext_full(SkewPolyRingSpec(ring, 1))
    rep = singular_slice_check(sub, 3)
    sing = {0, 2}  # ann(2) = {0, 2} is essential in Z/4, ann(1) is not
    expected = len(sing) ** len(sub.terms_up_to(3))
    assert rep.verdict == "pass" and rep.slice_order == expected == 16
    line(7, "zero slices over Z/6 and Z/30; Z/4 slice order "
            f"{rep.slice_order} = |sing|^terms")


def test_c08_nicify_random():
    # 500 seeded draws: nonempty nice output inside the target ideal
    rng = random.Random(20260814)
    zoo = standard_zoo(60)
    essentials = {}
    designated_hits = 0
    for _ in range(500):
        name = rng.choice(zoo)
        ring = build_ring(name)
        if name not in essentials:
            mod = regular_module(ring, validate=False)
            lat = enumerate_submodules(mod)
            essentials[name] = [sorted(s) for s in lat.members
                                if is_essential(mod, s)]
        nonzero = [a for a in ring.elements if a != ring.zero]
        elems = [rng.choice(nonzero) for _ in range(rng.randint(1, 4))]
        ideal = rng.choice(essentials[name]) if rng.random() < 0.7 else None
        cert = nicify(ring, elems, ideal=ideal)
        assert cert.survivors, (name, elems)
        assert is_nice_set(ring, cert.survivors), (name, elems)
        if ideal is not None:
            assert all(x in ideal for x in cert.survivors), (name, elems)
        if cert.designated is not None:
            assert sorted(left_annihilator(ring, cert.designated)) \
                == sorted(cert.annihilator), (name, elems)
            designated_hits += 1
    assert designated_hits > 0
    line(8, f"500 random merges, zero failures "
            f"({designated_hits} with a designated element)")


def test_c09_free_monoid_evidence():
    # the displayed length-2 table, then distinctness over exact integers
    t0 = time.perf_counter()
    spec, _, checklist = build_named_example("example2", length=4)
    assert all(ok for _, ok, _ in checklist)
    u, v = spec.parse("x0*x2"), spec.parse("x0^2*x2")
    table = {(u, u): "x0*x1*x2^2", (u, v): "x0*x1^2*x2^2",
             (v, u): "x0^2*x1*x2^2", (v, v): "x0^2*x1^2*x2^2"}
    for (a, b), text in table.items():
        assert spec.multiply(a, b) == spec.parse(text)
    rep = free_words_distinct([u, v], 4)
    assert rep.ok and rep.count == 30
    for e in (2, 3):
        _, _, checklist = build_named_example("example3", e=e, length=5)
        assert all(ok for _, ok, _ in checklist)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, f"budget 30 s exceeded: {elapsed:.2f} s"
    line(9, f"verbatim table, 30 distinct words, both power carriers "
            f"in {elapsed:.2f} s")


def test_c10_pisano_orders():
    # independent oracle: iterate the step matrix [[0,1],[1,1]] mod m
    def matrix_order(m):
        if m == 0:
            return math.inf
        if m == 1:
            return 1
        cur, k = (0, 1, 1, 1), 1
        step = (0, 1, 1, 1)
        while cur != (1, 0, 0, 1):
            cur = ((cur[0] * step[0] + cur[1] * step[2]) % m,
                   (cur[0] * step[1] + cur[1] * step[3]) % m,
                   (cur[2] * step[0] + cur[3] * step[2]) % m,
                   (cur[2] * step[1] + cur[3] * step[3]) % m)
            k += 1
            assert k <= 6 * m * m, "runaway order search"
        return k

    got = {m: order_of_alpha(m) for m in (2, 3, 5, 10)}
    assert got == {m: matrix_order(m) for m in (2, 3, 5, 10)}
    assert got == {2: 3, 3: 8, 5: 20, 10: 60}
    assert order_of_alpha(0) == math.inf == matrix_order(0)
    line(10, f"orders {sorted(got.values())} match the matrix oracle; "
             "order infinite over the integers")


def test_c11_essential_subring_suite():
    # every nicely essential pair among rings up to 16 elements transfers
    # udim, singular meet, and (semi)primeness; none may fail
    pairs = proper = 0
    for name in standard_zoo(16):
        survey = essential_pair_survey(build_ring(name))
        assert survey.failures == [], (name, survey.failures)
        for pair in survey.pairs:
            assert pair.udim_sub == pair.udim_big, name
            assert pair.sing_equal and pair.semiprime_ok and pair.prime_ok
            pairs += 1
            proper += pair.proper
    assert pairs >= 25
    # multipliers into finite subrings are units, so proper pairs cannot
    # occur; the exhaustion confirms that emptiness rather than assuming it
    assert proper == 0
    line(11, f"{pairs} pairs over rings up to 16 elements, "
             "zero counterexamples (no proper pairs exist at this scale)")


def test_c12_determinism_and_corruption(tmp_path, capsys):
    reports = []
    for _ in range(2):
        rep = run_suite(SuiteConfig(suite="family5", seed=9))
        doc = json.loads(rep.to_json())
        for check in doc["checks"]:
            check["ms"] = 0.0
        reports.append(doc)
    assert reports[0] == reports[1]

    out = tmp_path / "corrupted.json"
    code = main(["family5", "--drop-term", "x0^2*x1^2",
                 "--out", str(out)])
    capsys.readouterr()
    assert code == 1
    doc = json.loads(out.read_text())
    failing = [c for c in doc["checks"] if c["status"] == "fail"]
    assert failing
    witness = failing[0]["witness"]
    assert witness["left"] and witness["right"] and witness["offending"]
    line(12, "same-seed runs byte-identical modulo timing; corrupted "
             f"closure exits 1 with pair {witness['left']} * "
             f"{witness['right']}")
