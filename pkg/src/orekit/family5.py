"""Two-variable carrier over Z/p^(r+1) with the shear rule y x = (x + p x^e) y.

The conjugation x -> x + p x^e has order exactly p^r in characteristic
p^(r+1), so powers of both variables with exponent p^r are central.  On top
of the carrier sit two parametrized term spans: the group span keeps every
term x^n y^m with n - cm divisible by d, and the monoid span additionally
caps the x-exponent per y-stratum by an explicit staircase.  The monoid
span folds into itself under single central multipliers, and the group span
carries the stratified-subring structure with lower rings R[x^d].
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .orecore import (SkewPolyRingSpec, SpecError, VarRule,
                      alpha_power_closed, enumerate_terms, geom_degree_sum,
                      is_prime, padic_margin)
from .rings import ZModRing
from .subext import SpecialData, SubextensionSpec, closure_check
from .termorder import Term


@dataclass
class Family5Params:
    """Integer parameters p, r, e, c, d with p prime and d dividing e - 1."""

    p: int
    r: int
    e: int
    c: int = 1
    d: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise SpecError(f"p = {self.p} is not prime")
        if self.r < 1:
            raise SpecError("need r >= 1")
        if self.e < 2:
            raise SpecError("need e >= 2")
        if self.c < 1 or self.d < 1:
            raise SpecError("need c, d >= 1")
        if (self.e - 1) % self.d != 0:
            raise SpecError(f"d = {self.d} must divide e - 1 = {self.e - 1}")
        if self.r == 1:
            warnings.warn("r = 1 is below the intended parameter range",
                          stacklevel=2)
        m = 0
        while self.c * self.S(m) <= self.r:
            m += 1
        self.r_hat = m
        assert self.c * self.S(m - 1) <= self.r < self.c * self.S(m)
        if self.r_hat == 1:
            warnings.warn("c > r collapses the staircase threshold to 1; "
                          "the closure bound analysis assumed at least 2",
                          stacklevel=2)

    @property
    def modulus(self):
        return self.p ** (self.r + 1)

    @property
    def order(self):
        return self.p ** self.r

    def S(self, m):
        return geom_degree_sum(m, self.e)

    def S_bar(self, m):
        """Largest allowed x-exponent at y-stratum m of the monoid span."""
        if m < 0:
            raise ValueError("negative stratum")
        if m <= self.r_hat:
            return self.c * self.S(m)
        s = m - self.r_hat
        return self.c * (s + self.S(self.r_hat)) + s * self.r * (self.e - 1)

    def label(self):
        return (f"p={self.p},r={self.r},e={self.e},"
                f"c={self.c},d={self.d}")


def in_term_set(params, t, variant="monoid"):
    """Membership of a two-variable term in the parametrized spans."""
    n, m = t.exp(0), t.exp(1)
    k = n - params.c * m
    if variant == "group":
        return k % params.d == 0
    if variant == "monoid":
        return k >= 0 and k % params.d == 0 and n <= params.S_bar(m)
    raise SpecError(f"unknown variant {variant!r}")


def _invert_shear(forward, tries):
    """Inverse image of x under x -> x + p x^e, by nilpotent correction.

    Each pass divides the error's coefficient content by another factor of
    p, so the iteration lands exactly after at most tries passes.
    """
    x = forward.var(0)
    g = x
    for _ in range(tries):
        err = forward.apply_alpha(1, g) - x
        if err.is_zero():
            return g
        g = g - err
    if forward.apply_alpha(1, g) != x:
        raise SpecError("shear inverse iteration failed to converge")
    return g


def family5_spec(params):
    """The carrier: Z/p^(r+1) in two variables with the shear conjugation."""
    ring = ZModRing(params.modulus)
    image = {Term.var(0): 1, Term.var(0, params.e): params.p}
    probe = SkewPolyRingSpec(ring, 2, {1: VarRule(images={0: image})},
                             name="shear probe")
    inverse = _invert_shear(probe, params.r + 2)
    spec = SkewPolyRingSpec(
        ring, 2,
        {1: VarRule(images={0: image},
                    images_inv={0: dict(inverse.coeffs)})},
        name=f"shear carrier ({params.label()})")
    assert spec.bijective_certified
    return spec


def family5_subext(params, spec=None, variant="monoid"):
    if spec is None:
        spec = family5_spec(params)
    name = f"{variant} span ({params.label()})"
    gens = (f"x0^{params.c}*x1",) if variant == "monoid" else \
        (f"x0^{params.d}", f"x0^{params.c}*x1")
    return SubextensionSpec(spec, lambda t: in_term_set(params, t, variant),
                            name=name, generators=gens)


def family5_special_data(params, spec, bound):
    """Stratum data for the group span: multipliers x^(cm) y^m over R[x^d]."""
    lam = {}
    sub_contains = {}
    alpha = {}
    for m in range(1, bound + 1):
        lam[m] = spec.term(Term.from_dict({0: params.c * m, 1: m}))
        sub_contains[m] = (lambda t, d=params.d:
                           t.exp(1) == 0 and t.exp(0) % d == 0)
        alpha[m] = (lambda f, m=m: spec.apply_power_endo(1, m, f))
    return SpecialData(var=1, step=1, lam=lam, sub_contains=sub_contains,
                       alpha=alpha)


# ----------------------------------------------------------------------
# order of the conjugation


@dataclass
class OrderReport:
    ok: bool
    order: int
    iterate_fixes: bool
    closed_fixes: bool
    smaller_moves: bool
    margins: int

    def describe(self):
        return (f"order {self.order}: iterated route "
                f"{'fixes' if self.iterate_fixes else 'moves'} x, closed "
                f"route {'fixes' if self.closed_fixes else 'moves'} x, "
                f"the p-fold smaller power "
                f"{'moves' if self.smaller_moves else 'fixes'} x; "
                f"{self.margins} valuation margins verified")


def order_certificate(params, spec=None):
    """The conjugation's order is exactly p^r, by two routes plus margins.

    Route one iterates the substitution; route two evaluates the closed
    coefficient formula.  The margin count records how many exponents the
    p-adic inequality chain was verified for.
    """
    if spec is None:
        spec = family5_spec(params)
    p, r, e = params.p, params.r, params.e
    x = spec.var(0)
    full = spec.apply_power_endo(1, params.order, x)
    iterate_fixes = full == x
    closed = alpha_power_closed(1, params.order, p, r, e, spec=spec)
    closed_fixes = closed == x
    below = spec.apply_power_endo(1, params.order // p, x)
    smaller_moves = below != x
    margins = 0
    for n in range(1, params.order + 1):
        padic_margin(p, r, n)
        margins += 1
    ok = iterate_fixes and closed_fixes and smaller_moves
    return OrderReport(ok, params.order, iterate_fixes, closed_fixes,
                       smaller_moves, margins)


def central_check(params, spec=None):
    """Bounded centrality of x^(p^r) and y^(p^r) against the generators."""
    if spec is None:
        spec = family5_spec(params)
    n = params.order
    probes = [spec.var(0), spec.var(1), spec.const(params.p % spec.ring.n),
              spec.parse(f"1 + x0 + x1 + {params.p}*x0^{params.e}*x1")]
    for u in (spec.var(0, n), spec.var(1, n)):
        for w in probes:
            if spec.multiply(u, w) != spec.multiply(w, u):
                return False, (u, w)
    return True, None


# ----------------------------------------------------------------------
# closure of the monoid span, pair by pair


@dataclass
class PairReport:
    ok: bool
    left: object
    right: object
    analytic_bound: int
    staircase_bound: int
    max_exponent: int
    offending: object = None


def closure_pair(params, spec, left, right):
    """One product of monoid-span terms, with the staircase bound verified.

    The largest x-exponent the product can reach is computed analytically
    and checked against the staircase value at the combined stratum; the
    actual product is then tested term by term.
    """
    lt, rt = spec._as_term(left), spec._as_term(right)
    for t in (lt, rt):
        if not in_term_set(params, t, "monoid"):
            raise SpecError(f"{t!r} is not in the monoid span")
    m, mp = lt.exp(1), rt.exp(1)
    analytic = (params.S_bar(m) + params.S_bar(mp)
                + min(params.r, params.S(m) * params.S_bar(mp))
                * (params.e - 1))
    stair = params.S_bar(m + mp)
    assert analytic <= stair, "staircase must absorb the spread bound"
    prod = spec.multiply(spec.term(lt), spec.term(rt))
    worst = 0
    for t in prod.coeffs:
        worst = max(worst, t.exp(0))
        if not in_term_set(params, t, "monoid"):
            return PairReport(False, lt, rt, analytic, stair, worst, t)
    assert worst <= analytic
    return PairReport(True, lt, rt, analytic, stair, worst)


def monoid_terms_by_stratum(params, y_bound):
    """All monoid-span terms with y-degree at most y_bound."""
    out = []
    for m in range(y_bound + 1):
        n = params.c * m
        while n <= params.S_bar(m):
            out.append(Term.from_dict({0: n, 1: m}))
            n += params.d
    return out


def closure_sweep(params, spec, y_bound):
    """closure_pair over every pair of strata summing to at most y_bound."""
    terms = monoid_terms_by_stratum(params, y_bound)
    pairs = 0
    for a in terms:
        for b in terms:
            if a.exp(1) + b.exp(1) > y_bound:
                continue
            pairs += 1
            rep = closure_pair(params, spec, a, b)
            if not rep.ok:
                return rep, pairs
    return None, pairs


# ----------------------------------------------------------------------
# central witnesses folding the group span into the monoid span


@dataclass
class NEWitness:
    tau: object
    eps: int
    k: int
    multiplier: object
    product: object


def ne_witness(params, tau):
    """A central monoid-span term whose left multiple of tau lands in the
    monoid span, with the defining inequalities checked exactly."""
    t = tau if isinstance(tau, Term) else Term.from_dict(dict(tau))
    if not in_term_set(params, t, "group"):
        raise SpecError(f"{t!r} is not in the group span")
    n, m = t.exp(0), t.exp(1)
    c, d, r, rh = params.c, params.d, params.r, params.r_hat
    q = params.order
    diff = n - c * m
    eps, k = (1, diff // d) if diff >= 0 else (-1, -diff // d)
    if eps == 1:
        if k == 0:
            ups = Term.one()
        else:
            a = math.ceil(Fraction(k, r) / q + Fraction(rh, 1) / q)
            assert Fraction(a) >= (Fraction(k, r) + rh) / q
            assert (a * q - rh) * r - k >= 0
            slack = (params.S_bar(a * q) - (c * a * q + k * d))
            assert slack >= ((a * q - rh) * r - k) * (params.e - 1) >= 0
            ups = Term.from_dict({0: c * a * q, 1: a * q})
    else:
        b, s = k + rh, k
        assert k <= s * q
        head = (c * b + s * d) * q
        assert head <= params.S_bar(b * q)
        assert head - k * d <= params.S_bar(b * q)
        ups = Term.from_dict({0: head, 1: b * q})
    assert in_term_set(params, ups, "monoid")
    assert ups.exp(1) % q == 0
    product = ups.mul(t)
    assert in_term_set(params, product, "monoid")
    return NEWitness(tau=t, eps=eps, k=k, multiplier=ups, product=product)


def ne_witness_set(params, taus, spec=None, verify_products=2):
    """One central multiplier folding a finite set of group-span terms in.

    The multiplier is the product of per-term witnesses; the first few
    products are recomputed through the carrier's multiplication to tie the
    exponent arithmetic to the ring arithmetic.
    """
    witnesses = [ne_witness(params, t) for t in taus]
    total = Term.one()
    for w in witnesses:
        total = total.mul(w.multiplier)
    assert in_term_set(params, total, "monoid")
    products = []
    for w in witnesses:
        prod = total.mul(w.tau)
        if not in_term_set(params, prod, "monoid"):
            return None, witnesses
        products.append(prod)
    if spec is not None:
        for w, prod in list(zip(witnesses, products))[:verify_products]:
            ring_prod = spec.multiply(spec.term(total), spec.term(w.tau))
            assert ring_prod == spec.term(prod), \
                "term arithmetic must match the carrier product"
    return total, witnesses


# ----------------------------------------------------------------------
# the generated description when d = e - 1


def generated_closure_terms(spec, gens, bound):
    """Terms reachable from the generators by closing product supports,
    within the total degree bound."""
    seen = {spec.term_cls.one()}
    seen.update(spec._as_term(g) for g in gens)
    changed = True
    while changed:
        changed = False
        cur = sorted(seen)
        for a in cur:
            for b in cur:
                if a.total_degree() + b.total_degree() > bound:
                    continue
                prod = spec.multiply(spec.term(a), spec.term(b))
                for t in prod.coeffs:
                    if t.total_degree() <= bound and t not in seen:
                        seen.add(t)
                        changed = True
    return seen


def generated_description_check(params, spec, bound):
    """For d = e - 1 the monoid span is generated by the single term
    x^c y: compare the reachable set against the predicate on a window."""
    if params.d != params.e - 1:
        raise SpecError("the generated description needs d = e - 1")
    slack = params.r * (params.e - 1) + params.c + params.d
    gen = Term.from_dict({0: params.c, 1: 1})
    reached = generated_closure_terms(spec, [gen], bound + slack)
    for t in reached:
        if not in_term_set(params, t, "monoid"):
            return False, t
    window = [t for t in enumerate_terms(2, bound)
              if in_term_set(params, t, "monoid")]
    for t in window:
        if t not in reached:
            return False, t
    return True, None


# ----------------------------------------------------------------------
# the bundled construction


def build_family5(p=2, r=2, e=2, c=1, d=1, bound=6, y_bound=4,
                  witness_exponent=8):
    """(carrier spec, monoid-span subextension, verified checklist)."""
    params = Family5Params(p=p, r=r, e=e, c=c, d=d)
    spec = family5_spec(params)
    sub = family5_subext(params, spec, "monoid")
    group = family5_subext(params, spec, "group")
    checklist = []

    rep = order_certificate(params, spec)
    checklist.append(("conjugation order is exactly p^r", rep.ok,
                      rep.describe()))
    ok, bad = central_check(params, spec)
    checklist.append(("p^r-th variable powers are central", ok,
                      "4 probes each" if ok else f"failed on {bad}"))

    fail, pairs = closure_sweep(params, spec, y_bound)
    checklist.append(("monoid span closed stratum by stratum", fail is None,
                      f"{pairs} pairs to y-degree {y_bound}"
                      if fail is None else
                      f"pair {fail.left!r}, {fail.right!r} escaped"))
    grep = closure_check(group, min(bound, 5))
    checklist.append(("group span closed under products", grep.ok,
                      grep.describe()))

    group_window = [t for t in enumerate_terms(2, min(bound, 5))
                    if in_term_set(params, t, "group")]
    picks = group_window[:witness_exponent]
    total, wits = ne_witness_set(params, picks, spec=spec)
    checklist.append(("single central multiplier folds the window in",
                      total is not None,
                      f"{len(picks)} terms, multiplier {total!r}"))

    if params.d == params.e - 1:
        ok, t = generated_description_check(params, spec, min(bound, 5))
        checklist.append(("span generated by its single term", ok,
                          f"window to degree {min(bound, 5)}"
                          if ok else f"mismatch at {t!r}"))
    return spec, sub, checklist
