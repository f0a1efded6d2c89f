"""Term-spanned subrings of skew polynomial carriers.

A subextension is the left coefficient-span of a chosen set of terms inside
a carrier ring, closed (or claimed closed) under multiplication.  This
module certifies closure and the stratified shape needed for degree
arguments, merges annihilators to produce elements whose coefficients share
one, and runs bounded checks of how uniform/essential ideals, direct sums,
and the singular ideal transfer between the coefficient ring and the
subring.  Every check that exhausts a search bound reports that fact
instead of a verdict.
"""

from dataclasses import dataclass, field
from itertools import product as iproduct
import math

from . import intlinalg, modlattice
from .orecore import (BudgetExceeded, PolyVectorSpace, SkewPolynomial,
                      SkewPolyRingSpec, SpecError, coeff_components,
                      enumerate_terms, fib_power, regularity_bounded)
from .rings import ZModRing, build_ring, left_annihilator
from .termorder import Term

MAX_ENUM = 300000


# ----------------------------------------------------------------------
# the subextension carrier


class SubextensionSpec:
    """A left coefficient-span of terms inside a carrier ring.

    Membership of a term is decided by a predicate; strata and windows are
    materialized lazily up to a requested total degree.  The unit term must
    always be a member so the subring contains the coefficient ring.
    """

    def __init__(self, ambient, contains, name="", generators=(),
                 generated=False):
        self.ambient = ambient
        self._contains = contains
        self.name = name or "subextension"
        self.generators = tuple(generators)
        self.generated = generated
        self._term_cache = {}
        self._win_cache = {}
        if not contains(ambient.term_cls.one()):
            raise SpecError("the unit term must belong to the span")

    def term_member(self, t):
        return bool(self._contains(t))

    def terms_up_to(self, bound):
        """Member terms with total degree budget <= bound, sorted."""
        if bound not in self._term_cache:
            spec = self.ambient
            all_terms = enumerate_terms(spec.nvars, bound,
                                        laurent=spec.mode == "laurent")
            self._term_cache[bound] = [t for t in all_terms
                                       if self._contains(t)]
        return self._term_cache[bound]

    def member(self, f):
        """Polynomial membership: every support term is a member term."""
        return all(self._contains(t) for t in f.coeffs)

    def strata(self, bound, var=None):
        """Member terms grouped by exponent of the distinguished variable."""
        var = self.ambient.nvars - 1 if var is None else var
        out = {}
        for t in self.terms_up_to(bound):
            out.setdefault(t.exp(var), []).append(t)
        return out

    def window(self, bound):
        """Vector space over the full ambient term window."""
        if bound not in self._win_cache:
            spec = self.ambient
            terms = enumerate_terms(spec.nvars, bound,
                                    laurent=spec.mode == "laurent")
            self._win_cache[bound] = PolyVectorSpace(spec, terms)
        return self._win_cache[bound]

    def span_polys(self, bound):
        return [self.ambient.term(t) for t in self.terms_up_to(bound)]

    def own_span(self, bound):
        """The subextension's coefficient span on the window."""
        return self.window(bound).span(self.span_polys(bound))

    def module_span(self, elements, bound, var_cap=None):
        """Span of {tau * l : tau member term, l in elements} on the window.

        var_cap limits the distinguished-variable exponent of tau, matching
        the degree filtration the membership test is allowed to use.
        """
        spec = self.ambient
        var = spec.nvars - 1
        taus = self.terms_up_to(bound)
        if var_cap is not None:
            taus = [t for t in taus if t.exp(var) <= var_cap]
        gens = []
        for t in taus:
            tp = spec.term(t)
            for l in elements:
                if l != spec.ring.zero:
                    gens.append(spec.multiply(tp, spec.const(l)))
        return self.window(bound).span(gens)

    def __repr__(self):
        return f"SubextensionSpec({self.name})"


def subext_from_terms(ambient, terms, name="", generators=()):
    allowed = {ambient._as_term(t) for t in terms}
    return SubextensionSpec(ambient, lambda t: t in allowed, name=name,
                            generators=generators)


def subext_full(ambient, name=""):
    return SubextensionSpec(ambient, lambda t: True,
                            name=name or "full carrier")


def drop_term(sub, t):
    """A corrupted copy with one member term removed (fault injection)."""
    gone = sub.ambient._as_term(t)
    return SubextensionSpec(sub.ambient,
                            lambda u: u != gone and sub.term_member(u),
                            name=f"{sub.name} minus {gone!r}")


# ----------------------------------------------------------------------
# closure and membership


@dataclass
class ClosureReport:
    ok: bool
    pairs: int
    bound: int
    left: object = None
    right: object = None
    offending: object = None

    def describe(self):
        if self.ok:
            return f"{self.pairs} term products stayed in the span"
        return (f"product of {self.left!r} and {self.right!r} "
                f"leaves the span at {self.offending!r}")


def closure_check(sub, bound):
    """Certify span closure: every member-term product stays in the span."""
    spec = sub.ambient
    terms = sub.terms_up_to(bound)
    pairs = 0
    for lam in terms:
        dl = lam.total_degree()
        for tau in terms:
            if dl + tau.total_degree() > bound:
                continue
            pairs += 1
            prod = spec.multiply(spec.term(lam), spec.term(tau))
            for t in prod.coeffs:
                if not sub.term_member(t):
                    return ClosureReport(False, pairs, bound, lam, tau, t)
    return ClosureReport(True, pairs, bound)


def membership(f, sub, ideal=None, bound=None):
    """Is f in the subextension (or in subextension * ideal)?

    ideal is an iterable of coefficient-ring elements closed as a left
    ideal; the span it generates is searched with multiplier terms capped
    at f's distinguished-variable degree.
    """
    if f.is_zero():
        return True
    if ideal is None:
        return sub.member(f)
    var = sub.ambient.nvars - 1
    window = max(bound or 0, f.total_degree())
    span = sub.module_span(list(ideal), window, var_cap=f.deg_in(var))
    return span.contains(f)


@dataclass
class DegreeReport:
    degrees: tuple
    step: int
    attained: bool
    var: int


def attainable_degrees(sub, bound, var=None):
    """Distinguished-variable degrees reached by member terms up to bound."""
    spec = sub.ambient
    if spec.mode == "laurent":
        raise SpecError("degree strata are for polynomial mode only")
    var = spec.nvars - 1 if var is None else var
    degrees = sorted({t.exp(var) for t in sub.terms_up_to(bound)})
    assert degrees and degrees[0] == 0
    positive = [d for d in degrees if d]
    step = math.gcd(*positive) if positive else 0
    assert all(d % step == 0 for d in positive) if step else True
    return DegreeReport(tuple(degrees), step, step in positive or step == 0,
                        var)


# ----------------------------------------------------------------------
# stratified shape data and its certification


@dataclass
class SpecialData:
    """Per-stratum data for the stratified-subring certificate.

    For each attainable degree m of the distinguished variable: a
    designated element lam[m] of the form (regular lower element) * x^m, a
    term predicate for an associated lower subring, and the automorphism
    the conjugation by lam[m] is supposed to induce on it.
    """
    var: int
    step: int
    lam: dict
    sub_contains: dict
    alpha: dict

    def lower_terms(self, sub, m, bound):
        spec = sub.ambient
        pred = self.sub_contains[m]
        out = []
        for t in enumerate_terms(spec.nvars, bound,
                                 laurent=spec.mode == "laurent"):
            if t.exp(self.var) == 0 and pred(t) and sub.term_member(t):
                out.append(t)
        return out


def ambient_special_data(spec, bound):
    """Canonical data for the carrier viewed as a subextension of itself."""
    var = spec.nvars - 1
    lam = {m: spec.var(var, m) for m in range(1, bound + 1)}
    lower = {m: (lambda t: True) for m in range(1, bound + 1)}
    alpha = {m: (lambda f, m=m: spec.apply_power_endo(var, m, f))
             for m in range(1, bound + 1)}
    return SpecialData(var=var, step=1, lam=lam, sub_contains=lower,
                       alpha=alpha)


def strip_top_var(f, var, m):
    """Divide a pure-stratum polynomial by x_var^m on the right."""
    spec = f.spec
    out = {}
    for t, c in f.coeffs.items():
        if t.exp(var) != m:
            raise SpecError("polynomial is not concentrated in one stratum")
        d = {i: e for i, e in t.exps if i != var}
        out[spec.term_cls.from_dict(d)] = c
    return spec.poly(out)


def _lower_regular_bounded(spec, f, var, bound):
    """Bounded two-sided regularity of f inside the subring without x_var.

    Returns (ok, witness): a nonzero kernel element is a definite
    zero-divisor witness; an empty kernel is a certificate to the bound.
    """
    terms = [t for t in enumerate_terms(spec.nvars, bound,
                                        laurent=spec.mode == "laurent")
             if t.exp(var) == 0]
    polys = [spec.term(t) for t in terms]
    big = PolyVectorSpace(spec, enumerate_terms(
        spec.nvars, bound + f.total_degree(),
        laurent=spec.mode == "laurent"))
    for images in ([spec.multiply(p, f) for p in polys],
                   [spec.multiply(f, p) for p in polys]):
        ker = big.kernel_of(images)
        if not ker.is_zero():
            small = PolyVectorSpace(spec, terms)
            for ci, sp in enumerate(ker.spans):
                v = sp.some_nonzero()
                if v is not None:
                    vecs = [[0] * sp.dim for _ in ker.spans]
                    vecs[ci] = v
                    return False, small.poly_from(vecs)
    return True, None


@dataclass
class SpecialCertificate:
    ok: bool
    stages: list
    bound: int

    def describe(self):
        return "; ".join(f"{name}: {'ok' if good else detail}"
                         for name, good, detail in self.stages)


def certify_special(sub, data, bound, coeff_samples=2):
    """Check the four stratified-shape conditions up to the bound.

    Stages: span closure, arithmetic-progression degrees, the commutation
    defect dropping degree, and absorption of each stratum into the
    designated multiples.  Missing per-stratum data raises.
    """
    spec = sub.ambient
    ring = spec.ring
    var = data.var
    stages = []

    rep = closure_check(sub, bound)
    stages.append(("closure", rep.ok, rep.describe()))

    deg = attainable_degrees(sub, bound, var=var)
    if data.step == 0:
        prog_ok = deg.degrees == (0,)
    else:
        expected = tuple(range(0, deg.degrees[-1] + 1, data.step))
        prog_ok = (deg.degrees == expected and deg.step == data.step
                   and len(deg.degrees) >= 2)
    stages.append(("degree-progression", prog_ok,
                   f"degrees {deg.degrees} vs step {data.step}"))

    samples = [c for c in ring.elements if c != ring.zero][:coeff_samples]
    strata = [m for m in deg.degrees if 0 < m <= bound]
    for m in strata:
        if m not in data.lam:
            raise SpecError(f"no designated element supplied for degree {m}")

    mult_ok, mult_detail = True, "designated elements regular and in span"
    for m in strata:
        lam = data.lam[m]
        if not sub.member(lam) or any(t.exp(var) != m for t in lam.coeffs):
            mult_ok, mult_detail = False, f"bad designated element at {m}"
            break
        upsilon = strip_top_var(lam, var, m)
        good, witness = _lower_regular_bounded(spec, upsilon, var,
                                               min(bound, 3))
        if not good:
            mult_ok = False
            mult_detail = f"zero divisor below degree {m}: {witness}"
            break
    stages.append(("designated-multipliers", mult_ok, mult_detail))

    comm_ok, comm_detail = True, "commutation defect drops degree"
    for m in strata:
        lam, act = data.lam[m], data.alpha[m]
        probes = [spec.term(t) for t in data.lower_terms(sub, m, bound)]
        probes += [spec.multiply(spec.const(c), p)
                   for p in probes[:3] for c in samples]
        for p in probes:
            image = act(p)
            if not all(data.sub_contains[m](t) and sub.term_member(t)
                       for t in image.coeffs):
                comm_ok = False
                comm_detail = f"induced map leaves the subring at {p}"
                break
            defect = spec.multiply(lam, p) - spec.multiply(image, lam)
            if defect.deg_in(var) >= m:
                comm_ok = False
                comm_detail = (f"defect degree {defect.deg_in(var)} >= {m} "
                               f"at {p}")
                break
        if not comm_ok:
            break
    stages.append(("commutation-defect", comm_ok, comm_detail))

    abs_ok, abs_detail = True, "every stratum absorbed"
    for m in strata:
        lam = data.lam[m]
        lower = data.lower_terms(sub, m, bound)
        products = [spec.multiply(spec.term(b), lam) for b in lower]
        supports = set()
        for g in products:
            supports.update(g.coeffs)
        stratum = [t for t in sub.terms_up_to(bound) if t.exp(var) == m]
        supports.update(stratum)
        space = PolyVectorSpace(spec, sorted(supports))
        target = space.span(products)
        candidates = [spec.one()] + [spec.term(b) for b in lower
                                     if not b.is_one()]
        for t in stratum:
            q = spec.term(t)
            hit = None
            for u in candidates:
                prod = spec.multiply(u, q)
                if space.fits(prod) and target.contains(prod):
                    hit = u
                    break
            if hit is None:
                abs_ok = False
                abs_detail = f"stratum term {t!r} not absorbed at degree {m}"
                break
        if not abs_ok:
            break
    stages.append(("absorption", abs_ok, abs_detail))

    return SpecialCertificate(all(s[1] for s in stages), stages, bound)


# ----------------------------------------------------------------------
# shared-annihilator ("nice") machinery


def common_annihilator(ring, elems):
    out = set(ring.elements)
    for x in elems:
        if x != ring.zero:
            out &= set(left_annihilator(ring, x))
    return frozenset(out)


def is_nice_set(ring, elems):
    alive = [x for x in elems if x != ring.zero]
    if not alive:
        return False
    anns = {frozenset(left_annihilator(ring, x)) for x in alive}
    return len(anns) == 1


def is_nice_poly(f):
    return not f.is_zero() and is_nice_set(f.spec.ring, f.coefficient_set())


@dataclass
class NiceCertificate:
    multiplier: object
    chain: list
    survivors: tuple
    annihilator: tuple
    designated: object = None


def nicify(ring, elems, ideal=None):
    """Multiply a finite set until all nonzero images share an annihilator.

    Follows the merge procedure: each step multiplies by the smallest ring
    element that strictly shrinks the set of nonzero images while keeping
    at least one (and any designated minimal-annihilator element) alive;
    afterwards images are pushed one by one into the supplied essential
    left ideal.  Returns the multiplier chain and the surviving images.
    """
    start = [x for x in elems if x != ring.zero]
    if not start:
        raise SpecError("need at least one nonzero element")
    if ideal is not None:
        reg = modlattice.regular_module(ring, validate=False)
        try:
            ideal = modlattice.submodule_of_subset(reg, ideal)
        except ValueError as exc:
            raise SpecError(f"not a left ideal: {exc}")
        if not modlattice.is_essential(reg, ideal):
            raise SpecError("the target ideal must be essential")

    def ann(x):
        return frozenset(left_annihilator(ring, x))

    order = {x: i for i, x in enumerate(ring.elements)}
    start.sort(key=order.get)
    des_idx = None
    for i, a in enumerate(start):
        if all(ann(a) <= ann(b) for b in start):
            des_idx = i
            break

    cur = list(start)
    chain = []
    total = ring.one

    def alive():
        return [x for x in cur if x != ring.zero]

    def apply(c):
        nonlocal cur, total
        cur = [ring.mul(c, x) for x in cur]
        chain.append(c)
        total = ring.mul(c, total)

    while True:
        live = alive()
        assert live, "merge steps never empty the set"
        if len({ann(x) for x in live}) == 1:
            break
        found = None
        for c in ring.elements:
            if c == ring.zero:
                continue
            imgs = [ring.mul(c, x) for x in live]
            live_after = [x for x in imgs if x != ring.zero]
            if not live_after or len(live_after) >= len(live):
                continue
            if des_idx is not None and ring.mul(c, cur[des_idx]) == ring.zero:
                continue
            found = c
            break
        assert found is not None, "finite rings always admit a merge step"
        apply(found)

    if ideal is not None:
        while True:
            outside = [x for x in alive() if x not in ideal]
            if not outside:
                break
            y = outside[0]
            found = None
            for c in ring.elements:
                img = ring.mul(c, y)
                if img != ring.zero and img in ideal:
                    found = c
                    break
            assert found is not None, "essential ideals meet every Ry"
            before = len(alive())
            apply(found)
            assert len(alive()) == before, "shared annihilators keep all alive"

    survivors = tuple(dict.fromkeys(alive()))
    shared = frozenset(left_annihilator(ring, survivors[0]))
    assert all(frozenset(left_annihilator(ring, x)) == shared
               for x in survivors)
    for x0, x1 in zip(start, cur):
        assert ring.mul(total, x0) == x1
    designated = None
    if des_idx is not None:
        designated = cur[des_idx]
        assert designated != ring.zero
        assert frozenset(left_annihilator(ring, designated)) == shared
    if ideal is not None:
        assert all(x in ideal for x in survivors)
    return NiceCertificate(multiplier=total, chain=chain,
                           survivors=survivors,
                           annihilator=tuple(sorted(shared,
                                                    key=order.get)),
                           designated=designated)


@dataclass
class SliceReport:
    ok: bool
    detail: str
    witness: object = None


def _component_witness(inside, outside, space):
    """A polynomial lying in one span but not the other."""
    for ci, sp in enumerate(inside.spans):
        for b in sp.basis:
            if not outside.spans[ci].contains(b):
                vecs = [[0] * s.dim for s in inside.spans]
                vecs[ci] = [x % sp.n for x in b]
                return space.poly_from(vecs)
    return None


def nice_annihilator_slice(g, bound):
    """Compare the window annihilator of g with its predicted span.

    For g whose coefficients share a left annihilator, the claim is that
    everything killing g from the left is a coefficient-span multiple of
    that shared annihilator.  Both sides are computed exactly on the
    window and compared.
    """
    spec = g.spec
    ring = spec.ring
    if g.is_zero() or not is_nice_poly(g):
        raise SpecError("coefficients must share a left annihilator")
    a0 = next(iter(g.coefficient_set()))
    ann = [a for a in left_annihilator(ring, a0) if a != ring.zero]
    window = max(bound, g.total_degree())
    domain = PolyVectorSpace(spec, enumerate_terms(
        spec.nvars, window, laurent=spec.mode == "laurent"))
    images = [spec.multiply(spec.term(t), g) for t in domain.terms]
    supports = set(domain.terms)
    for f in images:
        supports.update(f.coeffs)
    big = PolyVectorSpace(spec, sorted(supports))
    kernel = big.kernel_of(images)

    span_gens = []
    for t in domain.terms:
        tp = spec.term(t)
        for a in ann:
            span_gens.append(spec.multiply(tp, spec.const(a)))
    predicted = domain.span(span_gens)
    assert kernel.contains_span(predicted), \
        "span multiples of the shared annihilator always kill g"
    if predicted.contains_span(kernel):
        return SliceReport(True, f"slice of order {kernel.order} matches")
    witness = _component_witness(kernel, predicted, domain)
    return SliceReport(False, "window annihilator exceeds the span",
                       witness)


def _delta_trivial_on(spec, elems):
    for rule in spec.rules.values():
        if not rule.delta_coeff:
            continue
        for a in elems:
            if rule.delta_coeff.get(a, spec.ring.zero) != spec.ring.zero:
                return False
    return True


@dataclass
class NiceDegreeResult:
    found: bool
    poly: object
    degree: int
    path: str
    bound: int


def find_nice_degree(sub, data, a, bound):
    """Search the left multiples of a for a shared-annihilator polynomial
    whose distinguished-variable degree is the progression step."""
    spec = sub.ambient
    ring = spec.ring
    var = data.var
    d = data.step
    if a == ring.zero:
        raise SpecError("need a nonzero coefficient")
    if d == 0:
        cert = nicify(ring, [a])
        out = spec.const(ring.mul(cert.multiplier, a))
        return NiceDegreeResult(True, out, 0, "constant stratum", bound)

    sing = modlattice.singular_submodule(
        modlattice.regular_module(ring, validate=False))
    lam = data.lam[d]

    def finish(f0, path):
        if f0.is_zero() or f0.deg_in(var) != d:
            return None
        cert = nicify(ring, sorted(f0.coefficient_set(),
                                   key=ring.elements.index))
        out = spec.multiply(spec.const(cert.multiplier), f0)
        if out.is_zero() or out.deg_in(var) != d or not is_nice_poly(out):
            return None
        assert sub.member(out)
        return NiceDegreeResult(True, out, d,
                                f"{path}, scaled by {cert.multiplier}",
                                bound)

    if a in sing and _delta_trivial_on(spec, sorted(
            sing, key=ring.elements.index)):
        got = finish(spec.multiply(lam, spec.const(a)),
                     "designated multiple, derivations vanish")
        if got:
            return got

    if a not in sing:
        lower_bound = min(bound, 3)
        bterms = data.lower_terms(sub, d, lower_bound)
        bpolys = [spec.term(t) for t in bterms]
        bspace_terms = set(bterms)
        aim = data.alpha[d](spec.const(a))
        prods = [spec.multiply(p, aim) for p in bpolys]
        for f in prods:
            bspace_terms.update(f.coeffs)
        for p in bpolys:
            for q in bpolys:
                bspace_terms.update(spec.multiply(p, q).coeffs)
        space = PolyVectorSpace(spec, sorted(bspace_terms))
        kernel = space.kernel_of(prods)
        ann_polys = []
        for ci, sp in enumerate(kernel.spans):
            for b in sp.basis:
                vecs = [[0] * s.dim for s in kernel.spans]
                vecs[ci] = [x % sp.n for x in b]
                poly = spec.zero_poly()
                for j, bp in enumerate(bpolys):
                    c = space.assemble([v[j] for v in vecs])
                    if c != ring.zero:
                        poly = poly + spec.multiply(spec.const(c), bp)
                if not poly.is_zero():
                    ann_polys.append(poly)
        ann_span = space.span(ann_polys)
        for w in bpolys:
            left = space.span([spec.multiply(b, w) for b in bpolys])
            if left.is_zero():
                continue
            if left.intersection(ann_span).is_zero():
                got = finish(spec.multiply(w, spec.multiply(
                    lam, spec.const(a))),
                    f"regular branch via {w}")
                if got:
                    return got

    stratum = [t for t in sub.terms_up_to(bound) if t.exp(var) == d]
    for t in stratum:
        got = finish(spec.multiply(spec.term(t), spec.const(a)),
                     f"stratum sweep at {t!r}")
        if got:
            return got
    return NiceDegreeResult(False, None, d, "search exhausted", bound)


# ----------------------------------------------------------------------
# bounded transfer checks


@dataclass
class DirectSumReport:
    ok: bool
    count: int
    detail: str
    witness: object = None


def lift_directsum_check(sub, ideals, bound):
    """Independent coefficient ideals stay independent after lifting."""
    ring = sub.ambient.ring
    module = modlattice.regular_module(ring, validate=False)
    subs = [modlattice.submodule_of_subset(module, L) for L in ideals]
    for i, L in enumerate(subs):
        rest = frozenset({ring.zero})
        for j, other in enumerate(subs):
            if j != i:
                rest = modlattice.submodule_sum(module, rest, other)
        if len(L & rest) > 1:
            return DirectSumReport(False, len(subs),
                                   f"ideals {i} overlap before lifting")
    spans = [sub.own_span(bound).intersection(
        sub.module_span(sorted(L, key=ring.elements.index), bound))
        for L in subs]
    for i, X in enumerate(spans):
        if X.is_zero():
            return DirectSumReport(False, len(subs),
                                   f"lift of ideal {i} vanished")
        rest = None
        for j, Y in enumerate(spans):
            if j != i:
                rest = Y if rest is None else rest.plus(Y)
        if rest is not None:
            meet = X.intersection(rest)
            if not meet.is_zero():
                return DirectSumReport(False, len(subs),
                                       f"lifts {i} meet the others",
                                       meet.some_nonzero_poly())
    return DirectSumReport(True, len(subs),
                           f"{len(subs)} lifted ideals stay independent")


def _enumerate_span(sub, bound, budget):
    """All polynomials supported on member terms up to the bound."""
    spec = sub.ambient
    ring = spec.ring
    terms = sub.terms_up_to(bound)
    if len(ring.elements) ** len(terms) > budget:
        raise BudgetExceeded(
            f"{len(ring.elements)}^{len(terms)} window elements")
    out = []
    for combo in iproduct(ring.elements, repeat=len(terms)):
        out.append(spec.poly(dict(zip(terms, combo))))
    return out


def _solve_in_span(space, images, target):
    """Coefficients c with sum c_j images_j = target, or None."""
    vec_lists = [space.vectors(f) for f in images]
    goal = space.vectors(target)
    per_comp = []
    for ci, (n, _) in enumerate(space.components):
        cols = [list(v[ci]) for v in vec_lists]
        slack = [[n if r == k else 0 for r in range(space.dim)]
                 for k in range(space.dim)]
        sol = intlinalg.solve_int(cols + slack, goal[ci], space.dim)
        if sol is None:
            return None
        per_comp.append([x % n for x in sol[:len(images)]])
    out = []
    for j in range(len(images)):
        out.append(space.assemble([pc[j] for pc in per_comp]))
    return out


@dataclass
class LiftReport:
    kind: str
    verdict: str
    checked: int
    detail: str
    witnesses: list = field(default_factory=list)


def lift_ideal_check(sub, ideal, kind, d_small, d_big,
                     budget=MAX_ENUM, witness_samples=12):
    """Bounded transfer of uniformity or essentiality into the subring.

    uniform: any two nonzero window elements of the lifted ideal admit
    equal nonzero left multiples within the multiplier window.  essential:
    every nonzero window element of the subring has a nonzero multiple
    landing in the lifted ideal.
    """
    spec = sub.ambient
    ring = spec.ring
    if kind not in ("uniform", "essential"):
        raise SpecError(f"unknown kind {kind!r}")
    module = modlattice.regular_module(ring, validate=False)
    ground = modlattice.classify_submodule(
        module, modlattice.submodule_of_subset(module, ideal))
    if kind == "uniform" and not ground.uniform:
        return LiftReport(kind, "skipped-hypothesis", 0,
                          "ideal is not uniform in the coefficient ring")
    if kind == "essential" and not ground.essential:
        return LiftReport(kind, "skipped-hypothesis", 0,
                          "ideal is not essential in the coefficient ring")

    elems = sorted(ideal, key=ring.elements.index)
    taus = sub.terms_up_to(d_big)
    big = sub.window(d_small + d_big)
    lifted = sub.own_span(d_small).intersection(
        sub.module_span(elems, d_small))
    witnesses = []

    try:
        if kind == "uniform":
            members = [f for f in lifted.enumerate_polys(cap=budget)
                       if not f.is_zero()]
            spans = []
            for f in members:
                images = [spec.multiply(spec.term(t), f) for t in taus]
                spans.append((f, images, big.span(images)))
            checked = 0
            for i in range(len(spans)):
                fi, im_i, sp_i = spans[i]
                for j in range(i + 1, len(spans)):
                    fj, im_j, sp_j = spans[j]
                    checked += 1
                    meet = sp_i.intersection(sp_j)
                    if meet.is_zero():
                        return LiftReport(
                            kind, "fail", checked,
                            f"no common multiple of {fi} and {fj} "
                            f"within the window")
                    if len(witnesses) < witness_samples:
                        h = meet.some_nonzero_poly()
                        ca = _solve_in_span(big, im_i, h)
                        cb = _solve_in_span(big, im_j, h)
                        assert ca is not None and cb is not None
                        left = spec.zero_poly()
                        right = spec.zero_poly()
                        for c, t in zip(ca, taus):
                            left = left + spec.multiply(
                                spec.const(c), spec.term(t))
                        for c, t in zip(cb, taus):
                            right = right + spec.multiply(
                                spec.const(c), spec.term(t))
                        assert spec.multiply(left, fi) == h
                        assert spec.multiply(right, fj) == h
                        assert not h.is_zero()
                        witnesses.append(
                            f"({left}) * ({fi}) = ({right}) * ({fj}) = {h}")
            return LiftReport(kind, "pass", checked,
                              f"all {checked} pairs share nonzero multiples",
                              witnesses)

        lifted_big = sub.own_span(d_small + d_big).intersection(
            sub.module_span(elems, d_small + d_big))
        tests = [f for f in _enumerate_span(sub, d_small, budget)
                 if not f.is_zero()]
        checked = 0
        for f in tests:
            checked += 1
            images = [spec.multiply(spec.term(t), f) for t in taus]
            reach = big.span(images)
            meet = reach.intersection(lifted_big)
            if meet.is_zero():
                return LiftReport(kind, "fail", checked,
                                  f"{f} has no nonzero multiple in the "
                                  f"lifted ideal within the window")
            if len(witnesses) < witness_samples:
                h = meet.some_nonzero_poly()
                ca = _solve_in_span(big, images, h)
                assert ca is not None
                left = spec.zero_poly()
                for c, t in zip(ca, taus):
                    left = left + spec.multiply(spec.const(c), spec.term(t))
                assert spec.multiply(left, f) == h and not h.is_zero()
                witnesses.append(f"({left}) * ({f}) = {h}")
        return LiftReport(kind, "pass", checked,
                          f"all {checked} window elements reach the "
                          f"lifted ideal", witnesses)
    except BudgetExceeded as exc:
        return LiftReport(kind, "bounded-inconclusive", 0, str(exc))


# ----------------------------------------------------------------------
# the singular slice


@dataclass
class SingularReport:
    verdict: str
    detail: str
    slice_order: int = 0
    witness: object = None
    components: list = field(default_factory=list)


def _prime_power_split(n):
    out = []
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            out.append(q)
        p += 1
    if m > 1:
        out.append(m)
    return sorted(out)


def project_spec(spec, modulus):
    """The same variable structure over Z/modulus coefficients."""
    if not isinstance(spec.ring, ZModRing):
        raise SpecError("component projection needs Z/n coefficients")
    ring = build_ring(f"zmod:{modulus}")

    def proj_poly(data):
        if data is None:
            return None
        return {t: c % modulus for t, c in data.coeffs.items()}

    def proj_map(m):
        if m is None:
            return None
        out = {}
        for a, b in m.items():
            key = a % modulus
            if key in out and out[key] != b % modulus:
                raise SpecError("coefficient map does not descend")
            out[key] = b % modulus
        return out

    from .orecore import VarRule
    rules = {}
    for i, rule in spec.rules.items():
        images = {j: proj_poly(f) for j, f in rule.images.items()}
        inv = ({j: proj_poly(f) for j, f in rule.images_inv.items()}
               if rule.images_inv else None)
        coeff = proj_map(rule.coeff_map)
        dc = proj_map(rule.delta_coeff)
        di = {j: proj_poly(f) for j, f in rule.delta_images.items()}
        rules[i] = VarRule(coeff_map=coeff, images=images, images_inv=inv,
                           delta_coeff=dc, delta_images=di)
    return SkewPolyRingSpec(ring, spec.nvars, rules, mode=spec.mode,
                            name=f"{spec.name} mod {modulus}")


class _AnnKernels:
    """Cached span annihilator kernels: {c : (sum c_t tau_t) h = 0}.

    The kernel depends only on h, and the question whether some nonzero
    element of (span)g kills f is: the kernel of g*f strictly exceeds the
    kernel of g.  Products repeat heavily across the sweep, so the cache
    collapses the quadratic pass to a handful of lattice computations.
    """

    def __init__(self, spec, taus):
        self.spec = spec
        self.taus = taus
        self.cache = {}

    def kernel(self, h):
        if h not in self.cache:
            spec = self.spec
            prods = [spec.multiply(spec.term(t), h) for t in self.taus]
            supports = {spec.term_cls.one()}
            for w in prods:
                supports.update(w.coeffs)
            space = PolyVectorSpace(spec, sorted(supports))
            self.cache[h] = space.kernel_of(prods)
        return self.cache[h]

    def essential_annihilator(self, f, tests):
        """Does every listed g admit 0 != h in (span)g with h f = 0?"""
        for g in tests:
            gf = self.spec.multiply(g, f)
            if gf.is_zero():
                continue
            if self.kernel(g).contains_span(self.kernel(gf)):
                return False, g
        return True, None


def singular_slice_check(sub, bound, budget=MAX_ENUM):
    """Bounded window equality of the subring's singular ideal.

    The claim under test: the window elements with essential annihilator
    are exactly those whose coefficients all lie in the coefficient ring's
    singular ideal.  The containment from the formula side is certified by
    essential-annihilator checks; the reverse by constructing, per outside
    element, an ideal whose span meets its annihilator trivially.
    """
    spec = sub.ambient
    ring = spec.ring

    if isinstance(ring, ZModRing):
        parts = _prime_power_split(ring.n)
        if len(parts) > 1:
            comp_reports = []
            polys_per_comp = []
            for q in parts:
                cspec = project_spec(spec, q)
                csub = SubextensionSpec(cspec, sub._contains,
                                        name=f"{sub.name} mod {q}")
                rep = singular_slice_check(csub, bound, budget)
                comp_reports.append((q, rep))
                polys_per_comp.append(rep.slice_order)
                if rep.verdict != "pass":
                    return SingularReport(
                        rep.verdict,
                        f"component mod {q}: {rep.detail}",
                        witness=rep.witness,
                        components=comp_reports)
            order = 1
            for n in polys_per_comp:
                order *= n
            sing = modlattice.singular_submodule(
                modlattice.regular_module(ring, validate=False))
            sample = spec.poly({t: sorted(sing)[-1]
                                for t in sub.terms_up_to(min(bound, 2))})
            if not sample.is_zero():
                assert all(c in sing for c in sample.coefficient_set())
            return SingularReport(
                "pass",
                f"window slice matches on all {len(parts)} components",
                slice_order=order, components=comp_reports)

    sing = modlattice.singular_submodule(
        modlattice.regular_module(ring, validate=False))
    sing_sorted = sorted(sing, key=ring.elements.index)
    nz_sing = [a for a in sing_sorted if a != ring.zero]

    if nz_sing and not _delta_trivial_on(spec, nz_sing):
        return SingularReport(
            "skipped-hypothesis",
            "derivations do not vanish on the singular coefficients")

    taus = sub.terms_up_to(bound)
    try:
        window_polys = _enumerate_span(sub, bound, budget)
    except BudgetExceeded as exc:
        return SingularReport("bounded-inconclusive", str(exc))
    tests = [g for g in window_polys if not g.is_zero()]
    kernels = _AnnKernels(spec, taus)

    for a in nz_sing:
        ok, bad = kernels.essential_annihilator(spec.const(a), tests)
        if not ok:
            return SingularReport(
                "skipped-hypothesis",
                f"coefficient {a} lost its essential annihilator against "
                f"{bad}", witness=bad)

    inside = [f for f in window_polys
              if not f.is_zero()
              and all(c in sing for c in f.coefficient_set())]
    for f in inside:
        ok, bad = kernels.essential_annihilator(f, tests)
        if not ok:
            return SingularReport(
                "fail", f"{f} has formula-singular coefficients but lost "
                f"its essential annihilator against {bad}", witness=(f, bad))

    module = modlattice.regular_module(ring, validate=False)
    lattice = modlattice.enumerate_submodules(module)
    nonzero_ideals = lattice.nonzero()
    ambient_terms = enumerate_terms(spec.nvars, bound,
                                    laurent=spec.mode == "laurent")

    sep_trivial = {}

    def ideal_generators(L):
        # over Z/n the lattice span sees integer multiples, so the cyclic
        # generator alone spans the ideal; other rings keep every element
        if isinstance(ring, ZModRing):
            return [math.gcd(ring.n, *sorted(L))]
        return [l for l in sorted(L, key=ring.elements.index)
                if l != ring.zero]

    def separated(f, L):
        pairs = [(t, l) for t in ambient_terms
                 for l in ideal_generators(L) if l != ring.zero]
        base = [spec.multiply(spec.term(t), spec.const(l))
                for t, l in pairs]
        if L not in sep_trivial:
            supports = {spec.term_cls.one()}
            for w in base:
                supports.update(w.coeffs)
            space = PolyVectorSpace(spec, sorted(supports))
            sep_trivial[L] = space.kernel_of(base)
        prods = [spec.multiply(h, f) for h in base]
        supports = {spec.term_cls.one()}
        for w in prods:
            supports.update(w.coeffs)
        space = PolyVectorSpace(spec, sorted(supports))
        killing = space.kernel_of(prods)
        return sep_trivial[L].contains_span(killing)

    outside = [f for f in window_polys
               if not f.is_zero()
               and any(c not in sing for c in f.coefficient_set())]
    for f in outside:
        top = spec.poly({t: c for t, c in f.coeffs.items() if c in sing})
        rest = f - top
        lead = rest.leading_data()[1]
        assert lead not in sing
        ann_lead = frozenset(left_annihilator(ring, lead))
        cand = None
        for L in nonzero_ideals:
            if len(L & ann_lead) == 1:
                shared = common_annihilator(ring, top.coefficient_set())
                meet = L & shared
                if len(meet) > 1:
                    cand = meet
                break
        found = cand is not None and separated(f, cand)
        if not found:
            for L in nonzero_ideals:
                if separated(f, L):
                    found = True
                    break
        if not found:
            return SingularReport(
                "fail", f"{f} stays glued to every ideal span despite a "
                f"non-singular coefficient", witness=f)

    return SingularReport(
        "pass",
        f"window slice has order {len(inside) + 1} and matches the "
        f"coefficient formula at bound {bound}",
        slice_order=len(inside) + 1)


# ----------------------------------------------------------------------
# ideal slices through the strata


@dataclass
class IdealSlice:
    m: int
    n: int
    generators: list
    span: object

    def contains(self, f):
        return self.span.contains(f)


def ideal_slice(sub, data, gens, m, n, bound, two_sided=True):
    """Lower-ring elements whose designated-multiple lands in the ideal.

    Computes {p below the distinguished variable : p * lam_m^n falls in
    the generated ideal up to lower-degree junk} as a span, with
    monotonicity checked against the (m, n+1) slice by the caller.
    """
    spec = sub.ambient
    var = data.var
    lam = data.lam[m]
    lam_n = spec.one()
    for _ in range(n):
        lam_n = spec.multiply(lam_n, lam)
    nm = lam_n.deg_in(var)
    assert nm == n * m
    if bound < nm:
        raise SpecError(f"bound {bound} below the stratum degree {nm}")

    bterms = data.lower_terms(sub, m, bound - nm + m)
    bpolys = [spec.term(t) for t in bterms]
    images = [spec.multiply(p, lam_n) for p in bpolys]

    mults = sub.terms_up_to(bound)
    ideal_gens = []
    for g in gens:
        for t in mults:
            left = spec.multiply(spec.term(t), g)
            if two_sided:
                for u in mults:
                    prod = spec.multiply(left, spec.term(u))
                    if prod.total_degree() <= bound + lam_n.total_degree():
                        ideal_gens.append(prod)
            else:
                ideal_gens.append(left)

    supports = set()
    for w in images + ideal_gens:
        supports.update(w.coeffs)
    supports.add(spec.term_cls.one())
    space = PolyVectorSpace(spec, sorted(supports))
    low = [spec.term(t) for t in space.terms if t.exp(var) < nm]
    target = space.span([g for g in ideal_gens if space.fits(g)] + low)

    kernel = space.kernel_of(images, target=target)
    bspace = PolyVectorSpace(spec, bterms)
    span = type(kernel)(bspace, kernel.spans)
    span.dim = bspace.dim
    ring = spec.ring
    out_gens = []
    for ci, sp in enumerate(span.spans):
        for b in sp.basis:
            vecs = [[0] * s.dim for s in span.spans]
            vecs[ci] = [x % sp.n for x in b]
            p = bspace.poly_from(vecs)
            if not p.is_zero():
                out_gens.append(p)
    return IdealSlice(m, n, out_gens, span)


def ideal_slice_monotone(sub, data, gens, m, n, bound, two_sided=True):
    """The (m, n) slice plus the two growth facts against (m, n+1).

    The slices live on different lower-ring windows, so growth is checked
    generator by generator (component bases generate the whole span).
    """
    small = ideal_slice(sub, data, gens, m, n, bound, two_sided)
    big = ideal_slice(sub, data, gens, m, n + 1,
                      bound + data.lam[m].total_degree(), two_sided)
    act = data.alpha[m]
    for p in small.generators:
        assert big.contains(p), "slices must grow with n"
        assert big.contains(act(p)), \
            "induced map must push slices forward"
    return small, big


# ----------------------------------------------------------------------
# free words


@dataclass
class WordReport:
    ok: bool
    count: int
    table: dict
    collision: object = None
    regular_notes: list = field(default_factory=list)


def _regular_by_theory(g):
    """Single terms with unit coefficient multiply injectively on terms."""
    if len(g.coeffs) != 1:
        return False
    (t, c), = g.coeffs.items()
    return c == g.spec.ring.one


def free_words_distinct(gens, length, budget=200000):
    """Multiply out all words in the generators and look for collisions."""
    if not gens:
        raise SpecError("need at least one generator")
    spec = gens[0].spec
    notes = []
    for i, g in enumerate(gens):
        if _regular_by_theory(g):
            notes.append(f"generator {i}: single unit term, regular")
        else:
            res = regularity_bounded(spec, g, 2)
            notes.append(f"generator {i}: {res.status} "
                         f"(bounded {res.certified_to})")

    total = sum(len(gens) ** k for k in range(1, length + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} words exceed the budget")
    seen = {}
    table = {}
    frontier = [((), spec.one())]
    for _ in range(length):
        nxt = []
        for word, poly in frontier:
            for i, g in enumerate(gens):
                w = word + (i,)
                p = spec.multiply(poly, g)
                label = ".".join(str(k) for k in w)
                table[label] = p
                key = frozenset(p.coeffs.items())
                if key in seen:
                    return WordReport(False, len(table), table,
                                      collision=(seen[key], label),
                                      regular_notes=notes)
                seen[key] = label
                nxt.append((w, p))
        frontier = nxt
    return WordReport(True, len(table), table, regular_notes=notes)


# ----------------------------------------------------------------------
# Goldie-style composite check


@dataclass
class GoldieReport:
    verdict: str
    udim: int
    semiprime: bool
    found_larger: bool
    detail: str


def goldie_bounded_check(sub, d_small, d_big, budget=400):
    """At bound: a maximal independent uniform family lifts, and no larger
    independent family shows up in the subring window."""
    spec = sub.ambient
    ring = spec.ring
    module = modlattice.regular_module(ring, validate=False)
    pr = modlattice.primeness(ring)
    cert = modlattice.uniform_dimension(module)
    family = [sorted(L, key=ring.elements.index) for L in cert.family]

    ds = lift_directsum_check(sub, family, d_small + d_big)
    if not ds.ok:
        return GoldieReport("fail", cert.dim, pr.semiprime, False,
                            f"lifted family broke: {ds.detail}")
    for L in family:
        rep = lift_ideal_check(sub, L, "uniform", d_small, d_big)
        if rep.verdict != "pass":
            return GoldieReport(rep.verdict, cert.dim, pr.semiprime, False,
                                f"uniform lift of {L}: {rep.detail}")

    taus = sub.terms_up_to(d_big)
    big = sub.window(d_small + d_big)
    try:
        candidates = [f for f in _enumerate_span(sub, d_small, MAX_ENUM)
                      if not f.is_zero()][:budget]
    except BudgetExceeded as exc:
        return GoldieReport("bounded-inconclusive", cert.dim, pr.semiprime,
                            False, str(exc))
    chosen = []
    running = None
    for f in candidates:
        span = big.span([spec.multiply(spec.term(t), f) for t in taus])
        if span.is_zero():
            continue
        if running is None or span.intersection(running).is_zero():
            chosen.append((f, span))
            running = span if running is None else running.plus(span)
            if len(chosen) > cert.dim:
                wider = sub.window(d_small + d_big + 2)
                wtaus = sub.terms_up_to(d_big + 2)
                respans = [wider.span([spec.multiply(spec.term(t), g)
                                       for t in wtaus]) for g, _ in chosen]
                independent = True
                for i, X in enumerate(respans):
                    rest = None
                    for j, Y in enumerate(respans):
                        if j != i:
                            rest = Y if rest is None else rest.plus(Y)
                    if not X.intersection(rest).is_zero():
                        independent = False
                        break
                if independent:
                    return GoldieReport(
                        "fail", cert.dim, pr.semiprime, True,
                        f"independent family of size {len(chosen)} found: "
                        f"{[str(g) for g, _ in chosen]}")
                chosen.pop()
    return GoldieReport("pass", cert.dim, pr.semiprime, False,
                        f"family of {cert.dim} lifted; no larger family "
                        f"among {len(candidates)} window candidates")


# ----------------------------------------------------------------------
# named constructions


def _ne_multiplier_for(sub, polys, candidates):
    """A single left multiplier pushing every listed element into the span."""
    for a in candidates:
        good = True
        for e in polys:
            img = sub.ambient.multiply(a, e)
            if img.is_zero() or not sub.member(img):
                good = False
                break
        if good:
            return a
    return None


def build_named_example(name, **params):
    """(carrier spec, subextension, verified property checklist)."""
    if name == "example1":
        return _example_swap(**params)
    if name == "example2":
        return _example_fib(**params)
    if name == "example3":
        return _example_power(**params)
    if name == "family5":
        from .family5 import build_family5
        return build_family5(**params)
    raise SpecError(f"unknown example {name!r}")


def _example_swap(q=1, eps=-1, eps_prime=-1, ring="zmod:8", bound=6):
    """Three variables; the top one swaps the first two up to unit factors.

    The span keeps every term whose middle exponent forces a top exponent.
    A power of the top variable is central and folds the carrier into the
    span, giving the single-multiplier property.
    """
    if q < 1:
        raise SpecError("need q >= 1")
    R = build_ring(ring) if isinstance(ring, str) else ring
    eps = eps % R.n if isinstance(R, ZModRing) else eps
    eps_prime = eps_prime % R.n if isinstance(R, ZModRing) else eps_prime
    prod = R.mul(eps, eps_prime)
    power = R.one
    for _ in range(q):
        power = R.mul(power, prod)
    if power != R.one:
        raise SpecError("the unit factors must satisfy (e e')^q = 1")
    inv_eps = R.inverse(eps)
    inv_eps_p = R.inverse(eps_prime)
    from .orecore import VarRule
    rules = {
        1: VarRule(images={0: {Term.var(0): R.one}},
                   images_inv={0: {Term.var(0): R.one}}),
        2: VarRule(images={0: {Term.var(1): eps},
                           1: {Term.var(0): eps_prime}},
                   images_inv={0: {Term.var(1): inv_eps_p},
                               1: {Term.var(0): inv_eps}}),
    }
    spec = SkewPolyRingSpec(R, 3, rules, name="swap carrier")

    def contains(t):
        return t.exp(1) == 0 or t.exp(2) != 0

    sub = SubextensionSpec(spec, contains, name="swap span",
                           generators=("x0", "x2"))

    checklist = []
    fixed = all(spec.apply_power_endo(2, 2 * q, spec.var(i)) == spec.var(i)
                for i in (0, 1))
    checklist.append(("conjugation order divides 2q", fixed,
                      f"2q = {2 * q}"))
    zc = spec.var(2, 2 * q)
    central = True
    probes = [spec.var(0), spec.var(1), spec.var(2),
              spec.parse("x0*x1"), spec.const(R.elements[min(3, len(
                  R.elements) - 1)])]
    for w in probes:
        if spec.multiply(zc, w) != spec.multiply(w, zc):
            central = False
            break
    checklist.append(("top power central", central, f"checked {len(probes)}"
                      " probes"))
    absorbed = all(sub.member(spec.multiply(zc, spec.term(t)))
                   for t in enumerate_terms(3, bound))
    checklist.append(("top power folds the carrier in", absorbed,
                      f"all terms to degree {bound}"))
    rep = closure_check(sub, bound)
    checklist.append(("span closed under products", rep.ok, rep.describe()))
    sets = [
        [spec.var(1), spec.parse("x0*x1")],
        [spec.var(0) + spec.var(1), spec.var(1, 2)],
        [spec.parse("x1*x2") + spec.var(0), spec.var(1)],
    ]
    candidates = [zc, spec.multiply(zc, zc)]
    candidates += [spec.term(t) for t in sub.terms_up_to(2)]
    ne_ok = all(_ne_multiplier_for(sub, E, candidates) is not None
                for E in sets)
    checklist.append(("single multiplier folds finite sets in", ne_ok,
                      f"{len(sets)} sample sets"))
    return spec, sub, checklist


def _fib_spec(ring="bigint"):
    R = build_ring(ring) if isinstance(ring, str) else ring
    from .orecore import VarRule
    minus = R.sub(R.zero, R.one)
    rules = {
        1: VarRule(images={0: {Term.var(0): R.one}},
                   images_inv={0: {Term.var(0): R.one}}),
        2: VarRule(images={0: {Term.var(1): R.one},
                           1: {Term.var(0): R.one, Term.var(1): R.one}},
                   images_inv={0: {Term.var(0): minus, Term.var(1): R.one},
                               1: {Term.var(0): R.one}}),
    }
    return SkewPolyRingSpec(R, 3, rules, name="shear carrier")


def _example_fib(ring="bigint", length=3, bound=8):
    """Top variable shears the plane; two short words generate freely."""
    spec = _fib_spec(ring)
    R = spec.ring
    u = spec.parse("x0*x2")
    v = spec.parse("x0^2*x2")
    sub = subext_full(spec, name="word span")
    sub.generators = ("x0*x2", "x0^2*x2")
    checklist = []
    expect = {
        "0.0": "x0*x1*x2^2", "0.1": "x0*x1^2*x2^2",
        "1.0": "x0^2*x1*x2^2", "1.1": "x0^2*x1^2*x2^2",
    }
    rep = free_words_distinct([u, v], length)
    two_ok = all(rep.table[k] == spec.parse(s) for k, s in expect.items())
    checklist.append(("length-2 word table", two_ok, "4 products"))
    checklist.append((f"words distinct to length {length}", rep.ok,
                      f"{rep.count} words"))
    pairs = []
    for n in (1, 2, 3, 5, 8):
        a, b = fib_power(n, R.n if isinstance(R, ZModRing) else 0)
        image = spec.apply_power_endo(2, n, spec.var(0))
        want = spec.poly({Term.var(0): a % R.n, Term.var(1): b % R.n}
                         if isinstance(R, ZModRing)
                         else {Term.var(0): a, Term.var(1): b})
        pairs.append(image == want)
    checklist.append(("conjugation powers follow the pair recursion",
                      all(pairs), "5 exponents"))
    return spec, sub, checklist


def _example_power(e=2, ring="bigint", length=5, bound=8):
    """One conjugation sends the lower variable to its e-th power."""
    if e < 2:
        raise SpecError("need e >= 2")
    R = build_ring(ring) if isinstance(ring, str) else ring
    from .orecore import VarRule
    rules = {1: VarRule(images={0: {Term.var(0, e): R.one}})}
    spec = SkewPolyRingSpec(R, 2, rules, name="power carrier")
    assert spec.injective_only
    u = spec.parse("x0*x1")
    v = spec.parse("x0^2*x1")
    sub = subext_full(spec, name="word span")
    sub.generators = ("x0*x1", "x0^2*x1")
    rep = free_words_distinct([u, v], length)
    checklist = [(f"words distinct to length {length}", rep.ok,
                  f"{rep.count} words")]
    degs_ok = True
    firsts = {0: 1, 1: 2}
    for label, p in rep.table.items():
        word = [int(k) for k in label.split(".")]
        if len(p.coeffs) != 1:
            degs_ok = False
            break
        (t, _), = p.coeffs.items()
        if t.exp(1) != len(word):
            degs_ok = False
            break
        if (t.exp(0) - firsts[word[0]]) % e != 0:
            degs_ok = False
            break
    checklist.append(("degrees encode length and first letter", degs_ok,
                      f"{rep.count} words"))
    return spec, sub, checklist
