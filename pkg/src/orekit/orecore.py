"""Skew polynomial arithmetic.

A ring spec fixes a coefficient ring, a variable count and, per variable
x_i, a conjugation (a coefficient map plus images of the lower variables)
and an optional twisted derivation. Multiplication normalizes products of
standard terms by pushing variables right:

    x_i * c   = alpha_i(c) x_i + delta_i(c)          for coefficients c
    x_i * x_j = alpha_i(x_j) x_i + delta_i(x_j)      for j < i

In laurent-commuting mode exponents may be negative, variables commute
exactly, derivations vanish and the conjugations act on coefficients only.

The module also carries the closed-form machinery used by the parametrized
family over Z/p^(r+1) (bcoef tables, the p-adic margin inequality, the
geometric degree bounds) plus the Fibonacci conjugation data and the
localization of a commuting term monoid to a group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from . import intlinalg
from .rings import (RingEndoData, RingSpecError, compose_map, invert_map,
                    validate_endo)
from .termorder import (BOTTOM, LaurentTerm, Term, compare_revlex,
                        format_term, parse_term)


class SpecError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class VarRule:
    """Conjugation and derivation data for one variable.

    None coefficient maps mean identity; missing images mean the variable
    itself (alpha) or zero (delta). Raw image values may be dicts
    {exps-tuple: coeff} or polynomial text, resolved when the spec builds.
    """

    coeff_map: dict | None = None
    coeff_map_inv: dict | None = None
    images: dict = field(default_factory=dict)
    images_inv: dict | None = None
    delta_coeff: dict | None = None
    delta_images: dict = field(default_factory=dict)


class SkewPolynomial:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs):
        self.spec = spec
        self.coeffs = coeffs  # Term -> nonzero coefficient

    def __eq__(self, other):
        return (isinstance(other, SkewPolynomial) and self.spec is other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        """Support terms, descending."""
        return sorted(self.coeffs, reverse=True)

    def items(self):
        return [(t, self.coeffs[t]) for t in self.terms()]

    def __add__(self, other):
        return self.spec.add(self, other)

    def __sub__(self, other):
        return self.spec.add(self, self.spec.negate(other))

    def __neg__(self):
        return self.spec.negate(self)

    def __mul__(self, other):
        if isinstance(other, SkewPolynomial):
            return self.spec.multiply(self, other)
        return self.spec.multiply(self, self.spec.const(other))

    def __rmul__(self, other):
        return self.spec.multiply(self.spec.const(other), self)

    def leading_data(self):
        """(leading term, leading coefficient); (BOTTOM, 0) for the zero poly."""
        if not self.coeffs:
            return BOTTOM, self.spec.ring.zero
        lt = max(self.coeffs)
        return lt, self.coeffs[lt]

    def deg_in(self, i):
        """Largest exponent of x_i in the support; -1 for the zero poly."""
        if not self.coeffs:
            return -1
        return max(t.exp(i) for t in self.coeffs)

    def deg_in_range(self, i):
        """True when some support term reaches x_i or beyond."""
        return any(t.max_var >= i for t in self.coeffs)

    def total_degree(self):
        if not self.coeffs:
            return -1
        return max(t.total_degree() for t in self.coeffs)

    def coefficient(self, term):
        return self.coeffs.get(term, self.spec.ring.zero)

    def coefficient_set(self):
        return set(self.coeffs.values())

    def map_coeffs(self, fn):
        return self.spec.poly({t: fn(c) for t, c in self.coeffs.items()})

    def __repr__(self):
        return self.format()

    def format(self):
        if not self.coeffs:
            return "0"
        ring = self.spec.ring
        parts = []
        for t in self.terms():
            c = self.coeffs[t]
            ctxt = ring.format_element(c)
            if t.is_one():
                parts.append(ctxt)
            elif c == ring.one:
                parts.append(format_term(t))
            else:
                parts.append(f"{ctxt}*{format_term(t)}")
        return " + ".join(parts)


class SkewPolyRingSpec:
    """A skew polynomial (or commuting Laurent) ring over a coefficient ring."""

    def __init__(self, ring, nvars, rules=None, mode="poly", name=None,
                 inverse_search_bound=2):
        if mode not in ("poly", "laurent"):
            raise SpecError(f"unknown mode {mode!r}")
        self.ring = ring
        self.nvars = nvars
        self.mode = mode
        self.name = name or f"{ring.spec_string()}[{nvars} vars;{mode}]"
        self.term_cls = LaurentTerm if mode == "laurent" else Term
        self.rules = {}
        rules = rules or {}
        for i in range(nvars):
            self.rules[i] = rules.get(i) or VarRule()
        self._alpha_varpow = {}
        self._alpha_coeff_pow = {}
        self._power_images = {}
        self.bijective_certified = False
        self.injective_only = False
        self._resolve_images()
        self._validate()

    # construction helpers -------------------------------------------------

    def _as_term(self, t):
        if isinstance(t, Term):
            if t.exps and t.max_var >= self.nvars:
                raise SpecError(f"term {t!r} uses variables beyond {self.nvars}")
            return self.term_cls(t.exps)
        return self.term_cls(t)

    def poly(self, mapping):
        out = {}
        zero = self.ring.zero
        for t, c in mapping.items():
            t = self._as_term(t)
            if c == zero:
                continue
            if t in out:
                c = self.ring.add(out[t], c)
                if c == zero:
                    del out[t]
                    continue
            out[t] = c
        return SkewPolynomial(self, out)

    def zero_poly(self):
        return SkewPolynomial(self, {})

    def const(self, a):
        if a == self.ring.zero:
            return self.zero_poly()
        return SkewPolynomial(self, {self.term_cls.one(): a})

    def one(self):
        return self.const(self.ring.one)

    def var(self, i, e=1):
        if not (0 <= i < self.nvars):
            raise SpecError(f"no variable x{i}")
        return SkewPolynomial(self, {self.term_cls.var(i, e): self.ring.one})

    def term(self, t, c=None):
        return self.poly({t: self.ring.one if c is None else c})

    def parse(self, text):
        text = text.strip()
        if text == "0":
            return self.zero_poly()
        pieces = []
        depth = 0
        cur = []
        for ch in text:
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            if ch == "+" and depth == 0:
                pieces.append("".join(cur))
                cur = []
            else:
                cur.append(ch)
        pieces.append("".join(cur))
        total = self.zero_poly()
        for piece in pieces:
            piece = piece.strip()
            if not piece:
                raise SpecError(f"empty summand in {text!r}")
            if piece.startswith("x"):
                coef, term_txt = self.ring.one, piece
            else:
                pos = piece.find("*x")
                if pos < 0:
                    coef, term_txt = self.ring.parse_element(piece), "1"
                else:
                    coef = self.ring.parse_element(piece[:pos])
                    term_txt = piece[pos + 1:]
            t = parse_term(term_txt, laurent=(self.mode == "laurent"))
            total = self.add(total, self.poly({t: coef}))
        return total

    def _resolve_images(self):
        for i, rule in self.rules.items():
            for attr in ("images", "images_inv", "delta_images"):
                raw = getattr(rule, attr)
                if raw is None:
                    continue
                cooked = {}
                for j, val in raw.items():
                    if isinstance(val, SkewPolynomial):
                        cooked[j] = val
                    elif isinstance(val, str):
                        cooked[j] = self.parse(val)
                    else:
                        cooked[j] = self.poly(val)
                setattr(rule, attr, cooked)

    # validation -----------------------------------------------------------

    def _validate(self):
        ring = self.ring
        finite = ring.is_finite
        for i, rule in self.rules.items():
            for j, img in rule.images.items():
                if j >= i:
                    raise SpecError(f"alpha_{i} image given for x{j} (need j < {i})")
                if img.deg_in_range(i):
                    raise SpecError(f"alpha_{i}(x{j}) must live below x{i}")
            for j, img in rule.delta_images.items():
                if j >= i:
                    raise SpecError(f"delta_{i} image given for x{j} (need j < {i})")
                if img.deg_in_range(i):
                    raise SpecError(f"delta_{i}(x{j}) must live below x{i}")
            if rule.coeff_map is not None and finite:
                kind = "automorphism" if rule.coeff_map_inv or self.mode == "laurent" \
                    else "endomorphism"
                ok, w = validate_endo(ring, RingEndoData(kind, rule.coeff_map))
                if not ok:
                    raise SpecError(f"alpha_{i} coefficient map invalid: {w}")
                if rule.coeff_map_inv is None and self.mode == "laurent":
                    rule.coeff_map_inv = invert_map(ring, rule.coeff_map)
                elif rule.coeff_map_inv is not None:
                    comp = compose_map(ring, rule.coeff_map, rule.coeff_map_inv)
                    if any(comp[a] != a for a in ring.elements):
                        raise SpecError(f"alpha_{i} coefficient inverse wrong")
            if rule.delta_coeff is not None:
                if self.mode == "laurent":
                    raise SpecError("laurent mode admits no derivations")
                if finite:
                    sigma = rule.coeff_map or {a: a for a in ring.elements}
                    ok, w = validate_endo(
                        ring, RingEndoData("sigma-derivation", rule.delta_coeff,
                                           sigma=sigma))
                    if not ok:
                        raise SpecError(f"delta_{i} invalid: {w}")
        if self.mode == "laurent":
            for i, rule in self.rules.items():
                if rule.images or rule.delta_images or rule.delta_coeff:
                    raise SpecError("laurent mode: variables must commute exactly")
            if finite:
                maps = [r.coeff_map for r in self.rules.values() if r.coeff_map]
                for a_map in maps:
                    for b_map in maps:
                        ab = compose_map(ring, a_map, b_map)
                        ba = compose_map(ring, b_map, a_map)
                        if ab != ba:
                            raise SpecError("laurent conjugations must commute")
        self._certify_bijective()

    def _certify_bijective(self):
        """Set bijective_certified by checking supplied inverses, searching
        bounded preimages where none are given."""
        ring = self.ring
        for i, rule in self.rules.items():
            if rule.coeff_map is not None and ring.is_finite:
                vals = set(rule.coeff_map.values())
                if len(vals) != len(ring.elements):
                    self.injective_only = True
                    return
        for i, rule in self.rules.items():
            if not rule.images:
                continue
            if rule.images_inv:
                for j in rule.images:
                    inv = rule.images_inv.get(j)
                    if inv is None:
                        self.injective_only = True
                        return
                    back = self.apply_alpha(i, inv)
                    if back != self.var(j):
                        raise SpecError(
                            f"alpha_{i} inverse image for x{j} fails round trip")
            else:
                found = self._search_inverse_images(i, rule)
                if not found:
                    self.injective_only = True
                    return
        self.bijective_certified = not self.injective_only

    def _search_inverse_images(self, i, rule, budget=200000):
        """Bounded search for preimages of the lower variables under alpha_i."""
        if not self.ring.is_finite:
            return False
        lower_terms = enumerate_terms(i, 2)
        n = len(lower_terms)
        combos = len(self.ring.elements) ** n
        if combos > budget:
            return False
        targets = {j: self.var(j) for j in rule.images}
        found = {}
        from itertools import product as iproduct
        for coeffs in iproduct(self.ring.elements, repeat=n):
            cand = self.poly({t: c for t, c in zip(lower_terms, coeffs)})
            if cand.is_zero():
                continue
            img = self.apply_alpha(i, cand)
            for j, tgt in targets.items():
                if j not in found and img == tgt:
                    found[j] = cand
            if len(found) == len(targets):
                rule.images_inv = found
                return True
        return False

    # arithmetic -----------------------------------------------------------

    def add(self, f, g):
        out = dict(f.coeffs)
        ring = self.ring
        for t, c in g.coeffs.items():
            if t in out:
                s = ring.add(out[t], c)
                if s == ring.zero:
                    del out[t]
                else:
                    out[t] = s
            else:
                out[t] = c
        return SkewPolynomial(self, out)

    def negate(self, f):
        return SkewPolynomial(self, {t: self.ring.neg(c)
                                     for t, c in f.coeffs.items()})

    def scalar_left(self, a, f):
        ring = self.ring
        out = {}
        for t, c in f.coeffs.items():
            v = ring.mul(a, c)
            if v != ring.zero:
                out[t] = v
        return SkewPolynomial(self, out)

    def multiply(self, f, g):
        if self.mode == "laurent":
            return self._multiply_laurent(f, g)
        acc = self.zero_poly()
        for tau, a in f.coeffs.items():
            h = self._term_times_poly(tau, g)
            acc = self.add(acc, self.scalar_left(a, h))
        return acc

    def _multiply_laurent(self, f, g):
        ring = self.ring
        out = {}
        for lam, a in f.coeffs.items():
            for tau, b in g.coeffs.items():
                c = ring.mul(a, self.conjugate_coeff(lam, b))
                if c == ring.zero:
                    continue
                t = lam.mul(tau)
                if t in out:
                    s = ring.add(out[t], c)
                    if s == ring.zero:
                        del out[t]
                    else:
                        out[t] = s
                else:
                    out[t] = c
        return SkewPolynomial(self, out)

    def conjugate_coeff(self, lam, b):
        """alpha_lam(b) in laurent mode: composite of coefficient maps."""
        for i, k in lam.exps:
            rule = self.rules[i]
            if rule.coeff_map is None:
                continue
            m = rule.coeff_map if k > 0 else rule.coeff_map_inv
            for _ in range(abs(k)):
                b = m[b]
        return b

    def _term_times_poly(self, tau, g):
        if tau.is_one():
            return g
        h = g
        for i, k in reversed(tau.exps):
            for _ in range(k):
                h = self._var_times_poly(i, h)
        return h

    def _var_times_poly(self, i, g):
        acc = self.zero_poly()
        xi = self.term_cls.var(i)
        for tau, b in g.coeffs.items():
            low, high = tau.split_at(i)
            blow = self.poly({low: b})
            a_part = self.apply_alpha(i, blow)
            d_part = self.apply_delta(i, blow)
            xi_high = xi.mul(high)
            pieces = {}
            for mu, c in a_part.coeffs.items():
                pieces[mu.mul(xi_high)] = c
            acc = self.add(acc, SkewPolynomial(self, pieces))
            if d_part.coeffs:
                pieces = {}
                for mu, c in d_part.coeffs.items():
                    t = mu.mul(high)
                    if t in pieces:
                        c = self.ring.add(pieces[t], c)
                    pieces[t] = c
                pieces = {t: c for t, c in pieces.items() if c != self.ring.zero}
                acc = self.add(acc, SkewPolynomial(self, pieces))
        return acc

    # conjugation as a ring map on the truncated subring --------------------

    def _alpha_coeff(self, i, a):
        m = self.rules[i].coeff_map
        return a if m is None else m[a]

    def _alpha_var_power(self, i, j, e):
        """alpha_i(x_j)^e, cached."""
        key = (i, j, e)
        got = self._alpha_varpow.get(key)
        if got is not None:
            return got
        img = self.rules[i].images.get(j)
        if img is None:
            out = self.term(self.term_cls.var(j, e))
        elif e == 1:
            out = img
        else:
            half = self._alpha_var_power(i, j, e // 2)
            out = self.multiply(half, half)
            if e % 2:
                out = self.multiply(out, img)
        self._alpha_varpow[key] = out
        return out

    def apply_alpha(self, i, f):
        """alpha_i applied to a polynomial in variables below x_i."""
        acc = self.zero_poly()
        for tau, a in f.coeffs.items():
            if tau.max_var >= i:
                raise SpecError(f"alpha_{i} applied across x{tau.max_var}")
            piece = self.const(self._alpha_coeff(i, a))
            for j, e in tau.exps:
                piece = self.multiply(piece, self._alpha_var_power(i, j, e))
            acc = self.add(acc, piece)
        return acc

    def apply_alpha_inv(self, i, f):
        rule = self.rules[i]
        acc = self.zero_poly()
        for tau, a in f.coeffs.items():
            if tau.max_var >= i:
                raise SpecError(f"alpha_{i} inverse applied across x{tau.max_var}")
            if rule.coeff_map_inv is not None:
                a = rule.coeff_map_inv[a]
            elif rule.coeff_map is not None:
                a = invert_map(self.ring, rule.coeff_map)[a]
            piece = self.const(a)
            for j, e in tau.exps:
                img = (rule.images_inv or {}).get(j)
                if img is None:
                    part = self.term(self.term_cls.var(j, e))
                else:
                    part = img
                    for _ in range(e - 1):
                        part = self.multiply(part, img)
                piece = self.multiply(piece, part)
            acc = self.add(acc, piece)
        return acc

    def apply_delta(self, i, f):
        """The alpha_i-twisted derivation, extended by the product rule."""
        rule = self.rules[i]
        if rule.delta_coeff is None and not rule.delta_images:
            return self.zero_poly()
        acc = self.zero_poly()
        for tau, a in f.coeffs.items():
            if tau.exps and tau.max_var >= i:
                raise SpecError(f"delta_{i} applied across x{tau.max_var}")
            factors = [("c", a)]
            for j, e in tau.exps:
                factors.extend(("v", j) for _ in range(e))
            acc = self.add(acc, self._delta_of_word(i, factors))
        return acc

    def _delta_of_word(self, i, factors):
        rule = self.rules[i]
        if not factors:
            return self.zero_poly()
        kind, val = factors[0]
        rest = factors[1:]
        if kind == "c":
            head_delta = (self.const(rule.delta_coeff[val])
                          if rule.delta_coeff else self.zero_poly())
            head_alpha = self.const(self._alpha_coeff(i, val))
            head_plain = self.const(val)
        else:
            head_delta = rule.delta_images.get(val, self.zero_poly())
            head_alpha = self._alpha_var_power(i, val, 1)
            head_plain = self.var(val)
        if not rest:
            return head_delta
        rest_poly = self._word_poly(rest)
        out = self.multiply(head_alpha, self._delta_of_word(i, rest))
        out = self.add(out, self.multiply(head_delta, rest_poly))
        return out

    def _word_poly(self, factors):
        out = self.one()
        for kind, val in factors:
            piece = self.const(val) if kind == "c" else self.var(val)
            out = self.multiply(out, piece)
        return out

    def apply_power_endo(self, i, m, f):
        """alpha_i^m on a polynomial below x_i, with memoized images."""
        if m < 0:
            raise SpecError("negative conjugation power")
        if m == 0:
            return f
        acc = self.zero_poly()
        for tau, a in f.coeffs.items():
            if tau.exps and tau.max_var >= i:
                raise SpecError(f"alpha_{i}^{m} applied across x{tau.max_var}")
            piece = self.const(self._coeff_map_power(i, m, a))
            for j, e in tau.exps:
                base = self._power_image(i, m, j)
                part = base
                for _ in range(e - 1):
                    part = self.multiply(part, base)
                piece = self.multiply(piece, part)
            acc = self.add(acc, piece)
        return acc

    def _power_image(self, i, m, j):
        key = (i, m, j)
        got = self._power_images.get(key)
        if got is not None:
            return got
        if m == 1:
            out = self._alpha_var_power(i, j, 1)
        else:
            out = self.apply_alpha(i, self._power_image(i, m - 1, j))
        self._power_images[key] = out
        return out

    def _coeff_map_power(self, i, m, a):
        rule = self.rules[i]
        if rule.coeff_map is None:
            return a
        key = (i, m)
        comp = self._alpha_coeff_pow.get(key)
        if comp is None:
            comp = rule.coeff_map
            for _ in range(m - 1):
                comp = compose_map(self.ring, rule.coeff_map, comp)
            self._alpha_coeff_pow[key] = comp
        return comp[a]


def enumerate_terms(nvars, max_total, laurent=False):
    """All terms in x0..x_{nvars-1} with total |degree| budget max_total.

    For laurent=True exponents range in [-max_total, max_total] with the sum
    of absolute values capped; otherwise exponents are naturals with total
    degree capped.
    """
    cls = LaurentTerm if laurent else Term
    out = []

    def rec(i, left, acc):
        if i == nvars:
            out.append(cls.from_dict({j: e for j, e in acc if e}))
            return
        lo = -left if laurent else 0
        for e in range(lo, left + 1):
            rec(i + 1, left - abs(e), acc + [(i, e)])

    rec(0, max_total, [])
    out.sort()
    return out


def terms_in_box(bounds, laurent=False):
    """All terms with exponent of x_i in [lo_i, hi_i]."""
    cls = LaurentTerm if laurent else Term
    out = [[]]
    for i, (lo, hi) in enumerate(bounds):
        out = [acc + [(i, e)] for acc in out for e in range(lo, hi + 1)]
    terms = [cls.from_dict({j: e for j, e in acc if e}) for acc in out]
    terms.sort()
    return terms


# ----------------------------------------------------------------------
# coefficient vector spaces over Z/n components


def coeff_components(ring):
    """(components, assemble) for rings that split into Z/n factors.

    components is a list of (modulus, projector); assemble maps a list of
    residues back to a ring element. Returns None for rings that do not
    split this way (noncommutative tri2 blocks).
    """
    from .rings import ProductRing, ZModRing
    if isinstance(ring, ZModRing):
        return [(ring.n, lambda a: a)], lambda res: res[0] % ring.n
    if isinstance(ring, ProductRing):
        left = coeff_components(ring.left)
        right = coeff_components(ring.right)
        if left is None or right is None:
            return None
        lcomp, lassemble = left
        rcomp, rassemble = right
        comps = [(n, (lambda p: (lambda a: p(a[0])))(p)) for n, p in lcomp]
        comps += [(n, (lambda p: (lambda a: p(a[1])))(p)) for n, p in rcomp]

        def assemble(res):
            return (lassemble(res[:len(lcomp)]), rassemble(res[len(lcomp):]))

        return comps, assemble
    return None


class PolyVectorSpace:
    """Fixed term window turning polynomials into integer vectors per
    Z/n component of the coefficient ring."""

    def __init__(self, spec, terms):
        self.spec = spec
        self.terms = tuple(sorted(set(terms)))
        self.pos = {t: k for k, t in enumerate(self.terms)}
        split = coeff_components(spec.ring)
        if split is None:
            raise SpecError(f"{spec.ring.spec_string()} does not split into Z/n parts")
        self.components, self.assemble = split

    @property
    def dim(self):
        return len(self.terms)

    def fits(self, f):
        return all(t in self.pos for t in f.coeffs)

    def vectors(self, f):
        """One integer vector per component."""
        vecs = []
        for n, proj in self.components:
            v = [0] * self.dim
            for t, c in f.coeffs.items():
                v[self.pos[t]] = proj(c) % n
            vecs.append(v)
        return vecs

    def poly_from(self, vecs):
        out = {}
        for k, t in enumerate(self.terms):
            res = [v[k] for v in vecs]
            out[t] = self.assemble(res)
        return self.spec.poly(out)

    def span(self, polys):
        gens = [self.vectors(f) for f in polys]
        spans = []
        for ci, (n, _) in enumerate(self.components):
            spans.append(intlinalg.ModSpan(n, self.dim, [g[ci] for g in gens]))
        return ComponentSpan(self, spans)

    def kernel_of(self, images, target=None):
        """{c : sum c_j images_j lies in target} over ring tuples c.

        images is a list of polynomials (must fit the window); target is a
        ComponentSpan on this window, defaulting to zero. The solution set
        is returned as a ComponentSpan in dimension len(images).
        """
        vec_lists = [self.vectors(f) for f in images]
        spans = []
        for ci, (n, _) in enumerate(self.components):
            cols = [list(v[ci]) for v in vec_lists]
            goal = [[n if r == k else 0 for r in range(self.dim)]
                    for k in range(self.dim)]
            if target is not None:
                goal += [list(b) for b in target.spans[ci].basis]
            basis = intlinalg.preimage(cols, goal, self.dim)
            spans.append(intlinalg.ModSpan(n, len(images), basis))
        ks = ComponentSpan(None, spans)
        ks.dim = len(images)
        return ks


class ComponentSpan:
    """A subgroup of the coefficient-vector space, one lattice per component."""

    def __init__(self, space, spans):
        self.space = space
        self.spans = spans
        self.dim = space.dim if space is not None else None

    def contains(self, f_or_vecs):
        vecs = (self.space.vectors(f_or_vecs)
                if isinstance(f_or_vecs, SkewPolynomial) else f_or_vecs)
        return all(sp.contains(v) for sp, v in zip(self.spans, vecs))

    @property
    def order(self):
        out = 1
        for sp in self.spans:
            out *= sp.order
        return out

    def is_zero(self):
        return self.order == 1

    def intersection(self, other):
        out = ComponentSpan(self.space, [a.intersection(b)
                                         for a, b in zip(self.spans, other.spans)])
        out.dim = self.dim
        return out

    def plus(self, other):
        spans = []
        for a, b in zip(self.spans, other.spans):
            spans.append(intlinalg.ModSpan(a.n, a.dim, a.basis + b.basis))
        out = ComponentSpan(self.space, spans)
        out.dim = self.dim
        return out

    def contains_span(self, other):
        if self.dim != other.dim:
            raise SpecError("span comparison across different term windows")
        return all(a.contains_span(b) for a, b in zip(self.spans, other.spans))

    def __eq__(self, other):
        return (isinstance(other, ComponentSpan)
                and self.contains_span(other) and other.contains_span(self))

    def some_nonzero_poly(self):
        """A polynomial representing a nonzero class, if any."""
        if self.space is None:
            raise SpecError("no term window attached")
        if self.is_zero():
            return None
        vecs = []
        hot = None
        for ci, sp in enumerate(self.spans):
            v = sp.some_nonzero()
            if v is not None and hot is None:
                hot = ci
                vecs.append(v)
            else:
                vecs.append([0] * sp.dim)
        return self.space.poly_from(vecs)

    def enumerate_polys(self, cap=200000):
        """All represented polynomials. Small spans only."""
        if self.space is None:
            raise SpecError("no term window attached")
        if self.order > cap:
            raise BudgetExceeded(f"span order {self.order} exceeds cap {cap}")
        from itertools import product as iproduct
        per = [sorted(sp.elements()) for sp in self.spans]
        out = []
        for combo in iproduct(*per):
            out.append(self.space.poly_from([list(v) for v in combo]))
        return out


# ----------------------------------------------------------------------
# closed-form machinery for the conjugation x -> x + p x^e


def geom_degree_sum(m, e):
    """1 + e + ... + e^(m-1); the x-degree growth of m conjugation steps."""
    if m < 0:
        raise ValueError("negative index")
    return (e ** m - 1) // (e - 1)


class BcoefTable:
    """Coefficients in alpha^m(x^n) = sum_k bcoef(n,m,k) p^k x^(n+k(e-1)).

    Pure integer data depending only on e: the recursion composes one more
    conjugation step through the binomial expansion of (x + p x^e)^n.
    """

    def __init__(self, e):
        if e < 2:
            raise ValueError("need e >= 2")
        self.e = e
        self._memo = {}

    def get(self, n, m, k):
        if k < 0:
            return 0
        if m == 0:
            return 1 if k == 0 else 0
        if m == 1:
            return math.comb(n, k)
        key = (n, m, k)
        got = self._memo.get(key)
        if got is not None:
            return got
        e = self.e
        hi = min(k, n * geom_degree_sum(m - 1, e))
        lo = max(0, -((n - k) // e))
        # the truncated lower bound only skips zero binomials; keep that true
        for l in range(0, lo):
            assert math.comb(n + l * (e - 1), k - l) == 0
        total = 0
        for l in range(lo, hi + 1):
            total += self.get(n, m - 1, l) * math.comb(n + l * (e - 1), k - l)
        self._memo[key] = total
        return total


@lru_cache(maxsize=None)
def _table_for(e):
    return BcoefTable(e)


def bcoef(n, m, k, e):
    return _table_for(e).get(n, m, k)


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_family_params(p, r, e):
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if r < 1:
        raise ValueError("need r >= 1")
    if e < 2:
        raise ValueError("need e >= 2")
    if r == 1:
        import warnings
        warnings.warn("r = 1 is below the intended parameter range",
                      stacklevel=3)


def alpha_power_closed_exps(n, m, p, r, e):
    """alpha^m(x^n) over Z/p^(r+1) as {x-exponent: coefficient}.

    Truncates at k <= min(r, n * geom_degree_sum(m, e)) because p^k vanishes
    beyond k = r in characteristic p^(r+1).
    """
    mod = p ** (r + 1)
    if m == 0:
        return {n: 1 % mod}
    table = _table_for(e)
    hi = min(r, n * geom_degree_sum(m, e))
    out = {}
    for k in range(hi + 1):
        c = (table.get(n, m, k) * p ** k) % mod
        if c:
            out[n + k * (e - 1)] = c
    return out


def alpha_power_closed(n, m, p, r, e, spec=None):
    """alpha^m(x^n) by the closed formula, as a polynomial in x0.

    With no spec a fresh commutative Z/p^(r+1)[x0] carrier is built; pass
    the ambient two-variable spec to compare against apply_power_endo there.
    """
    _check_family_params(p, r, e)
    exps = alpha_power_closed_exps(n, m, p, r, e)
    if spec is None:
        from .rings import ZModRing
        spec = SkewPolyRingSpec(ZModRing(p ** (r + 1)), 1)
    mod = p ** (r + 1)
    return spec.poly({Term.var(0, x) if x else Term.one(): c % mod
                      for x, c in exps.items()})


def padic_valuation(p, n):
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def digit_sum(p, n):
    s = 0
    while n:
        s += n % p
        n //= p
    return s


@dataclass
class PadicMargin:
    value: int          # v_p(binom(p^r, n) * p^n)
    digit_sum: int      # s_p(n)
    factorial_val: int  # v_p(n!)


def padic_margin(p, r, n):
    """The valuation margin forcing alpha^(p^r) = id over Z/p^(r+1).

    Asserts the exact chain
        v_p(C(p^r,n) p^n) >= r + n - v_p(n!)
                          >= r + ((p-2)n + s_p(n))/(p-1)
                          >= r + 1
    together with Legendre's identity v_p(n!) = (n - s_p(n))/(p-1).
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not 1 <= n <= p ** r:
        raise ValueError(f"need 1 <= n <= p^r = {p ** r}")
    val = padic_valuation(p, math.comb(p ** r, n)) + n
    s = digit_sum(p, n)
    fv = padic_valuation(p, math.factorial(n)) if n else 0
    assert fv * (p - 1) == n - s
    assert val >= r + n - fv
    # compare the rational bounds by cross multiplication
    assert (n - fv) * (p - 1) >= (p - 2) * n + s
    assert (p - 2) * n + s >= p - 1
    return PadicMargin(value=val, digit_sum=s, factorial_val=fv)


def fib_power(n, modulus=0):
    """(a_{n-1}, a_n) of the Fibonacci sequence a_0 = 0, a_1 = 1.

    These are the coordinates of the n-th power of the conjugation
    x -> y, y -> x + y on the pair (x, y). modulus 0 means exact integers.
    """
    if n < 0:
        raise ValueError("negative power")
    a, b = 1, 0  # (a_{-1}, a_0)
    for _ in range(n):
        a, b = b, a + b
        if modulus:
            b %= modulus
            a %= modulus
    return a, b


def order_of_alpha(modulus):
    """Least n >= 1 with the Fibonacci conjugation n-th power the identity.

    Identity means a_{n-1} = 1, a_n = 0, a_{n+1} = 1 mod the modulus;
    infinite (math.inf) in characteristic zero.
    """
    if modulus == 0:
        return math.inf
    if modulus == 1:
        return 1
    a, b = 1, 0
    n = 0
    while True:
        a, b = b, (a + b) % modulus
        n += 1
        if a == 1 % modulus and b == 0:
            nxt = (a + b) % modulus
            if nxt == 1 % modulus:
                return n
        if n > 6 * modulus * modulus:
            raise AssertionError("conjugation order search ran away")


@dataclass
class Localization:
    basis: list
    expressions: list
    nvars: int


def laurent_localize(gens):
    """Group generated by a commuting term monoid, as a lattice basis.

    gens are LaurentTerms (or Terms). Returns a basis of the exponent
    lattice of the localized group and each generator's coordinates in it.
    """
    gens = list(gens)
    nvars = 0
    for g in gens:
        if g.exps:
            nvars = max(nvars, g.max_var + 1)
    cols = []
    for g in gens:
        cols.append([g.exp(i) for i in range(nvars)])
    basis = intlinalg.echelon_basis([list(c) for c in cols], nvars)
    exprs = []
    for c in cols:
        coords = intlinalg.member(basis, list(c))
        assert coords is not None
        exprs.append(coords)
    basis_terms = [LaurentTerm.from_dict({i: v[i] for i in range(nvars)})
                   for v in basis]
    return Localization(basis=basis_terms, expressions=exprs, nvars=nvars)


# ----------------------------------------------------------------------
# bounded regularity certification


@dataclass
class RegularityResult:
    status: str              # "regular" or "zero-divisor"
    certified_to: int | None  # degree bound, None = unconditional
    witness: object = None
    side: str | None = None


def regularity_bounded(spec, f, bound, budget=200000):
    """Zero-divisor search up to total degree `bound`.

    Single terms in a bijective-type spec are regular outright. Otherwise
    search for nonzero g with g f = 0 or f g = 0, exactly (lattice kernel)
    when the coefficients split into Z/n parts, by budgeted enumeration
    otherwise.
    """
    if f.is_zero():
        return RegularityResult("zero-divisor", None, witness="zero", side="both")
    if len(f.coeffs) == 1:
        t, c = next(iter(f.coeffs.items()))
        unit = False
        if spec.ring.is_finite:
            try:
                spec.ring.inverse(c)
                unit = True
            except ValueError:
                unit = False
        if unit and (spec.bijective_certified or t.is_one()):
            return RegularityResult("regular", None)
    laurent = spec.mode == "laurent"
    cand_terms = enumerate_terms(spec.nvars, bound, laurent=laurent)
    split = coeff_components(spec.ring)
    for side in ("left", "right"):
        if side == "left":
            images = [spec.multiply(spec.term(t), f) for t in cand_terms]
        else:
            images = [spec.multiply(f, spec.term(t)) for t in cand_terms]
        window = set()
        for img in images:
            window.update(img.coeffs)
        window.update(cand_terms)
        if split is not None:
            space = PolyVectorSpace(spec, window)
            ker = space.kernel_of(images)
            if not ker.is_zero():
                # reconstruct a witness polynomial from kernel coordinates
                for ci, sp in enumerate(ker.spans):
                    v = sp.some_nonzero()
                    if v is None:
                        continue
                    n = space.components[ci][0]
                    coeffs = {}
                    for pos, t in enumerate(cand_terms):
                        res = [0] * len(space.components)
                        res[ci] = v[pos] % n
                        c = space.assemble(res)
                        if c != spec.ring.zero:
                            coeffs[t] = c
                    g = spec.poly(coeffs)
                    if g.is_zero():
                        continue
                    prod = (spec.multiply(g, f) if side == "left"
                            else spec.multiply(f, g))
                    if prod.is_zero():
                        return RegularityResult("zero-divisor", bound,
                                                witness=g, side=side)
                # fall through: kernel class had no honest small witness
        else:
            from itertools import product as iproduct
            n_combo = len(spec.ring.elements) ** len(cand_terms)
            if n_combo > budget:
                raise BudgetExceeded(
                    f"{n_combo} coefficient combinations exceed budget {budget}")
            for coeffs in iproduct(spec.ring.elements, repeat=len(cand_terms)):
                g = spec.poly({t: c for t, c in zip(cand_terms, coeffs)})
                if g.is_zero():
                    continue
                prod = (spec.multiply(g, f) if side == "left"
                        else spec.multiply(f, g))
                if prod.is_zero():
                    return RegularityResult("zero-divisor", bound,
                                            witness=g, side=side)
    return RegularityResult("regular", bound)
