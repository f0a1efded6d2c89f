"""Standard terms and the reverse lexicographic well-order.

A term is a product of powers of variables x0, x1, ... stored as a tuple of
(index, exponent) pairs with strictly increasing indices and no zero
exponents. `Term` requires positive exponents; `LaurentTerm` allows negative
ones. The empty tuple is the term 1.

Comparison: look at the greatest variable where two terms differ; the one
with the larger exponent there is the larger term. `BOTTOM` is a sentinel
below every term, used as the leading term of the zero polynomial.
"""

from __future__ import annotations


class Term:
    __slots__ = ("exps",)
    allow_negative = False

    def __init__(self, exps=()):
        exps = tuple((int(i), int(e)) for i, e in exps)
        last = -1
        for i, e in exps:
            if i <= last:
                raise ValueError("variable indices must strictly increase")
            if e == 0:
                raise ValueError("zero exponents are not stored")
            if e < 0 and not self.allow_negative:
                raise ValueError("negative exponent in a plain term")
            if i < 0:
                raise ValueError("negative variable index")
            last = i
        self.exps = exps

    @classmethod
    def one(cls):
        return cls(())

    @classmethod
    def var(cls, i, e=1):
        if e == 0:
            return cls(())
        return cls(((i, e),))

    @classmethod
    def from_dict(cls, d):
        return cls(sorted((i, e) for i, e in d.items() if e != 0))

    def exp(self, i):
        for j, e in self.exps:
            if j == i:
                return e
        return 0

    @property
    def max_var(self):
        return self.exps[-1][0] if self.exps else -1

    def is_one(self):
        return not self.exps

    def total_degree(self):
        return sum(e for _, e in self.exps)

    def mul(self, other):
        """Exponentwise sum. This is the commutative merge: exact for
        Laurent mode and for joining factors in disjoint variable blocks."""
        d = dict(self.exps)
        for i, e in other.exps:
            d[i] = d.get(i, 0) + e
        return type(self).from_dict(d)

    def pow(self, k):
        if k < 0 and not self.allow_negative:
            raise ValueError("negative power of a plain term")
        return type(self).from_dict({i: e * k for i, e in self.exps})

    def inverse(self):
        if not self.allow_negative:
            raise ValueError("plain terms have no inverses")
        return type(self).from_dict({i: -e for i, e in self.exps})

    def split_at(self, i):
        """(part in variables < i, part in variables >= i)."""
        low = tuple(p for p in self.exps if p[0] < i)
        high = tuple(p for p in self.exps if p[0] >= i)
        return type(self)(low), type(self)(high)

    def __eq__(self, other):
        return isinstance(other, Term) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        return compare_revlex(self, other) < 0

    def __le__(self, other):
        return compare_revlex(self, other) <= 0

    def __gt__(self, other):
        return compare_revlex(self, other) > 0

    def __ge__(self, other):
        return compare_revlex(self, other) >= 0

    def __repr__(self):
        return format_term(self)


class LaurentTerm(Term):
    __slots__ = ()
    allow_negative = True


class _Bottom:
    """Below every term; the leading term of 0."""

    def __repr__(self):
        return "BOTTOM"

    def __lt__(self, other):
        return other is not BOTTOM

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is BOTTOM


BOTTOM = _Bottom()


def compare_revlex(t, u):
    """-1, 0, 1. Compares at the greatest variable where t and u differ."""
    if t is BOTTOM or u is BOTTOM:
        if t is BOTTOM and u is BOTTOM:
            return 0
        return -1 if t is BOTTOM else 1
    top = max(t.max_var, u.max_var)
    for j in range(top, -1, -1):
        a, b = t.exp(j), u.exp(j)
        if a != b:
            return -1 if a < b else 1
    return 0


def revlex_key(t, nvars):
    """Sort key: exponents from the greatest variable down."""
    return tuple(t.exp(i) for i in range(nvars - 1, -1, -1))


def min_term(terms):
    """Least term of a nonempty finite collection.

    Runs the constructive recursion behind the well-ordering argument:
    find the smallest leading variable, the smallest exponent it carries,
    and recurse on the prefixes. Never calls compare_revlex, so the two
    can cross-check each other. Laurent inputs are shifted into plain
    terms first (the order is translation invariant).
    """
    terms = list(terms)
    if not terms:
        raise ValueError("min_term of nothing")
    shift = {}
    for t in terms:
        for i, e in t.exps:
            if e < 0:
                shift[i] = max(shift.get(i, 0), -e)
    if shift:
        tau = LaurentTerm.from_dict(shift)
        shifted = [t.mul(tau) for t in terms]
        best = _min_plain([Term(t.exps) for t in shifted])
        back = LaurentTerm(best.exps).mul(tau.inverse())
        for t in terms:
            if t.exps == back.exps:
                return t
        raise AssertionError("translated minimum not found")
    plain = _min_plain([Term(t.exps) for t in terms])
    for t in terms:
        if t.exps == plain.exps:
            return t
    raise AssertionError("minimum not found")


def _min_plain(terms):
    if any(t.is_one() for t in terms):
        return Term.one()
    lead = min(t.max_var for t in terms)
    block = [t for t in terms if t.max_var == lead]
    m = min(t.exp(lead) for t in block)
    prefixes = [Term(t.exps[:-1]) for t in block
                if t.exp(lead) == m]
    best = _min_plain(prefixes)
    return best.mul(Term.var(lead, m))


def format_term(t):
    if t is BOTTOM:
        return "BOTTOM"
    if not t.exps:
        return "1"
    parts = []
    for i, e in t.exps:
        parts.append(f"x{i}" if e == 1 else f"x{i}^{e}")
    return "*".join(parts)


def parse_term(text, laurent=False):
    cls = LaurentTerm if laurent else Term
    t = text.strip()
    if t == "1":
        return cls.one()
    d = {}
    for piece in t.split("*"):
        piece = piece.strip()
        if not piece.startswith("x"):
            raise ValueError(f"bad term factor {piece!r}")
        body = piece[1:]
        if "^" in body:
            idx_s, exp_s = body.split("^", 1)
            e = int(exp_s)
        else:
            idx_s, e = body, 1
        i = int(idx_s)
        d[i] = d.get(i, 0) + e
    return cls.from_dict(d)
