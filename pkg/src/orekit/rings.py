"""Finite coefficient rings and the exact integer ring.

Rings are small associative rings with identity, built from a mini-language:

    zmod:N                    residues mod N, 2 <= N <= 256
    product:<spec>,<spec>     direct product
    tri2:<spec>               upper triangular 2x2 matrices over a
                              commutative base, elements [[a,b],[0,d]]
    bigint                    exact integers (not finite)

Every finite ring validates its axioms exhaustively on construction; the
carrier is capped at 256 elements so the cubic checks stay cheap (they are
vectorized over operation tables).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class RingSpecError(ValueError):
    pass


MAX_CARRIER = 256


class FiniteRing:
    """Base class: subclasses fill in elements and raw operations."""

    commutative = False

    def __init__(self):
        self.elements = ()
        self.zero = None
        self.one = None

    # raw ops, value -> value
    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        return self._neg[self.index(a)] if hasattr(self, "_neg") else None

    def index(self, a):
        return self._index[a]

    def format_element(self, a):
        raise NotImplementedError

    def parse_element(self, text):
        raise NotImplementedError

    def spec_string(self):
        raise NotImplementedError

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"<ring {self.spec_string()}>"

    def __eq__(self, other):
        return isinstance(other, FiniteRing) and self.spec_string() == other.spec_string()

    def __hash__(self):
        return hash(self.spec_string())

    def _finalize(self):
        """Build index, op tables, negation, characteristic; check axioms."""
        n = len(self.elements)
        if n > MAX_CARRIER:
            raise RingSpecError(f"carrier has {n} elements, cap is {MAX_CARRIER}")
        self._index = {a: i for i, a in enumerate(self.elements)}
        if len(self._index) != n:
            raise RingSpecError("duplicate carrier elements")
        add = np.empty((n, n), dtype=np.int32)
        mul = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                add[i, j] = self._index[self.add(a, b)]
                mul[i, j] = self._index[self.mul(a, b)]
        self._add_t = add
        self._mul_t = mul
        self._check_axioms()
        zero_i = self._index[self.zero]
        neg = [None] * n
        for i in range(n):
            j = int(np.nonzero(add[i] == zero_i)[0][0])
            neg[i] = self.elements[j]
        self._neg = neg
        # characteristic: additive order of 1
        c, cur = 1, self.one
        while cur != self.zero:
            cur = self.add(cur, self.one)
            c += 1
        self.characteristic = c
        self.commutative = bool(np.array_equal(mul, mul.T))

    def _check_axioms(self):
        n = len(self.elements)
        add, mul = self._add_t, self._mul_t
        zero_i = self._index[self.zero]
        one_i = self._index[self.one]
        idn = np.arange(n)
        if not np.array_equal(add, add.T):
            raise RingSpecError("addition not commutative")
        if not np.array_equal(add[zero_i], idn):
            raise RingSpecError("zero is not an additive identity")
        if not np.array_equal(mul[one_i], idn) or not np.array_equal(mul[:, one_i], idn):
            raise RingSpecError("one is not a multiplicative identity")
        for i in range(n):
            if not (add[i] == zero_i).any():
                raise RingSpecError("missing additive inverse")
        for a in range(n):
            # (a+b)+c == a+(b+c)
            if not np.array_equal(add[add[a]], add[a][add]):
                raise RingSpecError("addition not associative")
            # (a*b)*c == a*(b*c)
            if not np.array_equal(mul[mul[a]], mul[a][mul]):
                raise RingSpecError("multiplication not associative")
            # a*(b+c) == a*b + a*c
            row = mul[a]
            if not np.array_equal(row[add], add[row[:, None], row[None, :]]):
                raise RingSpecError("left distributivity fails")
        for c in range(n):
            col = mul[:, c]
            if not np.array_equal(col[add], add[col[:, None], col[None, :]]):
                raise RingSpecError("right distributivity fails")

    # convenience
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def sum(self, items):
        out = self.zero
        for x in items:
            out = self.add(out, x)
        return out

    def mul_int(self, k, a):
        """k*a for an integer k."""
        out = self.zero
        k = k % self.characteristic
        for _ in range(k):
            out = self.add(out, a)
        return out

    def units(self):
        return tuple(a for a in self.elements
                     if any(self.mul(a, b) == self.one and self.mul(b, a) == self.one
                            for b in self.elements))

    def inverse(self, a):
        for b in self.elements:
            if self.mul(a, b) == self.one and self.mul(b, a) == self.one:
                return b
        raise ValueError(f"{self.format_element(a)} is not a unit")

    is_finite = True


class ZModRing(FiniteRing):
    def __init__(self, n):
        if not (2 <= n <= MAX_CARRIER):
            raise RingSpecError(f"zmod modulus {n} out of range [2, {MAX_CARRIER}]")
        super().__init__()
        self.n = n
        self.elements = tuple(range(n))
        self.zero = 0
        self.one = 1
        self._finalize()

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def format_element(self, a):
        return str(a)

    def parse_element(self, text):
        try:
            return int(text) % self.n
        except ValueError:
            raise RingSpecError(f"bad residue literal {text!r}")

    def spec_string(self):
        return f"zmod:{self.n}"


class ProductRing(FiniteRing):
    def __init__(self, left, right):
        super().__init__()
        self.left = left
        self.right = right
        if len(left) * len(right) > MAX_CARRIER:
            raise RingSpecError("carrier too large for product")
        self.elements = tuple((a, b) for a in left.elements for b in right.elements)
        self.zero = (left.zero, right.zero)
        self.one = (left.one, right.one)
        self._finalize()

    def add(self, a, b):
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def format_element(self, a):
        return f"({self.left.format_element(a[0])},{self.right.format_element(a[1])})"

    def parse_element(self, text):
        t = text.strip()
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1]
        depth = 0
        for i, ch in enumerate(t):
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            elif ch == "," and depth == 0:
                return (self.left.parse_element(t[:i]),
                        self.right.parse_element(t[i + 1:]))
        raise RingSpecError(f"bad product literal {text!r}")

    def spec_string(self):
        return f"product:{self.left.spec_string()},{self.right.spec_string()}"


class Tri2Ring(FiniteRing):
    """Upper triangular 2x2 matrices [[a,b],[0,d]] over a commutative base."""

    def __init__(self, base):
        super().__init__()
        if not base.commutative:
            raise RingSpecError("tri2 base must be commutative")
        self.base = base
        if len(base) ** 3 > MAX_CARRIER:
            raise RingSpecError("carrier too large for tri2")
        self.elements = tuple((a, b, d)
                              for a in base.elements
                              for b in base.elements
                              for d in base.elements)
        self.zero = (base.zero, base.zero, base.zero)
        self.one = (base.one, base.zero, base.one)
        self._finalize()

    def add(self, x, y):
        R = self.base
        return (R.add(x[0], y[0]), R.add(x[1], y[1]), R.add(x[2], y[2]))

    def mul(self, x, y):
        R = self.base
        return (R.mul(x[0], y[0]),
                R.add(R.mul(x[0], y[1]), R.mul(x[1], y[2])),
                R.mul(x[2], y[2]))

    def format_element(self, x):
        f = self.base.format_element
        return f"[[{f(x[0])},{f(x[1])}],[0,{f(x[2])}]]"

    def parse_element(self, text):
        t = text.strip().replace(" ", "")
        if not (t.startswith("[[") and t.endswith("]]")):
            raise RingSpecError(f"bad tri2 literal {text!r}")
        inner = t[2:-2]
        try:
            top, bottom = inner.split("],[")
            a_txt, b_txt = top.split(",")
            z_txt, d_txt = bottom.split(",")
        except ValueError:
            raise RingSpecError(f"bad tri2 literal {text!r}")
        a = self.base.parse_element(a_txt)
        b = self.base.parse_element(b_txt)
        d = self.base.parse_element(d_txt)
        if self.base.parse_element(z_txt) != self.base.zero:
            raise RingSpecError("lower-left entry must be 0")
        return (a, b, d)

    def spec_string(self):
        return f"tri2:{self.base.spec_string()}"


class BigIntRing:
    """Exact integers. Infinite, so no tables and no annihilator scans."""

    is_finite = False
    commutative = True
    characteristic = 0
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul_int(self, k, a):
        return k * a

    def format_element(self, a):
        return str(a)

    def parse_element(self, text):
        return int(text)

    def spec_string(self):
        return "bigint"

    def __repr__(self):
        return "<ring bigint>"

    def __eq__(self, other):
        return isinstance(other, BigIntRing)

    def __hash__(self):
        return hash("bigint")


def _parse_prefix(s):
    if s.startswith("zmod:"):
        rest = s[5:]
        i = 0
        while i < len(rest) and rest[i].isdigit():
            i += 1
        if i == 0:
            raise RingSpecError(f"expected modulus after zmod: in {s!r}")
        return ZModRing(int(rest[:i])), rest[i:]
    if s.startswith("bigint"):
        return BigIntRing(), s[6:]
    if s.startswith("product:"):
        left, rest = _parse_prefix(s[8:])
        if not rest.startswith(","):
            raise RingSpecError(f"product needs two comma-separated specs in {s!r}")
        right, rest = _parse_prefix(rest[1:])
        if not left.is_finite or not right.is_finite:
            raise RingSpecError("product factors must be finite")
        return ProductRing(left, right), rest
    if s.startswith("tri2:"):
        base, rest = _parse_prefix(s[5:])
        if not base.is_finite:
            raise RingSpecError("tri2 base must be finite")
        return Tri2Ring(base), rest
    raise RingSpecError(f"unrecognized ring spec {s!r}")


def build_ring(spec):
    """Build and validate a ring from its spec string."""
    ring, rest = _parse_prefix(spec.strip())
    if rest:
        raise RingSpecError(f"trailing input {rest!r} in ring spec {spec!r}")
    return ring


def left_annihilator(ring, a):
    """{x : x*a == 0}, a left ideal."""
    if not ring.is_finite:
        return frozenset({ring.zero})
    return frozenset(x for x in ring.elements if ring.mul(x, a) == ring.zero)


def right_annihilator(ring, a):
    """{x : a*x == 0}, a right ideal."""
    if not ring.is_finite:
        return frozenset({ring.zero})
    return frozenset(x for x in ring.elements if ring.mul(a, x) == ring.zero)


def is_left_regular(ring, a):
    """a*x != 0 for every nonzero x."""
    if not ring.is_finite:
        return a != 0
    return right_annihilator(ring, a) == frozenset({ring.zero})


def is_right_regular(ring, a):
    if not ring.is_finite:
        return a != 0
    return left_annihilator(ring, a) == frozenset({ring.zero})


def is_regular(ring, a):
    return is_left_regular(ring, a) and is_right_regular(ring, a)


@dataclass
class RingEndoData:
    """A coefficient map: endomorphism, automorphism, or sigma-derivation.

    mapping is a total dict on the carrier; sigma is the twist partner for
    sigma-derivations (delta(ab) = sigma(a) delta(b) + delta(a) b).
    """

    kind: str
    mapping: dict
    sigma: dict | None = None


def _endo_witness(ring, mapping, need_one=True):
    f = mapping
    for a in ring.elements:
        if a not in f or f[a] not in ring._index:
            return ("domain", a)
    for a in ring.elements:
        for b in ring.elements:
            if f[ring.add(a, b)] != ring.add(f[a], f[b]):
                return ("additive", a, b)
    for a in ring.elements:
        for b in ring.elements:
            if f[ring.mul(a, b)] != ring.mul(f[a], f[b]):
                return ("multiplicative", a, b)
    if need_one and f[ring.one] != ring.one:
        return ("one", ring.one)
    return None


def validate_endo(ring, data):
    """(ok, witness). witness pins the first broken axiom instance."""
    if not ring.is_finite:
        raise RingSpecError("endomorphism validation needs a finite ring")
    if data.kind in ("endomorphism", "automorphism"):
        w = _endo_witness(ring, data.mapping)
        if w is not None:
            return False, w
        if data.kind == "automorphism":
            if len(set(data.mapping.values())) != len(ring.elements):
                return False, ("not-bijective",)
        return True, None
    if data.kind == "sigma-derivation":
        if data.sigma is None:
            return False, ("missing-sigma",)
        w = _endo_witness(ring, data.sigma)
        if w is not None:
            return False, ("sigma",) + w
        d, s = data.mapping, data.sigma
        for a in ring.elements:
            if a not in d or d[a] not in ring._index:
                return False, ("domain", a)
        for a in ring.elements:
            for b in ring.elements:
                if d[ring.add(a, b)] != ring.add(d[a], d[b]):
                    return False, ("additive", a, b)
        for a in ring.elements:
            for b in ring.elements:
                want = ring.add(ring.mul(s[a], d[b]), ring.mul(d[a], b))
                if d[ring.mul(a, b)] != want:
                    return False, ("leibniz", a, b)
        return True, None
    raise RingSpecError(f"unknown endo kind {data.kind!r}")


def identity_endo(ring, kind="automorphism"):
    return RingEndoData(kind, {a: a for a in ring.elements})


def compose_map(ring, f, g):
    """x -> f(g(x)) as a dict."""
    return {a: f[g[a]] for a in ring.elements}


def invert_map(ring, f):
    inv = {}
    for a in ring.elements:
        inv[f[a]] = a
    if len(inv) != len(ring.elements):
        raise RingSpecError("map is not bijective")
    return inv


class SubRing(FiniteRing):
    """A unital subring, reusing the parent's elements and operations."""

    def __init__(self, parent, carrier):
        carrier = frozenset(carrier)
        if parent.zero not in carrier or parent.one not in carrier:
            raise RingSpecError("subring must contain 0 and 1")
        for a in carrier:
            if parent.neg(a) not in carrier:
                raise RingSpecError("subring not closed under negation")
            for b in carrier:
                if parent.add(a, b) not in carrier or parent.mul(a, b) not in carrier:
                    raise RingSpecError("subring not closed under + or *")
        self.parent = parent
        self.elements = tuple(sorted(carrier, key=parent.index))
        self.zero = parent.zero
        self.one = parent.one
        self._finalize()

    def add(self, a, b):
        return self.parent.add(a, b)

    def mul(self, a, b):
        return self.parent.mul(a, b)

    def format_element(self, a):
        return self.parent.format_element(a)

    def parse_element(self, text):
        a = self.parent.parse_element(text)
        if a not in self._index:
            raise RingSpecError(f"{text!r} is outside the subring")
        return a

    def spec_string(self):
        inner = ",".join(self.parent.format_element(a) for a in self.elements)
        return f"sub({self.parent.spec_string()};{inner})"


def subring_closure(ring, gens):
    """Smallest subset containing 0, 1 and gens, closed under +, -, *."""
    cur = {ring.zero, ring.one}
    cur.update(gens)
    while True:
        nxt = set(cur)
        for a in cur:
            nxt.add(ring.neg(a))
            for b in cur:
                nxt.add(ring.add(a, b))
                nxt.add(ring.mul(a, b))
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


def all_subrings(ring):
    """Every unital subring carrier, by closure search. Small rings only."""
    base = subring_closure(ring, ())
    found = {base}
    frontier = [base]
    while frontier:
        sub = frontier.pop()
        for a in ring.elements:
            if a in sub:
                continue
            bigger = subring_closure(ring, set(sub) | {a})
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(ring.index(a) for a in s)))


def standard_zoo(max_size=60):
    """Deterministic list of ring specs used by the verification suites."""
    specs = [f"zmod:{n}" for n in range(2, max_size + 1)]
    extras = [
        ("product:zmod:2,zmod:2", 4),
        ("product:zmod:2,zmod:3", 6),
        ("product:zmod:2,zmod:4", 8),
        ("product:zmod:3,zmod:3", 9),
        ("product:zmod:2,product:zmod:2,zmod:2", 8),
        ("product:zmod:2,zmod:6", 12),
        ("product:zmod:3,zmod:4", 12),
        ("product:zmod:3,zmod:5", 15),
        ("product:zmod:4,zmod:4", 16),
        ("tri2:zmod:2", 8),
    ]
    specs.extend(s for s, size in extras if size <= max_size)
    return specs
