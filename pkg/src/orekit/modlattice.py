"""Brute-force module theory over finite rings.

Everything here works by exhaustion on small carriers: submodule lattices,
uniform and essential classification, uniform dimension with certificates,
singular submodules, (semi)primeness and the nicely-essential condition.
The point is to be an oracle, so every derived quantity is re-verified
against an independent second route whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .orecore import BudgetExceeded
from .rings import SubRing, all_subrings, is_left_regular

MAX_MODULE = 64
MAX_SUBMODULES = 4096


class ModuleInstance:
    """A finite left module: carrier, addition, ring action."""

    def __init__(self, ring, elements, add_fn, action_fn, zero, name=None,
                 validate=True):
        self.ring = ring
        self.elements = tuple(elements)
        self.zero = zero
        self.name = name or f"module[{len(self.elements)}] over {ring.spec_string()}"
        self._add = {}
        self._act = {}
        for x in self.elements:
            for y in self.elements:
                self._add[(x, y)] = add_fn(x, y)
        for r in ring.elements:
            for x in self.elements:
                self._act[(r, x)] = action_fn(r, x)
        if validate:
            self._validate()

    def add(self, x, y):
        return self._add[(x, y)]

    def act(self, r, x):
        return self._act[(r, x)]

    def neg(self, x):
        for y in self.elements:
            if self.add(x, y) == self.zero:
                return y
        raise ValueError("missing additive inverse")

    def nonzero(self):
        return [x for x in self.elements if x != self.zero]

    def __len__(self):
        return len(self.elements)

    def _validate(self):
        R, M = self.ring, self
        if len(self.elements) > MAX_MODULE:
            raise BudgetExceeded(
                f"module carrier {len(self.elements)} exceeds cap {MAX_MODULE}")
        els = self.elements
        for x in els:
            if M.add(M.zero, x) != x:
                raise ValueError("zero is not an additive identity")
            for y in els:
                if M.add(x, y) != M.add(y, x):
                    raise ValueError("addition not commutative")
                for z in els:
                    if M.add(M.add(x, y), z) != M.add(x, M.add(y, z)):
                        raise ValueError("addition not associative")
        for x in els:
            if M.act(R.one, x) != x:
                raise ValueError("1 does not act as identity")
        for r in R.elements:
            for x in els:
                for y in els:
                    if M.act(r, M.add(x, y)) != M.add(M.act(r, x), M.act(r, y)):
                        raise ValueError("action not additive in the module")
            for s in R.elements:
                for x in els:
                    if M.act(R.add(r, s), x) != M.add(M.act(r, x), M.act(s, x)):
                        raise ValueError("action not additive in the ring")
                    if M.act(R.mul(r, s), x) != M.act(r, M.act(s, x)):
                        raise ValueError("action not multiplicative")

    def key(self, subset):
        """Deterministic sort key for a submodule carrier."""
        order = {x: i for i, x in enumerate(self.elements)}
        return (len(subset), tuple(sorted(order[x] for x in subset)))


def regular_module(ring, validate=True):
    """The ring as a left module over itself."""
    return ModuleInstance(ring, ring.elements, ring.add, ring.mul, ring.zero,
                          name=f"{ring.spec_string()} (left regular)",
                          validate=validate)


def restricted_module(module, subring):
    """The same carrier, acted on by a subring of the original ring."""
    return ModuleInstance(subring, module.elements, module.add, module.act,
                          module.zero,
                          name=f"{module.name} over {subring.spec_string()}",
                          validate=False)


def submodule_of_subset(module, subset):
    """Check a subset is a submodule; return it as a frozenset."""
    sub = frozenset(subset)
    if module.zero not in sub:
        raise ValueError("submodule must contain 0")
    for x in sub:
        for y in sub:
            if module.add(x, y) not in sub:
                raise ValueError("subset not closed under addition")
        for r in module.ring.elements:
            if module.act(r, x) not in sub:
                raise ValueError("subset not closed under the action")
    return sub


def cyclic_submodule(module, x):
    """Ax = {a x : a in A}; closed already since (a+b)x = ax + bx."""
    return frozenset(module.act(r, x) for r in module.ring.elements)


def submodule_sum(module, a, b):
    return frozenset(module.add(x, y) for x in a for y in b)


class SubmoduleLattice:
    def __init__(self, module, members):
        self.module = module
        self.members = sorted(members, key=module.key)
        self._set = set(self.members)
        self.bottom = frozenset({module.zero})
        self.top = frozenset(module.elements)

    def __len__(self):
        return len(self.members)

    def __contains__(self, sub):
        return frozenset(sub) in self._set

    def nonzero(self):
        return [m for m in self.members if len(m) > 1]

    def under(self, sub):
        """Members contained in sub; these are exactly the submodules of sub."""
        return [m for m in self.members if m <= sub]


def enumerate_submodules(module):
    """The full lattice: cyclic submodules closed under pairwise sums."""
    if len(module) > MAX_MODULE:
        raise BudgetExceeded(
            f"module carrier {len(module)} exceeds cap {MAX_MODULE}")
    cyclics = {cyclic_submodule(module, x) for x in module.elements}
    found = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        cur = frontier.pop()
        for other in list(found):
            s = submodule_sum(module, cur, other)
            if s not in found:
                if len(found) >= MAX_SUBMODULES:
                    raise BudgetExceeded("submodule count exceeds cap")
                found.add(s)
                frontier.append(s)
    lattice = SubmoduleLattice(module, found)
    # sanity: closed under intersection as well, contains 0 and M
    assert lattice.bottom in lattice._set and lattice.top in lattice._set
    for a in lattice.members:
        for b in lattice.members:
            assert (a & b) in lattice._set, "lattice not intersection closed"
    return lattice


@dataclass
class Classification:
    uniform: bool
    essential: bool


def is_essential(module, sub, lattice=None):
    """sub meets every nonzero submodule; cyclic ones suffice."""
    if len(sub) <= 1:
        return len(module) == 1
    for x in module.nonzero():
        cyc = cyclic_submodule(module, x)
        if len(cyc & sub) <= 1:
            return False
    return True


def is_uniform(module, sub, lattice):
    """sub is nonzero and any two of its nonzero submodules meet."""
    if len(sub) <= 1:
        return False
    inside = [m for m in lattice.under(sub) if len(m) > 1]
    for a, b in combinations(inside, 2):
        if len(a & b) <= 1:
            return False
    return True


def classify_submodule(module, sub, lattice=None):
    sub = frozenset(sub)
    if lattice is None:
        lattice = enumerate_submodules(module)
    if sub not in lattice:
        raise ValueError("not a member of the lattice")
    return Classification(uniform=is_uniform(module, sub, lattice),
                          essential=is_essential(module, sub, lattice))


@dataclass
class UdimCertificate:
    dim: int
    family: list          # independent uniform submodules
    essential_sum: frozenset
    max_independent: int  # second route: any nonzero submodules
    degenerate: bool = False


def _is_independent(module, family):
    """Each member meets the sum of the others trivially."""
    for i, m in enumerate(family):
        rest = frozenset({module.zero})
        for j, other in enumerate(family):
            if j != i:
                rest = submodule_sum(module, rest, other)
        if len(m & rest) > 1:
            return False
    return True


def _max_independent(module, subs):
    """Largest independent family of nonzero submodules, by search.

    Extending by any member meeting the current sum trivially is enough:
    a chain of such extensions always yields an independent family.
    """
    subs = sorted(subs, key=module.key)
    best = 0

    def extend(start, cur_sum, count):
        nonlocal best
        best = max(best, count)
        if count + (len(subs) - start) <= best:
            return
        for k in range(start, len(subs)):
            m = subs[k]
            if len(m & cur_sum) <= 1:
                extend(k + 1, submodule_sum(module, cur_sum, m), count + 1)

    extend(0, frozenset({module.zero}), 0)
    return best


def uniform_dimension(module, lattice=None):
    """Uniform dimension with a verified certificate.

    Route one: greedily build an independent family of uniform submodules
    (smallest first) and check its sum is essential. Route two: the maximum
    size of any independent family of nonzero submodules. Both must agree.
    """
    if lattice is None:
        lattice = enumerate_submodules(module)
    if len(module) == 1:
        return UdimCertificate(0, [], frozenset({module.zero}), 0,
                               degenerate=True)
    uniforms = [m for m in lattice.members if is_uniform(module, m, lattice)]
    family = []
    cur_sum = frozenset({module.zero})
    for m in uniforms:
        if len(m & cur_sum) <= 1:
            family.append(m)
            cur_sum = submodule_sum(module, cur_sum, m)
    assert _is_independent(module, family)
    assert is_essential(module, cur_sum, lattice), \
        "greedy uniform family sum is not essential"
    other = _max_independent(module, lattice.nonzero())
    assert other == len(family), \
        f"uniform certificate {len(family)} != max independent {other}"
    return UdimCertificate(len(family), family, cur_sum, other)


def singular_submodule(module):
    """{x : ann(x) is an essential left ideal}; verified to be a submodule."""
    ring = module.ring
    reg = regular_module(ring, validate=False)
    out = set()
    for x in module.elements:
        ann = frozenset(r for r in ring.elements
                        if module.act(r, x) == module.zero)
        if is_essential(reg, ann):
            out.add(x)
    return submodule_of_subset(module, out)


def two_sided_ideals(ring):
    """All two-sided ideals, as frozensets."""
    reg = regular_module(ring, validate=False)

    def principal(a):
        gens = {ring.mul(r, ring.mul(a, s))
                for r in ring.elements for s in ring.elements}
        cur = {ring.zero}
        frontier = set(gens)
        while frontier:
            g = frontier.pop()
            fresh = {ring.add(x, g) for x in cur} - cur
            cur |= fresh
            frontier |= fresh
        return frozenset(cur)

    found = {principal(a) for a in ring.elements}
    frontier = list(found)
    while frontier:
        cur = frontier.pop()
        for other in list(found):
            s = submodule_sum(reg, cur, other)
            if s not in found:
                found.add(s)
                frontier.append(s)
    return sorted(found, key=reg.key)


@dataclass
class PrimenessReport:
    prime: bool
    semiprime: bool
    goldie: bool
    udim: int
    singular_zero: bool
    acc: bool = True
    witness: object = None


def primeness(ring):
    """(Semi)primeness by two-sided ideal exhaustion, plus Goldie facts.

    Finite rings always satisfy ACC and have finite uniform dimension, so
    goldie is their conjunction with those sub-facts recorded. Cross-assert:
    a semiprime Goldie ring must have zero singular ideal.
    """
    ideals = two_sided_ideals(ring)
    nonzero = [i for i in ideals if len(i) > 1]

    def product_zero(i, j):
        return all(ring.mul(a, b) == ring.zero for a in i for b in j)

    semiprime, sp_wit = True, None
    for i in nonzero:
        if product_zero(i, i):
            semiprime, sp_wit = False, i
            break
    prime = True
    pr_wit = None
    for i in nonzero:
        for j in nonzero:
            if product_zero(i, j):
                prime, pr_wit = False, (i, j)
                break
        if not prime:
            break
    reg = regular_module(ring, validate=False)
    cert = uniform_dimension(reg)
    sing = singular_submodule(reg)
    singular_zero = len(sing) == 1
    goldie = True  # ACC automatic and udim finite on a finite carrier
    if semiprime and goldie:
        assert singular_zero, "semiprime Goldie ring with nonzero singular ideal"
    if prime:
        assert semiprime, "prime ring failed semiprimeness"
    return PrimenessReport(prime=prime, semiprime=semiprime, goldie=goldie,
                           udim=cert.dim, singular_zero=singular_zero,
                           witness=sp_wit or pr_wit)


@dataclass
class NEReport:
    ok: bool
    multiplier: object = None     # single a working for every finite E
    failing_set: tuple = ()       # minimal failing E when not ok
    strong_ok: bool | None = None
    strong_witnesses: dict = field(default_factory=dict)
    strong_failure: object = None


def nicely_essential_check(module, sub, strong=False, max_witness_size=4):
    """Every finite set of nonzero elements admits one multiplier into sub.

    A single a working for E = all nonzero elements settles every finite E
    at once; when none exists the report carries a smallest failing E
    (capped search, falling back to the full set, which then always fails).
    The strong variant additionally needs, per nonzero x, a left-regular
    c in the acting ring with 0 != c x in sub.
    """
    sub = frozenset(sub)
    ring = module.ring
    everything = module.nonzero()
    zero = module.zero

    def works(a, E):
        for x in E:
            ax = module.act(a, x)
            if ax == zero or ax not in sub:
                return False
        return True

    multiplier = None
    for a in ring.elements:
        if works(a, everything):
            multiplier = a
            break
    if multiplier is not None:
        report = NEReport(ok=True, multiplier=multiplier)
    else:
        witness = tuple(everything)
        for size in range(1, max_witness_size + 1):
            found = None
            for E in combinations(everything, size):
                if not any(works(a, E) for a in ring.elements):
                    found = E
                    break
            if found is not None:
                witness = found
                break
        report = NEReport(ok=False, failing_set=witness)
    if strong:
        regs = [c for c in ring.elements if is_left_regular(ring, c)]
        report.strong_ok = True
        for x in everything:
            wit = None
            for c in regs:
                cx = module.act(c, x)
                if cx != zero and cx in sub:
                    wit = c
                    break
            if wit is None:
                report.strong_ok = False
                report.strong_failure = x
                break
            report.strong_witnesses[x] = wit
        if not report.ok:
            report.strong_ok = False
    return report


@dataclass
class EnoughUniformReport:
    ok: bool
    degenerate: bool
    witnesses: dict


def enough_uniform(module, lattice=None):
    """Every nonzero submodule contains a uniform one (finite: always)."""
    if lattice is None:
        lattice = enumerate_submodules(module)
    if len(module) == 1:
        return EnoughUniformReport(ok=True, degenerate=True, witnesses={})
    witnesses = {}
    for m in lattice.nonzero():
        inner = None
        for u in lattice.under(m):
            if len(u) > 1 and is_uniform(module, u, lattice):
                inner = u
                break
        if inner is None:
            return EnoughUniformReport(ok=False, degenerate=False,
                                       witnesses={m: None})
        witnesses[m] = inner
    return EnoughUniformReport(ok=True, degenerate=False, witnesses=witnesses)


def subring_pair(ring, carrier):
    """(subring, inclusion-restricted regular module) for transfer checks."""
    sub = SubRing(ring, carrier)
    big = regular_module(ring, validate=False)
    return sub, restricted_module(big, sub)


@dataclass
class PairTransfer:
    carrier: tuple
    proper: bool
    strong: bool
    udim_sub: int
    udim_big: int
    independence_ok: bool
    sing_equal: bool
    semiprime_ok: bool
    prime_ok: bool
    strong_down_ok: object = None

    @property
    def ok(self):
        facts = [self.udim_sub == self.udim_big, self.independence_ok,
                 self.sing_equal, self.semiprime_ok, self.prime_ok]
        if self.strong_down_ok is not None:
            facts.append(self.strong_down_ok)
        return all(facts)


@dataclass
class PairSurvey:
    subrings: int
    pairs: list
    failures: list


def _extended_ideal(module, subset):
    """The submodule of the big ring generated by a subring's left ideal."""
    ring = module.ring
    cur = {module.zero}
    frontier = {module.act(s, x) for s in ring.elements for x in subset}
    while frontier:
        g = frontier.pop()
        fresh = {module.add(y, g) for y in cur} - cur
        cur |= fresh
        frontier |= fresh
    return frozenset(cur)


def essential_pair_survey(ring, include_full=True):
    """Transfer facts across every nicely essential subring pair.

    For each unital subring over which the whole ring is nicely essential:
    independent left ideals of the subring extend to independent left
    ideals, the uniform dimensions agree, the subring's singular ideal is
    its meet with the big one, and (semi)primeness passes upward.  When
    the pair is strongly nicely essential and the big ring is (semi)prime,
    the subring must be too (Goldie facts are automatic on finite
    carriers).
    """
    big_mod = regular_module(ring, validate=False)
    big_pr = primeness(ring)
    big_sing = singular_submodule(big_mod)
    subrings = all_subrings(ring)
    pairs = []
    for carrier in subrings:
        proper = len(carrier) < len(ring.elements)
        if not proper and not include_full:
            continue
        sub, restricted = subring_pair(ring, carrier)
        ne = nicely_essential_check(restricted, carrier, strong=True)
        if not ne.ok:
            continue
        sub_mod = regular_module(sub, validate=False)
        sub_lattice = enumerate_submodules(sub_mod)
        sub_pr = primeness(sub)
        sub_sing = singular_submodule(sub_mod)

        independence_ok = True
        for L, Lp in combinations(sub_lattice.nonzero(), 2):
            if len(L & Lp) > 1:
                continue
            ext, extp = (_extended_ideal(big_mod, J) for J in (L, Lp))
            if len(ext & extp) > 1:
                independence_ok = False
                break

        sing_equal = sub_sing == frozenset(carrier) & big_sing
        semiprime_ok = big_pr.semiprime if sub_pr.semiprime else True
        prime_ok = big_pr.prime if sub_pr.prime else True
        strong_down = None
        if ne.strong_ok:
            strong_down = True
            if big_pr.semiprime and not sub_pr.semiprime:
                strong_down = False
            if big_pr.prime and not sub_pr.prime:
                strong_down = False
        pairs.append(PairTransfer(
            carrier=tuple(sorted(carrier, key=ring.index)), proper=proper,
            strong=bool(ne.strong_ok),
            udim_sub=uniform_dimension(sub_mod, sub_lattice).dim,
            udim_big=big_pr.udim, independence_ok=independence_ok,
            sing_equal=sing_equal, semiprime_ok=semiprime_ok,
            prime_ok=prime_ok, strong_down_ok=strong_down))
    return PairSurvey(subrings=len(subrings), pairs=pairs,
                      failures=[p for p in pairs if not p.ok])
