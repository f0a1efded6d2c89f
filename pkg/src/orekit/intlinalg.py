"""Exact integer-lattice linear algebra.

Everything here works on small dense integer matrices given as lists of
column vectors. Lattices are handled in column echelon form (each basis
column has its first nonzero entry, the pivot, on a distinct row and pivot
rows increase left to right). That is enough for membership, kernels,
intersections and solving, all without division by anything but exact
Euclidean steps.

Subgroups of (Z/n)^dim are modelled as integer lattices that contain
n*Z^dim; `ModSpan` wraps that viewpoint.
"""

from __future__ import annotations

import math


def _echelon(cols, dim):
    """Column echelon form of the lattice spanned by `cols`.

    Columns may be longer than dim; only the first `dim` rows take part in
    pivoting, the remaining rows just ride along (used for transform
    tracking). Returns (basis, zeros): columns whose top part is nonzero,
    sorted by pivot row, and columns whose top part was reduced to zero.
    """
    work = [list(c) for c in cols]
    basis = []
    for row in range(dim):
        while True:
            live = [c for c in work if c[row] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda c: abs(c[row]))
            piv = live[0]
            for c in live[1:]:
                q = c[row] // piv[row]
                if q:
                    for t in range(len(c)):
                        c[t] -= q * piv[t]
        live = [c for c in work if c[row] != 0]
        if not live:
            continue
        piv = live[0]
        if piv[row] < 0:
            for t in range(len(piv)):
                piv[t] = -piv[t]
        basis.append(piv)
        work.remove(piv)
    # normalize: entries above each pivot reduced into [0, pivot)
    for i, piv in enumerate(basis):
        row = next(r for r in range(dim) if piv[r] != 0)
        for j in range(i):
            q = basis[j][row] // piv[row]
            if q:
                for t in range(len(piv)):
                    basis[j][t] -= q * piv[t]
    zeros = []
    for c in work:
        assert not any(c[:dim])
        if any(c):
            zeros.append(c)
    return basis, zeros


def echelon_basis(cols, dim):
    """Echelon basis of the integer lattice spanned by the columns."""
    basis, _ = _echelon(cols, dim)
    return basis


def member(basis, v):
    """Coefficients expressing v in an echelon basis, or None."""
    v = list(v)
    dim = len(v)
    coeffs = []
    pivots = {}
    for j, b in enumerate(basis):
        row = next(i for i in range(dim) if b[i] != 0)
        pivots[row] = j
    out = [0] * len(basis)
    for row in range(dim):
        if v[row] == 0:
            continue
        j = pivots.get(row)
        if j is None:
            return None
        b = basis[j]
        if v[row] % b[row] != 0:
            return None
        q = v[row] // b[row]
        out[j] = q
        for t in range(dim):
            v[t] -= q * b[t]
    if any(v):
        return None
    return out


def kernel(cols, dim):
    """Echelon basis of {c in Z^k : sum c_j * cols_j = 0}."""
    k = len(cols)
    ext = []
    for j, c in enumerate(cols):
        col = list(c) + [0] * k
        col[dim + j] = 1
        ext.append(col)
    _, zeros = _echelon(ext, dim)
    tails = [z[dim:] for z in zeros]
    if not tails:
        return []
    return echelon_basis(tails, k)


def solve_int(cols, v, dim):
    """One integer solution c of sum c_j cols_j = v, or None."""
    k = len(cols)
    ext = []
    for j, c in enumerate(cols):
        col = list(c) + [0] * k
        col[dim + j] = 1
        ext.append(col)
    basis, _ = _echelon(ext, dim)
    top = [b[:dim] for b in basis]
    coeffs = member(top, v)
    if coeffs is None:
        return None
    out = [0] * k
    for c, b in zip(coeffs, basis):
        if c:
            for t in range(k):
                out[t] += c * b[dim + t]
    return out


def intersect(basis_a, basis_b, dim):
    """Echelon basis of the intersection of two lattices."""
    if not basis_a or not basis_b:
        return []
    cols = [list(c) for c in basis_a] + [[-x for x in c] for c in basis_b]
    ker = kernel(cols, dim)
    na = len(basis_a)
    vecs = []
    for kv in ker:
        v = [0] * dim
        for j in range(na):
            if kv[j]:
                for t in range(dim):
                    v[t] += kv[j] * basis_a[j][t]
        if any(v):
            vecs.append(v)
    return echelon_basis(vecs, dim)


def preimage(cols, target_basis, dim):
    """Echelon basis of {c in Z^k : sum c_j cols_j lies in the target lattice}."""
    k = len(cols)
    ext = []
    for j, c in enumerate(cols):
        col = list(c) + [0] * k
        col[dim + j] = 1
        ext.append(col)
    for b in target_basis:
        ext.append(list(b) + [0] * k)
    _, zeros = _echelon(ext, dim)
    tails = [z[dim:] for z in zeros]
    if not tails:
        return []
    return echelon_basis(tails, k)


class ModSpan:
    """Subgroup of (Z/n)^dim given by integer generator vectors.

    Internally the integer lattice spanned by the generators together with
    n*Z^dim, so membership and intersections are exact lattice operations.
    """

    def __init__(self, n, dim, vectors=()):
        self.n = n
        self.dim = dim
        cols = [list(v) for v in vectors]
        for i in range(dim):
            e = [0] * dim
            e[i] = n
            cols.append(e)
        self.basis = echelon_basis(cols, dim)

    def contains(self, v):
        return member(self.basis, list(v)) is not None

    @property
    def order(self):
        det = 1
        for b in self.basis:
            row = next(i for i in range(self.dim) if b[i] != 0)
            det *= b[row]
        return self.n ** self.dim // det

    def is_zero(self):
        return self.order == 1

    def intersection(self, other):
        assert self.n == other.n and self.dim == other.dim
        out = ModSpan(self.n, self.dim, [])
        out.basis = intersect(self.basis, other.basis, self.dim)
        return out

    def contains_span(self, other):
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other):
        return (isinstance(other, ModSpan) and self.n == other.n
                and self.dim == other.dim
                and self.contains_span(other) and other.contains_span(self))

    def some_nonzero(self):
        """A representative of a nonzero residue class, if any."""
        for b in self.basis:
            v = [x % self.n for x in b]
            if any(v):
                return v
        return None

    def elements(self):
        """All residue vectors, enumerated. Only for small orders."""
        if self.order > 1 << 20:
            raise ValueError("span too large to enumerate")
        seen = {tuple([0] * self.dim)}
        frontier = [tuple([0] * self.dim)]
        gens = [tuple(x % self.n for x in b) for b in self.basis]
        gens = [g for g in gens if any(g)]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = tuple((a + b) % self.n for a, b in zip(cur, g))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen
