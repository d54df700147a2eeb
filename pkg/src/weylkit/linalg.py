"""Exact linear algebra over prime fields and the rationals.

Vectors are rows and matrices act on the right, matching the permutation
and Weyl group conventions. A field is given by its characteristic, with 0
meaning the rationals (entries are Fractions).
"""
from __future__ import annotations

from fractions import Fraction


class Field:
    def __init__(self, p: int):
        if p != 0 and (p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"{p} is not a prime")
        self.p = p

    def __repr__(self):
        return "Q" if self.p == 0 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def elt(self, x):
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if self.p == 0:
            return 1 / x
        return pow(x, -1, self.p)

    def norm(self, x):
        return x if self.p == 0 else x % self.p

    def matrix(self, rows):
        return [[self.elt(x) for x in row] for row in rows]

    @property
    def size(self):
        return None if self.p == 0 else self.p


def _field(f):
    return f if isinstance(f, Field) else Field(f)


def rref(rows, field):
    """Reduced echelon form; returns (rows, pivot columns)."""
    f = _field(field)
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        s = f.inv(a[r][c])
        a[r] = [f.norm(x * s) for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                t = a[i][c]
                a[i] = [f.norm(x - t * y) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a[:r], pivots


def rank(rows, field) -> int:
    return len(rref(rows, field)[0]) if rows else 0


def nullspace(a, field):
    """Basis of {x : x a = 0} (left null space)."""
    f = _field(field)
    m = len(a)
    if m == 0:
        return []
    n = len(a[0])
    # x a = 0  <=>  a^T x^T = 0
    at = [[f.elt(a[i][j]) for i in range(m)] for j in range(n)]
    red, piv = rref(at, f)
    free = [c for c in range(m) if c not in piv]
    out = []
    for fc in free:
        v = [f.elt(0)] * m
        v[fc] = f.elt(1)
        for row, pc in zip(red, piv):
            v[pc] = f.norm(-row[fc])
        out.append(v)
    return out


def nullspace_mod(a, p):
    return nullspace(a, Field(p))


def vec_mat(v, a, f):
    n = len(a[0]) if a else 0
    out = []
    for j in range(n):
        s = 0
        for i, x in enumerate(v):
            if x:
                s += x * a[i][j]
        out.append(f.norm(s))
    return out


def mat_mul(a, b, f):
    return [vec_mat(row, b, f) for row in a]


def identity(n, f):
    return [[f.elt(1 if i == j else 0) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(r) for r in zip(*a)]


def inverse(a, field):
    f = _field(field)
    n = len(a)
    aug = [list(map(f.elt, row)) + [f.elt(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    red, piv = rref(aug, f)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


class Echelon:
    """Incrementally maintained echelon basis for spinning."""

    def __init__(self, n, f):
        self.n = n
        self.f = f
        self.rows = []  # list of (pivot, row) with row[pivot] == 1
        self.basis = []

    def reduce(self, v):
        f = self.f
        v = list(v)
        for piv, row in self.rows:
            c = v[piv]
            if c != 0:
                v = [f.norm(x - c * y) for x, y in zip(v, row)]
        return v

    def add(self, v) -> bool:
        w = self.reduce(v)
        piv = next((i for i, x in enumerate(w) if x != 0), None)
        if piv is None:
            return False
        s = self.f.inv(w[piv])
        w = [self.f.norm(x * s) for x in w]
        # keep rows reduced at the new pivot
        self.rows = [
            (p, [self.f.norm(x - r[piv] * y) for x, y in zip(r, w)]) if r[piv] != 0 else (p, r)
            for p, r in self.rows
        ]
        self.rows.append((piv, w))
        self.basis.append(list(v))
        return True

    def __len__(self):
        return len(self.rows)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))


def spin(vectors, gens, field, limit=None):
    """Basis (in discovery order) of the smallest invariant subspace
    containing ``vectors``."""
    f = _field(field)
    n = len(gens[0]) if gens else len(vectors[0])
    ech = Echelon(n, f)
    queue = []
    for v in vectors:
        if ech.add(v):
            queue.append(list(v))
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        for g in gens:
            w = vec_mat(v, g, f)
            if ech.add(w):
                queue.append(w)
                if limit is not None and len(ech) >= limit:
                    return ech.basis
    return ech.basis


def coordinates(v, basis, field):
    """Coordinates of v in the span of ``basis`` rows (which must be independent)."""
    f = _field(field)
    k = len(basis)
    n = len(v)
    # solve c B = v
    aug = [[basis[i][j] for i in range(k)] + [v[j]] for j in range(n)]
    red, piv = rref(aug, f)
    if k in piv:
        raise ValueError("vector not in the span")
    c = [f.elt(0)] * k
    for row, pc in zip(red, piv):
        c[pc] = row[k]
    return c


def restrict_to_subspace(g, basis, field):
    """Matrix of g on an invariant subspace with the given basis rows."""
    f = _field(field)
    return [coordinates(vec_mat(b, g, f), basis, f) for b in basis]


def complement_basis(basis, n, field):
    """Standard basis vectors completing ``basis`` to a basis of F^n."""
    f = _field(field)
    ech = Echelon(n, f)
    for b in basis:
        ech.add(b)
    extra = []
    for i in range(n):
        e = [f.elt(1 if j == i else 0) for j in range(n)]
        if ech.add(e):
            extra.append(e)
    return extra


def quotient_action(g, basis, extra, field):
    """Matrix of g on V/U where U has basis ``basis`` and ``extra`` spans a complement."""
    f = _field(field)
    full = list(basis) + list(extra)
    k = len(basis)
    out = []
    for e in extra:
        c = coordinates(vec_mat(e, g, f), full, f)
        out.append(c[k:])
    return out


def is_invariant(basis, gens, field) -> bool:
    f = _field(field)
    if not basis:
        return True
    ech = Echelon(len(basis[0]), f)
    for b in basis:
        ech.add(b)
    return all(ech.contains(vec_mat(b, g, f)) for b in basis for g in gens)
