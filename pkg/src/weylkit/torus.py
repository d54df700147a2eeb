"""Maximal tori attached to Weyl group elements.

For w in W and q a prime power, the torus S_{sigma w} has order
|det(q N - 1)| where N is the matrix of w^-1 on the root lattice
(|det(-q N - 1)| for the twisted Frobenius). Its group structure is the
cokernel of q M - 1, M being the matrix of w on the cocharacter lattice
(negated in the twisted case).
"""
from __future__ import annotations

from dataclasses import dataclass

from .permgrp.perm import inv
from .polynomial import FactoredPolynomial, factor_cyclotomic, interpolate
from .snf import determinant, invariant_factors
from .weyl import WeylGroup


@dataclass(frozen=True)
class TorusStructure:
    q: int
    invariant_factors: tuple
    twisted: bool = False

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


@dataclass
class TorusActionModule:
    characteristic: int
    dimension: int
    generator_matrices: list


def _charpoly_det(mat, sign: int) -> list:
    """Coefficients of det(sign*q*mat - I) as a polynomial in q."""
    n = len(mat)
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        m = [[sign * x * mat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        ys.append(determinant(m))
    return interpolate(xs, ys)


def torus_order_poly(weyl: WeylGroup, w, twisted: bool = False) -> FactoredPolynomial:
    """|det(q N - 1)| (or |det(-q N - 1)|) as a product of cyclotomic factors."""
    n_mat = weyl.root_matrix(inv(tuple(w)))
    coeffs = _charpoly_det(n_mat, -1 if twisted else 1)
    fp = factor_cyclotomic(coeffs)
    # absolute value: each Phi_d(q) is positive for q >= 2
    return FactoredPolynomial(fp.factors, 1, fp.q_power)


def lattice_matrix(weyl: WeylGroup, w, lattice: str = "coroot"):
    if lattice == "coroot":
        return weyl.coroot_matrix(tuple(w))
    if lattice == "coweight":
        return weyl.coweight_matrix(tuple(w))
    raise ValueError(f"unknown lattice {lattice!r}")


def torus_structure(weyl: WeylGroup, w, q: int, twisted: bool = False, lattice: str = "coroot") -> TorusStructure:
    """Invariant factors of Z^l / (q M - 1) Z^l."""
    if q < 2:
        raise ValueError("q must be at least 2")
    m = lattice_matrix(weyl, w, lattice)
    sgn = -1 if twisted else 1
    n = len(m)
    a = [[sgn * q * m[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    return TorusStructure(q, tuple(invariant_factors(a)), twisted)


def kernel_structure_bruteforce(mat, modulus: int) -> tuple:
    """Invariant factors of {a in (Z/modulus)^l : a mat = 0}, by counting.

    Used as an independent check on the Smith form: the group is read off
    from how many solutions each divisor of ``modulus`` kills.
    """
    import numpy as np

    n = len(mat)
    grid = np.indices((modulus,) * n).reshape(n, -1).T.astype(np.int64)
    a = np.array(mat, dtype=np.int64) % modulus
    ok = ~((grid @ a) % modulus).any(axis=1)
    sols = [tuple(int(x) for x in row) for row in grid[ok]]
    return _abelian_invariants(sols, modulus)


def _abelian_invariants(elements, modulus):
    """Invariant factors of a finite subgroup of (Z/modulus)^l from element orders."""
    from math import gcd

    def elt_order(a):
        o = 1
        for x in a:
            if x:
                o_x = modulus // gcd(modulus, x)
                o = o * o_x // gcd(o, o_x)
        return o

    total = len(elements)
    primes = _prime_factors(total)
    # for each prime p, count |G[p^k]| and recover the p-primary partition
    factors_by_prime = {}
    orders = [elt_order(a) for a in elements]
    for p in primes:
        counts = []
        k = 0
        while True:
            pk = p**k
            c = sum(1 for o in orders if pk % o == 0)
            counts.append(c)
            if k > 0 and counts[-1] == counts[-2]:
                break
            k += 1
        # rank_k = number of cyclic factors of order >= p^k
        logs = [_ilog(c, p) for c in counts]
        ranks = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
        parts = []
        for i, r in enumerate(ranks):
            nxt = ranks[i + 1] if i + 1 < len(ranks) else 0
            parts += [p ** (i + 1)] * (r - nxt)
        factors_by_prime[p] = sorted(parts, reverse=True)
    width = max((len(v) for v in factors_by_prime.values()), default=0)
    out = [1] * width
    for p, parts in factors_by_prime.items():
        for i, x in enumerate(parts):
            out[i] *= x
    return tuple(sorted(d for d in out if d != 1))


def _ilog(n, p):
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    if n != 1:
        raise ValueError("not a prime power count")
    return k


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def centralizer_torus_module(weyl: WeylGroup, w, r: int, q: int | None = None, twisted: bool = False, lattice: str = "coroot"):
    """Action of C_W(w) on the coroot lattice reduced mod r.

    With ``q`` given, the module is cut down to the r-torsion of the torus:
    the solutions of a (q M - 1) = 0 over F_r, which C_W(w) preserves
    because it commutes with M.
    """
    from .linalg import nullspace_mod, restrict_to_subspace
    from .permgrp.search import centralizer

    cent = centralizer(weyl.group, tuple(w))
    mats = [[[x % r for x in row] for row in lattice_matrix(weyl, g, lattice)] for g in cent.gens]
    n = weyl.rank
    if q is None:
        return TorusActionModule(r, n, mats), cent
    m = lattice_matrix(weyl, w, lattice)
    sgn = -1 if twisted else 1
    a = [[(sgn * q * m[i][j] - (1 if i == j else 0)) % r for j in range(n)] for i in range(n)]
    basis = nullspace_mod(a, r)
    if not basis:
        return TorusActionModule(r, 0, [[] for _ in mats]), cent
    sub = [restrict_to_subspace(g, basis, r) for g in mats]
    return TorusActionModule(r, len(basis), sub), cent
