"""Matrix modules over prime fields and the rationals.

Irreducibility over F_p uses the Holt-Rees form of Norton's test: pick an
algebra element theta with a small null space N, spin the vectors of N,
then spin one null vector of theta^T under the transposed generators.
Over the rationals a module is declared irreducible when some reduction
modulo a good prime is irreducible; reducibility is always certified by an
explicit rational submodule.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

import numpy as np

from .linalg import (
    Field,
    complement_basis,
    identity,
    inverse,
    is_invariant,
    mat_mul,
    nullspace,
    quotient_action,
    rank,
    restrict_to_subspace,
    spin,
    transpose,
)


@dataclass
class MatModule:
    field: int
    dimension: int
    generators: list
    source_group: object = None

    def __post_init__(self):
        f = Field(self.field)
        self.generators = [f.matrix(g) for g in self.generators]
        for g in self.generators:
            if len(g) != self.dimension or any(len(r) != self.dimension for r in g):
                raise ValueError("generator has the wrong shape")

    @property
    def F(self) -> Field:
        return Field(self.field)

    def dual(self) -> "MatModule":
        return MatModule(self.field, self.dimension, [transpose(inverse(g, self.F)) for g in self.generators])

    def reduce(self, p: int) -> "MatModule":
        if self.field != 0:
            raise ValueError("only rational modules can be reduced")
        return MatModule(p, self.dimension, [[[Field(p).elt(x) for x in row] for row in g] for g in self.generators])

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction) and x.denominator != 1:
                return str(x)
            return int(x)

        return {
            "field": self.field,
            "dimension": self.dimension,
            "generators": [[[enc(x) for x in row] for row in g] for g in self.generators],
        }


def module_from_json(data) -> MatModule:
    if isinstance(data, str):
        data = json.loads(data)
    for key in ("field", "dimension", "generators"):
        if key not in data:
            raise ValueError(f"module JSON needs {key!r}")
    p = int(data["field"])
    gens = [[[Fraction(x) if p == 0 else int(x) for x in row] for row in g] for g in data["generators"]]
    return MatModule(p, int(data["dimension"]), gens)


@dataclass
class SubmoduleWitness:
    basis: list
    how: str = ""

    @property
    def dimension(self) -> int:
        return len(self.basis)


def verify_witness(module: MatModule, witness: SubmoduleWitness) -> bool:
    b = witness.basis
    return (
        0 < len(b) < module.dimension
        and rank(b, module.F) == len(b)
        and is_invariant(b, module.generators, module.F)
    )


def make_rng(seed: int = 0):
    """Counter based generator, so runs are reproducible."""
    return np.random.Generator(np.random.Philox(seed))


def _word_matrix(module, word):
    f = module.F
    out = identity(module.dimension, f)
    for letter in word:
        g = module.generators[abs(letter) - 1]
        if letter < 0:
            g = inverse(g, f)
        out = mat_mul(out, g, f)
    return out


def restriction(module: MatModule, subgroup_words) -> MatModule:
    """Module restricted to the subgroup generated by the given words.

    A word is a list of 1-based generator indices, negative for inverses.
    """
    for w in subgroup_words:
        for letter in w:
            if letter == 0 or abs(letter) > len(module.generators):
                raise ValueError(f"word letter {letter} does not name a generator")
    return MatModule(module.field, module.dimension, [_word_matrix(module, w) for w in subgroup_words])


def fixed_vectors(module: MatModule) -> list:
    f = module.F
    n = module.dimension
    if not module.generators:
        return identity(n, f)
    blocks = [[[g[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)] for g in module.generators]
    stacked = [sum((blk[i] for blk in blocks), []) for i in range(n)]
    return nullspace(stacked, f)


# --- finite fields -------------------------------------------------------


def _random_algebra_element(gens, f, rng, pool):
    """Random combination of generators and a growing pool of products."""
    n = len(gens[0])
    if len(pool) < len(gens) + 8:
        a = pool[int(rng.integers(len(pool)))]
        b = pool[int(rng.integers(len(pool)))]
        pool.append(mat_mul(a, b, f))
    coeffs = [int(rng.integers(f.p)) for _ in pool]
    out = [[0] * n for _ in range(n)]
    for c, m in zip(coeffs, pool):
        if c:
            for i in range(n):
                row, mr = out[i], m[i]
                for j in range(n):
                    row[j] += c * mr[j]
    return [[x % f.p for x in row] for row in out]


def _projective_points(basis, f):
    k = len(basis)
    n = len(basis[0])
    for coeffs in product(range(f.p), repeat=k):
        first = next((c for c in coeffs if c), None)
        if first != 1:
            continue
        yield [sum(c * b[j] for c, b in zip(coeffs, basis)) % f.p for j in range(n)]


def _annihilator(basis, n, f):
    # {x : x . b = 0 for every b in basis}
    return nullspace(transpose(basis), f)


def meataxe(module: MatModule, seed: int = 0, max_tries: int = 400, point_budget: int = 4000):
    """Norton irreducibility test over F_p: returns (bool, witness or None)."""
    f = module.F
    n = module.dimension
    gens = module.generators
    if n == 0:
        raise ValueError("zero module")
    if n == 1:
        return True, None
    if not gens:
        return False, SubmoduleWitness([[1 if j == 0 else 0 for j in range(n)]], "no generators")
    rng = make_rng(seed)
    pool = [list(map(list, g)) for g in gens]
    gens_t = [transpose(g) for g in gens]
    for _ in range(max_tries):
        a = _random_algebra_element(gens, f, rng, pool)
        for lam in range(f.p):
            theta = [[(a[i][j] - (lam if i == j else 0)) % f.p for j in range(n)] for i in range(n)]
            null = nullspace(theta, f)
            k = len(null)
            if k == 0:
                continue
            if (f.p**k - 1) // (f.p - 1) > point_budget:
                continue
            for v in _projective_points(null, f):
                sub = spin([v], gens, f)
                if len(sub) < n:
                    return False, SubmoduleWitness(sub, "spin of a null vector")
            w = nullspace(transpose(theta), f)[0]
            sub_t = spin([w], gens_t, f)
            if len(sub_t) < n:
                return False, SubmoduleWitness(_annihilator(sub_t, n, f), "annihilator of a dual spin")
            return True, None
    raise RuntimeError("meataxe found no usable algebra element")


# --- rationals -----------------------------------------------------------


_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def _denominators(mats):
    out = 1
    for m in mats:
        for row in m:
            for x in row:
                d = Fraction(x).denominator
                out = out * d // gcd(out, d)
    return out


def _commutant(gens, n):
    """Basis of {X : X g = g X for all generators}, over Q."""
    f = Field(0)
    rows = []
    # unknown X[i][k] at position i*n+k; equation for each (g, i, j)
    for g in gens:
        for i in range(n):
            for j in range(n):
                eq = [Fraction(0)] * (n * n)
                for k in range(n):
                    eq[i * n + k] += g[k][j]
                    eq[k * n + j] -= g[i][k]
                rows.append(eq)
    sol = nullspace(transpose(rows), f)
    return [[[v[i * n + j] for j in range(n)] for i in range(n)] for v in sol]


def _poly_at_matrix(coeffs, x, f):
    n = len(x)
    out = [[Fraction(0)] * n for _ in range(n)]
    power = identity(n, f)
    for c in coeffs:
        if c:
            out = [[o + c * p for o, p in zip(orow, prow)] for orow, prow in zip(out, power)]
        power = mat_mul(power, x, f)
    return out


def _rational_witness(module: MatModule, rng):
    import sympy

    f = module.F
    n = module.dimension
    gens = module.generators
    for i in range(n):
        e = [Fraction(1 if j == i else 0) for j in range(n)]
        sub = spin([e], gens, f)
        if len(sub) < n:
            return SubmoduleWitness(sub, "spin of a basis vector"), None
    comm = _commutant(gens, n)
    if len(comm) == 1:
        return None, comm
    q = sympy.symbols("q")
    candidates = list(comm)
    for _ in range(6):
        coeffs = [int(rng.integers(-3, 4)) for _ in comm]
        candidates.append([[sum(c * m[i][j] for c, m in zip(coeffs, comm)) for j in range(n)] for i in range(n)])
    for x in candidates:
        cp = sympy.Matrix(x).charpoly(q).as_expr()
        _, facs = sympy.factor_list(cp, q)
        for fac, _mult in facs:
            coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(fac, q).all_coeffs())]
            fx = _poly_at_matrix(coeffs, x, f)
            if all(v == 0 for row in fx for v in row):
                continue
            ker = nullspace(fx, f)
            if ker:
                return SubmoduleWitness(ker, "kernel of an endomorphism"), None
    return None, comm


def _is_field_commutant(comm, n):
    import sympy

    f = Field(0)
    for a in comm:
        for b in comm:
            if mat_mul(a, b, f) != mat_mul(b, a, f):
                return False
    q = sympy.symbols("q")
    k = len(comm)
    for x in comm:
        poly = sympy.Poly(sympy.Matrix(x).charpoly(q).as_expr(), q)
        _, facs = sympy.factor_list(poly.as_expr(), q)
        if len(facs) == 1 and sympy.degree(facs[0][0], q) == k:
            return True
    return False


def is_irreducible(module: MatModule, seed: int = 0):
    """Return (irreducible?, witness). A witness is a proper nonzero
    invariant subspace, re-verified before it is returned."""
    if module.field != 0:
        ok, wit = meataxe(module, seed=seed)
    else:
        ok, wit = _rational_irreducible(module, seed)
    if wit is not None and not verify_witness(module, wit):
        raise RuntimeError("submodule witness failed verification")
    return ok, wit


def _rational_irreducible(module: MatModule, seed: int):
    n = module.dimension
    if n == 1:
        return True, None
    gens = module.generators
    f = module.F
    invs = [inverse(g, f) for g in gens]
    bad = _denominators(gens + invs)
    # a submodule over Q gives a pure invariant sublattice, hence a proper
    # submodule of the reduction at any prime not dividing a denominator
    for p in _SMALL_PRIMES:
        if bad % p == 0:
            continue
        red = module.reduce(p)
        ok, _ = meataxe(red, seed=seed)
        if ok:
            return True, None
    rng = make_rng(seed)
    wit, comm = _rational_witness(module, rng)
    if wit is not None:
        return False, wit
    # semisimple module (finite group) with a commutative division algebra
    # as endomorphism ring
    if comm is not None and _is_field_commutant(comm, n):
        return True, None
    raise RuntimeError("rational irreducibility undecided")


# --- composition factors -------------------------------------------------


def permutation_module(group, p: int) -> MatModule:
    n = group.degree
    mats = []
    for g in group.gens:
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][g[i]] = 1
        mats.append(m)
    return MatModule(p, n, mats, group)


def composition_factors(module: MatModule, seed: int = 0) -> list:
    ok, wit = is_irreducible(module, seed=seed)
    if ok:
        return [module]
    f = module.F
    basis = wit.basis
    sub = MatModule(module.field, len(basis), [restrict_to_subspace(g, basis, f) for g in module.generators])
    extra = complement_basis(basis, module.dimension, f)
    quo = MatModule(module.field, len(extra), [quotient_action(g, basis, extra, f) for g in module.generators])
    return composition_factors(sub, seed) + composition_factors(quo, seed)


def chop_permutation_module(group, p: int, seed: int = 0) -> list:
    if p < 2:
        raise ValueError("chopping needs a prime field")
    return composition_factors(permutation_module(group, p), seed)


# --- brute force oracle --------------------------------------------------


def all_subspaces(n: int, p: int, k: int):
    """Every k-dimensional subspace of F_p^n, as reduced echelon bases."""
    from itertools import combinations

    for pivots in combinations(range(n), k):
        free = [(r, c) for r in range(k) for c in range(n) if c > pivots[r] and c not in pivots]
        for vals in product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            yield rows


def invariant_subspaces_bruteforce(module: MatModule):
    """All proper nonzero invariant subspaces, by enumeration (tiny cases only)."""
    if module.field == 0 or module.dimension > 4 or module.field > 5:
        raise ValueError("brute force is limited to dimension <= 4 over fields of size <= 5")
    f = module.F
    out = []
    for k in range(1, module.dimension):
        for sub in all_subspaces(module.dimension, module.field, k):
            if is_invariant(sub, module.generators, f):
                out.append(sub)
    return out
