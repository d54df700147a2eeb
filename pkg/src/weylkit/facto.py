"""Primitive prime divisors, p-parts and group factorizations H = AB.

A pair of subgroups factorizes H exactly when |A||B| = |H||A cap B|; this
count is invariant under conjugating either factor, so searching over
conjugacy class representatives loses nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy import factorint

from .permgrp.group import PermGroup
from .permgrp.search import intersection
from .permgrp.subgroups import ISO_CAP, SmallGroup, are_isomorphic, enumerate_subgroups, find_isomorphism


@dataclass(frozen=True)
class PpdResult:
    q: int
    n: int
    primes: tuple
    exception_reason: str | None = None


def multiplicative_order(q: int, r: int) -> int:
    if q % r == 0:
        raise ValueError(f"{q} is not a unit mod {r}")
    k, x = 1, q % r
    while x != 1:
        x = x * q % r
        k += 1
    return k


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def ppd(q: int, n: int) -> PpdResult:
    """Primes r dividing q^n - 1 but no q^i - 1 with 0 < i < n."""
    if q < 2 or n < 2:
        raise ValueError("need q >= 2 and n >= 2")
    primes = tuple(sorted(r for r in factorint(q**n - 1) if q % r and multiplicative_order(q, r) == n))
    reason = None
    if not primes:
        if (q, n) == (2, 6):
            reason = "zsigmondy_26"
        elif n == 2 and _is_power_of_two(q + 1):
            reason = "mersenne_like_n2"
        else:
            raise ArithmeticError(f"no primitive prime divisor for ({q}, {n}) outside the known exceptions")
    return PpdResult(q, n, primes, reason)


def largest_ppart(n: int, p: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def check_pf_bound(p: int, f: int) -> bool:
    """p^f >= (f_p)^p, evaluated exactly."""
    if f < 1:
        raise ValueError("f must be positive")
    return p**f >= largest_ppart(f, p) ** p


# --- factorizations ---------------------------------------------------------


@dataclass
class FactorizationRecord:
    H: PermGroup
    A: PermGroup
    B: PermGroup
    intersection_order: int
    homogeneous: bool | None
    tags: dict = field(default_factory=dict)

    @property
    def proper(self) -> bool:
        n = self.H.order()
        return self.A.order() < n and self.B.order() < n


@dataclass
class Refutation:
    H: PermGroup
    A: PermGroup
    B: PermGroup
    intersection_order: int
    reason: str


def _homogeneous(a: PermGroup, b: PermGroup, tags: dict):
    if a.order() != b.order():
        return False
    if a.order() > ISO_CAP:
        tags["isomorphism"] = "unchecked"
        return None
    return are_isomorphic(a, b)


def verify_factorization(H: PermGroup, A: PermGroup, B: PermGroup):
    """FactorizationRecord when H = AB, otherwise a Refutation."""
    for name, sub in (("A", A), ("B", B)):
        if not sub.is_subgroup_of(H):
            raise ValueError(f"{name} is not a subgroup of H")
    k = intersection(A, B).order()
    if A.order() * B.order() != H.order() * k:
        return Refutation(H, A, B, k, f"|A||B| = {A.order() * B.order()} but |H||A cap B| = {H.order() * k}")
    tags = {}
    return FactorizationRecord(H, A, B, k, _homogeneous(A, B, tags), tags)


class Sylow2Isomorphic:
    """Pair predicate: the two factors have isomorphic Sylow 2-subgroups,
    optionally of order at least ``min_order``."""

    name = "sylow2-isomorphic"

    def __init__(self, min_order: int = 1):
        self.min_order = min_order
        self._cache = {}

    def sylow(self, table, rec):
        key = rec.tags["class"]
        if key not in self._cache:
            self._cache[key] = SmallGroup(table, table.sylow(rec.indices, 2))
        return self._cache[key]

    def __call__(self, table, k, l) -> bool:
        sk, sl = self.sylow(table, k), self.sylow(table, l)
        if sk.n < self.min_order or sk.n != sl.n:
            return False
        if sk.n > ISO_CAP:
            raise NotImplementedError(f"Sylow 2-subgroups of order {sk.n} exceed the isomorphism cap")
        return find_isomorphism(sk, sl) is not None


PREDICATES = {"none": None, "sylow2-isomorphic": Sylow2Isomorphic}


def search_factorizations(H: PermGroup, order_multiple_of: int = 1, predicate=None):
    """Pairs K, L of subgroup class representatives, K listed before L,
    with |K||L| = |H||K cap L| and ``predicate(table, K, L)`` true.

    Each class is paired only with later classes, never with itself, and
    the whole group counts as a candidate.
    """
    table, ks = enumerate_subgroups(H, order_multiple_of)
    n = table.n
    out = []
    for i, k in enumerate(ks):
        for l in ks[i + 1 :]:
            if (k.order * l.order) % n:
                continue
            meet = int(np.intersect1d(k.indices, l.indices, assume_unique=True).size)
            if k.order * l.order != n * meet:
                continue
            if predicate is not None and not predicate(table, k, l):
                continue
            tags = {"classes": (k.tags["class"], l.tags["class"]), "orders": (k.order, l.order)}
            homog = _homogeneous(k.group, l.group, tags) if k.order == l.order else False
            out.append(FactorizationRecord(H, k.group, l.group, meet, homog, tags))
    return out
