"""Conjugacy classes of subgroups, Sylow subgroups and isomorphism tests.

Classes are found by cyclic extension for solvable groups (every subgroup
U < V with [V:U] prime is reached from a class representative U by adjoining
an element of N(U)) and by closing joins with single elements otherwise.
Both work on the element table and are meant for groups of a few thousand
elements at most.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import PermGroup
from .table import GroupTable

JOIN_CAP = 600
SYLOW_CAP = 100_000
ISO_CAP = 512


@dataclass
class SubgroupRecord:
    group: PermGroup
    indices: np.ndarray
    tags: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return int(self.indices.size)


def _prime_divisors(n: int) -> list:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class _Registry:
    def __init__(self, table: GroupTable):
        self.t = table
        self.seen = {}
        self.reps = []  # (indices, class size)

    def add(self, idx) -> bool:
        key = self.t.key(idx)
        if key in self.seen:
            return False
        keys, norm = self.t.conjugate_keys(idx)
        cid = len(self.reps)
        for k in keys:
            self.seen[k] = cid
        self.reps.append((np.asarray(idx, dtype=np.int32), len(keys), norm))
        return True


def _cyclic_extension(t: GroupTable) -> _Registry:
    reg = _Registry(t)
    reg.add(np.array([t.identity], dtype=np.int32))
    i = 0
    while i < len(reg.reps):
        u, _, norm = reg.reps[i]
        i += 1
        in_u = np.zeros(t.n, dtype=bool)
        in_u[u] = True
        covered = in_u.copy()
        for g in norm:
            if covered[g]:
                continue
            # smallest k with g^k in U must be prime
            k, x = 1, int(g)
            while not in_u[x]:
                x = int(t.mult[x, g])
                k += 1
            if _prime_divisors(k) != [k]:
                continue
            parts = [u]
            x = int(g)
            for _ in range(k - 1):
                parts.append(t.mult[u, x])
                x = int(t.mult[x, g])
            v = np.unique(np.concatenate(parts)).astype(np.int32)
            covered[v] = True
            reg.add(v)
    return reg


def _join_closure(t: GroupTable) -> _Registry:
    reg = _Registry(t)
    reg.add(np.array([t.identity], dtype=np.int32))
    for x in range(t.n):
        reg.add(t.closure([x]))
    i = 0
    while i < len(reg.reps):
        u, _, norm = reg.reps[i]
        i += 1
        gens = t.generators_of(u)
        in_u = np.zeros(t.n, dtype=bool)
        in_u[u] = True
        done = in_u.copy()
        conj = t.conj
        for x in range(t.n):
            if done[x]:
                continue
            # elements conjugate to x under N(U) give conjugate joins
            done[conj[norm, x]] = True
            reg.add(t.closure(gens + [x]))
    return reg


def subgroup_classes(group: PermGroup, table: GroupTable | None = None, join_cap: int = JOIN_CAP):
    """All conjugacy classes of subgroups, as (indices, class size) pairs."""
    t = table or GroupTable(group)
    if t.is_solvable():
        reg = _cyclic_extension(t)
    elif t.n <= join_cap:
        reg = _join_closure(t)
    else:
        raise NotImplementedError(
            f"subgroup classes of a non-solvable group of order {t.n} (cap {join_cap})"
        )
    out = [(idx, size) for idx, size, _ in reg.reps]
    out.sort(key=lambda r: (r[0].size, r[0].tolist()))
    return t, out


def enumerate_subgroups(group: PermGroup, order_multiple_of: int = 1, table: GroupTable | None = None):
    """One record per conjugacy class of subgroups whose order is divisible
    by ``order_multiple_of``; tags carry order, class size and index."""
    t, classes = subgroup_classes(group, table)
    out = []
    for idx, size in classes:
        if idx.size % order_multiple_of:
            continue
        rec = SubgroupRecord(
            t.perm_group(idx),
            idx,
            {"order": int(idx.size), "class_size": int(size), "index": t.n // int(idx.size)},
        )
        out.append(rec)
    for k, rec in enumerate(out):
        rec.tags["class"] = k + 1
    return t, out


def sylow(group: PermGroup, p: int, cap: int = SYLOW_CAP) -> PermGroup:
    """A Sylow p-subgroup. Built on the element table, so refuses groups
    larger than ``cap``."""
    n = group.order()
    if n > cap:
        raise NotImplementedError(f"Sylow subgroup of a group of order {n} (cap {cap})")
    t = GroupTable(group, cap=cap)
    return t.perm_group(t.sylow(np.arange(t.n), p))


# --- isomorphism of small groups ------------------------------------------


class SmallGroup:
    """Multiplication table of a subgroup, relabelled 0..n-1."""

    def __init__(self, table: GroupTable, idx):
        idx = np.asarray(idx, dtype=np.int32)
        self.n = int(idx.size)
        local = -np.ones(table.n, dtype=np.int64)
        local[idx] = np.arange(self.n)
        self.mult = local[table.mult[np.ix_(idx, idx)]].astype(np.int32)
        self.identity = int(local[table.identity])
        self.inv = local[table.inv[idx]].astype(np.int32)
        self._sig = None

    @classmethod
    def of(cls, group: PermGroup):
        t = GroupTable(group)
        return cls(t, np.arange(t.n))

    def orders(self):
        out = np.zeros(self.n, dtype=np.int64)
        cur = np.arange(self.n)
        todo = np.ones(self.n, dtype=bool)
        k = 1
        while todo.any():
            hit = (cur == self.identity) & todo
            out[hit] = k
            todo &= ~hit
            cur = self.mult[cur, np.arange(self.n)]
            k += 1
        return out

    def signatures(self):
        """Per-element invariants preserved by isomorphisms: order,
        centralizer order and number of square roots."""
        if self._sig is None:
            o = self.orders()
            m = self.mult
            commute = m == m.T
            cent = commute.sum(axis=1)
            sq = m[np.arange(self.n), np.arange(self.n)]
            roots = np.bincount(sq, minlength=self.n)
            self._sig = list(zip(o.tolist(), cent.tolist(), roots.tolist()))
        return self._sig

    def invariant(self):
        return (self.n, tuple(sorted(self.signatures())))

    def closure_map(self, gens, images, other) -> dict | None:
        """Extend gens -> images to a homomorphism on <gens>, or None."""
        phi = {self.identity: other.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                fx = phi[x]
                for g, h in zip(gens, images):
                    y = int(self.mult[x, g])
                    fy = int(other.mult[fx, h])
                    if y in phi:
                        if phi[y] != fy:
                            return None
                    else:
                        phi[y] = fy
                        nxt.append(y)
            frontier = nxt
        return phi


def _generating_sequence(g: SmallGroup) -> list:
    """Generators chosen from rare signature classes first."""
    sig = g.signatures()
    freq = {}
    for s in sig:
        freq[s] = freq.get(s, 0) + 1
    ordered = sorted(range(g.n), key=lambda x: (freq[sig[x]], -sig[x][0], x))
    gens = []
    reached = {g.identity}
    for x in ordered:
        if x in reached:
            continue
        gens.append(x)
        phi = g.closure_map(gens, gens, g)
        reached = set(phi)
        if len(reached) == g.n:
            break
    return gens


def find_isomorphism(a: SmallGroup, b: SmallGroup) -> dict | None:
    """An isomorphism a -> b as a dict of local indices, or None."""
    if a.invariant() != b.invariant():
        return None
    if a.n == 1:
        return {a.identity: b.identity}
    gens = _generating_sequence(a)
    sig_a = a.signatures()
    sig_b = b.signatures()
    pools = [[y for y in range(b.n) if sig_b[y] == sig_a[x]] for x in gens]

    def search(k, images):
        if k == len(gens):
            phi = a.closure_map(gens, images, b)
            if phi is not None and len(set(phi.values())) == a.n:
                return phi
            return None
        for y in pools[k]:
            trial = images + [y]
            phi = a.closure_map(gens[: k + 1], trial, b)
            if phi is None or len(set(phi.values())) != len(phi):
                continue
            found = search(k + 1, trial)
            if found is not None:
                return found
        return None

    return search(0, [])


def are_isomorphic(g: PermGroup, h: PermGroup, cap: int = ISO_CAP) -> bool:
    """Isomorphism test for groups of order at most ``cap``."""
    if g.order() != h.order():
        return False
    if g.order() > cap:
        raise NotImplementedError(f"isomorphism test for order {g.order()} (cap {cap})")
    return find_isomorphism(SmallGroup.of(g), SmallGroup.of(h)) is not None
