"""Regular representation of a small permutation group.

Elements are numbered once; products, inverses and conjugates become table
lookups. Subgroups are sorted index arrays together with a bitmask, so
intersections and containment are cheap. This is what the subgroup lattice,
Sylow and isomorphism code runs on.
"""
from __future__ import annotations

import numpy as np

from .group import PermGroup

TABLE_CAP = 20000


class GroupTable:
    def __init__(self, group: PermGroup, cap: int = TABLE_CAP):
        n = group.order()
        if n > cap:
            raise ValueError(f"group of order {n} exceeds the table cap {cap}")
        self.group = group
        self.n = n
        chain = group.chain
        self.elements = list(chain.elements())
        arr = np.array(self.elements, dtype=np.int64).reshape(n, group.degree)
        self.array = arr
        base = chain.base or [0]
        self.base = np.array(base, dtype=np.int64)
        weights = np.array([group.degree**k for k in range(len(base))], dtype=np.int64)
        self._weights = weights
        keys = arr[:, self.base] @ weights
        order = np.argsort(keys)
        self._sorted_keys = keys[order]
        self._key_to_index = order
        if len(np.unique(keys)) != n:
            raise RuntimeError("base images do not separate elements")
        mult = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            # (e_i e_j)[b] = e_j[e_i[b]]
            imgs = arr[:, arr[i, self.base]]
            mult[i] = self._lookup(imgs @ weights)
        self.mult = mult
        ident = self._lookup(np.array([self.base @ weights]))[0]
        self.identity = int(ident)
        self.inv = np.empty(n, dtype=np.int32)
        rows, cols = np.nonzero(mult == self.identity)
        self.inv[rows] = cols
        self._conj = None
        self._orders = None
        self._classes = None

    def _lookup(self, keys):
        pos = np.searchsorted(self._sorted_keys, keys)
        return self._key_to_index[pos].astype(np.int32)

    def index_of(self, perm) -> int:
        key = int(np.array(perm, dtype=np.int64)[self.base] @ self._weights)
        pos = int(np.searchsorted(self._sorted_keys, key))
        if pos >= self.n or self._sorted_keys[pos] != key:
            raise KeyError("element not in group")
        idx = int(self._key_to_index[pos])
        if tuple(self.elements[idx]) != tuple(perm):
            raise KeyError("element not in group")
        return idx

    @property
    def conj(self):
        """conj[g, x] = index of g^-1 x g."""
        if self._conj is None:
            a = self.mult[self.inv]  # a[g, x] = g^-1 x
            self._conj = self.mult[a, np.arange(self.n)[:, None]]
        return self._conj

    @property
    def orders(self):
        if self._orders is None:
            out = np.zeros(self.n, dtype=np.int64)
            cur = np.arange(self.n, dtype=np.int32)
            k = 1
            todo = np.ones(self.n, dtype=bool)
            while todo.any():
                done = (cur == self.identity) & todo
                out[done] = k
                todo &= ~done
                cur = self.mult[cur, np.arange(self.n)]
                k += 1
            self._orders = out
        return self._orders

    @property
    def class_ids(self):
        """Conjugacy class label of each element."""
        if self._classes is None:
            c = self.conj
            lab = -np.ones(self.n, dtype=np.int64)
            k = 0
            for x in range(self.n):
                if lab[x] < 0:
                    lab[np.unique(c[:, x])] = k
                    k += 1
            self._classes = lab
        return self._classes

    def power(self, x: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = int(self.mult[out, x])
        return out

    # --- subgroups as index sets ----------------------------------------

    def closure(self, gens, start=None) -> np.ndarray:
        """Subgroup generated by ``gens`` (indices), optionally containing
        the subgroup ``start`` already."""
        gens = [int(g) for g in gens]
        if start is None:
            members = np.zeros(self.n, dtype=bool)
            members[self.identity] = True
            frontier = np.array([self.identity], dtype=np.int32)
            gens_all = gens
        else:
            members = np.zeros(self.n, dtype=bool)
            members[start] = True
            frontier = np.asarray(start, dtype=np.int32)
            gens_all = gens
        while frontier.size:
            new = []
            for g in gens_all:
                imgs = self.mult[frontier, g]
                fresh = imgs[~members[imgs]]
                if fresh.size:
                    fresh = np.unique(fresh)
                    members[fresh] = True
                    new.append(fresh)
            frontier = np.concatenate(new) if new else np.array([], dtype=np.int32)
        return np.nonzero(members)[0].astype(np.int32)

    def mask(self, idx) -> int:
        b = np.zeros(self.n, dtype=bool)
        b[idx] = True
        return int.from_bytes(np.packbits(b, bitorder="little").tobytes(), "little")

    def key(self, idx) -> bytes:
        b = np.zeros(self.n, dtype=bool)
        b[idx] = True
        return np.packbits(b).tobytes()

    def conjugate_keys(self, idx):
        """Distinct conjugates of a subgroup, as packed keys; also returns
        the normalizer as an index array."""
        c = self.conj[:, idx]
        b = np.zeros((self.n, self.n), dtype=bool)
        b[np.arange(self.n)[:, None], c] = True
        packed = np.packbits(b, axis=1)
        own = self.key(idx)
        keys = [row.tobytes() for row in packed]
        normalizer = np.array([g for g, k in enumerate(keys) if k == own], dtype=np.int32)
        return set(keys), normalizer

    def normalizer(self, idx) -> np.ndarray:
        inside = np.zeros(self.n, dtype=bool)
        inside[idx] = True
        ok = inside[self.conj[:, idx]].all(axis=1)
        return np.nonzero(ok)[0].astype(np.int32)

    def generators_of(self, idx) -> list:
        """A small generating set of the subgroup ``idx`` (greedy)."""
        idx = np.asarray(idx)
        if idx.size <= 1:
            return []
        orders = self.orders[idx]
        gens = []
        current = np.array([self.identity], dtype=np.int32)
        inside = np.zeros(self.n, dtype=bool)
        inside[current] = True
        for x in idx[np.argsort(-orders, kind="stable")]:
            if inside[x]:
                continue
            gens.append(int(x))
            current = self.closure(gens)
            inside[:] = False
            inside[current] = True
            if current.size == idx.size:
                break
        return gens

    def perm_group(self, idx, name: str = "") -> PermGroup:
        gens = [self.elements[g] for g in self.generators_of(idx)]
        if not gens:
            gens = [self.elements[self.identity]]
        return PermGroup(self.group.degree, gens, name)

    def subgroup_indices(self, sub: PermGroup) -> np.ndarray:
        return self.closure([self.index_of(g) for g in sub.gens])

    def derived_subgroup(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int32)
        a = idx[:, None]
        b = idx[None, :]
        comm = self.mult[self.mult[self.inv[a], self.inv[b]], self.mult[a, b]]
        return self.closure(np.unique(comm))

    def is_solvable(self, idx=None) -> bool:
        cur = np.arange(self.n, dtype=np.int32) if idx is None else np.asarray(idx, dtype=np.int32)
        while cur.size > 1:
            nxt = self.derived_subgroup(cur)
            if nxt.size == cur.size:
                return False
            cur = nxt
        return True

    def sylow(self, idx, p: int) -> np.ndarray:
        """A Sylow p-subgroup of the subgroup ``idx``."""
        idx = np.asarray(idx, dtype=np.int32)
        target = 1
        m = idx.size
        while m % p == 0:
            m //= p
            target *= p
        inside_s = np.zeros(self.n, dtype=bool)
        inside_s[idx] = True
        P = np.array([self.identity], dtype=np.int32)
        while P.size < target:
            inP = np.zeros(self.n, dtype=bool)
            inP[P] = True
            norm = idx[inP[self.conj[idx][:, P]].all(axis=1)]
            grown = None
            for x in norm:
                if inP[x]:
                    continue
                o = int(self.orders[x])
                pp = 1
                while o % p == 0:
                    o //= p
                    pp *= p
                if pp == 1:
                    continue
                y = self.power(int(x), o)
                if inP[y]:
                    continue
                grown = self.closure([y], start=P)
                break
            if grown is None:
                raise RuntimeError("Sylow search stalled")
            P = grown
        return P
