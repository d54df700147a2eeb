"""Deterministic Schreier-Sims stabilizer chains."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .perm import Perm, identity, inv, is_identity, mul


@dataclass
class Level:
    base_point: int
    gens: list = field(default_factory=list)
    # point -> u with base_point^u == point
    transversal: dict = field(default_factory=dict)
    inverse: dict = field(default_factory=dict)

    def rebuild(self, n):
        trans = {self.base_point: identity(n)}
        queue = [self.base_point]
        for pt in queue:
            u = trans[pt]
            for g in self.gens:
                im = g[pt]
                if im not in trans:
                    trans[im] = mul(u, g)
                    queue.append(im)
        self.transversal = trans
        self.inverse = {pt: inv(u) for pt, u in trans.items()}


class StabChain:
    """Base and strong generating set for a permutation group."""

    def __init__(self, degree: int, gens, base_prefix=()):
        self.degree = degree
        gens = [tuple(g) for g in gens if not is_identity(g)]
        self.levels: list[Level] = []
        for b in base_prefix:
            self.levels.append(Level(b))
        self._build(gens)

    @property
    def base(self):
        return [lv.base_point for lv in self.levels]

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def sift(self, g: Perm, start: int = 0):
        """Strip g through the chain; return (residue, level reached)."""
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            b = g[lv.base_point]
            u = lv.inverse.get(b)
            if u is None:
                return g, i
            g = mul(g, u)
        return g, len(self.levels)

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        res, _ = self.sift(g)
        return is_identity(res)

    def _new_base_point(self, g, gens_here):
        # greedy: among points moved by g prefer one with the largest orbit
        moved = [i for i, j in enumerate(g) if i != j]
        best, best_len = moved[0], -1
        pool = list(gens_here) + [g]
        for pt in moved[:8]:
            seen = {pt}
            queue = [pt]
            for x in queue:
                for h in pool:
                    y = h[x]
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            if len(seen) > best_len:
                best, best_len = pt, len(seen)
        return best

    def _add_gen(self, g, lo, hi):
        # g fixes base[:hi]; it joins levels lo..hi
        if hi == len(self.levels):
            self.levels.append(Level(self._new_base_point(g, [])))
        for j in range(lo, hi + 1):
            self.levels[j].gens.append(g)
            self.levels[j].rebuild(self.degree)

    def _build(self, gens):
        n = self.degree
        for g in gens:
            if all(g[b] == b for b in self.base):
                pt = self._new_base_point(g, gens)
                self.levels.append(Level(pt))
        for lv_idx, lv in enumerate(self.levels):
            lv.gens = [g for g in gens if all(g[b] == b for b in self.base[:lv_idx])]
        for lv in self.levels:
            lv.rebuild(n)
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            added = False
            for pt, u in list(lv.transversal.items()):
                for s in lv.gens:
                    img = s[pt]
                    schreier = mul(mul(u, s), lv.inverse[img])
                    if is_identity(schreier):
                        continue
                    res, j = self.sift(schreier, i + 1)
                    if not is_identity(res):
                        self._add_gen(res, i + 1, j)
                        i = j
                        added = True
                        break
                if added:
                    break
            if not added:
                i -= 1
        self.strong_gens = []
        for lv in self.levels:
            for g in lv.gens:
                if g not in self.strong_gens:
                    self.strong_gens.append(g)

    def elements(self):
        """Iterate over all elements, g = u_k ... u_1."""
        n = self.degree
        trans = [list(lv.transversal.values()) for lv in reversed(self.levels)]
        if not trans:
            yield identity(n)
            return
        for combo in product(*trans):
            g = combo[0]
            for u in combo[1:]:
                g = mul(g, u)
            yield g

    def random_element(self, rng) -> Perm:
        g = identity(self.degree)
        for lv in reversed(self.levels):
            vals = list(lv.transversal.values())
            g = mul(g, vals[int(rng.integers(len(vals)))])
        return g
