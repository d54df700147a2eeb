"""Weyl groups acting on roots.

An element is a permutation of root indices. The word ``i1 i2 ... ik``
stands for ``s_i1 s_i2 ... s_ik`` with products acting on the right, so the
root ``r^(s_i1 s_i2)`` is ``s_i2(s_i1(r))``. Matrices act on row vectors
from the right: the coefficient vector of ``r^w`` is ``coeffs(r) @ root_matrix(w)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .permgrp import PermGroup
from .permgrp.perm import identity, inv, is_identity, mul
from .permgrp.search import set_stabilizer
from .rootsys import RootSystem, _reflect_vec, build_root_system, root_label


class WeylGroup:
    def __init__(self, system: RootSystem):
        self.system = system
        self.rank = system.rank
        self.N = system.positive_count
        self.simple_reflections = [self.reflection(system.simple(k)) for k in range(1, self.rank + 1)]
        self.group = PermGroup(len(system.roots), self.simple_reflections, f"W({system.datum.type_label})")

    @property
    def type_label(self):
        return self.system.datum.type_label

    def reflection(self, root) -> tuple:
        idx = self.system.index
        gram = self.system.gram
        return tuple(idx[_reflect_vec(gram, tuple(root), r.coeffs)] for r in self.system.roots)

    def order(self) -> int:
        return self.group.order()

    def identity(self):
        return identity(len(self.system.roots))

    def contains(self, g) -> bool:
        return self.group.contains(g)

    def is_positive(self, i: int) -> bool:
        return i < self.N

    def length(self, w) -> int:
        return sum(1 for i in range(self.N) if w[i] >= self.N)

    def word_to_element(self, word):
        w = self.identity()
        for letter in parse_word(word):
            if not 1 <= letter <= self.rank:
                raise ValueError(f"letter {letter} outside 1..{self.rank}")
            w = mul(w, self.simple_reflections[letter - 1])
        return w

    def left_descents(self, w):
        """s with l(s w) < l(w), i.e. alpha_s^w negative."""
        si = self.system.simple_indices
        return [k + 1 for k in range(self.rank) if w[si[k]] >= self.N]

    def right_descents(self, w):
        return self.left_descents(inv(w))

    def element_to_word(self, w) -> list:
        """Reduced word, peeling left descents; the result is lexicographically
        first among words built this way."""
        if not self.contains(w):
            raise ValueError("permutation is not in the Weyl group")
        word = []
        while not is_identity(w):
            k = self.left_descents(w)[0]
            word.append(k)
            w = mul(self.simple_reflections[k - 1], w)
        return word

    def longest_element(self):
        w = self.identity()
        while True:
            asc = [k for k in range(1, self.rank + 1) if k not in self.right_descents(w)]
            if not asc:
                return w
            w = mul(w, self.simple_reflections[asc[0] - 1])

    def image(self, w, vector):
        idx = self.system.index[tuple(vector)]
        return self.system.roots[w[idx]].coeffs

    def root_matrix(self, w):
        """Row j is the coefficient vector of alpha_j^w."""
        si = self.system.simple_indices
        return tuple(self.system.roots[w[si[j]]].coeffs for j in range(self.rank))

    def coroot_matrix(self, w):
        """Action on the coroot lattice in the basis of simple coroots."""
        d = [self.system.gram[k][k] for k in range(self.rank)]
        rm = self.root_matrix(w)
        rows = []
        for j in range(self.rank):
            row = []
            for k in range(self.rank):
                v = Fraction(rm[j][k] * d[k], d[j])
                if v.denominator != 1:
                    raise RuntimeError("non-integral coroot matrix")
                row.append(int(v))
            rows.append(tuple(row))
        return tuple(rows)

    def coweight_matrix(self, w):
        """Action on the coweight lattice in the basis dual to the simple roots."""
        return transpose(self.root_matrix(inv(w)))

    def element_from_root_matrix(self, mat):
        imgs = []
        idx = self.system.index
        for r in self.system.roots:
            v = tuple(sum(r.coeffs[j] * mat[j][k] for j in range(self.rank)) for k in range(self.rank))
            if v not in idx:
                raise ValueError("matrix does not permute the roots")
            imgs.append(idx[v])
        return tuple(imgs)

    @cached_property
    def elements(self):
        return list(self.group.elements())

    def label(self, i: int) -> str:
        return root_label(self.system, self.system.roots[i].coeffs)


def parse_word(word):
    if isinstance(word, str):
        text = word.replace(",", " ").strip()
        if not text:
            return []
        if " " in text:
            return [int(t) for t in text.split()]
        return [int(c) for c in text]
    return [int(x) for x in word]


def transpose(m):
    return tuple(zip(*m))


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)) for i in range(n))


def weyl_group(type_label: str) -> WeylGroup:
    return WeylGroup(build_root_system(type_label))


@dataclass
class RelativeWeylGroup:
    weyl: WeylGroup
    simple_roots: list
    stabilizer: PermGroup
    subsystem_group: PermGroup

    def induced(self, g):
        """Signed map simple root -> image root induced by g."""
        idx = self.weyl.system.index
        roots = self.weyl.system.roots
        return {r: roots[g[idx[r]]].coeffs for r in self.simple_roots}

    def induced_permutation(self, g):
        """Permutation of positions in ``simple_roots`` induced by g."""
        pos = {r: i for i, r in enumerate(self.simple_roots)}
        img = self.induced(g)
        return tuple(pos[img[r]] for r in self.simple_roots)

    def induced_group(self):
        """All distinct induced permutations of the simple roots."""
        out = set()
        for g in self.stabilizer.elements():
            out.add(self.induced_permutation(g))
        return out

    def order(self) -> int:
        return self.stabilizer.order()

    def coset_realizes(self, g, mapping) -> bool:
        """Does some element of g W(Delta) send each key of ``mapping`` to
        its value? Elements of W(Delta) are searched exhaustively."""
        idx = self.weyl.system.index
        roots = self.weyl.system.roots
        want = [(idx[tuple(k)], idx[tuple(v)]) for k, v in mapping.items()]
        for x in self.subsystem_group.elements():
            y = mul(g, x)
            if all(y[a] == b for a, b in want):
                return True
        return False


def relative_weyl_group(weyl: WeylGroup, simple_roots) -> RelativeWeylGroup:
    """Set stabilizer in W of the simple roots of a subsystem.

    It maps isomorphically onto N_W(Delta)/W(Delta), since W(Delta) acts
    simply transitively on the bases of Delta.
    """
    simple_roots = [tuple(r) for r in simple_roots]
    idx = weyl.system.index
    pts = [idx[r] for r in simple_roots]
    stab = set_stabilizer(weyl.group, pts)
    sub = PermGroup(weyl.group.degree, [weyl.reflection(r) for r in simple_roots])
    return RelativeWeylGroup(weyl, simple_roots, stab, sub)


def extend_diagram_automorphism(weyl: WeylGroup, simple_map) -> tuple:
    """Permutation of the roots induced by a Dynkin diagram symmetry.

    ``simple_map`` sends label k to label simple_map[k] (1-based).
    """
    n = weyl.rank
    perm = [simple_map.get(k, k) - 1 for k in range(1, n + 1)]
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of the simple roots")
    c = weyl.system.datum.cartan_matrix
    if any(c[perm[i]][perm[j]] != c[i][j] for i in range(n) for j in range(n)):
        raise ValueError("map does not preserve the Cartan matrix")
    mat = tuple(tuple(1 if k == perm[j] else 0 for k in range(n)) for j in range(n))
    return weyl.element_from_root_matrix(mat)
