"""Double cosets of standard parabolic subgroups and suborbit polynomials.

For a standard parabolic subgroup W_J of W, each double coset W_J w W_J
contains a unique element of minimal length. The suborbit polynomial of
the double coset is the sum of q^l(x) over the minimal length
representatives x of the right cosets W_J x it contains.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .facto import check_pf_bound, largest_ppart
from .permgrp.perm import inv, mul, order as perm_order
from .polynomial import FactoredPolynomial, factor_cyclotomic
from .weyl import WeylGroup


@dataclass
class DoubleCosetReport:
    min_rep: tuple
    min_rep_word: list
    self_paired: bool
    length_poly: FactoredPolynomial
    triple_count: int
    size: int
    coefficients: list

    @property
    def min_length(self) -> int:
        return len(self.min_rep_word)


class _ElementIndex:
    """All elements of a Weyl group with lengths, indexed for fast lookup."""

    def __init__(self, weyl: WeylGroup):
        self.weyl = weyl
        self.elements = weyl.elements
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.lengths = [weyl.length(g) for g in self.elements]

    def left_mult(self, k):
        s = self.weyl.simple_reflections[k - 1]
        idx = self.index
        return [idx[mul(s, g)] for g in self.elements]

    def right_mult(self, k):
        s = self.weyl.simple_reflections[k - 1]
        idx = self.index
        return [idx[mul(g, s)] for g in self.elements]


_INDEX_CACHE: dict = {}


def _element_index(weyl: WeylGroup) -> _ElementIndex:
    key = id(weyl)
    hit = _INDEX_CACHE.get(key)
    if hit is None or hit.weyl is not weyl:
        hit = _ElementIndex(weyl)
        _INDEX_CACHE[key] = hit
    return hit


def triple_intersection_count(weyl: WeylGroup, w) -> int:
    """|Phi+ meet (Phi+)^w meet (Phi+)^(w^-1)|.

    A positive root r lies in (Phi+)^w exactly when r^(w^-1) is positive.
    """
    n = weyl.N
    wi = inv(w)
    return sum(1 for i in range(n) if w[i] < n and wi[i] < n)


def is_self_paired(weyl: WeylGroup, J, w) -> bool:
    """Exact test: w^-1 lies in W_J w W_J."""
    ei = _element_index(weyl)
    classes = _classes(weyl, tuple(sorted(J)))
    return classes[ei.index[inv(w)]] == classes[ei.index[tuple(w)]]


_CLASS_CACHE: dict = {}


def _classes(weyl: WeylGroup, J):
    key = (id(weyl), J)
    hit = _CLASS_CACHE.get(key)
    if hit is not None and hit[0] is weyl:
        return hit[1]
    ei = _element_index(weyl)
    n = len(ei.elements)
    moves = [ei.left_mult(k) for k in J] + [ei.right_mult(k) for k in J]
    label = [-1] * n
    c = 0
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = c
        stack = [start]
        while stack:
            x = stack.pop()
            for mv in moves:
                y = mv[x]
                if label[y] < 0:
                    label[y] = c
                    stack.append(y)
        c += 1
    _CLASS_CACHE[key] = (weyl, label)
    return label


def double_cosets(weyl: WeylGroup, J) -> list:
    """Reports for every double coset W_J w W_J, ordered by minimal length."""
    J = tuple(sorted(set(int(j) for j in J)))
    for j in J:
        if not 1 <= j <= weyl.rank:
            raise ValueError(f"J contains {j}, outside 1..{weyl.rank}")
    ei = _element_index(weyl)
    label = _classes(weyl, J)
    si = weyl.system.simple_indices
    N = weyl.N
    groups: dict = {}
    for i, c in enumerate(label):
        groups.setdefault(c, []).append(i)
    reports = []
    for c, members in groups.items():
        lmin = min(ei.lengths[i] for i in members)
        mins = [i for i in members if ei.lengths[i] == lmin]
        if len(mins) != 1:
            raise RuntimeError("double coset without a unique minimal element")
        rep = ei.elements[mins[0]]
        coeffs = [0] * (max(ei.lengths[i] for i in members) + 1)
        for i in members:
            g = ei.elements[i]
            # minimal in its right coset W_J g: no left descent in J
            if all(g[si[k - 1]] < N for k in J):
                coeffs[ei.lengths[i]] += 1
        poly = factor_cyclotomic(coeffs)
        shortcut = perm_order(rep) <= 2
        exact = label[ei.index[inv(rep)]] == c
        if shortcut != exact:
            raise RuntimeError("self-pairing shortcut disagrees with the exact test")
        reports.append(
            DoubleCosetReport(
                rep,
                weyl.element_to_word(rep),
                exact,
                poly,
                triple_intersection_count(weyl, rep),
                len(members),
                coeffs,
            )
        )
    reports.sort(key=lambda r: (r.min_length, r.min_rep_word))
    return reports


def suborbit_polynomial(weyl: WeylGroup, J, w) -> FactoredPolynomial:
    ei = _element_index(weyl)
    label = _classes(weyl, tuple(sorted(J)))
    c = label[ei.index[tuple(w)]]
    for rep in double_cosets(weyl, J):
        if label[ei.index[rep.min_rep]] == c:
            return rep.length_poly
    raise RuntimeError("double coset not found")


def rule_out_parabolic(a_exp: int, e_exp: int, m: int, p: int | None = None, f: int | None = None) -> bool:
    """Does q^(2(a-e)) f_p^2 < q^(a+m) f_p hold?

    Here q = p^f and f_p is the p-part of f. With p and f given, the
    comparison is exact. Without them the answer is for every q, using
    f_p <= p^(f/p) <= q^(1/2): the inequality then holds for all q exactly
    when 2(a - e) < a + m.
    """
    if e_exp > a_exp or e_exp < 0 or m < 0:
        raise ValueError("inconsistent exponents")
    if m > a_exp - e_exp:
        # the triple stabilizer sits inside the arc stabilizer
        raise ValueError("inconsistent exponents: m exceeds a_exp - e_exp")
    uniform = 2 * (a_exp - e_exp) < a_exp + m
    if p is None and f is None:
        return uniform
    if p is None or f is None or p < 2 or f < 1:
        raise ValueError("p and f must be given together, p >= 2, f >= 1")
    q = p**f
    fp = largest_ppart(f, p)
    if not check_pf_bound(p, f):
        raise RuntimeError(f"p^f >= (f_p)^p fails for p={p}, f={f}")
    exact = q ** (2 * (a_exp - e_exp)) * fp * fp < q ** (a_exp + m) * fp
    if uniform and not exact:
        raise RuntimeError("uniform bound contradicts the exact comparison")
    return exact


def to_csv(reports, J) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["J", "min_rep_word", "min_length", "self_paired", "suborbit_polynomial", "triple_count", "size"])
    label = ",".join(str(j) for j in sorted(J))
    for r in reports:
        writer.writerow([
            label,
            "".join(str(k) for k in r.min_rep_word) or "e",
            r.min_length,
            int(r.self_paired),
            str(r.length_poly),
            r.triple_count,
            r.size,
        ])
    return buf.getvalue()
