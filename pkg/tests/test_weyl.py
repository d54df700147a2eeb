from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from weylkit.parabolic import double_cosets, is_self_paired, rule_out_parabolic, to_csv, triple_intersection_count
from weylkit.permgrp.perm import inv, mul
from weylkit.rootsys import build_root_system, closed_subsystem, highest_root, identify_components, reflect
from weylkit.weyl import relative_weyl_group, weyl_group

ORDERS = {"A2": 6, "A3": 24, "B3": 48, "C3": 48, "D4": 192, "G2": 12, "F4": 1152, "E6": 51840}
POSITIVE = {"A2": 3, "A3": 6, "B3": 9, "C3": 9, "D4": 12, "G2": 6, "F4": 24, "E6": 36}


@pytest.mark.parametrize("label", sorted(ORDERS))
def test_orders_and_root_counts(label):
    w = weyl_group(label)
    assert w.order() == ORDERS[label]
    assert w.N == POSITIVE[label]
    assert len(w.system.roots) == 2 * POSITIVE[label]
    lo = w.longest_element()
    assert w.length(lo) == w.N


def test_f4_cartan_and_highest_root():
    s = build_root_system("F4")
    assert s.datum.cartan_matrix == ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))
    assert highest_root(s) == (2, 3, 4, 2)
    assert highest_root(build_root_system("E6")) == (1, 2, 2, 3, 2, 1)
    assert highest_root(build_root_system("G2")) in {(3, 2), (2, 3)}


@pytest.mark.parametrize("ordering", ["lex", "revlex"])
def test_root_numbering(ordering):
    s = build_root_system("F4", ordering)
    n = s.positive_count
    for i in range(n):
        assert s.coeffs(i + n) == tuple(-c for c in s.coeffs(i))
    heights = [sum(s.coeffs(i)) for i in range(n)]
    assert heights == sorted(heights)


def test_bad_type():
    with pytest.raises(ValueError):
        build_root_system("Q3")
    with pytest.raises(ValueError):
        weyl_group("F4").word_to_element("15")


@pytest.mark.parametrize("label", ["B3", "G2", "F4"])
def test_reflection_closure(label):
    s = build_root_system(label)
    roots = [r.coeffs for r in s.roots]
    for a in roots:
        for b in roots:
            assert reflect(s, a, b) in s.index


words = st.lists(st.integers(1, 4), max_size=30)


@settings(max_examples=60, deadline=None)
@given(words, words)
def test_f4_words(u, v):
    w = weyl_group("F4")
    a, b = w.word_to_element(u), w.word_to_element(v)
    red = w.element_to_word(a)
    assert w.word_to_element(red) == a
    assert len(red) == w.length(a) <= len(u)
    assert (len(u) - w.length(a)) % 2 == 0
    ra, rb = np.array(w.root_matrix(a)), np.array(w.root_matrix(b))
    assert (np.array(w.root_matrix(mul(a, b))) == ra @ rb).all()
    assert w.element_from_root_matrix(w.root_matrix(a)) == a
    # coroot matrix from the root matrix and root lengths
    lens = [w.system.form(w.system.simple(k), w.system.simple(k)) for k in range(1, 5)]
    cm = w.coroot_matrix(a)
    for i in range(4):
        for j in range(4):
            assert Fraction(cm[i][j]) == Fraction(ra[i][j] * lens[j], lens[i])


def test_longest_element_is_minus_one_on_f4():
    w = weyl_group("F4")
    lo = w.longest_element()
    assert [list(r) for r in w.coroot_matrix(lo)] == (-np.eye(4, dtype=int)).tolist()


def test_subsystem_identification():
    s = build_root_system("F4")
    sub = closed_subsystem(s, [(0, 1, 0, 0), (0, 0, 1, 0)])
    assert sub.component_types == ["C2"] or sub.component_types == ["B2"]
    assert len(sub.member_roots) == 8
    assert identify_components(build_root_system("E6"), [(1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)]) == ["A2"]


def test_relative_weyl_group_of_d4_in_e6():
    e6 = weyl_group("E6")
    sd = [e6.system.simple(k) for k in (2, 3, 4, 5)]
    rel = relative_weyl_group(e6, sd)
    assert rel.order() == 6
    assert len(rel.induced_group()) == 6


def poincare(w, J):
    """sum of q^l(x) over W and over W_J, as coefficient lists."""
    full = np.zeros(w.N + 1, dtype=np.int64)
    part = np.zeros(w.N + 1, dtype=np.int64)
    sub = w.group.subgroup([w.simple_reflections[j - 1] for j in J])
    for x in w.group.elements():
        full[w.length(x)] += 1
    for x in sub.elements():
        part[w.length(x)] += 1
    return full, part


def ev(c, q):
    return sum(int(a) * q**k for k, a in enumerate(c))


@pytest.mark.parametrize("label", ["A3", "B3", "G2", "C3"])
def test_double_cosets_exhaustive(label):
    w = weyl_group(label)
    elts = list(w.group.elements())
    for size in range(0, w.rank + 1):
        for J in combinations(range(1, w.rank + 1), size):
            reps = double_cosets(w, J)
            assert sum(r.size for r in reps) == w.order()
            full, part = poincare(w, J)
            for q in (2, 3, 5):
                assert sum(r.length_poly(q) for r in reps) * ev(part, q) == ev(full, q)
            sub = set(w.group.subgroup([w.simple_reflections[j - 1] for j in J]).elements()) if J else {w.identity()}
            for r in reps:
                dc = {mul(mul(a, r.min_rep), b) for a in sub for b in sub}
                assert len(dc) == r.size
                assert r.self_paired == (inv(r.min_rep) in dc)
                assert w.length(r.min_rep) == min(w.length(x) for x in dc)
            assert len(elts) == w.order()


def test_f4_parabolic_124():
    f4 = weyl_group("F4")
    reps = double_cosets(f4, [1, 2, 4])
    assert len(reps) == 17
    assert sum(1 for r in reps if not r.self_paired) == 4
    assert reps[0].length_poly(7) == 1
    assert all(is_self_paired(f4, [1, 2, 4], r.min_rep) == r.self_paired for r in reps)
    assert triple_intersection_count(f4, f4.identity()) == 24
    assert triple_intersection_count(f4, f4.longest_element()) == 0
    text = to_csv(reps, [1, 2, 4])
    assert text.count("\n") == 18


def test_rule_out_parabolic():
    assert rule_out_parabolic(24, 7, 14)
    assert rule_out_parabolic(24, 10, 10)
    assert rule_out_parabolic(24, 7, 14, p=2, f=3)
    assert rule_out_parabolic(24, 10, 10, p=3, f=1)
    # 2(a - e) < a + m decides every q at once
    assert not rule_out_parabolic(24, 2, 10)
    with pytest.raises(ValueError):
        rule_out_parabolic(24, 12, 24)
