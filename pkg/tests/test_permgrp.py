from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from weylkit.permgrp import centralizer, from_generators, intersection, normalizer, set_stabilizer
from weylkit.permgrp.classes import conjugacy_classes
from weylkit.permgrp.group import PermGroup
from weylkit.permgrp.perm import conj, cycles, from_cycle_string, identity, inv, mul, order, power, to_cycle_string

perm6 = st.permutations(range(6)).map(tuple)


def closure(gens, n):
    """Every element generated by ``gens``, by breadth first search."""
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


@given(perm6, perm6, perm6)
def test_mul_is_associative(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(perm6)
def test_inverse_and_order(a):
    assert mul(a, inv(a)) == identity(6)
    assert power(a, order(a)) == identity(6)
    assert all(power(a, k) != identity(6) for k in range(1, order(a)))


@given(perm6, perm6)
def test_conj_is_g_inverse_p_g(p, g):
    assert conj(p, g) == mul(mul(inv(g), p), g)


@given(perm6)
def test_cycle_string_round_trip(a):
    assert from_cycle_string(to_cycle_string(a), 6) == a
    assert sum(len(c) for c in cycles(a)) <= 6


def test_cycle_string_is_one_based():
    assert from_cycle_string("(1,2,3)", 4) == (1, 2, 0, 3)
    with pytest.raises(ValueError):
        from_cycle_string("(1,1)", 3)


@settings(max_examples=30, deadline=None)
@given(st.lists(perm6, min_size=1, max_size=3))
def test_order_matches_enumeration(gens):
    g = PermGroup(6, gens)
    elts = closure(gens, 6)
    assert g.order() == len(elts)
    assert set(g.elements()) == elts
    assert all(g.contains(x) for x in elts)


@settings(max_examples=25, deadline=None)
@given(st.lists(perm6, min_size=1, max_size=2), st.sets(st.integers(0, 5), max_size=5))
def test_set_stabilizer_matches_brute_force(gens, points):
    g = PermGroup(6, gens)
    want = {x for x in g.elements() if {x[i] for i in points} == points}
    assert set(set_stabilizer(g, sorted(points)).elements()) == want


@settings(max_examples=25, deadline=None)
@given(st.lists(perm6, min_size=1, max_size=2), perm6)
def test_centralizer_matches_brute_force(gens, x):
    g = PermGroup(6, gens)
    want = {y for y in g.elements() if mul(x, y) == mul(y, x)}
    assert set(centralizer(g, x).elements()) == want


@settings(max_examples=25, deadline=None)
@given(st.lists(perm6, min_size=1, max_size=2), st.lists(perm6, min_size=1, max_size=2))
def test_intersection_matches_brute_force(ga, gb):
    a, b = PermGroup(6, ga), PermGroup(6, gb)
    want = set(a.elements()) & set(b.elements())
    assert set(intersection(a, b).elements()) == want


@settings(max_examples=15, deadline=None)
@given(st.lists(perm6, min_size=1, max_size=2))
def test_normalizer_in_s6_matches_brute_force(gens):
    s6 = from_generators(6, ["(1,2)", "(1,2,3,4,5,6)"])
    sub = PermGroup(6, gens)
    elts = set(sub.elements())
    want = {x for x in permutations(range(6)) if all(conj(y, x) in elts for y in sub.gens)}
    assert set(normalizer(s6, sub).elements()) == want


def test_known_orders():
    assert from_generators(5, ["(1,2)", "(1,2,3,4,5)"]).order() == 120
    assert from_generators(5, ["(1,2,3)", "(1,2,3,4,5)"]).order() == 60
    m11 = from_generators(11, ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"])
    assert m11.order() == 7920


@pytest.mark.parametrize("gens,degree,counts", [
    (["(1,2)", "(1,2,3,4)"], 4, [1, 3, 6, 6, 8]),
    (["(1,2,3)", "(1,2,3,4,5)"], 5, [1, 12, 12, 15, 20]),
])
def test_conjugacy_classes(gens, degree, counts):
    g = from_generators(degree, gens)
    classes = conjugacy_classes(g)
    assert sorted(c for _, c in classes) == counts
    # brute force: class of each representative
    elts = list(g.elements())
    for rep, size in classes:
        assert len({conj(rep, x) for x in elts}) == size
