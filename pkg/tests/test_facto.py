import pytest
from hypothesis import given, settings, strategies as st

from weylkit.facto import (
    FactorizationRecord,
    Refutation,
    Sylow2Isomorphic,
    check_pf_bound,
    largest_ppart,
    multiplicative_order,
    ppd,
    search_factorizations,
    verify_factorization,
)
from weylkit.io import load_group
from weylkit.permgrp import from_generators, intersection
from weylkit.permgrp.perm import from_cycle_string
from weylkit.permgrp.search import normalizer, set_stabilizer
from weylkit.permgrp.subgroups import enumerate_subgroups


def brute_ppd(q, n):
    """Primes r dividing q^n - 1 but no q^k - 1 with k < n, by trial division."""
    value = q**n - 1
    out = []
    r = 2
    while r * r <= value:
        if value % r == 0:
            if all((q**k - 1) % r for k in range(1, n)):
                out.append(r)
            while value % r == 0:
                value //= r
        r += 1
    if value > 1 and all((q**k - 1) % value for k in range(1, n)):
        out.append(value)
    return sorted(out)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 12), st.integers(2, 12))
def test_ppd_matches_trial_division(q, n):
    res = ppd(q, n)
    assert list(res.primes) == brute_ppd(q, n)
    for r in res.primes:
        assert multiplicative_order(q, r) == n
        assert r % n == 1
    assert (not res.primes) == (res.exception_reason is not None)


def test_ppd_examples():
    assert list(ppd(2, 6).primes) == []
    assert ppd(2, 6).exception_reason == "zsigmondy_26"
    assert ppd(3, 2).exception_reason == "mersenne_like_n2"
    assert list(ppd(2, 12).primes) == [13]
    assert list(ppd(2, 4).primes) == [5]
    assert list(ppd(5, 3).primes) == [31]


def test_pf_bound_and_ppart():
    assert largest_ppart(48, 2) == 16
    assert largest_ppart(48, 5) == 1
    for p in (2, 3, 5, 7):
        for f in range(1, 30):
            assert check_pf_bound(p, f) == (p**f >= largest_ppart(f, p) ** p)
            assert check_pf_bound(p, f)


S4 = ["(1,2)", "(1,2,3,4)"]


def test_verify_factorization_s4():
    s4 = from_generators(4, S4)
    a4 = from_generators(4, ["(1,2,3)", "(2,3,4)"])
    c2 = from_generators(4, ["(1,2)"])
    c3 = from_generators(4, ["(1,2,3)"])
    rec = verify_factorization(s4, a4, c2)
    assert isinstance(rec, FactorizationRecord) and rec.intersection_order == 1
    assert rec.proper and rec.homogeneous is False
    bad = verify_factorization(s4, a4, c3)
    assert isinstance(bad, Refutation)
    with pytest.raises(ValueError):
        verify_factorization(a4, s4, c2)


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(4)).map(tuple), st.permutations(range(4)).map(tuple))
def test_verify_is_symmetric_and_conjugation_invariant(x, g):
    s4 = from_generators(4, S4)
    a = from_generators(4, ["(1,2,3,4)"])
    b = s4.subgroup([x])
    r1 = verify_factorization(s4, a, b)
    r2 = verify_factorization(s4, b, a)
    r3 = verify_factorization(s4, a.conjugate(g), b)
    assert type(r1) is type(r2)
    assert r1.intersection_order == r2.intersection_order
    assert isinstance(r3, FactorizationRecord) == isinstance(r1, FactorizationRecord)


@pytest.mark.parametrize("degree,gens,m", [(4, S4, 1), (4, S4, 2), (5, ["(1,2,3)", "(1,2,3,4,5)"], 1)])
def test_search_matches_double_loop(degree, gens, m):
    g = from_generators(degree, gens)
    n = g.order()
    _, recs = enumerate_subgroups(g, m)
    want = set()
    for i, k in enumerate(recs):
        for l in recs[i + 1:]:
            meet = intersection(k.group, l.group).order()
            if k.order * l.order == n * meet:
                want.add((k.tags["class"], l.tags["class"]))
    got = {r.tags["classes"] for r in search_factorizations(g, m)}
    assert got == want


def test_s4_contains_a4_times_c2():
    s4 = from_generators(4, S4)
    recs = search_factorizations(s4, 2)
    assert any(r.tags["orders"] == (2, 12) for r in recs)
    assert any(r.tags["orders"] == (8, 12) for r in recs)


def test_a6_two_classes_of_a5():
    a6 = from_generators(6, ["(1,2,3)", "(2,3,4,5,6)"])
    assert a6.order() == 360
    a5 = a6.subgroup([from_cycle_string("(1,2,3)", 6), from_cycle_string("(1,2,3,4,5)", 6)])
    a5t = a6.subgroup([from_cycle_string("(1,2,3,4,5)", 6), from_cycle_string("(1,6)(2,5)", 6)])
    rec = verify_factorization(a6, a5, a5t)
    assert isinstance(rec, FactorizationRecord)
    assert rec.intersection_order == 10 and rec.homogeneous


def test_m11_factorization():
    m11 = load_group("m11")
    eleven = m11.subgroup([from_cycle_string("(1,2,3,4,5,6,7,8,9,10,11)", 11)])
    a = normalizer(m11, eleven)
    b = set_stabilizer(m11, [0, 1])
    rec = verify_factorization(m11, a, b)
    assert (a.order(), b.order(), rec.intersection_order) == (55, 144, 1)


def test_gu32_sylow2_search():
    g = load_group("gu32")
    recs = search_factorizations(g, 8, Sylow2Isomorphic())
    assert len(recs) == 11
    assert all(216 in r.tags["orders"] or 648 in r.tags["orders"] for r in recs)
    for r in recs:
        assert intersection(r.A, r.B).order() == r.intersection_order
