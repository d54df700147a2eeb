import pytest
from hypothesis import given, settings, strategies as st

from weylkit.permgrp import from_generators
from weylkit.permgrp.group import PermGroup
from weylkit.permgrp.perm import conj
from weylkit.permgrp.subgroups import are_isomorphic, enumerate_subgroups, subgroup_classes, sylow
from weylkit.permgrp.table import GroupTable

from test_permgrp import closure


def all_subgroups(group):
    """Every subgroup as a frozenset, by joining cyclic subgroups until stable."""
    n = group.degree
    subs = {frozenset(closure([x], n)) for x in group.elements()}
    todo = list(subs)
    while todo:
        nxt = []
        cur = list(subs)
        for a in todo:
            for b in cur:
                if a <= b or b <= a:
                    continue
                j = frozenset(closure(list(a | b), n))
                if j not in subs:
                    subs.add(j)
                    nxt.append(j)
        todo = nxt
    return subs


def count_classes(group, subs):
    elts = list(group.elements())
    seen, classes = set(), 0
    for s in subs:
        if s in seen:
            continue
        classes += 1
        seen |= {frozenset(conj(x, g) for x in s) for g in elts}
    return classes


S4 = ["(1,2)", "(1,2,3,4)"]
A5 = ["(1,2,3)", "(1,2,3,4,5)"]


@pytest.mark.parametrize("degree,gens,total,classes", [
    (4, S4, 30, 11),
    (5, A5, 59, 9),
    (4, ["(1,2,3,4)", "(1,3)"], 10, 8),
    (6, ["(1,2,3,4,5,6)"], 4, 4),
])
def test_subgroup_counts(degree, gens, total, classes):
    g = from_generators(degree, gens)
    t, cls = subgroup_classes(g)
    assert len(cls) == classes
    assert sum(size for _, size in cls) == total


@pytest.mark.parametrize("degree,gens", [
    (4, S4),
    (4, ["(1,2,3,4)", "(1,3)"]),
    (5, ["(1,2,3,4,5)", "(2,5)(3,4)"]),
    (6, ["(1,2)", "(3,4)", "(5,6)", "(1,3,5)(2,4,6)"]),
])
def test_enumeration_matches_brute_force(degree, gens):
    g = from_generators(degree, gens)
    subs = all_subgroups(g)
    t, cls = subgroup_classes(g)
    assert sum(size for _, size in cls) == len(subs)
    assert len(cls) == count_classes(g, subs)
    found = {frozenset(t.perm_group(idx).elements()) for idx, _ in cls}
    assert found <= subs


def test_order_multiple_filter_on_c6():
    g = from_generators(6, ["(1,2,3,4,5,6)"])
    _, recs = enumerate_subgroups(g, order_multiple_of=2)
    assert [r.order for r in recs] == [2, 6]
    assert [r.tags["class"] for r in recs] == [1, 2]
    assert [r.tags["index"] for r in recs] == [3, 1]


def test_f4_weyl_group_subgroup_classes():
    from weylkit.weyl import weyl_group

    w = weyl_group("F4")
    t, cls = subgroup_classes(w.group)
    assert len(cls) == 246
    assert sum(size for _, size in cls) == 5191


@settings(max_examples=20, deadline=None)
@given(st.lists(st.permutations(range(6)).map(tuple), min_size=1, max_size=2), st.sampled_from([2, 3, 5]))
def test_sylow_order(gens, p):
    g = PermGroup(6, gens)
    n = g.order()
    pk = 1
    while n % (pk * p) == 0:
        pk *= p
    s = sylow(g, p)
    assert s.order() == pk
    assert s.is_subgroup_of(g)


def test_table_normalizer_matches_definition():
    g = from_generators(4, S4)
    t = GroupTable(g)
    v4 = t.subgroup_indices(from_generators(4, ["(1,2)(3,4)", "(1,3)(2,4)"]))
    assert t.normalizer(v4).size == 24
    c2 = t.subgroup_indices(from_generators(4, ["(1,2)"]))
    assert t.normalizer(c2).size == 4


def test_isomorphism():
    c4 = from_generators(4, ["(1,2,3,4)"])
    v4 = from_generators(4, ["(1,2)(3,4)", "(1,3)(2,4)"])
    v4b = from_generators(4, ["(1,2)", "(3,4)"])
    assert not are_isomorphic(c4, v4)
    assert are_isomorphic(v4, v4b)
    d8 = from_generators(4, ["(1,2,3,4)", "(1,3)"])
    q8 = from_generators(8, ["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"])
    assert q8.order() == 8
    assert not are_isomorphic(d8, q8)
    s3 = from_generators(3, ["(1,2)", "(1,2,3)"])
    s3b = from_generators(5, ["(1,2)(4,5)", "(1,2,3)"])
    assert are_isomorphic(s3, s3b)
    c6 = from_generators(6, ["(1,2)(3,4)(5,6)", "(1,3,5)(2,4,6)"])
    c6b = from_generators(5, ["(1,2)", "(3,4,5)"])
    assert not are_isomorphic(s3b, c6)
    assert are_isomorphic(c6, c6b)


def test_isomorphism_respects_cap():
    s5 = from_generators(5, ["(1,2)", "(1,2,3,4,5)"])
    with pytest.raises(NotImplementedError):
        are_isomorphic(s5, s5, cap=100)


def test_derived_and_solvable():
    t = GroupTable(from_generators(4, S4))
    assert t.derived_subgroup(list(range(t.n))).size == 12
    assert t.is_solvable()
    assert not GroupTable(from_generators(5, A5)).is_solvable()


def test_gu32_sylow_orders():
    from weylkit.io import load_group

    g = load_group("gu32")
    assert g.order() == 648
    assert sylow(g, 3).order() == 81
    assert sylow(g, 2).order() == 8
