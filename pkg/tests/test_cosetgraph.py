import numpy as np
import pytest

from weylkit import cosetgraph as cg
from weylkit.permgrp import from_generators, intersection
from weylkit.permgrp.perm import from_cycle_string, inv, mul


def vertex_sets(g):
    """Right cosets Hv x as frozensets, and the element -> coset map."""
    hv = list(g.Hv.elements())
    cosets = {}
    for x in g.H.elements():
        cosets.setdefault(frozenset(mul(y, x) for y in hv), None)
    return list(cosets)


@pytest.fixture(scope="module")
def corpus():
    return [g for _, g in cg.digraph_corpus()]


def test_corpus_size(corpus):
    assert len(corpus) >= 40


def test_vertices_are_right_cosets(corpus):
    for g in corpus[::4]:
        cos = vertex_sets(g)
        assert g.vertex_count == len(cos) == g.H.order() // g.Hv.order()


def test_arcs_follow_double_coset(corpus):
    # Hv x -> Hv y exactly when y x^-1 lies in Hv h Hv
    for g in corpus[::4]:
        hv = list(g.Hv.elements())
        dc = {mul(mul(a, g.h), b) for a in hv for b in hv}
        t = g.table
        for v in range(min(g.vertex_count, 12)):
            x = t.elements[int(g.reps[v])]
            want = sorted({int(g.coset_of[t.index_of(mul(d, x))]) for d in dc})
            assert g.out_neighbours(v) == want


def test_valency_is_index_of_arc_stabilizer(corpus):
    for g in corpus:
        hv_h = g.Hv.conjugate(g.h)
        meet = intersection(g.Hv, hv_h).order()
        assert cg.valency(g) == g.Hv.order() // meet
        assert all(len(g.out_neighbours(v)) == cg.valency(g) for v in range(min(g.vertex_count, 5)))


def test_s_arc_reports_agree_with_orbit_counts(corpus):
    for g in corpus:
        prev = True
        for s in (1, 2, 3):
            r = cg.s_arc_transitive(g, s)
            if r.orbit_count is not None:
                assert r.transitive == (r.orbit_count == 1)
            assert prev or not r.transitive
            prev = r.transitive
            if r.transitive:
                a = cg.divisibility_audit(g, s)
                assert a.holds and a.valency_power_divides


def test_connected_digraphs_have_no_normalized_subgroup(corpus):
    for g in corpus:
        if g.connected:
            assert cg.normalized_subgroup_probe(g) == []


@pytest.mark.parametrize("m,n,k", [(2, 4, 1), (2, 4, 2), (2, 5, 3), (3, 4, 2), (2, 6, 4)])
def test_wreath_examples_are_exactly_k_arc_transitive(m, n, k):
    g = cg.wreath_example(m, n, k)
    assert cg.s_arc_transitive(g, k).transitive
    assert not cg.s_arc_transitive(g, k + 1).transitive
    assert cg.count_arc_orbits(g, k) == 1


def test_negative_control_disconnected():
    H = from_generators(6, ["(1,2)", "(1,2,3)", "(4,5,6)"])
    Hv = from_generators(6, ["(1,2)"])
    h = from_cycle_string("(4,5,6)", 6)
    g = cg.build(H, Hv, h, check_core=False)
    assert not g.connected
    assert cg.normalized_subgroup_probe(g)


def test_build_rejects_bad_input():
    H = from_generators(4, ["(1,2)", "(1,2,3,4)"])
    Hv = from_generators(4, ["(1,2)"])
    with pytest.raises(ValueError):
        cg.build(H, Hv, from_cycle_string("(1,2)", 4))  # h in Hv
    with pytest.raises(ValueError):
        cg.build(H, from_generators(5, ["(1,5)"]), from_cycle_string("(1,2,3)", 4))
    with pytest.raises(ValueError):
        # Hv h Hv contains h^-1 when h is an involution
        cg.build(H, Hv, from_cycle_string("(3,4)", 4))
    with pytest.raises(ValueError):
        # Hv normal in H, so not core-free
        cg.build(H, from_generators(4, ["(1,2)(3,4)", "(1,3)(2,4)"]), from_cycle_string("(1,2,3)", 4))


def test_prime_cycle_is_allowed():
    c7 = from_generators(7, ["(1,2,3,4,5,6,7)"])
    trivial = from_generators(7, [])
    g = cg.build(c7, trivial, c7.gens[0])
    assert cg.valency(g) == 1
    assert cg.s_arc_transitive(g, 3).transitive


def test_enumerated_s_arcs_are_arcs(corpus):
    g = corpus[0]
    arcs = cg.enumerate_s_arcs(g, 2)
    assert len(arcs) == g.vertex_count * cg.valency(g) ** 2
    for row in arcs[:50]:
        for a, b in zip(row[:-1], row[1:]):
            assert int(b) in g.out_neighbours(int(a))
    assert len(np.unique(arcs, axis=0)) == len(arcs)


@pytest.mark.parametrize("m,o,hl,rank,primes,bound", [
    (6, 2, 4, 2, (3,), 2),
    (6, 6, 1, 2, (), None),
    (10, 3, 1, 1, (2, 5), 1),
    (4, 1, 2, 2, (2,), 2),
    (4, 1, 4, 2, (), None),
])
def test_eliminate(m, o, hl, rank, primes, bound):
    res = cg.eliminate(m, o, hl, rank)
    assert res.primes == primes and res.bound == bound


def test_eliminate_rank_checked():
    with pytest.raises(ValueError):
        cg.eliminate(6, 1, 1, 3)


def test_inverse_arc_not_present(corpus):
    for g in corpus[::3]:
        hv = list(g.Hv.elements())
        dc = {mul(mul(a, g.h), b) for a in hv for b in hv}
        assert inv(g.h) not in dc
