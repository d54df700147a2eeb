from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylkit.io import load_group, load_json
from weylkit.modrep import (
    MatModule,
    chop_permutation_module,
    composition_factors,
    fixed_vectors,
    invariant_subspaces_bruteforce,
    is_irreducible,
    meataxe,
    module_from_json,
    permutation_module,
    restriction,
    verify_witness,
)
from weylkit.permgrp import from_generators
from weylkit.weyl import weyl_group


def matrices(p, n):
    row = st.lists(st.integers(0, p - 1), min_size=n, max_size=n)
    return st.lists(row, min_size=n, max_size=n)


@st.composite
def modules(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(1, 3 if p == 5 else 4))
    gens = draw(st.lists(matrices(p, n), min_size=1, max_size=2))
    return MatModule(p, n, gens)


@settings(max_examples=80, deadline=None)
@given(modules(), st.integers(0, 3))
def test_meataxe_matches_brute_force(m, seed):
    ok, wit = meataxe(m, seed=seed)
    subs = invariant_subspaces_bruteforce(m)
    assert ok == (not subs)
    if wit is not None:
        assert verify_witness(m, wit)
        assert 0 < wit.dimension < m.dimension


@settings(max_examples=30, deadline=None)
@given(modules())
def test_composition_factor_dimensions_sum(m):
    factors = composition_factors(m)
    assert sum(f.dimension for f in factors) == m.dimension
    assert all(is_irreducible(f)[0] for f in factors)


def test_rational_examples():
    swap = MatModule(0, 2, [[[0, 1], [1, 0]]])
    ok, wit = is_irreducible(swap)
    assert not ok and verify_witness(swap, wit)
    rot3 = MatModule(0, 2, [[[0, -1], [1, -1]]])
    assert is_irreducible(rot3)[0]
    assert not is_irreducible(rot3.reduce(7))[0]
    # x^4 + 1 is irreducible over Q but splits modulo every prime
    c8 = MatModule(0, 4, [[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0]]])
    assert is_irreducible(c8)[0]
    for p in (3, 5, 7, 17):
        assert not is_irreducible(c8.reduce(p))[0]
    s3 = permutation_module(from_generators(3, ["(1,2)", "(1,2,3)"]), 5)
    assert not is_irreducible(MatModule(0, 3, s3.generators))[0]


def test_weyl_reflection_modules():
    for label in ("A2", "B3", "G2", "F4"):
        w = weyl_group(label)
        m = MatModule(0, w.rank, [w.coroot_matrix(s) for s in w.simple_reflections])
        assert is_irreducible(m)[0]
        assert fixed_vectors(m) == []
    f4 = weyl_group("F4")
    m2 = MatModule(2, 4, [[[x % 2 for x in r] for r in f4.coroot_matrix(s)] for s in f4.simple_reflections])
    assert not is_irreducible(m2)[0]


def test_permutation_module_pieces():
    a5 = from_generators(5, ["(1,2,3)", "(1,2,3,4,5)"])
    m = permutation_module(a5, 7)
    assert len(fixed_vectors(m)) == 1
    assert sorted(f.dimension for f in chop_permutation_module(a5, 7)) == [1, 4]
    # 5 divides the degree: the trivial module appears twice
    assert sorted(f.dimension for f in chop_permutation_module(a5, 5)) == [1, 1, 3]
    assert m.dual().dimension == 5
    r = restriction(m, [[1]])
    assert len(fixed_vectors(r)) == 3


def test_m12_over_f5():
    m12 = load_group("m12")
    factors = chop_permutation_module(m12, 5)
    assert sorted(f.dimension for f in factors) == [1, 11]
    eleven = next(f for f in factors if f.dimension == 11)
    subs = load_json("m12")["subgroups"]
    assert is_irreducible(restriction(eleven, subs["M11_transitive"]["words"]))[0]
    assert is_irreducible(restriction(eleven.dual(), subs["M11_transitive"]["words"]))[0]
    assert not is_irreducible(restriction(eleven, subs["M11_point_stabilizer"]["words"]))[0]


def test_json_round_trip():
    m = MatModule(0, 2, [[[Fraction(1, 2), 0], [0, 2]]])
    back = module_from_json(m.to_json())
    assert back.generators == m.generators
    with pytest.raises(ValueError):
        module_from_json({"field": 3, "dimension": 2})
    with pytest.raises(ValueError):
        MatModule(3, 2, [[[1, 0]]])
