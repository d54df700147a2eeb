import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from weylkit.permgrp.classes import conjugacy_classes
from weylkit.polynomial import cyclotomic, evaluate, factor_cyclotomic, interpolate, mul
from weylkit.snf import determinant, invariant_factors
from weylkit.torus import kernel_structure_bruteforce, lattice_matrix, torus_order_poly, torus_structure
from weylkit.weyl import weyl_group

QS = (2, 3, 4, 5, 7, 8, 9)

small_mats = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=80, deadline=None)
@given(small_mats)
def test_smith_form_matches_sympy(m):
    ours = [d for d in invariant_factors(m) if d != 1]
    mat = sympy.Matrix(m)
    diag = smith_normal_form(mat, domain=sympy.ZZ)
    theirs = [abs(int(diag[i, i])) for i in range(len(m)) if abs(int(diag[i, i])) != 1]
    assert sorted(ours) == sorted(theirs)
    assert determinant(m) == int(mat.det())


@pytest.mark.parametrize("d", range(1, 31))
def test_cyclotomic_matches_sympy(d):
    x = sympy.symbols("x")
    want = sympy.Poly(sympy.cyclotomic_poly(d, x), x).all_coeffs()[::-1]
    assert list(cyclotomic(d)) == [int(c) for c in want]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.sampled_from([1, 2, 3, 4, 6, 8, 12]), max_size=5), st.integers(0, 4))
def test_factor_cyclotomic_round_trip(ds, k):
    p = [0] * k + [1]
    for d in ds:
        p = mul(p, list(cyclotomic(d)))
    fp = factor_cyclotomic(p)
    assert fp.expand() == p
    assert fp.degree() == len(p) - 1


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_interpolation(coeffs):
    xs = list(range(len(coeffs)))
    ys = [evaluate(coeffs, x) for x in xs]
    got = interpolate(xs, ys)
    assert [evaluate(got, x) for x in range(10)] == [evaluate(coeffs, x) for x in range(10)]


@pytest.mark.parametrize("label", ["G2", "B3", "F4", "E6"])
def test_order_polynomial_equals_smith_product(label):
    w = weyl_group(label)
    for rep, _ in conjugacy_classes(w.group):
        for twisted in (False, True):
            poly = torus_order_poly(w, rep, twisted)
            assert poly.degree() == w.rank
            for q in QS if label != "E6" else (2, 3):
                assert poly(q) == torus_structure(w, rep, q, twisted).order


@pytest.mark.parametrize("label,q", [("A2", 2), ("G2", 2), ("G2", 3), ("B2", 3), ("A3", 2), ("B3", 2)])
def test_structure_matches_kernel_count(label, q):
    w = weyl_group(label)
    checked = 0
    for rep, _ in conjugacy_classes(w.group):
        m = lattice_matrix(w, rep)
        n = len(m)
        a = [[q * m[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        det = abs(determinant(a))
        if det**n > 200_000:
            continue
        st_ = torus_structure(w, rep, q)
        want = tuple(d for d in st_.invariant_factors if d != 1)
        assert kernel_structure_bruteforce(a, det) == tuple(sorted(want))
        checked += 1
    assert checked


def test_f4_named_tori():
    f4 = weyl_group("F4")
    assert str(torus_order_poly(f4, f4.identity())) == "(q-1)^4"
    assert str(torus_order_poly(f4, f4.longest_element())) == "(q+1)^4"
    assert torus_structure(f4, f4.longest_element(), 3).invariant_factors == (4, 4, 4, 4)
    cox = f4.word_to_element("1234")
    assert torus_order_poly(f4, cox)(2) == 2**4 - 2**2 + 1


def test_lattice_option_and_bad_q():
    e6 = weyl_group("E6")
    e = e6.identity()
    assert torus_structure(e6, e, 4, lattice="coroot").order == 3**6
    assert torus_structure(e6, e, 4, lattice="coweight").order == 3**6
    with pytest.raises(ValueError):
        torus_structure(e6, e, 1)
