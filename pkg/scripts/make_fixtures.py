"""Regenerate the JSON group fixtures shipped in src/weylkit/fixtures.

Run from the repository root:  python scripts/make_fixtures.py
Every fixture records how it was obtained; the test suite re-checks the
stated properties (orders, transitivity, containments).
"""
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from weylkit.modrep import make_rng  # noqa: E402
from weylkit.permgrp import from_generators  # noqa: E402
from weylkit.permgrp.perm import identity, inv, mul, to_cycle_string  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "weylkit", "fixtures")

M12_GENS = [
    "(1,2,3,4,5,6,7,8,9,10,11)",
    "(3,7,11,8)(4,10,5,6)",
    "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
]


def word_perm(gens, word):
    g = identity(len(gens[0]))
    for letter in word:
        h = gens[abs(letter) - 1]
        g = mul(g, h if letter > 0 else inv(h))
    return g


def transitive_m11(m12):
    """Search random words for a transitive subgroup of order 7920."""
    rng = make_rng(11)
    gens = m12.gens
    tries = 0
    while True:
        tries += 1
        words = []
        for _ in range(2):
            length = int(rng.integers(3, 9))
            words.append([int(rng.integers(1, 4)) for _ in range(length)])
        perms = [word_perm(gens, w) for w in words]
        h = from_generators(12, perms)
        if h.is_transitive() and h.order() == 7920:
            return words, perms, tries


# --- GU3(2) over F4 = {0, 1, w, w^2} encoded 0, 1, 2, 3 -------------------

_LOG = {1: 0, 2: 1, 3: 2}
_EXP = [1, 2, 3]


def f4_mul(a, b):
    if a == 0 or b == 0:
        return 0
    return _EXP[(_LOG[a] + _LOG[b]) % 3]


def f4_conj(a):
    return f4_mul(a, a)


def mat_f4(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = 0
            for k in range(n):
                s ^= f4_mul(a[i][k], b[k][j])
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def det3(a):
    terms = [
        (0, 1, 2, 0), (1, 2, 0, 0), (2, 0, 1, 0),
        (0, 2, 1, 1), (1, 0, 2, 1), (2, 1, 0, 1),
    ]
    s = 0
    for x, y, z, _ in terms:
        s ^= f4_mul(f4_mul(a[0][x], a[1][y]), a[2][z])
    return s


def unitary_group():
    from itertools import product

    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    rows = [r for r in product(range(4), repeat=3)]
    # a unitary row has h(r, r) = 1
    def h(x, y):
        s = 0
        for a, b in zip(x, y):
            s ^= f4_mul(a, f4_conj(b))
        return s

    unit = [r for r in rows if h(r, r) == 1]
    out = []
    for r0 in unit:
        for r1 in unit:
            if h(r0, r1):
                continue
            for r2 in unit:
                if h(r0, r2) or h(r1, r2):
                    continue
                out.append((r0, r1, r2))
    assert all(mat_f4(a, tuple(zip(*[[f4_conj(x) for x in row] for row in a]))) == ident for a in out[:50])
    return out


def perm_on_vectors(a, points):
    index = {v: i for i, v in enumerate(points)}
    out = []
    for v in points:
        w = tuple(
            f4_mul(v[0], a[0][j]) ^ f4_mul(v[1], a[1][j]) ^ f4_mul(v[2], a[2][j]) for j in range(3)
        )
        out.append(index[w])
    return tuple(out)


def gu32():
    from itertools import product

    mats = unitary_group()
    assert len(mats) == 648, len(mats)
    points = [v for v in product(range(4), repeat=3) if any(v)]
    rng = make_rng(3)
    def pick(pool, target):
        gens = []
        while True:
            a = pool[int(rng.integers(len(pool)))]
            gens.append(perm_on_vectors(a, points))
            g = from_generators(63, gens)
            if g.order() == target:
                return gens
            if len(gens) > 4:
                gens = []

    gu = pick(mats, 648)
    su = pick([a for a in mats if det3(a) == 1], 216)
    return gu, su


def main():
    os.makedirs(OUT, exist_ok=True)
    m12 = from_generators(12, M12_GENS)
    assert m12.order() == 95040
    words, perms, tries = transitive_m11(m12)
    data = {
        "name": "M12",
        "degree": 12,
        "generators": M12_GENS,
        "provenance": "standard generators of the Mathieu group M12 on 12 points (as in GAP's MathieuGroup(12)); order 95040",
        "subgroups": {
            "M11_point_stabilizer": {
                "words": [[1], [2]],
                "generators": M12_GENS[:2],
                "note": "first two generators; fixes the point 12; order 7920",
            },
            "M11_transitive": {
                "words": words,
                "generators": [to_cycle_string(p) for p in perms],
                "note": f"random words in the generators (Philox seed 11, attempt {tries}); transitive on 12 points; order 7920",
            },
        },
    }
    with open(os.path.join(OUT, "m12.json"), "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")
    m11 = {
        "name": "M11",
        "degree": 11,
        "generators": [M12_GENS[0], M12_GENS[1]],
        "provenance": "point stabilizer of 12 in the M12 fixture, restricted to 11 points; order 7920",
    }
    with open(os.path.join(OUT, "m11.json"), "w") as fh:
        json.dump(m11, fh, indent=1)
        fh.write("\n")
    gu, su = gu32()
    data = {
        "name": "GU3(2)",
        "degree": 63,
        "generators": [to_cycle_string(p) for p in gu],
        "provenance": (
            "3x3 matrices over F4 preserving the form x1*y1^2 + x2*y2^2 + x3*y3^2, "
            "acting on the 63 nonzero row vectors (points numbered in lexicographic "
            "order of coordinates, with F4 = {0, 1, w, w^2} encoded as 0..3); order 648"
        ),
        "subgroups": {
            "SU3(2)": {
                "generators": [to_cycle_string(p) for p in su],
                "note": "determinant one; order 216",
            }
        },
    }
    with open(os.path.join(OUT, "gu32.json"), "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")
    print("fixtures written to", os.path.abspath(OUT))


if __name__ == "__main__":
    main()
