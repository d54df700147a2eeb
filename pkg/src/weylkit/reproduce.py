"""The ten reproduction checks behind ``weylkit reproduce`` and the
acceptance tests.

Each criterion collects named checks (expected, got, pass) and is timed
against its budget. A criterion passes only when every check passes within
the budget. Some checks record findings next to the literal target (for
example the true order of a centralizer) so a failing line carries its
own explanation.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .facto import Sylow2Isomorphic, check_pf_bound, multiplicative_order, ppd, search_factorizations, verify_factorization
from .io import load_group, load_json, load_subgroup
from .modrep import MatModule, chop_permutation_module, fixed_vectors, is_irreducible, restriction
from .parabolic import double_cosets, rule_out_parabolic
from .permgrp.classes import conjugacy_classes
from .permgrp.group import from_generators
from .permgrp.search import normalizer, set_stabilizer
from .permgrp.subgroups import are_isomorphic
from .rootsys import identify_components
from .torus import centralizer_torus_module, torus_order_poly, torus_structure
from .weyl import relative_weyl_group, weyl_group

E6_WORD = "123142314542314565423456"
PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9)


@dataclass
class Check:
    name: str
    expected: object
    got: object
    passed: bool

    def to_json(self) -> dict:
        return {"name": self.name, "expected": _plain(self.expected), "got": _plain(self.got), "pass": self.passed}


@dataclass
class Criterion:
    number: int
    title: str
    budget: float
    checks: list = field(default_factory=list)
    elapsed: float = 0.0
    error: str | None = None

    def check(self, name, expected, got, passed=None):
        ok = expected == got if passed is None else bool(passed)
        self.checks.append(Check(name, expected, got, ok))
        return ok

    @property
    def passed(self) -> bool:
        return self.error is None and self.elapsed <= self.budget and all(c.passed for c in self.checks)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        failed = [c.name for c in self.checks if not c.passed]
        tail = f"; failed: {', '.join(failed)}" if failed else ""
        if self.error:
            tail += f"; error: {self.error}"
        return f"criterion {self.number:2d} {status} [{self.elapsed:.1f}s of {self.budget:.0f}s] {self.title}{tail}"

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "criterion": self.number,
            "title": self.title,
            "pass": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "error": self.error,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


# --- criterion bodies -------------------------------------------------------


def c1_basics(c: Criterion):
    f4, e6 = weyl_group("F4"), weyl_group("E6")
    c.check("|Phi(F4)|", 48, len(f4.system.roots))
    c.check("|Phi(E6)|", 72, len(e6.system.roots))
    c.check("|W(F4)|", 1152, f4.order())
    c.check("|W(E6)|", 2**7 * 3**4 * 5, e6.order())


def _induced_group(rel):
    return sorted(rel.induced_group())


def _group_from_position_perms(perms, n):
    """All products of the given position permutations (closure)."""
    from .permgrp.perm import identity, mul

    out = {identity(n)}
    frontier = list(out)
    while frontier:
        nxt = []
        for x in frontier:
            for p in perms:
                y = mul(x, p)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(out)


def _positions(simple, cycles):
    """Position permutation of ``simple`` given cycles of roots."""
    pos = {r: i for i, r in enumerate(simple)}
    img = list(range(len(simple)))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[pos[a]] = pos[b]
    return tuple(img)


def _neg(v):
    return tuple(-x for x in v)


def c2_relative_weyl(c: Criterion):
    f4 = weyl_group("F4")
    a = [f4.system.simple(k) for k in range(1, 5)]
    a0 = (2, 3, 4, 2)
    b0 = (1, 2, 3, 2)
    sd = [a[1], a[2], _neg(a0), b0]
    rel = relative_weyl_group(f4, sd)
    c.check("F4/2C2 components", ["C2", "C2"], identify_components(f4.system, sd))
    c.check("F4/2C2 |W_Delta|", 2, rel.order())
    gens = [g for g in rel.stabilizer.elements() if g != f4.identity()]
    pi_action = {a[1]: a0, a0: a[1], a[2]: _neg(b0), _neg(b0): a[2]}
    c.check(
        "F4/2C2 involution realizes (a2,a0)(a3,-b0) on its W(Delta) coset",
        True,
        len(gens) == 1 and rel.coset_realizes(gens[0], pi_action),
    )
    c.check(
        "F4/2C2 induced permutation of {a2,a3,-a0,b0}",
        [_positions(sd, []), _positions(sd, [[a[1], _neg(a0)], [a[2], b0]])],
        _induced_group(rel),
    )

    sd = [_neg(a0), a[0], a[2], a[3]]
    rel = relative_weyl_group(f4, sd)
    c.check("F4/2A2 components", ["A2", "A2"], identify_components(f4.system, sd))
    c.check(
        "F4/2A2 induced group <(-a0,a1)(a3,a4)>",
        [_positions(sd, []), _positions(sd, [[_neg(a0), a[0]], [a[2], a[3]]])],
        _induced_group(rel),
    )

    e6 = weyl_group("E6")
    a = [e6.system.simple(k) for k in range(1, 7)]
    a0 = (1, 2, 2, 3, 2, 1)
    sd = [a[0], a[2], a[1], _neg(a0), a[4], a[5]]
    rel = relative_weyl_group(e6, sd)
    c.check("E6/3A2 components", ["A2", "A2", "A2"], identify_components(e6.system, sd))
    g1 = _positions(sd, [[a[0], a[4]], [a[1], _neg(a0)], [a[2], a[5]]])
    g2 = _positions(sd, [[a[0], a[5], _neg(a0)], [a[1], a[2], a[4]]])
    c.check("E6/3A2 induced group = <g1, g2> (S3)", _group_from_position_perms([g1, g2], 6), _induced_group(rel))
    c.check("E6/3A2 |W_Delta|", 6, rel.order())

    sd = [a[1], a[2], a[3], a[4]]
    rel = relative_weyl_group(e6, sd)
    c.check("E6/D4 components", ["D4"], identify_components(e6.system, sd))
    g1 = _positions(sd, [[a[1], a[2]]])
    g2 = _positions(sd, [[a[1], a[4]]])
    c.check("E6/D4 induced group = <(a2,a3),(a2,a5)>", _group_from_position_perms([g1, g2], 4), _induced_group(rel))
    c.check("E6/D4 |W_Delta|", 6, rel.order())


def c3_parabolic(c: Criterion):
    f4 = weyl_group("F4")
    reps = double_cosets(f4, [1, 2, 4])
    odd = [r for r in reps if not r.self_paired]
    c.check("non-self-paired classes", 4, len(odd))
    got = sorted((str(r.length_poly), r.triple_count) for r in odd)
    want = sorted([("q^7*(q^2+q+1)*(q+1)", 14)] * 2 + [("q^10*(q^2+q+1)*(q+1)", 10)] * 2)
    c.check("length polynomials with m", want, got)
    c.check("rule_out_parabolic(24, 7, 14)", True, rule_out_parabolic(24, 7, 14))
    c.check("rule_out_parabolic(24, 10, 10)", True, rule_out_parabolic(24, 10, 10))


def c4_torus_orders(c: Criterion):
    f4, e6 = weyl_group("F4"), weyl_group("E6")
    c.check("F4 longest", "(q+1)^4", str(torus_order_poly(f4, f4.longest_element())))
    c.check("F4 identity", "(q-1)^4", str(torus_order_poly(f4, f4.identity())))
    w = e6.word_to_element(E6_WORD)
    c.check("E6 word", "(q^2+q+1)^3", str(torus_order_poly(e6, w)))
    c.check("2E6 identity (twisted)", "(q+1)^6", str(torus_order_poly(e6, e6.identity(), twisted=True)))
    from .permgrp.search import centralizer

    cent = centralizer(e6.group, w)
    c.check("|C_W(w)|", 216, cent.order())
    gu = load_group("gu32.json")
    c.check("|GU3(2)| of the fixture", 648, gu.order())
    c.check("C_W(w) isomorphic to the GU3(2) fixture", True, are_isomorphic(cent, gu, cap=1000))
    bad = []
    for name, wg in (("F4", f4), ("E6", e6)):
        for rep, _ in conjugacy_classes(wg.group):
            if torus_order_poly(wg, rep)(2) != torus_structure(wg, rep, 2).order:
                bad.append((name, wg.element_to_word(rep)))
    c.check("class sweep: order polynomial at q=2 equals SNF product", [], bad)


def c5_torus_structures(c: Criterion):
    f4, e6 = weyl_group("F4"), weyl_group("E6")
    c.check("F4 longest, q=4", (5, 5, 5, 5), torus_structure(f4, f4.longest_element(), 4).invariant_factors)
    w = e6.word_to_element(E6_WORD)
    c.check("E6 word, q=2", (7, 7, 7), torus_structure(e6, w, 2).invariant_factors)
    bad = []
    for wg in (f4, e6):
        for q in PRIME_POWERS:
            want = tuple(q - 1 for _ in range(wg.rank)) if q > 2 else ()
            if torus_structure(wg, wg.identity(), q).invariant_factors != want:
                bad.append((wg.type_label, q))
    c.check("identity gives (q-1)^rank", [], bad)


def _irreducible(weyl, group, p):
    mats = [weyl.coroot_matrix(g) for g in group.gens]
    return is_irreducible(MatModule(p, weyl.rank, mats))[0]


def c6_irreducibility(c: Criterion):
    f4 = weyl_group("F4")
    c.check("W(F4) on the coroot lattice over Q", True, _irreducible(f4, f4.group, 0))
    recs = search_factorizations(f4.group, 1, Sylow2Isomorphic(16))
    c.check("W(F4) factorizations found", True, len(recs), len(recs) > 0)
    for p, name in ((0, "Q"), (2, "F2"), (5, "F5")):
        bad = []
        for r in recs:
            for g in (r.A, r.B):
                if not _irreducible(f4, g, p):
                    bad.append(g.order())
        c.check(f"every factor irreducible over {name}", [], sorted(set(bad)))
    e6 = weyl_group("E6")
    w = e6.word_to_element(E6_WORD)
    for r, q in ((7, 2), (13, 3)):
        mod, _ = centralizer_torus_module(e6, w, r)
        ok = is_irreducible(MatModule(r, mod.dimension, mod.generator_matrices))[0]
        c.check(f"GU3(2) on the 6-dim module mod {r}", True, ok)
        mod, _ = centralizer_torus_module(e6, w, r, q=q)
        ok = is_irreducible(MatModule(r, mod.dimension, mod.generator_matrices))[0]
        c.check(f"GU3(2) on the {mod.dimension}-dim {r}-torsion of the q={q} torus", True, ok)


def c7_factorizations(c: Criterion):
    gu = load_group("gu32.json")
    su = load_subgroup("gu32.json", "SU3(2)")
    recs = search_factorizations(gu, 8, Sylow2Isomorphic())
    listing = [(r.tags["orders"], r.intersection_order) for r in recs]
    c.check("GU3(2) factorizations, Sylow-2 isomorphic, OrderMultipleOf 8", 11, len(recs))
    if len(recs) != 11:
        c.check("full list", [], listing, False)
    big = [
        any(g.order() == gu.order() or (g.order() == su.order() and g.same_group(su)) for g in (r.A, r.B))
        for r in recs
    ]
    c.check("each has SU3(2) or GU3(2) as a factor", True, bool(recs) and all(big))
    a6 = from_generators(6, ["(1,2,3)", "(2,3,4,5,6)"])
    a5 = from_generators(6, ["(1,2,3)", "(1,2,3,4,5)"])
    a5t = from_generators(6, ["(1,2,3,4,5)", "(1,6)(2,5)"])
    rec = verify_factorization(a6, a5, a5t)
    c.check("A6 = A5 . A5, intersection order", 10, getattr(rec, "intersection_order", None))
    c.check("A6 = A5 . A5 is homogeneous", True, getattr(rec, "homogeneous", None))
    m11 = load_group("m11.json")
    frob = normalizer(m11, from_generators(11, ["(1,2,3,4,5,6,7,8,9,10,11)"]))
    m92 = set_stabilizer(m11, [0, 1])
    rec = verify_factorization(m11, frob, m92)
    c.check("M11 factor orders", (55, 144), (frob.order(), m92.order()))
    c.check("M11 = (11:5) . (M9.2), intersection order", 1, getattr(rec, "intersection_order", None))


def c8_number_theory(c: Criterion):
    exceptions = set()
    bad = []
    for q in range(2, 65):
        for n in range(2, 13):
            res = ppd(q, n)
            if not res.primes:
                exceptions.add((q, n))
            for r in res.primes:
                if r % n != 1 or multiplicative_order(q, r) != n:
                    bad.append((q, n, r))
    want = {(2, 6)} | {(q, 2) for q in range(2, 65) if (q + 1) & q == 0}
    c.check("ppd exceptions", sorted(want), sorted(exceptions))
    c.check("ppd primes: r = 1 mod n and ord_r(q) = n", [], bad)
    primes = [2, 3, 5, 7, 11, 13]
    c.check("p^f >= (f_p)^p", [], [(p, f) for p in primes for f in range(1, 65) if not check_pf_bound(p, f)])


def c9_digraphs(c: Criterion):
    from . import cosetgraph as cg

    for p in (3, 5, 7, 11, 13):
        cyc = from_generators(p, ["(" + ",".join(str(i) for i in range(1, p + 1)) + ")"])
        g = cg.build(cyc, from_generators(p, []), cyc.gens[0])
        c.check(f"directed {p}-cycle s-arc-transitive for s <= 10", True, all(cg.s_arc_transitive(g, s).transitive for s in range(1, 11)))
    frob = cg.affine_group(7, 3)
    g = cg.build(frob, frob.subgroup([frob.gens[1]]), frob.gens[0])
    c.check("Paley tournament: valency", 3, cg.valency(g))
    c.check("Paley tournament: arc-transitive", True, cg.s_arc_transitive(g, 1).transitive)
    c.check("Paley tournament: not 2-arc-transitive", False, cg.s_arc_transitive(g, 2).transitive)
    corpus = cg.digraph_corpus()
    c.check("corpus size >= 20", True, len(corpus), len(corpus) >= 20)
    disagree, div, probe, mono = [], [], [], []
    for name, g in corpus:
        prev = True
        for s in range(1, 5):
            try:
                rep = cg.s_arc_transitive(g, s)
            except RuntimeError:
                disagree.append((name, s))
                break
            if rep.transitive and not prev:
                mono.append((name, s))
            prev = rep.transitive
            if rep.transitive:
                audit = cg.divisibility_audit(g, s)
                if not (audit.holds and audit.valency_power_divides):
                    div.append((name, s))
        if g.connected and cg.normalized_subgroup_probe(g):
            probe.append(name)
    c.check("factorization criterion agrees with orbit counting", [], disagree)
    c.check("(s+1)-arc-transitive implies s-arc-transitive", [], mono)
    c.check("|Hv|^(s-1) divides |Huv|^s when s-arc-transitive", [], div)
    c.check("no normal subgroup of Hv normalized by h (connected)", [], probe)


def c10_m12(c: Criterion):
    data = load_json("m12.json")
    m12 = from_generators(12, data["generators"])
    factors = chop_permutation_module(m12, 5)
    dims = sorted(f.dimension for f in factors)
    c.check("composition factor dimensions over F5", [1, 11], dims)
    eleven = next((f for f in factors if f.dimension == 11), None)
    if eleven is None:
        return
    subs = data["subgroups"]
    point = restriction(eleven, subs["M11_point_stabilizer"]["words"])
    trans = restriction(eleven, subs["M11_transitive"]["words"])
    c.check("point-stabilizer M11 fixes a nonzero vector", True, len(fixed_vectors(point)) > 0)
    c.check("transitive M11 acts irreducibly", True, is_irreducible(trans)[0])


CRITERIA = [
    (1, "root and Weyl group basics", 5, c1_basics),
    (2, "relative Weyl groups of subsystems", 30, c2_relative_weyl),
    (3, "parabolic suborbits of F4, J = {1,2,4}", 60, c3_parabolic),
    (4, "torus orders and C_W(w)", 60, c4_torus_orders),
    (5, "torus structures via Smith form", 5, c5_torus_structures),
    (6, "irreducibility of factor restrictions", 600, c6_irreducibility),
    (7, "factorization engine", 300, c7_factorizations),
    (8, "primitive prime divisors and p^f >= (f_p)^p", 5, c8_number_theory),
    (9, "coset digraph suite", 600, c9_digraphs),
    (10, "M12 modules over F5", 120, c10_m12),
]


def run_criterion(number: int) -> Criterion:
    for num, title, budget, body in CRITERIA:
        if num == number:
            crit = Criterion(num, title, budget)
            start = time.perf_counter()
            try:
                body(crit)
            except Exception as exc:  # reported, never swallowed silently
                crit.error = f"{type(exc).__name__}: {exc}"
            crit.elapsed = time.perf_counter() - start
            return crit
    raise ValueError(f"no criterion {number}")


def run_all(numbers=None) -> list:
    nums = numbers or [n for n, *_ in CRITERIA]
    return [run_criterion(n) for n in nums]
