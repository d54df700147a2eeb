"""Command line front end: ``weylkit <command> ...``.

Every command builds a report (inputs, results, checks). ``--json`` prints
it as sorted, indented JSON with no timestamps, so identical inputs give
identical bytes. Usage errors exit with 2, failed checks with 1.
"""
from __future__ import annotations

import argparse
import json
import sys

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Report:
    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.results = {}
        self.checks = []
        self.lines = []

    def check(self, name, expected, got, passed=None):
        ok = expected == got if passed is None else bool(passed)
        self.checks.append({"name": name, "expected": _plain(expected), "got": _plain(got), "pass": ok})
        return ok

    def say(self, text=""):
        self.lines.append(str(text))

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> str:
        payload = {"command": self.command, "inputs": self.inputs, "results": self.results, "checks": self.checks}
        return json.dumps(_plain(payload), indent=2, sort_keys=True)


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str, float)) or x is None:
        return x
    return str(x)


# --- helpers ---------------------------------------------------------------


def _weyl(type_label):
    from .weyl import weyl_group

    try:
        return weyl_group(type_label)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"unknown root system type {type_label!r}: {exc}")


def _element(args, w):
    chosen = [x for x in (args.word is not None, args.longest, args.identity) if x]
    if len(chosen) > 1:
        raise UsageError("give at most one of --word, --longest, --identity")
    if args.longest:
        return w.longest_element()
    if args.word is not None:
        try:
            return w.word_to_element(args.word)
        except ValueError as exc:
            raise UsageError(str(exc))
    return w.identity()


def _int_list(text, what):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"{what} must be a comma separated list of integers")


def _vectors(text):
    try:
        return [tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError:
        raise UsageError("vectors are comma separated integers, separated by ';'")


def _load_group(path):
    from .io import load_group

    try:
        return load_group(path)
    except FileNotFoundError as exc:
        raise UsageError(str(exc))


# --- commands ---------------------------------------------------------------


def cmd_rootsys(args, rep: Report):
    from .rootsys import build_root_system, highest_root, root_label, to_json

    try:
        system = build_root_system(args.type, ordering=args.ordering)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc))
    data = to_json(system)
    rep.results.update(data)
    rep.results["positive_roots"] = system.positive_count
    try:
        rep.results["highest_root"] = list(highest_root(system))
    except ValueError:
        rep.results["highest_root"] = None
    rep.say(f"type {data['type']}, rank {data['rank']}, {len(system.roots)} roots ({system.positive_count} positive)")
    rep.say("Cartan matrix:")
    for row in data["cartan_matrix"]:
        rep.say("  " + " ".join(f"{x:2d}" for x in row))
    if rep.results["highest_root"] is not None:
        rep.say(f"highest root {root_label(system, rep.results['highest_root'])}")
    if args.roots:
        for i, r in enumerate(system.roots, 1):
            rep.say(f"{i:4d}  {list(r.coeffs)}")
    rep.check("root count is even", 0, len(system.roots) % 2)


def cmd_weyl(args, rep: Report):
    from .permgrp.perm import order as perm_order
    from .permgrp.search import centralizer
    from .rootsys import format_components, identify_components, root_label
    from .weyl import relative_weyl_group

    w = _weyl(args.type)
    shows = [s for s in args.show.split(",") if s]
    for s in shows:
        if s not in ("order", "matrix", "action", "centralizer"):
            raise UsageError(f"unknown --show item {s!r}")
    rep.results["group_order"] = w.order()
    rep.say(f"|W({w.type_label})| = {w.order()}")
    g = _element(args, w)
    word = w.element_to_word(g)
    rep.results["reduced_word"] = "".join(str(k) for k in word)
    rep.results["length"] = w.length(g)
    rep.say(f"reduced word {rep.results['reduced_word'] or 'e'} (length {w.length(g)})")
    rep.check("reduced word length equals inversion count", w.length(g), len(word))
    if "order" in shows:
        rep.results["element_order"] = perm_order(g)
        rep.say(f"element order {perm_order(g)}")
    if "matrix" in shows:
        rm, cm = w.root_matrix(g), w.coroot_matrix(g)
        rep.results["root_matrix"] = [list(r) for r in rm]
        rep.results["coroot_matrix"] = [list(r) for r in cm]
        rep.say("root lattice matrix (row j = image of a_j):")
        for row in rm:
            rep.say("  " + " ".join(f"{x:3d}" for x in row))
        rep.say("coroot lattice matrix:")
        for row in cm:
            rep.say("  " + " ".join(f"{x:3d}" for x in row))
        rep.check("element recovered from its root matrix", True, w.element_from_root_matrix(rm) == tuple(g))
    if "action" in shows:
        act = {f"a{k}": root_label(w.system, w.image(g, w.system.simple(k))) for k in range(1, w.rank + 1)}
        rep.results["simple_root_images"] = act
        rep.say("images of simple roots: " + ", ".join(f"{k} -> {v}" for k, v in act.items()))
    if "centralizer" in shows:
        c = centralizer(w.group, g)
        rep.results["centralizer_order"] = c.order()
        rep.say(f"|C_W(w)| = {c.order()}")
    if args.subsystem:
        simple = _vectors(args.subsystem)
        for v in simple:
            if v not in w.system.index:
                raise UsageError(f"{list(v)} is not a root of {w.type_label}")
        comps = identify_components(w.system, simple)
        rel = relative_weyl_group(w, simple)
        labels = [root_label(w.system, v) for v in simple]
        perms = sorted(rel.induced_group())
        rep.results["subsystem"] = {
            "simple_roots": labels,
            "components": comps,
            "relative_weyl_order": rel.order(),
            "induced_permutations": [[labels[i] for i in p] for p in perms],
        }
        rep.say(f"subsystem {format_components(comps)} on {', '.join(labels)}: |W_Delta| = {rel.order()}")
        rep.results["subsystem"]["induced_group_order"] = len(perms)
        rep.say(f"  {len(perms)} induced permutations of the simple roots")
        for p in perms:
            moved = ", ".join(f"{labels[i]} -> {labels[p[i]]}" for i in range(len(p)) if p[i] != i)
            rep.say("  " + (moved or "identity"))
        rep.check("induced permutations divide the stabilizer order", 0, rel.order() % len(perms))


def cmd_parabolic(args, rep: Report):
    from .parabolic import double_cosets, to_csv

    w = _weyl(args.type)
    J = _int_list(args.J, "--J")
    try:
        reports = double_cosets(w, J)
    except ValueError as exc:
        raise UsageError(str(exc))
    rows = []
    for r in reports:
        rows.append({
            "word": "".join(str(k) for k in r.min_rep_word) or "e",
            "self_paired": r.self_paired,
            "length_poly": str(r.length_poly),
            "m": r.triple_count,
        })
    rep.results["classes"] = rows
    rep.results["non_self_paired"] = sum(1 for r in reports if not r.self_paired)
    total = sum(r.size for r in reports)
    rep.check("double cosets partition W", w.order(), total)
    if args.csv:
        rep.lines.append(to_csv(reports, J).rstrip("\n"))
        return
    rep.say(f"{len(reports)} double cosets of W_J, J = {{{','.join(map(str, sorted(J)))}}}; {rep.results['non_self_paired']} not self-paired")
    for row in rows:
        mark = "self-paired" if row["self_paired"] else "NOT self-paired"
        rep.say(f"  {row['word']:<24} {mark:<16} {row['length_poly']:<28} m={row['m']}")


def cmd_torus(args, rep: Report):
    from .torus import torus_order_poly, torus_structure

    w = _weyl(args.type)
    g = _element(args, w)
    poly = torus_order_poly(w, g, twisted=args.twisted)
    rep.results["order_poly"] = str(poly)
    rep.say(str(poly))
    if args.q is not None:
        if args.q < 2:
            raise UsageError("--q must be at least 2")
        st = torus_structure(w, g, args.q, twisted=args.twisted, lattice=args.lattice)
        rep.results["q"] = args.q
        rep.results["invariant_factors"] = list(st.invariant_factors)
        rep.say(f"q = {args.q}: invariant factors {list(st.invariant_factors)}, order {st.order}")
        rep.check("order polynomial at q equals the Smith form product", poly(args.q), st.order)


def cmd_module(args, rep: Report):
    from .io import load_json
    from .modrep import MatModule, chop_permutation_module, fixed_vectors, is_irreducible, module_from_json, permutation_module, restriction

    sources = [x for x in (args.module, args.group, args.type) if x]
    if len(sources) != 1:
        raise UsageError("give exactly one of --module, --group, --type")
    if args.module:
        with open(args.module) as fh:
            mod = module_from_json(json.load(fh))
        words_source = None
    elif args.group:
        if args.p is None or args.p < 2:
            raise UsageError("--group needs a prime --p")
        g = _load_group(args.group)
        mod = permutation_module(g, args.p)
        words_source = load_json(args.group).get("subgroups", {})
    else:
        w = _weyl(args.type)
        p = 0 if args.p is None else args.p
        mod = MatModule(p, w.rank, [w.coroot_matrix(s) for s in w.simple_reflections])
        words_source = None
    mods = [("module", mod)]
    if args.chop:
        factors = chop_permutation_module(mod.source_group, mod.field) if args.group else None
        if factors is None:
            raise UsageError("--chop needs --group")
        rep.results["factor_dimensions"] = sorted(f.dimension for f in factors)
        rep.say(f"composition factors: dimensions {rep.results['factor_dimensions']}")
        rep.check("factor dimensions sum to the degree", mod.dimension, sum(f.dimension for f in factors))
        mods = [(f"factor{i + 1}(dim {f.dimension})", f) for i, f in enumerate(factors) if f.dimension > 1]
    if args.restrict:
        if not words_source or args.restrict not in words_source:
            raise UsageError(f"no subgroup {args.restrict!r} with words in the group file")
        words = words_source[args.restrict]["words"]
        mods = [(f"{name}|{args.restrict}", restriction(m, words)) for name, m in mods]
    elif args.words:
        words = [[int(x) for x in part.split(",")] for part in args.words.split(";") if part.strip()]
        mods = [(f"{name}|words", restriction(m, words)) for name, m in mods]
    out = []
    for name, m in mods:
        ok, wit = is_irreducible(m, seed=args.seed)
        fixed = len(fixed_vectors(m))
        row = {"name": name, "field": m.field or "Q", "dimension": m.dimension, "irreducible": ok, "fixed_dimension": fixed}
        if wit is not None:
            row["witness"] = [[int(x) if m.field else str(x) for x in v] for v in wit.basis]
        out.append(row)
        rep.say(f"{name}: dim {m.dimension} over {'Q' if not m.field else 'F' + str(m.field)}, "
                f"{'irreducible' if ok else 'reducible (witness of dim ' + str(len(wit.basis)) + ')'}, fixed space dim {fixed}")
    rep.results["modules"] = out


def cmd_ppd(args, rep: Report):
    from .facto import multiplicative_order, ppd

    if args.q < 2 or args.n < 2:
        raise UsageError("need --q >= 2 and --n >= 2")
    res = ppd(args.q, args.n)
    rep.results["primes"] = list(res.primes)
    rep.results["exception_reason"] = res.exception_reason
    if res.primes:
        rep.say(f"ppd({args.q},{args.n}) = {{{', '.join(map(str, res.primes))}}}")
    else:
        rep.say(f"ppd({args.q},{args.n}) is empty (exception {res.exception_reason})")
    for r in res.primes:
        rep.check(f"ord_{r}({args.q}) = {args.n}", args.n, multiplicative_order(args.q, r))
        rep.check(f"{r} = 1 mod {args.n}", 1, r % args.n)


def cmd_factorize(args, rep: Report):
    from .facto import PREDICATES, search_factorizations
    from .permgrp.search import intersection

    g = _load_group(args.group)
    if args.predicate not in PREDICATES:
        raise UsageError(f"unknown predicate {args.predicate!r}; choose from {sorted(PREDICATES)}")
    pred = PREDICATES[args.predicate]
    pred = pred() if pred else None
    try:
        recs = search_factorizations(g, args.min_order, pred)
    except (NotImplementedError, ValueError) as exc:
        rep.check("subgroup enumeration within caps", True, str(exc), False)
        return
    rows = []
    for r in recs:
        rows.append({
            "orders": list(r.tags["orders"]),
            "classes": list(r.tags["classes"]),
            "intersection_order": r.intersection_order,
            "homogeneous": r.homogeneous,
            "A": r.A.to_json()["generators"],
            "B": r.B.to_json()["generators"],
        })
        meet = intersection(r.A, r.B).order()
        rep.check(f"classes {r.tags['classes']}: |A cap B| by backtrack", r.intersection_order, meet)
        if args.strict and r.tags.get("isomorphism") == "unchecked":
            rep.check(f"classes {r.tags['classes']}: isomorphism decided", True, False)
    rep.results["count"] = len(recs)
    rep.results["factorizations"] = rows
    rep.say(f"|H| = {g.order()}: {len(recs)} factorizations (orders multiple of {args.min_order}, predicate {args.predicate})")
    for row in rows:
        rep.say(f"  |K| = {row['orders'][0]:<6} |L| = {row['orders'][1]:<6} |K cap L| = {row['intersection_order']}")


def cmd_digraph(args, rep: Report):
    from . import cosetgraph as cg
    from .io import load_group
    from .permgrp.perm import from_cycle_string

    H = _load_group(args.group)
    Hv = _load_group(args.stab)
    try:
        h = from_cycle_string(args.elt, H.degree)
        g = cg.build(H, Hv, h)
    except ValueError as exc:
        raise UsageError(str(exc))
    k = cg.valency(g)
    rep.results.update({"vertices": g.vertex_count, "valency": k, "connected": g.connected})
    rep.say(f"{g.vertex_count} vertices, valency {k}, {'connected' if g.connected else 'disconnected'}")
    series = []
    prev = True
    for s in range(1, args.s + 1):
        r = cg.s_arc_transitive(g, s)
        series.append({"s": s, "arc_count": r.arc_count, "orbit_count": r.orbit_count, "transitive": r.transitive, "chain_orders": r.chain_orders})
        rep.say(f"  s={s}: {'transitive' if r.transitive else 'not transitive'} ({r.arc_count} s-arcs, orbits {r.orbit_count if r.orbit_count is not None else 'not counted'}), chain {r.chain_orders}")
        if r.transitive:
            audit = cg.divisibility_audit(g, s)
            rep.check(f"s={s}: |Hv|^(s-1) divides |Huv|^s", True, audit.holds)
        if r.transitive and not prev:
            rep.check(f"s={s}: monotone", True, False)
        prev = r.transitive
    rep.results["series"] = series
    if g.connected:
        bad = cg.normalized_subgroup_probe(g)
        rep.check("no normal subgroup of Hv normalized by h", 0, len(bad))


def cmd_eliminate(args, rep: Report):
    from .cosetgraph import eliminate

    if min(args.mr, args.o, args.hl) < 1:
        raise UsageError("--mr, --or and --hl must be positive")
    try:
        res = eliminate(args.mr, args.o, args.hl, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc))
    rep.results["primes"] = list(res.primes)
    rep.results["bound"] = res.bound
    if res.primes:
        rep.say(f"r in {list(res.primes)} works: s <= {res.bound}")
    else:
        rep.say("no prime r | m with |O|_r = 1 and |H/L|_r < m_r")


def cmd_reproduce(args, rep: Report):
    from .reproduce import CRITERIA, run_all

    nums = _int_list(args.only, "--only") if args.only else None
    known = {n for n, *_ in CRITERIA}
    if nums and not set(nums) <= known:
        raise UsageError(f"criteria are numbered {min(known)}..{max(known)}")
    results = run_all(nums)
    rep.results["criteria"] = [c.to_json(timings=args.timings) for c in results]
    for c in results:
        rep.say(c.line())
        if args.verbose:
            for ch in c.checks:
                rep.say(f"    [{'ok' if ch.passed else 'FAIL'}] {ch.name}: expected {ch.expected}, got {ch.got}")
        rep.check(f"criterion {c.number}", True, c.passed)
    passed = sum(1 for c in results if c.passed)
    rep.say(f"{passed} of {len(results)} criteria pass")


# --- parser -----------------------------------------------------------------


def _element_flags(p):
    p.add_argument("--word", help="Weyl word, e.g. 1231 or '1 2 3 1'")
    p.add_argument("--longest", action="store_true", help="longest element")
    p.add_argument("--identity", action="store_true", help="identity element (default)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weylkit", description="Exact Weyl group, torus, module and factorization computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine readable output")
        p.add_argument("--strict", action="store_true", help="treat undecided results as failures")
        p.set_defaults(func=func)
        return p

    p = add("rootsys", cmd_rootsys, "root system data")
    p.add_argument("--type", required=True)
    p.add_argument("--ordering", choices=["lex", "revlex"], default="lex")
    p.add_argument("--roots", action="store_true", help="list all roots")

    p = add("weyl", cmd_weyl, "Weyl group elements and relative Weyl groups")
    p.add_argument("--type", required=True)
    _element_flags(p)
    p.add_argument("--show", default="order", help="comma list of order,matrix,action,centralizer")
    p.add_argument("--subsystem", help="simple roots of a subsystem as 'c1,c2,..;c1,c2,..'")

    p = add("parabolic", cmd_parabolic, "double cosets of a standard parabolic subgroup")
    p.add_argument("--type", required=True)
    p.add_argument("--J", required=True, help="comma list of simple root labels")
    p.add_argument("--csv", action="store_true", help="CSV table")

    p = add("torus", cmd_torus, "maximal torus order and structure")
    p.add_argument("--type", required=True)
    _element_flags(p)
    p.add_argument("--twisted", action="store_true")
    p.add_argument("--q", type=int)
    p.add_argument("--lattice", choices=["coroot", "coweight"], default="coroot")

    p = add("module", cmd_module, "irreducibility, restriction and chopping of modules")
    p.add_argument("--module", help="module JSON file")
    p.add_argument("--group", help="group file: use its permutation module")
    p.add_argument("--type", help="root system type: use the coroot lattice module")
    p.add_argument("--p", type=int, help="prime, or 0 for the rationals")
    p.add_argument("--chop", action="store_true", help="composition factors of the permutation module")
    p.add_argument("--restrict", help="named subgroup (with words) from the group file")
    p.add_argument("--words", help="restrict to words like '1,2;2,-1'")
    p.add_argument("--seed", type=int, default=0)

    p = add("ppd", cmd_ppd, "primitive prime divisors of q^n - 1")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("factorize", cmd_factorize, "factorizations H = KL over subgroup classes")
    p.add_argument("--group", required=True)
    p.add_argument("--min-order", type=int, default=1, help="both factor orders divisible by this")
    p.add_argument("--predicate", default="none")

    p = add("digraph", cmd_digraph, "coset digraph s-arc report")
    p.add_argument("--group", required=True)
    p.add_argument("--stab", required=True, help="group file for the vertex stabilizer")
    p.add_argument("--elt", required=True, help="connecting element in cycle notation")
    p.add_argument("--s", type=int, default=2)

    p = add("eliminate", cmd_eliminate, "prime test for vertex stabilizers C_m^k.O")
    p.add_argument("--mr", type=int, required=True, help="m, the exponent of the cyclic part")
    p.add_argument("--or", dest="o", type=int, required=True, help="|O|")
    p.add_argument("--hl", type=int, required=True, help="|H/L|")
    p.add_argument("--rank", type=int, default=2, choices=[1, 2])

    p = add("reproduce", cmd_reproduce, "run the ten reproduction criteria")
    p.add_argument("--only", help="comma list of criterion numbers")
    p.add_argument("--timings", action="store_true", help="include timings in JSON")
    p.add_argument("--verbose", action="store_true", help="list every check")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "json")}
    rep = Report(args.command, inputs)
    try:
        args.func(args, rep)
    except UsageError as exc:
        print(f"weylkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(rep.to_json())
    else:
        print("\n".join(rep.lines))
        for c in rep.checks:
            if not c["pass"]:
                print(f"check failed: {c['name']}: expected {c['expected']}, got {c['got']}")
    return EXIT_OK if rep.ok else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
