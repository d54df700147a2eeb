"""Coset digraphs and s-arc-transitivity.

Given H, a core-free subgroup Hv and an element h with h^-1 not in Hv h Hv,
the vertices are the right cosets Hv x and Hv x -> Hv y exactly when
y x^-1 lies in Hv h Hv. H acts arc-transitively by right multiplication.
The canonical s-arc is v0 -> v1 -> ... with v_i = Hv h^i.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .permgrp.group import PermGroup
from .permgrp.table import GroupTable

INDEX_CAP = 100_000
BRUTE_CAP = 1_000_000


@dataclass
class CosetDigraph:
    H: PermGroup
    Hv: PermGroup
    h: tuple
    table: GroupTable = field(repr=False)
    coset_of: np.ndarray = field(repr=False)  # element index -> vertex
    reps: np.ndarray = field(repr=False)  # vertex -> smallest element index
    action: PermGroup = field(repr=False)  # H on the vertices
    out_offsets: np.ndarray = field(repr=False)  # double coset, right Hv-coset reps
    connected: bool = False

    @property
    def vertex_count(self) -> int:
        return int(self.reps.size)

    def out_neighbours(self, v: int) -> list:
        t = self.table
        x = int(self.reps[v])
        return sorted({int(self.coset_of[t.mult[d, x]]) for d in self.out_offsets})

    def in_neighbours(self, v: int) -> list:
        return [u for u in range(self.vertex_count) if v in self.out_neighbours(u)]

    def path(self, s: int) -> list:
        """The canonical s-arc v0, v1, ..., vs."""
        t = self.table
        x = t.identity
        hi = t.index_of(self.h)
        out = []
        for _ in range(s + 1):
            out.append(int(self.coset_of[x]))
            x = int(t.mult[x, hi])
        return out


def build(H: PermGroup, Hv: PermGroup, h, check_core: bool = True, table: GroupTable | None = None) -> CosetDigraph:
    if not Hv.is_subgroup_of(H):
        raise ValueError("Hv is not a subgroup of H")
    h = tuple(h)
    if not H.contains(h):
        raise ValueError("h is not in H")
    index = H.order() // Hv.order()
    if index > INDEX_CAP:
        raise ValueError(f"index {index} exceeds the cap {INDEX_CAP}")
    t = table if table is not None else GroupTable(H)
    hv = t.subgroup_indices(Hv)
    hi = t.index_of(h)
    in_hv = np.zeros(t.n, dtype=bool)
    in_hv[hv] = True
    if in_hv[hi]:
        raise ValueError("h lies in Hv, so the relation is reflexive")
    double = np.unique(t.mult[t.mult[hv, hi]][:, hv])
    if np.isin(t.inv[hi], double):
        raise ValueError("h^-1 lies in Hv h Hv: the relation is symmetric, not a digraph")
    coset_of = -np.ones(t.n, dtype=np.int64)
    reps = []
    for x in range(t.n):
        if coset_of[x] < 0:
            coset_of[t.mult[hv, x]] = len(reps)
            reps.append(x)
    reps = np.array(reps, dtype=np.int64)
    gens = []
    for g in H.gens:
        gi = t.index_of(g)
        gens.append(tuple(int(c) for c in coset_of[t.mult[reps, gi]]))
    action = PermGroup(len(reps), gens, "vertex action")
    if check_core and action.order() != H.order():
        raise ValueError("Hv is not core-free in H")
    # right Hv-coset representatives inside Hv h Hv
    seen = set()
    offsets = []
    for d in double:
        c = int(coset_of[d])
        if c not in seen:
            seen.add(c)
            offsets.append(int(d))
    connected = t.closure(list(hv) + [hi]).size == t.n
    return CosetDigraph(H, Hv, h, t, coset_of, reps, action, np.array(offsets), connected)


def _stabilizer_order(g: CosetDigraph, points) -> int:
    pts = list(dict.fromkeys(points))
    chain = g.action.chain_with_base(pts)
    out = g.action.order()
    for lv in chain.levels[: len(pts)]:
        out //= len(lv.transversal)
    return out


def is_primitive(g: CosetDigraph) -> bool:
    """Block test: the finest block containing v0 and v, for every v."""
    n = g.vertex_count
    if n <= 2:
        return True
    gens = [np.array(p) for p in g.action.gens]
    for v in range(1, n):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parent[find(v)] = find(0)
        queue = [(0, v)]
        while queue:
            a, b = queue.pop()
            for p in gens:
                ra, rb = find(int(p[a])), find(int(p[b]))
                if ra != rb:
                    parent[rb] = ra
                    queue.append((int(p[a]), int(p[b])))
        if len({find(x) for x in range(n)}) > 1:
            return False
    return True


def valency(g: CosetDigraph) -> int:
    """[Hv : Hv cap Hv^h]. For a vertex-primitive digraph this must be at
    least 3 unless the digraph is a directed cycle of prime length."""
    k = len(g.out_offsets)
    if k < 3 and is_primitive(g):
        n = g.vertex_count
        prime = n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))
        if not (k == 1 and prime):
            raise RuntimeError(f"vertex-primitive digraph with valency {k} on {n} vertices")
    return k


@dataclass
class SArcReport:
    s: int
    arc_count: int
    orbit_count: int | None
    transitive: bool
    chain_orders: list


def s_arc_transitive(g: CosetDigraph, s: int, brute_cap: int = BRUTE_CAP) -> SArcReport:
    """Chained factorization test along the canonical s-arc: for
    1 <= i < s, H_{v1..vi} = H_{v0..vi} H_{v1..v(i+1)}.

    When the number of s-arcs is at most ``brute_cap`` the orbits of H on
    s-arcs are also counted directly and must agree.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    path = g.path(s)
    chain_orders = [_stabilizer_order(g, path[: i + 1]) for i in range(s + 1)]
    ok = True
    for i in range(1, s):
        a = chain_orders[i]  # H_{v0..vi}
        b = _stabilizer_order(g, path[1 : i + 2])  # H_{v1..v(i+1)}
        c = _stabilizer_order(g, path[1 : i + 1])  # H_{v1..vi}
        meet = chain_orders[i + 1]  # H_{v0..v(i+1)}
        if a * b != c * meet:
            ok = False
            break
    k = len(g.out_offsets)
    arc_count = g.vertex_count * k**s
    orbits = None
    if arc_count <= brute_cap:
        orbits = count_arc_orbits(g, s)
        if (orbits == 1) != ok:
            raise RuntimeError(f"factorization test and orbit count disagree at s={s}")
    return SArcReport(s, arc_count, orbits, ok, chain_orders)


def enumerate_s_arcs(g: CosetDigraph, s: int) -> np.ndarray:
    n = g.vertex_count
    out_nb = np.array([g.out_neighbours(v) for v in range(n)], dtype=np.int64)
    arcs = np.arange(n, dtype=np.int64)[:, None]
    for _ in range(s):
        last = arcs[:, -1]
        nxt = out_nb[last]  # (N, k)
        k = nxt.shape[1]
        arcs = np.concatenate([np.repeat(arcs, k, axis=0), nxt.reshape(-1, 1)], axis=1)
    return arcs


def count_arc_orbits(g: CosetDigraph, s: int) -> int:
    """Number of H-orbits on s-arcs, by explicit enumeration."""
    arcs = enumerate_s_arcs(g, s)
    n = g.vertex_count
    weights = n ** np.arange(s + 1, dtype=np.int64)
    keys = arcs @ weights
    order = np.argsort(keys)
    sorted_keys = keys[order]
    images = []
    for p in g.action.gens:
        img = np.array(p, dtype=np.int64)[arcs] @ weights
        images.append(order[np.searchsorted(sorted_keys, img)])
    label = np.arange(len(arcs))
    while True:
        new = label.copy()
        for img in images:
            np.minimum.at(new, img, new)
            new = np.minimum(new, new[img])
        if np.array_equal(new, label):
            break
        label = new
    return int(np.unique(label).size)


@dataclass
class DivisibilityAudit:
    holds: bool
    hv_power: int  # |Hv|^(s-1)
    huv_power: int  # |Hv cap Hv^h|^s
    valency_power_divides: bool  # valency^s divides |Hv|


def divisibility_audit(g: CosetDigraph, s: int) -> DivisibilityAudit:
    rep = s_arc_transitive(g, s)
    if not rep.transitive:
        raise ValueError(f"digraph is not {s}-arc-transitive")
    hv, huv = rep.chain_orders[0], rep.chain_orders[1]
    lhs, rhs = hv ** (s - 1), huv**s
    k = hv // huv
    return DivisibilityAudit(rhs % lhs == 0, lhs, rhs, hv % k**s == 0)


def normalized_subgroup_probe(g: CosetDigraph) -> list:
    """Nontrivial normal subgroups of Hv normalized by h.

    Every minimal normal subgroup is the normal closure of any of its
    nontrivial elements, so the normal closures of single elements are
    checked; the list is empty whenever the digraph is connected.
    """
    t = g.table
    hv = t.subgroup_indices(g.Hv)
    hi = t.index_of(g.h)
    found = {}
    for x in hv:
        if x == t.identity:
            continue
        klass = np.unique(t.conj[hv, x])
        n = t.closure(klass)
        found.setdefault(t.key(n), n)
    out = []
    for n in found.values():
        inside = np.zeros(t.n, dtype=bool)
        inside[n] = True
        if inside[t.conj[hi, n]].all():
            out.append(t.perm_group(n))
    return out


@dataclass(frozen=True)
class Elimination:
    primes: tuple
    bound: int | None  # s is at most this when primes is nonempty


def eliminate(m: int, o_order: int, hl_order: int, rank: int = 2) -> Elimination:
    """Primes r | m with |O|_r = 1 and |H/L|_r < m_r, for a vertex
    stabilizer C_m^rank.O with rank 1 or 2. Any such prime bounds s by rank."""
    from .facto import largest_ppart
    from sympy import primefactors

    if rank not in (1, 2):
        raise ValueError("rank must be 1 or 2")
    rs = tuple(
        r
        for r in primefactors(m)
        if largest_ppart(o_order, r) == 1 and largest_ppart(hl_order, r) < largest_ppart(m, r)
    )
    return Elimination(rs, rank if rs else None)


# --- a corpus of small examples -------------------------------------------


def affine_group(p: int, k: int) -> PermGroup:
    """The Frobenius group p:k of maps x -> a x + b on Z/p, a of order k."""
    a = next(x for x in range(2, p) if pow(x, k, p) == 1 and all(pow(x, j, p) != 1 for j in range(1, k)))
    shift = tuple((x + 1) % p for x in range(p))
    scale = tuple(a * x % p for x in range(p))
    return PermGroup(p, [shift, scale], f"{p}:{k}")


def _corpus_groups():
    from .permgrp.group import from_generators

    yield "C5", from_generators(5, ["(1,2,3,4,5)"])
    yield "C7", from_generators(7, ["(1,2,3,4,5,6,7)"])
    for p, k in ((7, 3), (13, 3), (13, 4), (11, 5), (19, 9)):
        yield f"{p}:{k}", affine_group(p, k)
    yield "A4", from_generators(4, ["(1,2,3)", "(2,3,4)"])
    yield "S4", from_generators(4, ["(1,2)", "(1,2,3,4)"])
    yield "A5", from_generators(5, ["(1,2,3)", "(1,2,3,4,5)"])
    yield "PSL(2,7)", from_generators(7, ["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)", "(1,2)(3,6)"])
    yield "AGL(1,8)", from_generators(8, ["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)", "(2,3,5,4,7,8,6)"])


def wreath_example(m: int, n: int, k: int) -> CosetDigraph:
    """C_m wr C_n on m*n points with Hv generated by the first k block
    cycles and h the block shift; it is k- but not (k+1)-arc-transitive."""
    if not 1 <= k < n - 1:
        raise ValueError("need 1 <= k < n - 1")
    deg = m * n

    def block_cycle(i):
        img = list(range(deg))
        for j in range(m):
            img[i * m + j] = i * m + (j + 1) % m
        return tuple(img)

    shift = tuple((x + m) % deg for x in range(deg))
    H = PermGroup(deg, [block_cycle(0), shift], f"C{m} wr C{n}")
    Hv = PermGroup(deg, [block_cycle(i) for i in range(k)])
    return build(H, Hv, shift)


def digraph_corpus(max_arcs: int = 200_000, s_max: int = 3, per_group: int = 6, connected_only: bool = True) -> list:
    """Coset digraphs of the corpus groups, one per core-free subgroup class
    and double coset, with at most ``max_arcs`` s_max-arcs; at most
    ``per_group`` from each group, in a fixed order."""
    from .permgrp.subgroups import subgroup_classes

    out = []
    for name, H in _corpus_groups():
        t, classes = subgroup_classes(H)
        taken = 0
        for idx, _ in sorted(classes, key=lambda c: -c[0].size):
            if idx.size == t.n:
                continue
            Hv = t.perm_group(idx)
            index = t.n // idx.size
            in_hv = np.zeros(t.n, dtype=bool)
            in_hv[idx] = True
            done = in_hv.copy()
            for x in range(t.n):
                if done[x]:
                    continue
                double = np.unique(t.mult[t.mult[idx, x]][:, idx])
                done[double] = True
                k = double.size // idx.size
                if index * k**s_max > max_arcs:
                    continue
                if taken >= per_group:
                    break
                try:
                    g = build(H, Hv, t.elements[x], table=t)
                except ValueError:
                    continue
                if connected_only and not g.connected:
                    continue
                out.append((f"{name} |Hv|={idx.size} h={x}", g))
                taken += 1
    for m, n, k in ((2, 4, 1), (2, 4, 2), (2, 5, 3), (3, 4, 2), (2, 6, 4)):
        out.append((f"C{m} wr C{n} k={k}", wreath_example(m, n, k)))
    return out
