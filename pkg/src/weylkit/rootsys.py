"""Root systems as integer coefficient vectors over the simple roots.

The Cartan matrix uses ``cartan_matrix[i][j] = <alpha_i, alpha_j^vee>
= 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``. Simple roots follow the
Bourbaki labelling, so for F4 the roots alpha_1, alpha_2 are long and for
E6 the node alpha_2 hangs off alpha_4.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Vector = tuple


@dataclass(frozen=True)
class CartanDatum:
    type_label: str
    rank: int
    cartan_matrix: tuple


@dataclass(frozen=True)
class Root:
    coeffs: Vector
    is_positive: bool


@dataclass
class RootSystem:
    datum: CartanDatum
    roots: list
    positive_count: int
    simple_indices: list
    gram: tuple = field(repr=False)

    @cached_property
    def index(self) -> dict:
        return {r.coeffs: i for i, r in enumerate(self.roots)}

    @property
    def rank(self) -> int:
        return self.datum.rank

    def coeffs(self, i: int) -> Vector:
        return self.roots[i].coeffs

    def neg(self, i: int) -> int:
        return self.index[tuple(-c for c in self.roots[i].coeffs)]

    def form(self, a: Vector, b: Vector) -> int:
        g = self.gram
        n = len(a)
        return sum(a[i] * g[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])

    def simple(self, k: int) -> Vector:
        """Simple root alpha_k (1-based label)."""
        return self.roots[self.simple_indices[k - 1]].coeffs

    def highest_root(self) -> Vector:
        return highest_root(self)


def _parse_type(label: str):
    label = label.strip().upper()
    if len(label) < 2 or not label[1:].isdigit():
        raise ValueError(f"bad Cartan type {label!r}")
    return label[0], int(label[1:])


def _gram(kind: str, n: int):
    """Symmetric form on simple roots, scaled to integer entries."""
    g = [[0] * n for _ in range(n)]
    if kind == "A" and n >= 1:
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 1):
            g[i][i + 1] = g[i + 1][i] = -1
    elif kind == "B" and n >= 2:
        for i in range(n - 1):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(n - 1):
            g[i][i + 1] = g[i + 1][i] = -2
    elif kind == "C" and n >= 2:
        for i in range(n - 1):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = -1
        g[n - 2][n - 1] = g[n - 1][n - 2] = -2
    elif kind == "D" and n >= 4:
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = -1
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    elif kind == "E" and n in (6, 7, 8):
        for i in range(n):
            g[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for a, b in edges:
            g[a][b] = g[b][a] = -1
    elif kind == "F" and n == 4:
        g = [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    elif kind == "G" and n == 2:
        g = [[2, -3], [-3, 6]]
    else:
        raise ValueError(f"unsupported Cartan type {kind}{n}")
    return g


def cartan_from_gram(g) -> tuple:
    n = len(g)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            num = 2 * g[i][j]
            if num % g[j][j]:
                raise ValueError("form is not crystallographic")
            row.append(num // g[j][j])
        rows.append(tuple(row))
    return tuple(rows)


def cartan_datum(type_label: str) -> CartanDatum:
    kind, n = _parse_type(type_label)
    return CartanDatum(f"{kind}{n}", n, cartan_from_gram(_gram(kind, n)))


def _reflect_vec(gram, a, b):
    n = len(a)
    ab = sum(a[i] * gram[i][j] * b[j] for i in range(n) for j in range(n))
    aa = sum(a[i] * gram[i][j] * a[j] for i in range(n) for j in range(n))
    c = Fraction(2 * ab, aa)
    if c.denominator != 1:
        raise ValueError("non-integral reflection")
    c = int(c)
    return tuple(bi - c * ai for ai, bi in zip(a, b))


_ORDERS = {
    "lex": lambda v: (sum(v), v),
    # height, then reverse lexicographic; matches the numbering printed
    # by Magma for F4
    "revlex": lambda v: (sum(v), tuple(-c for c in v)),
}


def build_root_system(type_label: str, ordering: str = "lex") -> RootSystem:
    """All roots, closed under the simple reflections.

    Positive roots are ordered by height, then lexicographically (or
    reverse lexicographically with ``ordering="revlex"``); negative roots
    follow in matching order, so root ``i + N`` is the negative of root ``i``.
    """
    if ordering not in _ORDERS:
        raise ValueError(f"unknown ordering {ordering!r}")
    datum = cartan_datum(type_label)
    kind, n = _parse_type(type_label)
    gram = tuple(tuple(r) for r in _gram(kind, n))
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simples)
    queue = list(simples)
    while queue:
        v = queue.pop()
        for s in simples:
            w = _reflect_vec(gram, s, v)
            if w not in found:
                found.add(w)
                queue.append(w)
    pos = sorted((v for v in found if sum(v) > 0), key=_ORDERS[ordering])
    for v in found:
        if not (all(c >= 0 for c in v) or all(c <= 0 for c in v)):
            raise RuntimeError("root with mixed signs")
    roots = [Root(v, True) for v in pos] + [Root(tuple(-c for c in v), False) for v in pos]
    where = {r.coeffs: i for i, r in enumerate(roots)}
    return RootSystem(datum, roots, len(pos), [where[v] for v in simples], gram)


def reflect(system: RootSystem, a: Vector, b: Vector) -> Vector:
    """s_a(b) = b - <b, a^vee> a."""
    out = _reflect_vec(system.gram, tuple(a), tuple(b))
    if out not in system.index:
        raise ValueError("result is not a root")
    return out


def _components(cartan):
    n = len(cartan)
    seen, comps = set(), []
    for i in range(n):
        if i in seen:
            continue
        comp, stack = [], [i]
        seen.add(i)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in range(n):
                if y not in seen and cartan[x][y] != 0:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def highest_root(system: RootSystem) -> Vector:
    if len(_components(system.datum.cartan_matrix)) != 1:
        raise ValueError("highest root requires an irreducible system")
    top = system.roots[system.positive_count - 1].coeffs
    for r in system.roots[: system.positive_count]:
        if any(x > y for x, y in zip(r.coeffs, top)):
            raise RuntimeError("no unique highest root")
    return top


@dataclass
class Subsystem:
    parent: RootSystem
    member_roots: list
    simple_roots: list
    component_types: list
    frame: list = field(default_factory=list, repr=False)

    @property
    def positive_roots(self):
        return [r for r in self.member_roots if _positive_under(self.frame, r)]


def _solve_rational(rows, target):
    """Coordinates of target in the span of rows, or None."""
    n = len(rows)
    m = len(target)
    # columns are the row vectors; solve A x = target with A m x n
    a = [[Fraction(rows[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(m)]
    piv_cols, r = [], 0
    for c in range(n):
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv_p = 1 / a[r][c]
        a[r] = [x * inv_p for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = a[i][n]
    return x


def _positive_under(frame, r):
    """Sign of r in the linear order given by a basis ``frame``.

    A root is positive when the sum of its frame coordinates is positive,
    ties broken by the first nonzero coordinate. When the frame is a base
    of the subsystem, the frame roots are exactly its simple roots.
    """
    x = _solve_rational(frame, r)
    if x is None:
        raise ValueError("root outside the span of the frame")
    total = sum(x)
    if total != 0:
        return total > 0
    for c in x:
        if c != 0:
            return c > 0
    return False


def _independent(vectors):
    if not vectors:
        return True
    return all(
        _solve_rational(vectors[:k], vectors[k]) is None for k in range(1, len(vectors))
    ) and any(vectors[0])


def closed_subsystem(system: RootSystem, seeds) -> Subsystem:
    """Smallest subset of roots containing the seeds that is closed under
    reflections in its members and under negation."""
    seeds = [tuple(s) for s in seeds]
    for s in seeds:
        if s not in system.index:
            raise ValueError(f"{s} is not a root")
    members = set(seeds) | {tuple(-c for c in s) for s in seeds}
    queue = list(members)
    while queue:
        v = queue.pop()
        for a in list(members):
            for w in (_reflect_vec(system.gram, a, v), _reflect_vec(system.gram, v, a)):
                if w not in members:
                    members.add(w)
                    queue.append(w)
    # basis of the span, preferring the seeds
    basis = []
    for v in seeds + sorted(members, key=lambda v: system.index[v]):
        if not basis or _solve_rational(basis, v) is None:
            basis.append(v)
    if _independent(seeds) and len(seeds) == len(basis):
        frame = seeds
    else:
        frame = basis
    ordered = sorted(members, key=lambda v: system.index[v])
    positive = [v for v in ordered if _positive_under(frame, v)]
    pos_set = set(positive)
    simple = []
    for v in positive:
        decomposable = any(
            tuple(x - y for x, y in zip(v, a)) in pos_set for a in positive if a != v
        )
        if not decomposable:
            simple.append(v)
    if frame is seeds and set(simple) == set(seeds):
        simple = list(seeds)
    types = identify_components(system, simple)
    return Subsystem(system, ordered, simple, types, list(frame))


def subsystem_cartan(system: RootSystem, simple) -> tuple:
    g = [[system.form(a, b) for b in simple] for a in simple]
    return cartan_from_gram(g)


def _match(a, b):
    """Is there a permutation p with a[p[i]][p[j]] == b[i][j]?"""
    n = len(a)
    if n != len(b):
        return False

    def extend(assign, used):
        k = len(assign)
        if k == n:
            return True
        for c in range(n):
            if c in used:
                continue
            if a[c][c] != b[k][k]:
                continue
            if all(a[c][assign[t]] == b[k][t] and a[assign[t]][c] == b[t][k] for t in range(k)):
                if extend(assign + [c], used | {c}):
                    return True
        return False

    return extend([], frozenset())


def _candidates(rank):
    out = [f"A{rank}"]
    if rank >= 2:
        out += [f"C{rank}", f"B{rank}"]
    if rank >= 4:
        out.append(f"D{rank}")
    if rank in (6, 7, 8):
        out.append(f"E{rank}")
    if rank == 4:
        out.append("F4")
    if rank == 2:
        out.append("G2")
    return out


def identify_type(cartan) -> str:
    """Name of an irreducible Cartan matrix, up to relabelling.

    B2 and C2 coincide; the rank two doubly laced case is reported as C2.
    """
    for label in _candidates(len(cartan)):
        if _match(cartan, cartan_datum(label).cartan_matrix):
            return label
    raise ValueError("unrecognised Cartan matrix")


def identify_components(system: RootSystem, simple) -> list:
    cartan = subsystem_cartan(system, simple)
    out = []
    for comp in _components(cartan):
        sub = tuple(tuple(cartan[i][j] for j in comp) for i in comp)
        out.append(identify_type(sub))
    return sorted(out, key=lambda t: (t[0], int(t[1:])))


def format_components(types) -> str:
    counts = {}
    for t in types:
        counts[t] = counts.get(t, 0) + 1
    return "".join((f"{k}{t}" if k > 1 else t) for t, k in counts.items())


def root_label(system: RootSystem, v: Vector) -> str:
    """Human readable label: simple roots print as a1, -a3, others as vectors."""
    v = tuple(v)
    for k in range(1, system.rank + 1):
        if v == system.simple(k):
            return f"a{k}"
        if v == tuple(-c for c in system.simple(k)):
            return f"-a{k}"
    return "".join(str(c) for c in v) if all(c >= 0 for c in v) else "-" + "".join(str(-c) for c in v)


def to_json(system: RootSystem) -> dict:
    return {
        "type": system.datum.type_label,
        "rank": system.rank,
        "cartan_matrix": [list(r) for r in system.datum.cartan_matrix],
        "roots": [list(r.coeffs) for r in system.roots],
    }
