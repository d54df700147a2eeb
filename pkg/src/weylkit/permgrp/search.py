"""Backtrack searches for subgroups defined by a property.

The search walks the stabilizer chain of the ambient group level by level.
A partial test sees the images of the first few base points and prunes
whole cosets. Elements of the subgroup found so far are used to skip base
images already covered by its orbits.
"""
from __future__ import annotations

from .chain import StabChain
from .group import PermGroup
from .perm import conj, cycles, identity, inv, is_identity, mul


class SearchLimit(RuntimeError):
    pass


def subgroup_search(group: PermGroup, prop, partial=None, base_prefix=(), limit=None):
    """Subgroup of ``group`` of elements satisfying ``prop``.

    ``prop`` must define a subgroup. ``partial(images)`` receives the images
    of ``base[0..k]`` and returns False when no element with those images
    can satisfy ``prop``.
    """
    chain = group.chain_with_base(base_prefix) if base_prefix else group.chain
    base = chain.base
    k = len(base)
    n = group.degree
    found = []
    visited = [0]

    def k_orbit(point):
        seen = {point}
        queue = [point]
        for x in queue:
            for g in found:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def descend(level, suffix, images):
        # suffix = u_{level-1} ... u_i; images of base[:level] are fixed
        if level == k:
            visited[0] += 1
            if limit is not None and visited[0] > limit:
                raise SearchLimit("backtrack search exceeded its node limit")
            return suffix if prop(suffix) else None
        lv = chain.levels[level]
        for delta, u in lv.transversal.items():
            img = suffix[delta]
            images.append(img)
            if partial is None or partial(images):
                hit = descend(level + 1, mul(u, suffix), images)
                if hit is not None:
                    images.pop()
                    return hit
            images.pop()
        return None

    for i in reversed(range(k)):
        lv = chain.levels[i]
        covered = k_orbit(base[i])
        prefix = list(base[:i])
        if partial is not None and not partial(prefix + [base[i]]):
            continue
        for gamma, u in lv.transversal.items():
            if gamma in covered:
                continue
            images = prefix + [gamma]
            if partial is not None and not partial(images):
                continue
            hit = descend(i + 1, u, images)
            if hit is not None and not is_identity(hit):
                found.append(hit)
                covered = k_orbit(base[i])
    return PermGroup(n, found or [identity(n)])


def set_stabilizer(group: PermGroup, points) -> PermGroup:
    pts = set(points)
    prefix = sorted(pts)

    def member(i):
        return i in pts

    def partial(images):
        j = len(images) - 1
        return member(base[j]) == member(images[j])

    def prop(g):
        return all(g[p] in pts for p in pts)

    chain = group.chain_with_base(prefix)
    base = chain.base
    group_b = PermGroup(group.degree, group.gens)
    group_b._chain = chain
    return subgroup_search(group_b, prop, partial)


def centralizer(group: PermGroup, g) -> PermGroup:
    g = tuple(g)
    prefix = [p for c in cycles(g) if len(c) > 1 for p in c]
    clen = {}
    for c in cycles(g):
        for p in c:
            clen[p] = len(c)
    ginv = inv(g)

    def partial(images):
        j = len(images) - 1
        b, y = base[j], images[j]
        if clen[b] != clen[y]:
            return False
        pos = where.get(g[b])
        if pos is not None and pos < j and images[pos] != g[y]:
            return False
        pos = where.get(ginv[b])
        if pos is not None and pos < j and g[images[pos]] != y:
            return False
        return True

    def prop(x):
        return mul(g, x) == mul(x, g)

    chain = group.chain_with_base(prefix)
    base = chain.base
    where = {b: i for i, b in enumerate(base)}
    group_b = PermGroup(group.degree, group.gens)
    group_b._chain = chain
    return subgroup_search(group_b, prop, partial)


def _realizable(chain: StabChain, images):
    """Is there an element of the chain's group with these base images?"""
    t = identity(chain.degree)
    tinv = t
    for j, img in enumerate(images):
        if j >= len(chain.levels):
            return all(chain.base[i] == images[i] for i in range(j, len(images)))
        lv = chain.levels[j]
        pre = tinv[img]
        u = lv.transversal.get(pre)
        if u is None:
            return False
        t = mul(u, t)
        tinv = inv(t)
    return True


def intersection(g1: PermGroup, g2: PermGroup) -> PermGroup:
    if g1.degree != g2.degree:
        raise ValueError("degree mismatch")
    big, small = (g1, g2) if g1.order() >= g2.order() else (g2, g1)
    chain_s = small.chain
    chain_b = big.chain_with_base(chain_s.base)
    big_b = PermGroup(big.degree, big.gens)
    big_b._chain = chain_b
    base = chain_b.base
    # make the small chain share the full base
    chain_s2 = small.chain_with_base(base)

    def partial(images):
        return _realizable(chain_s2, images)

    return subgroup_search(big_b, chain_s2.contains, partial)


def normalizer(group: PermGroup, sub: PermGroup) -> PermGroup:
    def prop(x):
        return all(sub.contains(conj(s, x)) for s in sub.gens)

    return subgroup_search(group, prop)
