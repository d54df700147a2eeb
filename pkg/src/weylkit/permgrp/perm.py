"""Permutations as tuples of images.

Points are 0-based internally. Cycle strings use 1-based points, the
usual printed convention. Products act on the right: ``mul(p, q)`` first
applies ``p`` and then ``q``, so ``x^(pq) = (x^p)^q``.
"""
from __future__ import annotations

import re
from math import gcd

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple([q[i] for i in p])


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conj(p: Perm, g: Perm) -> Perm:
    """Return p^g = g^-1 p g."""
    return mul(mul(inv(g), p), g)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inv(p), -k
    out = identity(len(p))
    base = p
    while k:
        if k & 1:
            out = mul(out, base)
        base = mul(base, base)
        k >>= 1
    return out


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def cycles(p: Perm) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(cyc)
    return out


def order(p: Perm) -> int:
    n = 1
    for c in cycles(p):
        k = len(c)
        n = n * k // gcd(n, k)
    return n


def support(p: Perm) -> list[int]:
    return [i for i, j in enumerate(p) if i != j]


def to_cycle_string(p: Perm) -> str:
    parts = [c for c in cycles(p) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in parts)


_CYCLE = re.compile(r"\(([^()]*)\)")


def from_cycle_string(text: str, degree: int) -> Perm:
    """Parse ``(1,2,3)(4,5)``; points are 1-based."""
    stripped = text.replace(" ", "")
    if _CYCLE.sub("", stripped):
        raise ValueError(f"malformed cycle string {text!r}")
    img = list(range(degree))
    seen = set()
    for body in _CYCLE.findall(stripped):
        if not body:
            continue
        pts = [int(x) - 1 for x in body.split(",")]
        for x in pts:
            if not 0 <= x < degree:
                raise ValueError(f"point {x + 1} outside degree {degree}")
            if x in seen:
                raise ValueError(f"point {x + 1} repeated in {text!r}")
            seen.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def from_images(images, one_based: bool = False) -> Perm:
    p = tuple(int(i) - 1 for i in images) if one_based else tuple(int(i) for i in images)
    if sorted(p) != list(range(len(p))):
        raise ValueError("images do not form a permutation")
    return p
