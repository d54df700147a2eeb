"""Permutation groups given by generators."""
from __future__ import annotations

import json

from .chain import StabChain
from .perm import (
    Perm,
    conj,
    from_cycle_string,
    identity,
    inv,
    is_identity,
    mul,
    order as perm_order,
    to_cycle_string,
)


class PermGroup:
    """A permutation group on ``range(degree)``.

    The stabilizer chain is built on first use. ``chain_with_base`` gives a
    chain whose base starts with a prescribed prefix, as needed by the
    backtrack searches.
    """

    def __init__(self, degree: int, gens, name: str = ""):
        self.degree = degree
        self.gens = [tuple(g) for g in gens]
        for g in self.gens:
            if len(g) != degree:
                raise ValueError("generator of wrong degree")
        self.name = name
        self._chain = None

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<PermGroup{label} degree={self.degree} gens={len(self.gens)}>"

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = StabChain(self.degree, self.gens)
        return self._chain

    def chain_with_base(self, prefix) -> StabChain:
        return StabChain(self.degree, self.gens, base_prefix=list(prefix))

    def order(self) -> int:
        return self.chain.order()

    def contains(self, g: Perm) -> bool:
        return self.chain.contains(tuple(g))

    __contains__ = contains

    def elements(self):
        return self.chain.elements()

    def identity(self) -> Perm:
        return identity(self.degree)

    def random_element(self, rng) -> Perm:
        return self.chain.random_element(rng)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.gens)

    def same_group(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def orbit(self, point: int):
        seen = {point}
        queue = [point]
        for x in queue:
            for g in self.gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return queue

    def orbits(self):
        seen, out = set(), []
        for p in range(self.degree):
            if p not in seen:
                orb = self.orbit(p)
                seen.update(orb)
                out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def conjugate(self, g: Perm) -> "PermGroup":
        return PermGroup(self.degree, [conj(h, g) for h in self.gens])

    def normalizes(self, sub: "PermGroup") -> bool:
        return all(all(sub.contains(conj(s, g)) for s in sub.gens) for g in self.gens)

    def subgroup(self, gens, name: str = "") -> "PermGroup":
        return PermGroup(self.degree, gens, name)

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [to_cycle_string(g) for g in self.gens]}


def from_generators(degree: int, gens, name: str = "") -> PermGroup:
    """Build a group from permutations or 1-based cycle strings."""
    parsed = []
    for g in gens:
        if isinstance(g, str):
            parsed.append(from_cycle_string(g, degree))
        else:
            g = tuple(int(x) for x in g)
            if sorted(g) != list(range(degree)):
                raise ValueError("not a permutation of the stated degree")
            parsed.append(g)
    return PermGroup(degree, parsed, name)


def group_from_json(data) -> PermGroup:
    if isinstance(data, str):
        data = json.loads(data)
    if "degree" not in data or "generators" not in data:
        raise ValueError("group JSON needs 'degree' and 'generators'")
    return from_generators(int(data["degree"]), data["generators"], data.get("name", ""))


def element_order(g: Perm) -> int:
    return perm_order(g)


__all__ = [
    "PermGroup",
    "from_generators",
    "group_from_json",
    "element_order",
    "mul",
    "inv",
    "conj",
    "is_identity",
]
