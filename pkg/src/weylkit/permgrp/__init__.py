"""Permutation groups: stabilizer chains, backtrack searches, subgroups."""
from .group import PermGroup, from_generators, group_from_json
from .perm import Perm
from .search import centralizer, intersection, normalizer, set_stabilizer

__all__ = [
    "Perm",
    "PermGroup",
    "from_generators",
    "group_from_json",
    "centralizer",
    "intersection",
    "normalizer",
    "set_stabilizer",
]
