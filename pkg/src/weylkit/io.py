"""Group files and shipped fixtures.

A group file is JSON with ``degree`` and ``generators`` (cycle strings,
1-based), optionally ``subgroups`` mapping names to the same shape.
``WEYLKIT_FIXTURES`` overrides the directory searched for bare names.
"""
from __future__ import annotations

import json
import os

from .permgrp.group import PermGroup, from_generators

PACKAGE_FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_dir() -> str:
    return os.environ.get("WEYLKIT_FIXTURES") or PACKAGE_FIXTURES


def resolve(path_or_name: str) -> str:
    """An existing path, or a name looked up in the fixture directory."""
    if os.path.isfile(path_or_name):
        return path_or_name
    base = os.path.basename(path_or_name)
    for cand in (base, base + ".json"):
        full = os.path.join(fixture_dir(), cand)
        if os.path.isfile(full):
            return full
    raise FileNotFoundError(f"no group file {path_or_name!r} (fixture directory {fixture_dir()})")


def load_json(path_or_name: str) -> dict:
    with open(resolve(path_or_name)) as fh:
        return json.load(fh)


def group_from_data(data: dict, name: str = "") -> PermGroup:
    for key in ("degree", "generators"):
        if key not in data:
            raise ValueError(f"group JSON needs {key!r}")
    return from_generators(int(data["degree"]), data["generators"], name or data.get("name", ""))


def load_group(path_or_name: str) -> PermGroup:
    return group_from_data(load_json(path_or_name))


def load_subgroup(path_or_name: str, name: str) -> PermGroup:
    data = load_json(path_or_name)
    subs = data.get("subgroups", {})
    if name not in subs:
        raise KeyError(f"{path_or_name} has no subgroup {name!r}; known: {sorted(subs)}")
    return from_generators(int(data["degree"]), subs[name]["generators"], name)
