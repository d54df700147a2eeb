"""Conjugacy classes by listing elements and conjugating with generators."""
from __future__ import annotations

import numpy as np

from .group import PermGroup
from .perm import inv

CLASS_CAP = 200_000


def conjugacy_classes(group: PermGroup, cap: int = CLASS_CAP) -> list:
    """(representative, class size) pairs, the representative being the
    first class member in the stabilizer chain's element order."""
    n = group.order()
    if n > cap:
        raise ValueError(f"group of order {n} exceeds the class cap {cap}")
    chain = group.chain
    elts = np.array(list(chain.elements()), dtype=np.int64).reshape(n, group.degree)
    base = np.array(chain.base or [0], dtype=np.int64)
    weights = group.degree ** np.arange(base.size, dtype=np.int64)
    keys = elts[:, base] @ weights
    order = np.argsort(keys)
    sorted_keys = keys[order]
    images = []
    for g in group.gens:
        garr = np.array(g, dtype=np.int64)
        ginv = np.array(inv(g), dtype=np.int64)
        # g^-1 x g sends i to g[x[g^-1[i]]]
        conj = garr[elts[:, ginv]]
        images.append(order[np.searchsorted(sorted_keys, conj[:, base] @ weights)])
    label = np.arange(n)
    while True:
        new = label.copy()
        for img in images:
            np.minimum.at(new, img, new)
            new = np.minimum(new, new[img])
        if np.array_equal(new, label):
            break
        label = new
    reps, counts = np.unique(label, return_counts=True)
    return [(tuple(int(x) for x in elts[r]), int(c)) for r, c in zip(reps, counts)]
