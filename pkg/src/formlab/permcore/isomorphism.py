"""Isomorphism testing for small groups by generator-image backtracking."""

from __future__ import annotations

from collections import Counter

import numpy as np

from .. import config
from .ops import commutator_subgroup_mask, conjugacy_class_masks


def invariants(G):
    """(order, element-order multiset, (class size, order) multiset, |G'|)."""
    got = G.cache.get("iso_invariants")
    if got is None:
        t = G.table
        orders = t.orders
        cls = Counter()
        for m in conjugacy_class_masks(G):
            first = int(t.members(m)[0])
            cls[(m.bit_count(), int(orders[first]))] += 1
        got = (
            t.n,
            tuple(sorted(Counter(orders.tolist()).items())),
            tuple(sorted(cls.items())),
            commutator_subgroup_mask(G, G.whole, G.whole).bit_count(),
        )
        G.cache["iso_invariants"] = got
    return got


def _class_size_of(G):
    got = G.cache.get("class_size_of")
    if got is None:
        t = G.table
        got = np.zeros(t.n, dtype=np.int64)
        for m in conjugacy_class_masks(G):
            got[t.members(m)] = m.bit_count()
        G.cache["class_size_of"] = got
    return got


def _extend(ta, tb, gens, images, limit):
    """Map the subgroup of A generated by gens[:limit] following images.

    Returns the partial map (dict) or None if the assignment is not a
    well-defined injective homomorphism on that subgroup.
    """
    mapping = {0: 0}
    used = {0}
    queue = [0]
    for x in queue:
        fx = mapping[x]
        for g, h in zip(gens[:limit], images[:limit]):
            y = int(ta.mul[x, g])
            fy = int(tb.mul[fx, h])
            got = mapping.get(y)
            if got is None:
                if fy in used:
                    return None
                mapping[y] = fy
                used.add(fy)
                queue.append(y)
            elif got != fy:
                return None
    return mapping


def find_isomorphism(A, B):
    """Return a dict of table indices A -> B, or None."""
    config.check("isomorphism", A.order())
    config.check("isomorphism", B.order())
    if A.order() != B.order():
        return None
    if invariants(A) != invariants(B):
        return None
    ta, tb = A.table, B.table
    gens = list(ta.generators(A.whole))
    if not gens:
        return {0: 0}
    oa, ob = ta.orders, tb.orders
    ca, cb = _class_size_of(A), _class_size_of(B)
    candidates = []
    for g in gens:
        cand = np.flatnonzero((ob == oa[g]) & (cb == ca[g]))
        candidates.append([int(c) for c in cand])
    images = [0] * len(gens)

    def search(level):
        if level == len(gens):
            mapping = _extend(ta, tb, gens, images, level)
            return mapping if mapping is not None and len(mapping) == ta.n else None
        for c in candidates[level]:
            images[level] = c
            if _extend(ta, tb, gens, images, level + 1) is None:
                continue
            found = search(level + 1)
            if found is not None:
                return found
        return None

    return search(0)


def are_isomorphic(A, B):
    return find_isomorphism(A, B) is not None
