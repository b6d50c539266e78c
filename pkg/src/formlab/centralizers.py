"""Centralizers of chief factors: ordinary, small, and the intersections C^S, C^p."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .structure import (
    chief_series,
    chief_types_between,
    cyclic_type,
    normal_subgroups,
)

# An intersection over no subgroups is the whole group.
EMPTY_INTERSECTION_IS_WHOLE = True


def _check_factor(G, factor):
    if factor.parent is not G:
        raise DomainError("chief factor does not belong to this group")


def centralizer_of_section_mask(G, h_mask, k_mask):
    """Kernel of the conjugation action of G on the cosets of K in H."""
    t = G.table
    k_idx = t.members(k_mask)
    label = np.full(t.n, -1, dtype=np.int64)
    nxt = 0
    for i in t.members(h_mask):
        if label[i] < 0:
            label[t.mul[i, k_idx]] = nxt
            nxt += 1
    ok = np.ones(t.n, dtype=bool)
    for h in t.generators(h_mask):
        ok &= label[t.conj(h, t.arange)] == label[h]
    return t.mask_from_bool(ok)


def chief_centralizer(G, factor):
    _check_factor(G, factor)
    return G.sub(centralizer_of_section_mask(G, factor.upper.mask, factor.lower.mask))


def small_centralizer_mask(G, factor):
    _check_factor(G, factor)
    t = G.table
    k = factor.lower.mask
    stype = factor.simple_type
    mask = 1
    for n in normal_subgroups(G).masks:
        if n == 1 or n & mask == n:
            continue
        nk = t.join(n, k)
        if all(s != stype for s, _ in chief_types_between(G, k, nk)):
            mask = t.join(mask, n)
    return mask


def small_centralizer(G, factor):
    return G.sub(small_centralizer_mask(G, factor))


def cS_mask(G, stype):
    key = ("cS", stype)
    got = G.cache.get(key)
    if got is not None:
        return got
    mask = G.whole
    for f in chief_series(G):
        if f.simple_type == stype:
            mask &= centralizer_of_section_mask(G, f.upper.mask, f.lower.mask)
    G.cache[key] = mask
    return mask


def cS(G, stype):
    return G.sub(cS_mask(G, stype))


def cp(G, p):
    return cS(G, cyclic_type(p))


def small_intersection_mask(G, contains_type):
    """Intersection of small centralizers over chief factors whose type passes the test."""
    mask = G.whole
    for f in chief_series(G):
        if contains_type(f.simple_type):
            mask &= small_centralizer_mask(G, f)
    return mask


@dataclass
class FactorCentralizers:
    factor: object
    ordinary: object
    small: object


def factor_centralizers(G):
    return [
        FactorCentralizers(f, chief_centralizer(G, f), small_centralizer(G, f))
        for f in chief_series(G)
    ]
