"""Elementary operations on permutation groups."""

from __future__ import annotations

import numpy as np

from .. import config
from ..errors import DomainError
from .groups import PermGroup, Subgroup, prime_factors
from .perm import Permutation


def group_order(G):
    return G.order()


def contains_element(G, x):
    return x in G


def _indices(G, elems):
    idx = []
    for x in elems:
        i = G.table.index(x) if len(x) == G.degree else None
        if i is None:
            raise DomainError(f"{x} is not an element of the group")
        idx.append(i)
    return idx


def subgroup_generated(G, elems):
    return G.sub(G.table.closure(_indices(G, elems)))


def normal_closure(G, elems):
    return G.sub(G.table.normal_closure(_indices(G, elems), G.gen_indices))


def commutator_subgroup_mask(G, a_mask, b_mask):
    """Mask of [A, B] for normal subgroups A, B of G."""
    t = G.table
    ga = np.asarray(t.generators(a_mask), dtype=np.int64)
    gb = np.asarray(t.generators(b_mask), dtype=np.int64)
    if ga.size == 0 or gb.size == 0:
        return 1
    a, b = ga[:, None], gb[None, :]
    comm = t.mul[t.mul[t.inv[a], t.inv[b]], t.mul[a, b]].ravel()
    return t.normal_closure(comm, G.gen_indices)


def derived_subgroup(G):
    return G.sub(commutator_subgroup_mask(G, G.whole, G.whole))


def derived_series(G):
    series = [G.whole]
    while True:
        nxt = commutator_subgroup_mask(G, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_soluble(G):
    return derived_series(G)[-1] == 1


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_mask(G, p):
    t = G.table
    target = p_part(t.n, p)
    cur = 1
    if target == 1:
        return cur
    orders = t.orders
    candidates = [int(x) for x in np.flatnonzero(orders > 1) if p_part(int(orders[x]), p) == orders[x]]
    while cur.bit_count() < target:
        for x in candidates:
            if (cur >> x) & 1:
                continue
            bigger = t.closure([x], start=cur) if cur == 1 else t.closure(t.generators(cur) + [x])
            size = bigger.bit_count()
            if p_part(size, p) == size:
                cur = bigger
                break
        else:  # pragma: no cover - Sylow's theorem
            raise RuntimeError("Sylow search failed")
    return cur


def sylow_subgroup(G, p):
    return G.sub(sylow_mask(G, p))


def conjugacy_class_masks(G):
    cached = G.cache.get("classes")
    if cached is not None:
        return cached
    t = G.table
    config.check("order", t.n)
    # conj[g, x] = g^-1 x g
    conj = t.mul[t.mul[t.inv][:, :], t.arange[:, None]]
    seen = np.zeros(t.n, dtype=bool)
    classes = []
    for x in range(t.n):
        if seen[x]:
            continue
        members = np.unique(conj[:, x])
        seen[members] = True
        classes.append(t.mask(members))
    G.cache["classes"] = classes
    return classes


def conjugacy_classes(G):
    t = G.table
    return [[t.perm(int(i)) for i in t.members(m)] for m in conjugacy_class_masks(G)]


def centralizer_mask(G, h_mask):
    """Elements commuting with every element of the subgroup ``h_mask``."""
    t = G.table
    hg = np.asarray(t.generators(h_mask), dtype=np.int64)
    if hg.size == 0:
        return G.whole
    ok = np.ones(t.n, dtype=bool)
    for h in hg:
        ok &= t.mul[:, h] == t.mul[h, :]
    return t.mask_from_bool(ok)


def center(G):
    return G.sub(centralizer_mask(G, G.whole))


def is_nilpotent_by_sylow(G):
    """All Sylow subgroups normal."""
    t = G.table
    return all(t.is_normal(sylow_mask(G, p), G.gen_indices) for p in prime_factors(t.n))


def direct_product(*groups, name=None):
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for x in g.generators:
            images = list(range(degree))
            for i, j in enumerate(x):
                images[offset + i] = offset + j
            gens.append(Permutation._trusted(images))
        offset += g.degree
    return PermGroup(degree, gens, name=name)


def element_of_subgroup(sub, x):
    return isinstance(sub, Subgroup) and x in sub
