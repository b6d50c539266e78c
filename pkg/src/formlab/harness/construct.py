"""Split extensions [R/S](G/K) built from an abelian section of a group."""

from __future__ import annotations

import itertools

import numpy as np

from ..errors import DomainError
from ..permcore.groups import prime_factors
from ..permcore.quotient import coset_action
from ..permcore.semidirect import Module, _rank_mod_p, semidirect


def _section_basis(G, r_mask, s_mask):
    """(p, basis elements, coordinate lookup) for an elementary abelian section R/S."""
    t = G.table
    order = r_mask.bit_count() // s_mask.bit_count()
    primes = prime_factors(order)
    if len(primes) != 1:
        raise DomainError(f"section of order {order} is not a p-group")
    p = primes[0]
    basis, span = [], s_mask
    for x in t.members(r_mask):
        if span >> int(x) & 1:
            continue
        basis.append(int(x))
        span = t.closure(t.generators(span) + [int(x)], start=span)
    if span != r_mask or p ** len(basis) != order:
        raise DomainError("section is not elementary abelian")
    s_idx = t.members(s_mask)
    coords = np.full(t.n, -1, dtype=np.int64)
    vecs = {}
    for vec in itertools.product(range(p), repeat=len(basis)):
        g = 0
        for b, e in zip(basis, vec):
            for _ in range(e):
                g = int(t.mul[g, b])
        code = len(vecs)
        vecs[code] = vec
        coords[t.mul[g, s_idx]] = code
    return p, basis, coords, vecs


def section_module(G, r_mask, s_mask, k_mask):
    """The F_p(G/K)-module R/S (conjugation action) and the group Q = G/K.

    K must centralize R/S.
    """
    t = G.table
    p, basis, coords, vecs = _section_basis(G, r_mask, s_mask)
    epi = coset_action(G, G.sub(k_mask))
    Q = epi.target
    em = epi.element_map
    matrices = []
    for q in Q.generators:
        g = int(np.flatnonzero(em == Q.index(q))[0])
        rows = [vecs[int(coords[t.conj(b, g)])] for b in basis]
        matrices.append(tuple(tuple(r) for r in rows))
    # K acts trivially on R/S
    for k in t.generators(k_mask):
        for b in basis:
            if coords[t.conj(b, k)] != coords[b]:
                raise DomainError("K does not centralize R/S")
    return Module(p, len(basis), tuple(matrices)), Q


def split_extension(G, r_mask, s_mask, k_mask):
    """[R/S](G/K) as a permutation group."""
    module, Q = section_module(G, r_mask, s_mask, k_mask)
    return semidirect(module, Q)


def section_matrices(G, r_mask, s_mask):
    """(p, rank, matrices of the generators of G) for the G-module R/S."""
    t = G.table
    p, basis, coords, vecs = _section_basis(G, r_mask, s_mask)
    mats = []
    for g in G.gen_indices:
        rows = [vecs[int(coords[t.conj(b, int(g))])] for b in basis]
        mats.append(np.array(rows, dtype=np.int64))
    return p, len(basis), mats


def _invertible_matrices(p, rank):
    for entries in itertools.product(range(p), repeat=rank * rank):
        m = np.array(entries, dtype=np.int64).reshape(rank, rank)
        if _rank_mod_p(m, p) == rank:
            yield m


MODULE_SEARCH_LIMIT = 4096


def modules_isomorphic(a, b):
    """Brute-force test for two modules from :func:`section_matrices` of one group.

    Returns None when the search space exceeds MODULE_SEARCH_LIMIT.
    """
    (p, r, ma), (q, s, mb) = a, b
    if (p, r) != (q, s):
        return False
    if all((x == y).all() for x, y in zip(ma, mb)):
        return True
    if p ** (r * r) > MODULE_SEARCH_LIMIT:
        return None
    for T in _invertible_matrices(p, r):
        if all(((x @ T) % p == (T @ y) % p).all() for x, y in zip(ma, mb)):
            return True
    return False
