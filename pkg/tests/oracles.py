"""Brute-force oracles shared by the tests."""

import itertools

from formlab.permcore import Permutation, parse_group


def G(text):
    return parse_group(text)


def brute_closure(gens, degree):
    """All products of ``gens`` by breadth-first search."""
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def brute_subgroups(G):
    """Every subgroup of a small group, as frozensets of permutations."""
    elems = G.elements()
    subs = {frozenset(brute_closure([], G.degree))}
    frontier = set(subs)
    while frontier:
        nxt = set()
        for H in frontier:
            for x in elems:
                if x not in H:
                    K = frozenset(brute_closure(list(H) + [x], G.degree))
                    if K not in subs:
                        subs.add(K)
                        nxt.add(K)
        frontier = nxt
    return subs


def perms_of(G, mask):
    t = G.table
    return {t.perm(int(i)) for i in t.members(mask)}


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(n))]
