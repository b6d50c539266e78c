"""Deterministic Schreier-Sims.

Base points are the smallest points moved by the element that forces a new
level; orbits are explored breadth first in generator order, so the chain
depends only on the input generator sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perm import Permutation


@dataclass
class StabChain:
    degree: int
    base: list = field(default_factory=list)
    # strong[i]: strong generators fixing base[:i] pointwise
    strong: list = field(default_factory=list)
    # transversals[i][beta] = u with u[base[i]] == beta
    transversals: list = field(default_factory=list)

    def order(self):
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def strip(self, g, start=0):
        """Sift ``g`` from level ``start``; return (residue, level reached)."""
        for level in range(start, len(self.base)):
            beta = g[self.base[level]]
            u = self.transversals[level].get(beta)
            if u is None:
                return g, level
            g = g * u.inverse()
        return g, len(self.base)

    def contains(self, g):
        residue, _ = self.strip(g)
        return residue.is_identity()

    def strong_generators(self):
        out = []
        seen = set()
        for level in self.strong:
            for s in level:
                if s not in seen:
                    seen.add(s)
                    out.append(s)
        return out


def _orbit_transversal(degree, point, gens):
    ident = Permutation.identity(degree)
    trans = {point: ident}
    queue = [point]
    for beta in queue:
        u = trans[beta]
        for s in gens:
            gamma = s[beta]
            if gamma not in trans:
                trans[gamma] = u * s
                queue.append(gamma)
    return trans


def build_chain(degree, generators):
    gens = [g for g in generators if not g.is_identity()]
    chain = StabChain(degree)
    if not gens:
        return chain
    base = chain.base
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(g.moved_points()[0])
    k = len(base)
    strong = [[g for g in gens if all(g[b] == b for b in base[:i])] for i in range(k)]
    trans = [_orbit_transversal(degree, base[i], strong[i]) for i in range(k)]
    chain.strong = strong
    chain.transversals = trans

    i = k - 1
    while i >= 0:
        restart = False
        for beta in list(trans[i]):
            u_beta = trans[i][beta]
            for s in list(strong[i]):
                h = u_beta * s * trans[i][s[beta]].inverse()
                if h.is_identity():
                    continue
                residue, j = chain.strip(h, i + 1)
                if j < len(base) or not residue.is_identity():
                    if j == len(base):
                        base.append(residue.moved_points()[0])
                        strong.append([])
                        trans.append({})
                    for level in range(i + 1, j + 1):
                        strong[level].append(residue)
                        trans[level] = _orbit_transversal(degree, base[level], strong[level])
                    i = j
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return chain
