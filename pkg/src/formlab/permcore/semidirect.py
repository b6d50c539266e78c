"""Split extensions [N]Q of an elementary abelian module N by a group Q."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from .groups import PermGroup, is_prime
from .perm import Permutation


@dataclass(frozen=True)
class Module:
    """F_p^rank with one matrix per generator of the acting group.

    Vectors are rows; generator ``q`` sends ``v`` to ``v @ matrices[q]``
    (mod p), which is a right action matching left-to-right products.
    """

    p: int
    rank: int
    matrices: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        for m in self.matrices:
            a = np.asarray(m)
            if a.shape != (self.rank, self.rank):
                raise DomainError(f"matrix of shape {a.shape} for rank {self.rank}")
            if _rank_mod_p(a, self.p) != self.rank:
                raise DomainError("action matrix is not invertible mod p")


def _rank_mod_p(a, p):
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i, c]), None)
        if pivot is None:
            continue
        a[[r, pivot]] = a[[pivot, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        r += 1
    return r


def _vectors(p, rank):
    # index sum(v[i] * p**i)
    size = p ** rank
    idx = np.arange(size)
    return np.stack([(idx // p ** i) % p for i in range(rank)], axis=1) if rank else np.zeros((1, 0), int)


def _encode(vs, p):
    weights = p ** np.arange(vs.shape[1])
    return vs @ weights if vs.shape[1] else np.zeros(len(vs), dtype=np.int64)


def _linear_perm(matrix, p, rank):
    vs = _vectors(p, rank)
    return _encode((vs @ np.asarray(matrix, dtype=np.int64)) % p, p)


def _translation(j, p, rank):
    vs = _vectors(p, rank).copy()
    vs[:, j] = (vs[:, j] + 1) % p
    return _encode(vs, p)


class SemidirectProduct(PermGroup):
    """``[N]Q``; ``module_subgroup`` is the distinguished normal copy of N."""

    module: Module
    complement_generators: tuple

    @property
    def module_subgroup(self):
        return self.sub(self.table.closure([self.index(t) for t in self._translations]))

    @property
    def complement(self):
        return self.sub(self.table.closure([self.index(c) for c in self.complement_generators]))


def semidirect(module, Q, name=None):
    if len(module.matrices) != len(Q.generators):
        raise DomainError(
            f"{len(module.matrices)} matrices for {len(Q.generators)} generators of Q"
        )
    p, rank = module.p, module.rank
    size = p ** rank
    lin = [_linear_perm(m, p, rank) for m in module.matrices]
    linear_group = PermGroup(size, [Permutation._trusted(x.tolist()) for x in lin])
    # consistency: q -> matrix must extend to a homomorphism Q -> GL
    graph = PermGroup(
        size + Q.degree,
        [Permutation._trusted(list(x) + [size + i for i in q]) for x, q in zip(lin, Q.generators)],
    )
    if graph.order() != Q.order():
        raise DomainError("matrices do not define an action of Q")
    faithful = linear_group.order() == Q.order()
    degree = size if faithful else size + Q.degree
    pad = [] if faithful else list(range(size, degree))

    def extend(images, q=None):
        tail = pad if q is None else [size + i for i in q]
        return Permutation._trusted(list(images) + tail)

    translations = [extend(_translation(j, p, rank)) for j in range(rank)]
    complement = [
        extend(x, None if faithful else q) for x, q in zip(lin, Q.generators)
    ]
    G = SemidirectProduct(degree, translations + complement, name=name)
    G.module = module
    G._translations = translations
    G.complement_generators = tuple(complement)
    expected = size * Q.order()
    if G.order() != expected:  # pragma: no cover - guarded by the graph check
        raise DomainError(f"semidirect product has order {G.order()}, expected {expected}")
    return G
