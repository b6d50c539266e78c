"""Constructors for the standard small groups used by the corpus and tests."""

from __future__ import annotations

import itertools

import numpy as np

from .groups import PermGroup
from .perm import Permutation


def trivial(name="C1"):
    return PermGroup(1, [], name=name)


def cyclic(n, name=None):
    if n == 1:
        return trivial(name or "C1")
    return PermGroup(n, [Permutation([(i + 1) % n for i in range(n)])], name=name or f"C{n}")


def elementary_abelian(p, k, name=None):
    """C_p^k as k disjoint p-cycles."""
    degree = p * k
    gens = []
    for j in range(k):
        images = list(range(degree))
        for i in range(p):
            images[j * p + i] = j * p + (i + 1) % p
        gens.append(Permutation(images))
    return PermGroup(degree, gens, name=name or f"C{p}^{k}")


def dihedral(n, name=None):
    """Dihedral group of order 2n acting on an n-gon (n >= 3)."""
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, ref], name=name or f"D{2 * n}")


def symmetric(n, name=None):
    if n == 1:
        return trivial(name or "S1")
    gens = [Permutation([(i + 1) % n for i in range(n)])]
    if n > 2:
        gens.append(Permutation([1, 0] + list(range(2, n))))
    return PermGroup(n, gens, name=name or f"S{n}")


def alternating(n, name=None):
    if n < 3:
        return trivial(name or f"A{n}")
    gens = []
    for i in range(n - 2):
        images = list(range(n))
        images[i], images[i + 1], images[i + 2] = i + 1, i + 2, i
        gens.append(Permutation(images))
    return PermGroup(n, gens, name=name or f"A{n}")


def _matrix_group_on_vectors(q, matrices, name):
    """Linear group over F_q (q prime) acting on nonzero row vectors."""
    dim = len(matrices[0])
    vectors = [v for v in itertools.product(range(q), repeat=dim) if any(v)]
    index = {v: i for i, v in enumerate(vectors)}
    gens = []
    for m in matrices:
        m = np.array(m) % q
        images = [index[tuple(int(x) for x in (np.array(v) @ m) % q)] for v in vectors]
        gens.append(Permutation(images))
    return PermGroup(len(vectors), gens, name=name)


def quaternion(name="Q8"):
    return _matrix_group_on_vectors(3, [[[0, 1], [2, 0]], [[1, 1], [1, 2]]], name)


def special_linear_2(q, name=None):
    return _matrix_group_on_vectors(q, [[[1, 1], [0, 1]], [[1, 0], [1, 1]]], name or f"SL(2,{q})")


def projective_special_linear_2(q, name=None):
    """PSL(2, q) for prime q on the projective line {0..q-1, inf}."""
    inf = q
    points = list(range(q)) + [inf]

    def moebius(a, b, c, d):
        images = []
        for x in points:
            if x == inf:
                images.append(inf if c == 0 else (a * pow(c, -1, q)) % q)
                continue
            den = (c * x + d) % q
            images.append(inf if den == 0 else ((a * x + b) * pow(den, -1, q)) % q)
        return Permutation(images)

    return PermGroup(q + 1, [moebius(1, 1, 0, 1), moebius(0, q - 1, 1, 0)], name=name or f"PSL(2,{q})")


def frobenius_20(name="F20"):
    """Holomorph of C5: x -> ax + b on F_5."""
    return PermGroup(5, [Permutation([(x + 1) % 5 for x in range(5)]),
                         Permutation([(2 * x) % 5 for x in range(5)])], name=name)
