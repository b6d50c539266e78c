"""Cayley tables for small permutation groups.

Elements are kept sorted lexicographically by image tuple, so index 0 is the
identity and the labelling depends only on the group, not on its generators.
Subsets of a table (subgroups, classes) are passed around as ``int`` bitmasks.
"""

from __future__ import annotations

import numpy as np

from .perm import Permutation


def _lexsort_rows(rows):
    return np.lexsort(rows.T[::-1])


class GroupTable:
    def __init__(self, rows, mul):
        self.rows = rows  # (n, degree) images, sorted lexicographically
        self.mul = mul  # mul[a, b] = index of a*b
        self.n = rows.shape[0]
        self.arange = np.arange(self.n)
        self._nbytes = (self.n + 7) // 8
        self._members = {}
        self._gens = {}
        self._index = None
        self._inv = None
        self._orders = None
        self.full = (1 << self.n) - 1

    # -- construction -------------------------------------------------------

    @classmethod
    def from_chain(cls, chain):
        degree = chain.degree
        rows = np.arange(degree, dtype=np.int32)[None, :]
        for level in reversed(range(len(chain.base))):
            us = np.array(list(chain.transversals[level].values()), dtype=np.int32)
            # element a*u has images u[a[i]]
            prod = us[np.arange(len(us))[None, :, None], rows[:, None, :]]
            rows = prod.reshape(-1, degree)
        rows = rows[_lexsort_rows(rows)]
        base = chain.base or [0]
        return cls(rows, _multiplication(rows, base))

    @classmethod
    def from_unsorted(cls, rows, mul):
        """Relabel a table whose rows are not yet in canonical order."""
        order = _lexsort_rows(rows)
        pos = np.empty(len(order), dtype=np.int64)
        pos[order] = np.arange(len(order))
        new_mul = pos[mul[np.ix_(order, order)]]
        return cls(np.ascontiguousarray(rows[order]), new_mul.astype(np.int32)), pos

    def restrict(self, mask):
        """Table of the subgroup given by ``mask`` (its rows stay sorted)."""
        idx = self.members(mask)
        relabel = np.full(self.n, -1, dtype=np.int32)
        relabel[idx] = np.arange(len(idx), dtype=np.int32)
        return GroupTable(self.rows[idx], relabel[self.mul[np.ix_(idx, idx)]])

    # -- element access -----------------------------------------------------

    def perm(self, i):
        return Permutation._trusted(self.rows[i].tolist())

    def index(self, perm):
        if self._index is None:
            self._index = {tuple(r): i for i, r in enumerate(self.rows.tolist())}
        return self._index.get(tuple(perm))

    @property
    def inv(self):
        if self._inv is None:
            self._inv = np.argmin(self.mul, axis=1).astype(np.int32)
        return self._inv

    @property
    def orders(self):
        if self._orders is None:
            orders = np.zeros(self.n, dtype=np.int64)
            orders[0] = 1
            cur = self.arange.copy()
            k = 1
            while (orders == 0).any():
                cur = self.mul[cur, self.arange]
                k += 1
                hit = (cur == 0) & (orders == 0)
                orders[hit] = k
            self._orders = orders
        return self._orders

    def conj(self, x, g):
        """Index of g^-1 x g (arrays broadcast)."""
        return self.mul[self.mul[self.inv[g], x], g]

    # -- masks --------------------------------------------------------------

    def mask(self, idx):
        b = np.zeros(self.n, dtype=bool)
        b[np.asarray(idx, dtype=np.int64)] = True
        return self.mask_from_bool(b)

    def mask_from_bool(self, b):
        return int.from_bytes(np.packbits(b, bitorder="little").tobytes(), "little")

    def bools(self, mask):
        arr = np.frombuffer(mask.to_bytes(self._nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(arr, bitorder="little")[: self.n].astype(bool)

    def members(self, mask):
        got = self._members.get(mask)
        if got is None:
            got = np.flatnonzero(self.bools(mask))
            if len(self._members) > 4096:
                self._members.clear()
            self._members[mask] = got
        return got

    def closure(self, gens, start=None):
        """Mask of the subgroup generated by element indices ``gens``.

        ``start`` may be the mask of a subgroup already known to lie inside.
        """
        gens = np.unique(np.asarray(gens, dtype=np.int64))
        gens = gens[gens != 0]
        inside = np.zeros(self.n, dtype=bool) if start is None else self.bools(start).copy()
        inside[0] = True
        if gens.size == 0:
            return self.mask_from_bool(inside)
        frontier = np.flatnonzero(inside)
        while frontier.size:
            nxt = self.mul[np.ix_(frontier, gens)].ravel()
            nxt = np.unique(nxt[~inside[nxt]])
            inside[nxt] = True
            frontier = nxt
        return self.mask_from_bool(inside)

    def join(self, a, b):
        if a & b == b:
            return a
        if a & b == a:
            return b
        return self.closure(self.generators(a) + self.generators(b), start=a)

    def normal_closure(self, elems, gens_of_group):
        sub = self.closure(elems)
        gg = np.asarray(gens_of_group, dtype=np.int64)
        while True:
            hg = self.generators(sub)
            if len(hg) == 0 or len(gg) == 0:
                return sub
            conj = self.conj(np.asarray(hg)[:, None], gg[None, :]).ravel()
            inb = self.bools(sub)
            extra = conj[~inb[conj]]
            if extra.size == 0:
                return sub
            sub = self.closure(np.concatenate([hg, extra]), start=sub)

    def generators(self, mask):
        """A small deterministic generating set (element indices)."""
        got = self._gens.get(mask)
        if got is not None:
            return got
        idx = self.members(mask)
        order = idx[np.lexsort((idx, -self.orders[idx]))]
        gens = []
        cur = 1
        for x in order:
            if not (cur >> int(x)) & 1:
                gens.append(int(x))
                cur = self.closure(gens, start=cur)
                if cur == mask:
                    break
        self._gens[mask] = gens
        return gens

    def is_normal(self, mask, gens_of_group):
        hg = self.generators(mask)
        if not hg or not len(gens_of_group):
            return True
        conj = self.conj(np.asarray(hg)[:, None], np.asarray(gens_of_group)[None, :]).ravel()
        return bool(self.bools(mask)[conj].all())

    def product_set(self, a, b):
        ia, ib = self.members(a), self.members(b)
        return self.mask(np.unique(self.mul[np.ix_(ia, ib)]))

    def order_of(self, mask):
        return mask.bit_count()


def _multiplication(rows, base):
    n, degree = rows.shape
    base = np.asarray(base, dtype=np.int64)
    if float(degree) ** len(base) < 2.0 ** 62:
        weights = np.array([degree ** i for i in range(len(base))], dtype=np.int64)
        keys = rows[:, base].astype(np.int64) @ weights
    else:  # pragma: no cover - very long bases only
        keys = None
    mul = np.empty((n, n), dtype=np.int32)
    if keys is not None:
        order = np.argsort(keys)
        sorted_keys = keys[order]
        for a in range(n):
            prod = rows[:, rows[a]]  # row b: a*b, images b[a[i]]
            k = prod[:, base].astype(np.int64) @ weights
            mul[a] = order[np.searchsorted(sorted_keys, k)]
    else:  # pragma: no cover
        index = {r.tobytes(): i for i, r in enumerate(rows)}
        for a in range(n):
            prod = rows[:, rows[a]]
            mul[a] = [index[r.tobytes()] for r in prod]
    return mul
