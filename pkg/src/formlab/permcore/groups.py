"""Permutation groups and their subgroups."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .. import config
from ..errors import DomainError
from .perm import Permutation, parse_group_text
from .schreier import build_chain
from .table import GroupTable


class PermGroup:
    """A group given by permutation generators.

    The stabilizer chain and (for small groups) the Cayley table are built on
    first use and never change afterwards.  ``cache`` holds derived data such
    as the normal-subgroup lattice; it is keyed by strings owned by the module
    that fills it.
    """

    def __init__(self, degree, generators=(), name=None):
        gens = []
        for g in generators:
            g = g if isinstance(g, Permutation) else Permutation(g)
            if len(g) != degree:
                raise DomainError(f"generator {g} has degree {len(g)}, expected {degree}")
            if not g.is_identity():
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.cache = {}

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    # -- chain based --------------------------------------------------------

    @cached_property
    def chain(self):
        return build_chain(self.degree, self.generators)

    def order(self):
        return self.chain.order()

    def __contains__(self, x):
        if len(x) != self.degree:
            raise DomainError(f"degree mismatch: {len(x)} vs {self.degree}")
        return self.chain.contains(x if isinstance(x, Permutation) else Permutation(x))

    def identity(self):
        return Permutation.identity(self.degree)

    def is_trivial(self):
        return not self.generators

    @cached_property
    def key(self):
        return (self.degree, tuple(sorted(self.generators)))

    # -- table based --------------------------------------------------------

    @cached_property
    def table(self):
        config.check("order", self.order())
        return GroupTable.from_chain(self.chain)

    def _set_table(self, table):
        self.__dict__["table"] = table

    def elements(self):
        t = self.table
        return [t.perm(i) for i in range(t.n)]

    @cached_property
    def gen_indices(self):
        t = self.table
        return np.array([t.index(g) for g in self.generators], dtype=np.int64)

    def index(self, x):
        i = self.table.index(x)
        if i is None:
            raise DomainError(f"{x} is not an element of the group")
        return i

    @property
    def whole(self):
        return self.table.full

    def sub(self, mask):
        """The (cached) Subgroup object for a bitmask over ``self.table``."""
        subs = self.cache.setdefault("subgroups", {})
        got = subs.get(mask)
        if got is None:
            got = Subgroup(self, mask)
            subs[mask] = got
        return got

    def trivial_subgroup(self):
        return self.sub(1)

    def as_subgroup(self):
        return self.sub(self.whole)

    def mask_of(self, elems):
        return self.table.mask([self.index(x) for x in elems])

    def is_abelian(self):
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def prime_divisors(self):
        return prime_factors(self.order())


class Subgroup(PermGroup):
    """A subgroup of ``parent`` identified by its element bitmask."""

    def __init__(self, parent, mask):
        t = parent.table
        gens = [t.perm(i) for i in t.generators(mask)]
        super().__init__(parent.degree, gens)
        self.parent = parent
        self.mask = mask
        self._size = mask.bit_count()

    def order(self):
        return self._size

    @cached_property
    def table(self):
        return self.parent.table.restrict(self.mask)

    def __contains__(self, x):
        i = self.parent.table.index(x)
        return i is not None and bool((self.mask >> i) & 1)

    def __repr__(self):
        return f"<Subgroup order={self._size} of {self.parent!r}>"

    def is_normal(self):
        return self.parent.table.is_normal(self.mask, self.parent.gen_indices)

    def __le__(self, other):
        return self.mask & other.mask == self.mask

    def __lt__(self, other):
        return self.mask != other.mask and self <= other

    def __eq__(self, other):
        if isinstance(other, Subgroup):
            return self.parent is other.parent and self.mask == other.mask
        return NotImplemented

    def __hash__(self):
        return hash((id(self.parent), self.mask))


def prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n):
    return n >= 2 and prime_factors(n) == [n]


def parse_group(text, name=None):
    degree, gens = parse_group_text(text)
    return PermGroup(degree, gens, name=name)


def read_group(path):
    from pathlib import Path

    p = Path(path)
    return parse_group(p.read_text(encoding="utf-8"), name=p.stem)
