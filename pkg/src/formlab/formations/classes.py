"""Classes of simple groups: finite or cofinite sets of primes and nonabelian labels."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError
from ..permcore.groups import is_prime, prime_factors
from ..structure import LABEL_ORDER, SimpleType, cyclic_type, nonabelian_type


@dataclass(frozen=True)
class CoSet:
    """``items`` when ``cofinite`` is false, everything except ``items`` otherwise."""

    items: frozenset = frozenset()
    cofinite: bool = False

    def __contains__(self, x):
        return (x in self.items) != self.cofinite

    def complement(self):
        return CoSet(self.items, not self.cofinite)

    def is_empty(self):
        return not self.cofinite and not self.items

    def is_everything(self):
        return self.cofinite and not self.items

    def listed(self):
        return sorted(self.items)

    def text(self, fmt=str):
        body = ",".join(fmt(x) for x in sorted(self.items))
        if self.cofinite:
            return "all" if not self.items else f"all-{body}"
        return body or "none"


NONE = CoSet()
EVERYTHING = CoSet(frozenset(), True)


@dataclass(frozen=True)
class SimpleClassSpec:
    """A class of simple groups split into abelian (by prime) and nonabelian (by label) parts."""

    primes: CoSet = NONE
    nonabelian: CoSet = NONE

    def __post_init__(self):
        for p in self.primes.items:
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
        for label in self.nonabelian.items:
            if label not in LABEL_ORDER:
                raise DomainError(f"unknown simple group label {label!r}")

    @classmethod
    def of(cls, primes=(), labels=(), complement=False):
        spec = cls(CoSet(frozenset(primes)), CoSet(frozenset(labels)))
        return spec.complement() if complement else spec

    @classmethod
    def everything(cls):
        return cls(EVERYTHING, EVERYTHING)

    @classmethod
    def from_types(cls, types):
        types = list(types)
        return cls.of([t.prime for t in types if t.abelian], [t.label for t in types if not t.abelian])

    def contains(self, stype: SimpleType):
        if stype.abelian:
            return stype.prime in self.primes
        return stype.label in self.nonabelian

    __contains__ = contains

    def complement(self):
        """The class of simple groups not in this one."""
        return SimpleClassSpec(self.primes.complement(), self.nonabelian.complement())

    def abelian_part(self):
        return SimpleClassSpec(self.primes, NONE)

    def nonabelian_part(self):
        return SimpleClassSpec(NONE, self.nonabelian)

    def is_abelian_only(self):
        return self.nonabelian.is_empty()

    def is_everything(self):
        return self.primes.is_everything() and self.nonabelian.is_everything()

    def characteristic(self):
        """Primes p with C_p in the class (a CoSet of primes)."""
        return self.primes

    def prime_support(self):
        """Primes dividing the order of some member (a CoSet)."""
        if self.nonabelian.cofinite or self.primes.cofinite:
            # every prime divides the order of some PSL(2, q) outside any finite list
            if self.nonabelian.cofinite:
                return EVERYTHING
            extra = set()
            for label in self.nonabelian.items:
                extra.update(prime_factors(LABEL_ORDER[label]))
            return CoSet(frozenset(self.primes.items - extra), True)
        out = set(self.primes.items)
        for label in self.nonabelian.items:
            out.update(prime_factors(LABEL_ORDER[label]))
        return CoSet(frozenset(out))

    def char_equals_support(self):
        return self.characteristic() == self.prime_support()

    def listed_types(self):
        return [cyclic_type(p) for p in self.primes.listed()] + [
            nonabelian_type(label) for label in sorted(self.nonabelian.items, key=LABEL_ORDER.get)
        ]

    def text(self):
        return f"primes={self.primes.text()} nonabelian={self.nonabelian.text()}"

    def __str__(self):
        return self.text()


def parse_coset(text, kind):
    """Parse ``2,3`` / ``none`` / ``all`` / ``all-2,3`` into a CoSet."""
    text = text.strip()
    cofinite = False
    if text == "none" or text == "":
        return NONE
    if text == "all":
        return EVERYTHING
    if text.startswith("all-"):
        cofinite = True
        text = text[4:]
    items = split_items(text)
    if kind == "prime":
        try:
            values = frozenset(int(x) for x in items)
        except ValueError as exc:
            raise DomainError(f"bad prime list {text!r}") from exc
    else:
        values = frozenset(label_of(x) for x in items)
    return CoSet(values, cofinite)


def split_items(text):
    """Split on commas that are not inside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur).strip())
    return [x for x in out if x]


def label_of(token):
    """Catalog label for a nonabelian simple group given by label or order."""
    token = token.strip()
    if token.isdigit():
        return nonabelian_type(int(token)).label
    return nonabelian_type(token).label
