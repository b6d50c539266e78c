"""Formation expressions and exact membership."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import config
from ..errors import CapacityError, DomainError, IntegrityError
from ..permcore.groups import prime_factors
from ..permcore.isomorphism import are_isomorphic
from ..permcore.ops import is_nilpotent_by_sylow, is_soluble, sylow_mask
from ..permcore.quotient import coset_action
from ..structure import (
    SimpleType,
    chief_series,
    com,
    normal_subgroups,
    socle,
    soluble_radical_mask,
)
from .classes import SimpleClassSpec


class FormationExpr:
    """Base class; subclasses are frozen dataclasses (hashable, immutable)."""

    def test(self, G):  # pragma: no cover - abstract
        raise NotImplementedError

    def text(self):  # pragma: no cover - abstract
        raise NotImplementedError

    def __str__(self):
        return self.text()

    def children(self):
        return ()


@dataclass(frozen=True)
class Empty(FormationExpr):
    def test(self, G):
        return False

    def text(self):
        return "empty"


@dataclass(frozen=True)
class Trivial(FormationExpr):
    def test(self, G):
        return G.order() == 1

    def text(self):
        return "trivial"


@dataclass(frozen=True)
class All(FormationExpr):
    def test(self, G):
        return True

    def text(self):
        return "all"


@dataclass(frozen=True)
class Abelian(FormationExpr):
    def test(self, G):
        return G.is_abelian()

    def text(self):
        return "abelian"


@dataclass(frozen=True)
class Nilpotent(FormationExpr):
    def test(self, G):
        return is_nilpotent_by_sylow(G)

    def text(self):
        return "nilpotent"


@dataclass(frozen=True)
class Soluble(FormationExpr):
    def test(self, G):
        return is_soluble(G)

    def text(self):
        return "soluble"


@dataclass(frozen=True)
class Supersoluble(FormationExpr):
    def test(self, G):
        return all(f.abelian and f.copies == 1 for f in chief_series(G))

    def text(self):
        return "supersoluble"


@dataclass(frozen=True)
class QuasiNilpotent(FormationExpr):
    """Every chief factor H/K satisfies G = H C_G(H/K)."""

    def test(self, G):
        from ..centralizers import centralizer_of_section_mask

        t = G.table
        for f in chief_series(G):
            c = centralizer_of_section_mask(G, f.upper.mask, f.lower.mask)
            if t.join(f.upper.mask, c) != G.whole:
                return False
        return True

    def text(self):
        return "quasinilpotent"


@dataclass(frozen=True)
class PiGroups(FormationExpr):
    primes: frozenset

    def test(self, G):
        return set(prime_factors(G.order())) <= self.primes

    def text(self):
        return "pigroups{" + ",".join(str(p) for p in sorted(self.primes)) + "}"


@dataclass(frozen=True)
class PGroups(FormationExpr):
    p: int

    def test(self, G):
        return set(prime_factors(G.order())) <= {self.p}

    def text(self):
        return f"pgroups {self.p}"


@dataclass(frozen=True)
class EClass(FormationExpr):
    """Groups all of whose composition factors lie in ``cls``."""

    cls: SimpleClassSpec

    def test(self, G):
        return all(self.cls.contains(s) for s in com(G))

    def text(self):
        return "eclass{" + eclass_items(self.cls) + "}"


def eclass_items(cls):
    primes, labels = cls.primes, cls.nonabelian
    if primes.cofinite and labels.cofinite:
        items = [f"p{p}" for p in sorted(primes.items)] + sorted(labels.items)
        return ",".join(items + ["complement"])
    if not primes.cofinite and not labels.cofinite:
        return ",".join([f"p{p}" for p in sorted(primes.items)] + sorted(labels.items))
    # mixed finite/cofinite parts have no eclass spelling; use the long form
    return cls.text()


@dataclass(frozen=True)
class FormSimple(FormationExpr):
    """Direct powers of one simple group; ``stype=None`` is the per-factor placeholder."""

    stype: SimpleType | None = None

    def test(self, G):
        if self.stype is None:
            raise DomainError("'formsimple S' is only meaningful as a satellite value")
        if G.order() == 1:
            return True
        s = self.stype
        if s.abelian:
            return G.is_abelian() and all(
                int(o) in (1, s.prime) for o in G.table.orders
            )
        return soluble_radical_mask(G) == 1 and com(G) == {s} and socle(G).mask == G.whole

    def text(self):
        if self.stype is None:
            return "formsimple S"
        if self.stype.abelian:
            return f"formsimple p{self.stype.prime}"
        return f"formsimple {self.stype.label}"


@dataclass(frozen=True)
class NilpotentAbelianSylow(FormationExpr):
    """Nilpotent groups with an abelian Sylow p-subgroup."""

    p: int

    def test(self, G):
        if not is_nilpotent_by_sylow(G):
            return False
        return G.sub(sylow_mask(G, self.p)).is_abelian()

    def text(self):
        return f"nilab {self.p}"


@dataclass(frozen=True)
class IsoSet(FormationExpr):
    """Groups isomorphic to one of the listed representatives."""

    groups: tuple = ()
    labels: tuple = ()

    def test(self, G):
        n = G.order()
        for H in self.groups:
            if H.order() == n and are_isomorphic(G, H):
                return True
        return False

    def text(self):
        labels = self.labels or tuple(H.name or f"group{i}" for i, H in enumerate(self.groups))
        return "isoset(" + ",".join(labels) + ")"


@dataclass(frozen=True)
class And(FormationExpr):
    items: tuple = ()

    def test(self, G):
        return all(contains(x, G) for x in self.items)

    def text(self):
        if not self.items:
            return "all"
        return "and(" + ", ".join(x.text() for x in self.items) + ")"

    def children(self):
        return self.items


@dataclass(frozen=True)
class GProduct(FormationExpr):
    """Groups whose ``right``-residual lies in ``left``."""

    left: FormationExpr
    right: FormationExpr

    def test(self, G):
        if is_empty(self.right):
            return False
        return contains(self.left, residual(G, self.right))

    def text(self):
        return f"gprod({self.left.text()}, {self.right.text()})"

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, eq=False)
class ClassOf(FormationExpr):
    """The class defined by a satellite, used as a formation value."""

    spec: object
    name: str = field(default="F")

    def test(self, G):
        from ..satellites.membership import membership

        with _depth_guard():
            return membership(G, self.spec)

    def text(self):
        return f"class({self.name})"


# -- evaluation --------------------------------------------------------------

_IN_PROGRESS = object()
_depth = [0]


class _depth_guard:
    def __enter__(self):
        _depth[0] += 1
        if _depth[0] > config.current().recursion:
            _depth[0] -= 1
            raise CapacityError(
                f"satellite values nest deeper than {config.current().recursion} levels"
            )

    def __exit__(self, *exc):
        _depth[0] -= 1


def contains(F, G):
    """Exact membership of G in F, memoised on G."""
    memo = G.cache.setdefault("member", {})
    got = memo.get(F)
    if got is _IN_PROGRESS:
        raise IntegrityError(f"membership of this group in {F.text()} depends on itself")
    if got is None:
        memo[F] = _IN_PROGRESS
        try:
            got = bool(F.test(G))
        except BaseException:
            del memo[F]
            raise
        memo[F] = got
    return got


formation_contains = contains


def quotient_contains(F, G, mask):
    """Is G/N in F, N given by a normal-subgroup mask of G."""
    if mask == 1:
        return contains(F, G)
    return contains(F, coset_action(G, G.sub(mask)).target)


_TRIVIAL = []


def trivial_group():
    if not _TRIVIAL:
        from ..permcore.named import trivial

        _TRIVIAL.append(trivial())
    return _TRIVIAL[0]


def is_empty(F):
    """A formation is empty exactly when it misses the trivial group."""
    return not contains(F, trivial_group())


def residual_mask(G, F):
    if is_empty(F):
        raise DomainError(f"{F.text()} is empty, so there is no residual")
    good = [m for m in normal_subgroups(G).masks if quotient_contains(F, G, m)]
    mask = G.whole
    for m in good:
        mask &= m
    if not quotient_contains(F, G, mask):
        # find a witness pair of quotients in F whose intersection leaves F
        for i, a in enumerate(good):
            for b in good[i + 1:]:
                if not quotient_contains(F, G, a & b):
                    raise IntegrityError(
                        f"{F.text()} is not closed under subdirect products: "
                        f"quotients by normal subgroups of orders {a.bit_count()} and "
                        f"{b.bit_count()} lie in it but their intersection does not",
                    )
        raise IntegrityError(f"{F.text()} residual check failed")  # pragma: no cover
    return mask


def residual(G, F):
    return G.sub(residual_mask(G, F))


def substitute_simple(F, stype):
    """Replace the ``formsimple S`` placeholder by ``formsimple <stype>``."""
    if isinstance(F, FormSimple) and F.stype is None:
        return FormSimple(stype)
    if isinstance(F, And):
        return And(tuple(substitute_simple(x, stype) for x in F.items))
    if isinstance(F, GProduct):
        return GProduct(substitute_simple(F.left, stype), substitute_simple(F.right, stype))
    return F


def has_placeholder(F):
    if isinstance(F, FormSimple):
        return F.stype is None
    return any(has_placeholder(x) for x in F.children())


def conj(*items):
    """And of the items with trivial simplifications."""
    flat = []
    for x in items:
        if isinstance(x, And):
            flat.extend(x.items)
        elif not isinstance(x, All):
            flat.append(x)
    if any(isinstance(x, Empty) for x in flat):
        return Empty()
    out = []
    for x in flat:
        if x not in out:
            out.append(x)
    if len(out) == 1:
        return out[0]
    return And(tuple(out))


BUILTINS = {
    "empty": Empty(),
    "trivial": Trivial(),
    "all": All(),
    "abelian": Abelian(),
    "nilpotent": Nilpotent(),
    "soluble": Soluble(),
    "supersoluble": Supersoluble(),
    "quasinilpotent": QuasiNilpotent(),
}
