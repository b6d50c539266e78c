"""Constructions that turn one satellite into another defining the same class.

Where a construction assigns "the class itself" as a value, the value is a
``ClassOf`` node pointing at the source satellite, so evaluation never refers
back to the satellite being built.
"""

from __future__ import annotations

from ..errors import DomainError
from ..formations.classes import EVERYTHING, SimpleClassSpec
from ..formations.expr import All, ClassOf, conj
from .spec import SatelliteSpec


def class_of(spec):
    return ClassOf(spec, spec.name)


def _as_lcomposition(spec):
    """View a composition satellite as an L-composition satellite with L = J."""
    if spec.kind == "lcomposition":
        return spec
    if spec.kind == "composition":
        return spec.with_values(kind="lcomposition", cls=SimpleClassSpec.everything())
    raise DomainError(f"expected a composition or lcomposition satellite, got {spec.kind}")


def integrate(spec, ambient=None):
    """Intersect every value with ``ambient`` (default: the class defined by ``spec``)."""
    if spec.kind not in ("composition", "lcomposition"):
        raise DomainError("only composition and lcomposition satellites can be integrated")
    amb = class_of(spec) if ambient is None else ambient
    if isinstance(amb, All):
        return spec.with_values(name=f"{spec.name}.int")
    return spec.with_values(
        prime_values=tuple((p, conj(v, amb)) for p, v in spec.prime_values),
        simple_values=tuple((s, conj(v, amb)) for s, v in spec.simple_values),
        default_prime=conj(spec.default_prime, amb),
        default_simple=conj(spec.default_simple, amb),
        complement_value=None if spec.complement_value is None else conj(spec.complement_value, amb),
        name=f"{spec.name}.int",
    )


def lemma43_normalize(spec):
    """Integrated satellite with value F on every simple group outside L+.

    Prime values on L+ become f(p) & F; nonabelian types and L' all get F.
    """
    src = _as_lcomposition(spec)
    F = class_of(spec)
    cls = src.cls
    return SatelliteSpec(
        kind=spec.kind,
        omega=None,
        cls=spec.cls,
        prime_values=tuple((p, conj(v, F)) for p, v in src.prime_values if p in cls.primes),
        simple_values=(),
        default_prime=conj(src.default_prime, F),
        default_simple=F,
        complement_value=None if spec.kind == "composition" else F,
        name=f"{spec.name}.norm",
    )


def theorem44_transform(spec, direction, target_class=None):
    """``to-Lplus``: an L+-composition satellite for the same class.

    ``from-Lplus``: from an L+-composition satellite to one over ``target_class``
    (any L with the same abelian part; default: L+ together with every
    nonabelian simple group).
    """
    if direction == "to-Lplus":
        src = _as_lcomposition(spec)
        norm = lemma43_normalize(spec)
        F = class_of(spec)
        plus = src.cls.abelian_part()
        return SatelliteSpec(
            kind="lcomposition",
            cls=plus,
            prime_values=norm.prime_values,
            default_prime=norm.default_prime,
            default_simple=F,
            complement_value=F,
            name=f"{spec.name}.plus",
        )
    if direction == "from-Lplus":
        src = _as_lcomposition(spec)
        if not src.cls.is_abelian_only():
            raise DomainError("from-Lplus needs a satellite over a class of abelian simple groups")
        if target_class is None:
            target_class = SimpleClassSpec(src.cls.primes, EVERYTHING)
        if target_class.primes != src.cls.primes:
            raise DomainError("target class must have the same abelian members")
        norm = lemma43_normalize(spec)
        F = class_of(spec)
        kind = "composition" if target_class.is_everything() else "lcomposition"
        return SatelliteSpec(
            kind=kind,
            cls=None if kind == "composition" else target_class,
            prime_values=norm.prime_values,
            default_prime=norm.default_prime,
            default_simple=F,
            complement_value=None if kind == "composition" else F,
            name=f"{spec.name}.full",
        )
    raise DomainError(f"unknown direction {direction!r} (expected to-Lplus or from-Lplus)")


def theorem51_bridge(spec, direction, target_class=None):
    """``xlocal-to-comp``: X-local satellite -> L-composition satellite (L+ = X+).

    ``comp-to-xplus``: L-composition satellite -> X+-local satellite with X+ = L+.
    """
    if direction == "xlocal-to-comp":
        if spec.kind != "xlocal":
            raise DomainError("xlocal-to-comp needs an xlocal satellite")
        plus = spec.cls.abelian_part()
        target = plus if target_class is None else target_class
        if target.primes != plus.primes:
            raise DomainError("target class must have the same abelian members as X")
        F = class_of(spec)
        omega = spec.cls.characteristic()
        kind = "composition" if target.is_everything() else "lcomposition"
        return SatelliteSpec(
            kind=kind,
            cls=None if kind == "composition" else target,
            prime_values=tuple((p, conj(v, F)) for p, v in spec.prime_values if p in omega),
            default_prime=conj(spec.default_prime, F),
            default_simple=F,
            complement_value=None if kind == "composition" else F,
            name=f"{spec.name}.comp",
        )
    if direction == "comp-to-xplus":
        src = _as_lcomposition(spec)
        norm = lemma43_normalize(spec)
        F = class_of(spec)
        return SatelliteSpec(
            kind="xlocal",
            cls=src.cls.abelian_part(),
            prime_values=norm.prime_values,
            default_prime=norm.default_prime,
            default_simple=F,
            name=f"{spec.name}.xplus",
        )
    raise DomainError(f"unknown direction {direction!r} (expected xlocal-to-comp or comp-to-xplus)")
