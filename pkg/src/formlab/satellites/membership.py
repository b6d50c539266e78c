"""Membership in the class defined by a satellite.

``membership`` applies the f-rule of the satellite's kind to every chief
factor.  ``membership_characterized`` uses closed forms in terms of
O_{p',p}, the omega-d radical, the E(L)-radical and C^S instead, so the two
can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..centralizers import centralizer_of_section_mask, cS_mask, small_centralizer_mask
from ..errors import DomainError
from ..formations.expr import (
    Empty,
    conj,
    contains,
    is_empty,
    quotient_contains,
    substitute_simple,
)
from ..permcore.groups import prime_factors
from ..structure import (
    LABEL_ORDER,
    all_chief_factors,
    com,
    e_radical_mask,
    nonabelian_type,
    normal_subgroups,
    omega_d_radical_mask,
    p_layer_mask,
    simple_type_of_order,
)

ORDINARY = "ordinary-centralizer"
SMALL = "small-centralizer"
MONOLITHIC = "monolithic-quotient"


@dataclass(frozen=True)
class FCentralVerdict:
    factor_index: int | None
    central: bool
    rule_used: str
    formation_value: str
    quotient_order: int


def satellite_value(spec, factor):
    """(formation, rule) deciding whether ``factor`` is f-central."""
    stype = factor.simple_type
    primes = stype.primes()
    kind = spec.kind
    if kind == "local":
        return conj(*(spec.f_prime(p) for p in primes)), ORDINARY
    if kind == "omegalocal":
        inside = [p for p in primes if p in spec.omega]
        if inside:
            return conj(*(spec.f_prime(p) for p in inside)), ORDINARY
        return spec.complement_value, SMALL
    if kind == "composition":
        return spec.f_type(stype), ORDINARY
    if kind == "lcomposition":
        if spec.cls.contains(stype):
            return spec.f_type(stype), ORDINARY
        return spec.complement_value, SMALL
    if kind == "xlocal":
        if spec.cls.contains(stype):
            return conj(*(spec.f_prime(p) for p in primes)), ORDINARY
        return spec.f_outside(stype), MONOLITHIC
    raise DomainError(f"unknown satellite kind {kind!r}")  # pragma: no cover


def _centralizer(G, factor, rule):
    if rule == ORDINARY:
        return centralizer_of_section_mask(G, factor.upper.mask, factor.lower.mask)
    return small_centralizer_mask(G, factor)


def monolithic_quotients(G):
    """(L, type of the socle of G/L) for every normal L with G/L monolithic."""
    lat = normal_subgroups(G)
    out = []
    for m in lat.masks:
        if m == G.whole:
            continue
        above = lat.minimal_over(m)
        if len(above) == 1:
            stype, _ = simple_type_of_order(above[0].bit_count() // m.bit_count())
            out.append((m, stype))
    return out


def f_central_verdicts(G, spec, stop_early=False):
    """Verdicts for every chief factor, plus monolithic quotients for xlocal."""
    out = []
    for f in all_chief_factors(G):
        value, rule = satellite_value(spec, f)
        if rule == MONOLITHIC:
            continue
        c = _centralizer(G, f, rule)
        ok = quotient_contains(value, G, c)
        out.append(FCentralVerdict(f.index, ok, rule, value.text(), G.order() // c.bit_count()))
        if stop_early and not ok:
            return out
    if spec.kind == "xlocal":
        for mask, stype in monolithic_quotients(G):
            if spec.cls.contains(stype):
                continue
            value = spec.f_outside(stype)
            ok = quotient_contains(value, G, mask)
            out.append(
                FCentralVerdict(None, ok, MONOLITHIC, value.text(), G.order() // mask.bit_count())
            )
            if stop_early and not ok:
                return out
    return out


def membership(G, spec):
    """Membership by the definition."""
    memo = G.cache.setdefault("satellite_member", {})
    got = memo.get(spec)
    if got is None:
        if G.order() == 1:
            got = True
        else:
            got = all(v.central for v in f_central_verdicts(G, spec, stop_early=True))
        memo[spec] = got
    return got


# -- closed forms ------------------------------------------------------------


def _values_empty(spec, primes, labels):
    """True if f is empty on C_p for p in ``primes`` and on every type in ``labels``.

    ``primes`` and ``labels`` are CoSets, or None to skip that part.
    """
    pm, sm = spec.prime_map, spec.simple_map
    if primes is not None:
        for p, value in pm.items():
            if p in primes and not is_empty(value):
                return False
        if primes.cofinite or not primes.items <= set(pm):
            if not is_empty(spec.default_prime):
                return False
    if labels is not None:
        for label in sm:
            if label in labels and not is_empty(spec.f_simple(nonabelian_type(label))):
                return False
        unlisted = [x for x in LABEL_ORDER if x in labels and x not in sm]
        if labels.cofinite or unlisted:
            probe = nonabelian_type(unlisted[0] if unlisted else "A5")
            if not is_empty(substitute_simple(spec.default_simple, probe)):
                return False
    return True


def _local_characterized(G, f_prime, pi_allowed):
    """G is a pi-group and G/O_{p',p}(G) lies in f(p) for every p dividing |G|."""
    for p in prime_factors(G.order()):
        if not pi_allowed(p):
            return False
        if not quotient_contains(f_prime(p), G, p_layer_mask(G, p)):
            return False
    return True


def _local_rule(spec, allowed=lambda p: True):
    def f_prime(p):
        return spec.f_prime(p) if allowed(p) else Empty()

    def pi_allowed(p):
        return allowed(p) and not is_empty(spec.f_prime(p))

    return f_prime, pi_allowed


def _composition_characterized(G, f_type, in_class=lambda s: True):
    for s in com(G):
        if in_class(s) and not quotient_contains(f_type(s), G, cS_mask(G, s)):
            return False
    return True


def membership_characterized(G, spec):
    """Closed-form membership for every kind except xlocal."""
    if G.order() == 1:
        return True
    kind = spec.kind
    if kind == "local":
        return _local_characterized(G, *_local_rule(spec))
    if kind == "omegalocal":
        omega = spec.omega
        if omega.is_everything():
            return _local_characterized(G, *_local_rule(spec))
        comp = spec.complement_value
        if is_empty(comp):
            # local satellite equal to f on omega and empty elsewhere
            return _local_characterized(G, *_local_rule(spec, lambda p: p in omega))
        if _values_empty(spec, omega, None):
            if any(p in omega for p in prime_factors(G.order())):
                return False
            return contains(comp, G)
        if not quotient_contains(comp, G, omega_d_radical_mask(G, omega)):
            return False
        for p in prime_factors(G.order()):
            if p in omega and not quotient_contains(spec.f_prime(p), G, p_layer_mask(G, p)):
                return False
        return True
    if kind == "composition":
        return _composition_characterized(G, spec.f_type)
    if kind == "lcomposition":
        cls = spec.cls
        if cls.is_everything():
            return _composition_characterized(G, spec.f_type)
        comp = spec.complement_value
        if is_empty(comp):
            # composition satellite equal to f on L and empty outside
            return _composition_characterized(
                G, lambda s: spec.f_type(s) if cls.contains(s) else Empty()
            )
        if _values_empty(spec, cls.primes, cls.nonabelian):
            if any(cls.contains(s) for s in com(G)):
                return False
            return contains(comp, G)
        if not quotient_contains(comp, G, e_radical_mask(G, cls.contains)):
            return False
        return _composition_characterized(G, spec.f_type, cls.contains)
    raise DomainError(f"no closed-form membership test for {kind} satellites")


def membership_both(G, spec):
    """(definition verdict, closed-form verdict)."""
    return membership(G, spec), membership_characterized(G, spec)
