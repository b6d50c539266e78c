"""Saturation audits: does G/N in F force G in F for the kind's subgroups N?"""

from __future__ import annotations

from ..errors import DomainError
from ..formations.audit import corpus_entries
from ..formations.classes import parse_coset
from ..formations.expr import contains, quotient_contains
from ..permcore.groups import PermGroup, is_prime, prime_factors
from ..report import AuditReport, subgroup_generators
from ..structure import (
    _p_frattini_mask,
    e_radical_mask,
    frattini_mask,
    normal_subgroups,
    pi_core_mask,
)

# kind -> takes a prime set
KINDS = {
    "saturated": False,
    "p-saturated": True,
    "Np-saturated": True,
    "omega-saturated": True,
    "solubly-saturated": False,
    "omega-solubly-saturated": True,
    "Nomega-saturated": True,
}


def parse_kind(text):
    """``saturated``, ``2-saturated``, ``Np-saturated:2``, ``omega-saturated:2,3`` ...

    Returns (kind, tuple of primes).
    """
    text = text.strip()
    name, _, arg = text.partition(":")
    head = name.split("-", 1)[0]
    if head.isdigit() and name.endswith("-saturated") and not arg:
        name, arg = "p-saturated", head
    if name not in KINDS:
        raise DomainError(f"unknown saturation kind {text!r} (expected one of {', '.join(KINDS)})")
    if KINDS[name] != bool(arg):
        raise DomainError(
            f"kind {name} {'needs' if KINDS[name] else 'takes no'} a prime list"
        )
    primes = ()
    if arg:
        coset = parse_coset(arg, "prime")
        if coset.cofinite:
            raise DomainError("saturation kinds need a finite prime list")
        primes = tuple(sorted(coset.items))
        for p in primes:
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
        if name in ("p-saturated", "Np-saturated") and len(primes) != 1:
            raise DomainError(f"{name} takes exactly one prime")
    return name, primes


def kind_text(kind, primes):
    return kind if not primes else f"{kind}:{','.join(map(str, primes))}"


def subgroup_frattini_mask(G, mask):
    """Phi of the subgroup ``mask``, as a mask of G."""
    if mask == G.whole:
        return frattini_mask(G)
    t = G.table
    H = PermGroup(G.degree, [t.perm(i) for i in t.generators(mask)])
    inner = frattini_mask(H)
    return t.mask([G.index(H.table.perm(i)) for i in H.table.members(inner)])


def _is_pi_mask(mask, primes):
    return all(q in primes for q in prime_factors(mask.bit_count()))


def omega_soluble_radical_mask(G, omega):
    """Largest normal subgroup whose composition factors of order divisible by a prime in omega are abelian."""
    return e_radical_mask(G, lambda s: s.abelian or not any(q in omega for q in s.primes()))


def hypothesis_masks(G, kind, primes):
    """Nontrivial normal subgroups N for which G/N in F must force G in F."""
    lat = normal_subgroups(G)
    out = []
    if kind in ("saturated", "p-saturated"):
        phi = frattini_mask(G)
        for m in lat.masks:
            if m != 1 and m & phi == m and (kind == "saturated" or _is_pi_mask(m, primes)):
                out.append(m)
    elif kind == "Np-saturated":
        (p,) = primes
        for m in lat.masks:
            if _is_pi_mask(m, primes):
                out.append(_p_frattini_mask(G, m, p) if m != 1 else 1)
    elif kind == "omega-saturated":
        phi = frattini_mask(G)
        out = [phi & pi_core_mask(G, [p]) for p in primes]
    elif kind == "solubly-saturated":
        out = [subgroup_frattini_mask(G, e_radical_mask(G, lambda s: s.abelian))]
    elif kind == "omega-solubly-saturated":
        phi = subgroup_frattini_mask(G, omega_soluble_radical_mask(G, primes))
        out = [m for m in lat.masks if m & phi == m and _is_pi_mask(m, primes)]
    elif kind == "Nomega-saturated":
        out = [_p_frattini_mask(G, pi_core_mask(G, [p]), p) for p in primes]
    else:  # pragma: no cover - parse_kind rejects these
        raise DomainError(kind)
    seen, masks = set(), []
    for m in out:
        if m != 1 and m not in seen:
            seen.add(m)
            masks.append(m)
    return sorted(masks, key=lambda m: (m.bit_count(), lat.position.get(m, 0)))


def saturation_instances(F, G, kind, primes):
    """Yield (ok, instance, detail) for every hypothesis instance on G."""
    inside = None
    for m in hypothesis_masks(G, kind, primes):
        if not quotient_contains(F, G, m):
            continue
        if inside is None:
            inside = contains(F, G)
        yield inside, {
            "check": kind_text(kind, primes),
            "normal": subgroup_generators(G, m),
            "normal_order": m.bit_count(),
        }, {"quotient_in_class": True, "group_in_class": inside}


def saturation_audit(F, kind, corpus):
    kind, primes = parse_kind(kind) if isinstance(kind, str) else kind
    label = kind_text(kind, primes)
    report = AuditReport(suite=f"saturation:{label}:{F.text()}")
    for name, G in corpus_entries(corpus):
        report.verdicts.setdefault(name, "clean")
        for ok, instance, detail in saturation_instances(F, G, kind, primes):
            report.add(name, ok, {"formation": F.text(), **instance}, detail)
    return report


def replay_saturation(F, G, instance):
    """True when the recorded instance still is a violation."""
    from ..report import subgroup_from_generators

    m = subgroup_from_generators(G, instance["normal"])
    kind, primes = parse_kind(instance["check"])
    if m not in hypothesis_masks(G, kind, primes):
        return False
    return quotient_contains(F, G, m) and not contains(F, G)
