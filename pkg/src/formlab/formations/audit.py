"""Closure audits and corpus-restricted canonical satellite values."""

from __future__ import annotations

from ..centralizers import cS_mask
from ..permcore.isomorphism import find_isomorphism, invariants
from ..permcore.quotient import coset_action
from ..report import AuditReport, subgroup_from_generators, subgroup_generators
from ..structure import cyclic_type, normal_subgroups
from .expr import IsoSet, contains, quotient_contains


def corpus_entries(corpus):
    """(name, group) pairs from a Corpus, a list of entries, or a list of groups."""
    entries = getattr(corpus, "entries", corpus)
    out = []
    for i, e in enumerate(entries):
        if hasattr(e, "group"):
            out.append((e.name, e.group))
        elif isinstance(e, tuple):
            out.append((e[0], e[1]))
        else:
            out.append((e.name or f"group{i}", e))
    return out


def closure_instances(F, name, G):
    """Yield (ok, instance, detail) for the Q and R0 checks on one group."""
    lat = normal_subgroups(G)
    inside = contains(F, G)
    nontrivial = [m for m in lat.masks if m != 1]
    if inside:
        for m in nontrivial:
            ok = quotient_contains(F, G, m)
            yield ok, {"check": "Q", "normal": subgroup_generators(G, m)}, {
                "group_in_class": True,
                "quotient_in_class": ok,
                "quotient_order": G.order() // m.bit_count(),
            }
    good = [m for m in nontrivial if quotient_contains(F, G, m)]
    for i, a in enumerate(good):
        for b in good[i + 1:]:
            if a & b != 1:
                continue
            yield inside, {
                "check": "R0",
                "normal": [subgroup_generators(G, a), subgroup_generators(G, b)],
            }, {"quotients_in_class": True, "group_in_class": inside}


def replay_closure(F, G, instance):
    """Recheck one closure instance; True means the violation is reproduced."""
    if instance["check"] == "Q":
        m = subgroup_from_generators(G, instance["normal"])
        return contains(F, G) and not quotient_contains(F, G, m)
    a, b = (subgroup_from_generators(G, gens) for gens in instance["normal"])
    return (
        a & b == 1
        and quotient_contains(F, G, a)
        and quotient_contains(F, G, b)
        and not contains(F, G)
    )


def closure_audit(F, corpus):
    report = AuditReport(suite=f"closure:{F.text()}")
    for name, G in corpus_entries(corpus):
        for ok, instance, detail in closure_instances(F, name, G):
            instance = {"formation": F.text(), **instance}
            report.add(name, ok, instance, detail)
        report.verdicts.setdefault(name, "clean")
    return report


# -- canonical values --------------------------------------------------------


def all_quotients(G):
    """Every quotient of G, as realised permutation groups."""
    return [coset_action(G, G.sub(m)).target for m in normal_subgroups(G).masks]


def dedup_isomorphic(groups):
    reps, buckets = [], {}
    for H in groups:
        key = invariants(H)
        bucket = buckets.setdefault(key, [])
        if any(find_isomorphism(H, R) is not None for R in bucket):
            continue
        bucket.append(H)
        reps.append(H)
    return reps


def canonical_value(F, s, corpus):
    """IsoSet of all quotients of G/C^s(G) over the corpus members of F."""
    stype = cyclic_type(s) if isinstance(s, int) else s
    found = []
    for name, G in corpus_entries(corpus):
        if not contains(F, G):
            continue
        top = coset_action(G, G.sub(cS_mask(G, stype))).target
        found.extend(all_quotients(top))
    reps = dedup_isomorphic(sorted(found, key=lambda H: H.order()))
    labels = tuple(f"Q{H.order()}_{i}" for i, H in enumerate(reps))
    return IsoSet(tuple(reps), labels)
