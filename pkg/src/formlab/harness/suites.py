"""Verification suites.

Every suite enumerates *instances* (JSON-ready dicts) and has an
``evaluate`` function that decides one instance on its own.  A violation is
an instance that evaluates to False, so re-running ``evaluate`` on a recorded
instance replays the witness.  Group suites look at one corpus group at a
time and can run in worker processes; corpus suites need the whole corpus.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from ..centralizers import centralizer_of_section_mask, cS_mask, small_centralizer_mask
from ..errors import DomainError
from ..formations.audit import canonical_value, closure_instances, corpus_entries, replay_closure
from ..formations.classes import SimpleClassSpec
from ..formations.dsl import parse_eclass_body, parse_formation
from ..formations.expr import Empty, Nilpotent, QuasiNilpotent, contains, quotient_contains
from ..permcore.groups import PermGroup, prime_factors
from ..permcore.quotient import coset_action
from ..report import subgroup_from_generators, subgroup_generators
from ..satellites.membership import membership, membership_characterized
from ..satellites.samples import shipped_names, shipped_spec
from ..satellites.spec import SatelliteSpec
from ..satellites.transforms import (
    integrate,
    lemma43_normalize,
    theorem44_transform,
    theorem51_bridge,
)
from ..structure import (
    LABEL_ORDER,
    _p_frattini_mask,
    all_chief_factors,
    chief_series,
    com,
    cyclic_type,
    e_radical_mask,
    frattini_mask,
    n0_radical,
    nonabelian_type,
    normal_subgroups,
    pi_core_mask,
    socle,
)
from .construct import modules_isomorphic, section_matrices, split_extension
from .saturation import saturation_audit

# -- shared data -------------------------------------------------------------

# builtins screened for N_p-saturation on the corpus (lemmas 2.2-2.4)
NP_CANDIDATES = (
    "trivial", "abelian", "nilpotent", "soluble", "supersoluble", "quasinilpotent",
    "all", "pgroups 2", "pgroups 3", "pigroups{2,3}", "nilab 2",
)

# formations for the module-extension lemma
EXTENSION_FORMATIONS = (
    "abelian", "nilpotent", "soluble", "supersoluble", "quasinilpotent",
    "pgroups 2", "pigroups{2,3}", "nilab 2", "formsimple p2",
)

CLOSURE_FORMATIONS = (
    "empty", "trivial", "all", "abelian", "nilpotent", "soluble", "supersoluble",
    "quasinilpotent", "pgroups 2", "pgroups 3", "pigroups{2,3}", "nilab 2", "eclass{p2,p3}",
    "eclass{A5}", "formsimple p2", "formsimple A5", "gprod(nilpotent, abelian)",
)

# classes of simple groups for the small-centralizer radical identity
SMALL_CENTRALIZER_CLASSES = ("p2", "p3", "p2,p3", "A5", "p2,complement")

EQUIV_FORMATIONS = ("nilpotent", "quasinilpotent", "soluble", "supersoluble", "abelian")
EQUIV_OMEGAS = ((2,), (3,), (2, 3))

CANONICAL_FORMATIONS = ("nilpotent", "supersoluble", "quasinilpotent")

# (claim, formation, kind, expected witness or None for "clean")
SATURATION_CLAIMS = (
    ("abelian", "2-saturated", "Q8"),
    ("nilpotent", "saturated", None),
    ("and(nilpotent, nilab 2)", "saturated", "Q8"),
    ("and(nilpotent, nilab 2)", "3-saturated", None),
    ("quasinilpotent", "solubly-saturated", None),
    ("supersoluble", "saturated", None),
    ("soluble", "saturated", None),
)

# satellite transforms: suite -> (satellite name, chain of steps)
TRANSFORMS = {
    "thm-4.4": (
        ("composition-a5", ("to-Lplus",)),
        ("quasinilpotent", ("to-Lplus",)),
        ("lcomp-23a5", ("to-Lplus",)),
        ("lcomp-not2", ("to-Lplus",)),
        ("lcomp-2-empty", ("to-Lplus",)),
        ("composition-a5", ("to-Lplus", "from-Lplus")),
        ("lcomp-23a5", ("to-Lplus", "from-Lplus")),
        ("quasinilpotent", ("to-Lplus", "from-Lplus")),
    ),
    "thm-5.1": (
        ("xlocal-23", ("xlocal-to-comp",)),
        ("xlocal-235a5", ("xlocal-to-comp",)),
        ("xlocal-abelian", ("xlocal-to-comp",)),
        ("composition-a5", ("comp-to-xplus",)),
        ("lcomp-23a5", ("comp-to-xplus",)),
        ("quasinilpotent", ("comp-to-xplus",)),
        ("xlocal-235a5", ("xlocal-to-comp", "comp-to-xplus")),
        ("lcomp-not2", ("comp-to-xplus", "xlocal-to-comp")),
    ),
    "lemma-4.3": (
        ("composition-a5", ("normalize",)),
        ("quasinilpotent", ("normalize",)),
        ("lcomp-23a5", ("normalize",)),
        ("lcomp-not2", ("normalize",)),
        ("lcomp-23a5", ("integrate",)),
        ("composition-a5", ("integrate", "normalize")),
    ),
}

_STEPS = {
    "to-Lplus": lambda s: theorem44_transform(s, "to-Lplus"),
    "from-Lplus": lambda s: theorem44_transform(s, "from-Lplus"),
    "xlocal-to-comp": lambda s: theorem51_bridge(s, "xlocal-to-comp"),
    "comp-to-xplus": lambda s: theorem51_bridge(s, "comp-to-xplus"),
    "normalize": lemma43_normalize,
    "integrate": integrate,
}


@functools.lru_cache(maxsize=None)
def formation(text):
    return parse_formation(text)


@functools.lru_cache(maxsize=None)
def transformed(name, chain):
    spec = shipped_spec(name)
    for step in chain:
        spec = _STEPS[step](spec)
    return spec


def _gens(G, mask):
    return subgroup_generators(G, mask)


def _mask(G, gens):
    return subgroup_from_generators(G, gens)


def _cls(text):
    return parse_eclass_body(text)


# -- suite containers --------------------------------------------------------


@dataclass(frozen=True)
class GroupSuite:
    id: str
    instances: object  # (G, context) -> iterable of instance dicts
    evaluate: object  # (G, instance) -> (ok, detail)
    prepare: object = None  # corpus -> context
    notes: tuple = ()
    per_group = True


@dataclass(frozen=True)
class CorpusSuite:
    id: str
    instances: object  # (corpus) -> iterable of (group name, instance)
    evaluate: object  # (corpus, group name, instance) -> (ok, detail)
    notes: tuple = field(default=())
    per_group = False


# -- lemma-2.1 suite ---------------------------------------------------------------


def _central_p_factors(p):
    def pred(sub):
        H = PermGroup(sub.parent.degree, sub.generators)
        if H.order() == 1:
            return True
        for f in chief_series(H):
            if f.simple_type == cyclic_type(p):
                c = centralizer_of_section_mask(H, f.upper.mask, f.lower.mask)
                if c != H.whole:
                    return False
        return True

    return pred


def lemma21_instances(G, ctx):
    for s in sorted(com(G)):
        if not s.abelian:
            yield {"check": "nonabelian-type", "type": s.label}
    for p in prime_factors(G.order()):
        yield {"check": "prime", "p": p}


def lemma21_evaluate(G, inst):
    if inst["check"] == "nonabelian-type":
        s = nonabelian_type(inst["type"])
        left = cS_mask(G, s)
        right = e_radical_mask(G, lambda t: t != s)
    else:
        p = inst["p"]
        left = cS_mask(G, cyclic_type(p))
        right = n0_radical(G, _central_p_factors(p)).mask
    return left == right, {"centralizer_order": left.bit_count(), "radical_order": right.bit_count()}


# -- lemma-2.2, lemma-2.3, lemma-2.4 suites: N_p-saturated builtins ---------


def _np_context(corpus):
    """Per prime: builtins clean under the N_p audit, with corpus facts about them."""
    entries = corpus_entries(corpus)
    primes = sorted({p for _, G in entries for p in prime_factors(G.order())})
    ctx = {}
    for p in primes:
        rows = []
        for text in NP_CANDIDATES:
            F = formation(text)
            if not saturation_audit(F, ("Np-saturated", (p,)), corpus).clean:
                continue
            members = [G for _, G in entries if contains(F, G)]
            com_has_p = any(cyclic_type(p) in com(G) for G in members if G.order() > 1)
            p_groups = [G for _, G in entries if prime_factors(G.order()) == [p]]
            contains_np = all(contains(F, G) for G in p_groups)
            rows.append({"formation": text, "cp_in_com": com_has_p, "contains_np": contains_np})
        ctx[p] = rows
    return ctx


def lemma22_instances(G, ctx):
    ps = prime_factors(G.order())
    if len(ps) != 1:
        return
    p = ps[0]
    for row in ctx.get(p, ()):
        if row["cp_in_com"]:
            yield {"check": "p-group-in-class", "p": p, "formation": row["formation"]}


def lemma22_evaluate(G, inst):
    ok = contains(formation(inst["formation"]), G)
    return ok, {"group_in_class": ok}


def _elementary_normal_p_subgroups(G, p):
    for m in normal_subgroups(G).masks:
        if m != 1 and prime_factors(m.bit_count()) == [p] and _p_frattini_mask(G, m, p) == 1:
            yield m


def _extension_instances(G, ctx):
    for p in prime_factors(G.order()):
        forms = [row["formation"] for row in ctx.get(p, ()) if row["contains_np"]]
        if not forms:
            continue
        for m in _elementary_normal_p_subgroups(G, p):
            yield {"check": "extension", "p": p, "normal": _gens(G, m), "formations": forms}


def _split(G, r, s, k):
    cache = G.cache.setdefault("split_extensions", {})
    key = (r, s, k)
    if key not in cache:
        cache[key] = split_extension(G, r, s, k)
    return cache[key]


def lemma23_evaluate(G, inst):
    n = _mask(G, inst["normal"])
    M = _split(G, n, 1, n)
    bad = [
        f for f in inst["formations"]
        if contains(formation(f), M) and not contains(formation(f), G)
    ]
    return not bad, {"failing_formations": bad, "extension_order": M.order()}


def lemma24_evaluate(G, inst):
    n = _mask(G, inst["normal"])
    c = centralizer_of_section_mask(G, n, 1)
    M = _split(G, n, 1, c)
    bad = []
    for f in inst["formations"]:
        F = formation(f)
        if quotient_contains(F, G, n) and contains(F, M) and not contains(F, G):
            bad.append(f)
    return not bad, {"failing_formations": bad, "extension_order": M.order()}


# -- lemma-2.6 suite ---------------------------------------------------------------


def _module_classes(G):
    """Abelian chief factors of one chief series, one per G-module isomorphism class.

    Every chief factor of G is G-isomorphic to a factor of any fixed chief
    series, so this covers all chief factors up to isomorphism of [R/S](G/K).
    """
    reps = []
    for f in chief_series(G):
        if not f.abelian:
            continue
        mod = section_matrices(G, f.upper.mask, f.lower.mask)
        if any(modules_isomorphic(mod, other) is True for _, other in reps):
            continue
        reps.append((f, mod))
    return [f for f, _ in reps]


def lemma26_instances(G, ctx):
    forms = [f for f in EXTENSION_FORMATIONS if contains(formation(f), G)]
    if not forms:
        return
    lat = normal_subgroups(G)
    for f in _module_classes(G):
        r, s = f.upper.mask, f.lower.mask
        c = centralizer_of_section_mask(G, r, s)
        for k in lat.masks:
            if k & c == k:
                yield {
                    "check": "section-extension",
                    "upper": _gens(G, r),
                    "lower": _gens(G, s),
                    "kernel": _gens(G, k),
                    "formations": forms,
                }


def lemma26_evaluate(G, inst):
    r, s, k = (_mask(G, inst[key]) for key in ("upper", "lower", "kernel"))
    M = _split(G, r, s, k)
    bad = [f for f in inst["formations"] if not contains(formation(f), M)]
    return not bad, {"failing_formations": bad, "extension_order": M.order()}


# -- lemma-2.7 suite ---------------------------------------------------------------


def lemma27_instances(G, ctx):
    if G.order() > 1:
        yield {"check": "socle-modulo-frattini"}


def lemma27_evaluate(G, inst):
    phi = frattini_mask(G)
    epi = coset_action(G, G.sub(phi))
    h = epi.preimage_mask(socle(epi.target).mask)
    c = centralizer_of_section_mask(G, h, 1)
    return c & h == c, {"h_order": h.bit_count(), "centralizer_order": c.bit_count()}


# -- lemma-2.8 suite ---------------------------------------------------------------


def lemma28_instances(G, ctx):
    for p in prime_factors(G.order()):
        yield {"check": "cp-modulo-frattini-op", "p": p}


def lemma28_evaluate(G, inst):
    p = inst["p"]
    L = _p_frattini_mask(G, pi_core_mask(G, [p]), p)
    epi = coset_action(G, G.sub(L))
    top = cS_mask(epi.target, cyclic_type(p))
    lifted = epi.preimage_mask(top)
    here = cS_mask(G, cyclic_type(p))
    return lifted == here, {
        "l_order": L.bit_count(),
        "lifted_order": lifted.bit_count(),
        "cp_order": here.bit_count(),
    }


# -- lemma-3.1 suite ---------------------------------------------------------------


def lemma31_instances(G, ctx):
    for text in SMALL_CENTRALIZER_CLASSES:
        yield {"check": "small-centralizer-radical", "class": text}


def lemma31_evaluate(G, inst):
    cls = _cls(inst["class"])
    mask = G.whole
    used = 0
    for f in all_chief_factors(G):
        if cls.contains(f.simple_type):
            mask &= small_centralizer_mask(G, f)
            used += 1
    radical = e_radical_mask(G, lambda s: not cls.contains(s))
    return mask == radical, {
        "factors": used,
        "intersection_order": mask.bit_count(),
        "radical_order": radical.bit_count(),
    }


# -- satellites --------------------------------------------------------------


def agreement_instances(G, ctx):
    for name in shipped_names():
        if shipped_spec(name).kind != "xlocal":
            yield {"check": "definition-vs-characterization", "satellite": name}


def agreement_evaluate(G, inst):
    spec = shipped_spec(inst["satellite"])
    d, c = membership(G, spec), membership_characterized(G, spec)
    return d == c, {"definition": d, "characterization": c}


def _transform_instances(suite_id):
    def instances(G, ctx):
        for name, chain in TRANSFORMS[suite_id]:
            yield {"check": "transform", "satellite": name, "chain": list(chain)}

    return instances


def transform_evaluate(G, inst):
    src = shipped_spec(inst["satellite"])
    dst = transformed(inst["satellite"], tuple(inst["chain"]))
    a, b = membership(G, src), membership(G, dst)
    return a == b, {"source": a, "transformed": b, "transformed_kind": dst.kind}


def known_instances(G, ctx):
    yield {"check": "nilpotent-satellite", "satellite": "nilpotent"}
    yield {"check": "quasinilpotent-satellite", "satellite": "quasinilpotent"}


def known_evaluate(G, inst):
    spec = shipped_spec(inst["satellite"])
    want = (Nilpotent() if inst["satellite"] == "nilpotent" else QuasiNilpotent()).test(G)
    got = membership(G, spec)
    return got == want, {"satellite_class": got, "direct_test": want}


def closure_suite_instances(G, ctx):
    for text in CLOSURE_FORMATIONS:
        F = formation(text)
        for ok, instance, detail in closure_instances(F, G.name, G):
            yield {"formation": text, **instance}


def closure_suite_evaluate(G, inst):
    F = formation(inst["formation"])
    core = {k: v for k, v in inst.items() if k not in ("formation", "suite")}
    violated = replay_closure(F, G, core)
    return not violated, {"reproduced": violated}


# -- corpus suites -----------------------------------------------------------


def equiv_instances(corpus):
    for text in EQUIV_FORMATIONS:
        for omega in EQUIV_OMEGAS:
            yield "corpus", {"check": "audit-agreement", "formation": text, "omega": list(omega)}


def equiv_evaluate(corpus, group, inst):
    F = formation(inst["formation"])
    omega = tuple(inst["omega"])
    a = saturation_audit(F, ("Nomega-saturated", omega), corpus)
    b = saturation_audit(F, ("omega-solubly-saturated", omega), corpus)
    return a.clean == b.clean, {
        "nomega_witnesses": a.witness_groups(),
        "omega_solubly_witnesses": b.witness_groups(),
    }


_CANONICAL = {}


def _canonical_spec(text, corpus):
    key = (id(corpus), text)
    got = _CANONICAL.get(key)
    if got is not None and got[0] is corpus:
        return got[1]
    F = formation(text)
    types = set()
    for _, G in corpus_entries(corpus):
        if G.order() > 1 and contains(F, G):
            types |= com(G)
    prime_values, simple_values = [], []
    for s in sorted(types):
        value = canonical_value(F, s, corpus)
        if s.abelian:
            prime_values.append((s.prime, value))
        else:
            simple_values.append((s.label, value))
    simple_values.sort(key=lambda kv: LABEL_ORDER[kv[0]])
    spec = SatelliteSpec(
        kind="composition",
        prime_values=tuple(prime_values),
        simple_values=tuple(simple_values),
        default_prime=Empty(),
        default_simple=Empty(),
        name=f"canonical-{text}",
    )
    _CANONICAL[key] = (corpus, spec)
    return spec


def canonical_instances(corpus):
    for text in CANONICAL_FORMATIONS:
        for name, _ in corpus_entries(corpus):
            yield name, {"check": "canonical-reconstruction", "formation": text}


def canonical_evaluate(corpus, group, inst):
    spec = _canonical_spec(inst["formation"], corpus)
    G = dict(corpus_entries(corpus))[group]
    got = membership(G, spec)
    want = contains(formation(inst["formation"]), G)
    return got == want, {"reconstructed_class": got, "formation": want}


def saturation_claim_instances(corpus):
    for text, kind, witness in SATURATION_CLAIMS:
        yield "corpus", {"check": "saturation-claim", "formation": text, "kind": kind,
                         "expected_witness": witness}


def saturation_claim_evaluate(corpus, group, inst):
    report = saturation_audit(formation(inst["formation"]), inst["kind"], corpus)
    witness = inst["expected_witness"]
    if witness is None:
        ok = report.clean
    else:
        ok = witness in report.witness_groups()
    return ok, {
        "instances": report.checked,
        "witnesses": report.witness_groups(),
        "violations": [v.to_json() for v in report.violations[:3]],
    }


# lemma-2.2 also relies on _np_context, which is corpus-level; it is computed once
# in the parent and shipped to workers as the suite context.

SUITES = {
    "lemma-2.1": GroupSuite("lemma-2.1", lemma21_instances, lemma21_evaluate),
    "lemma-2.2": GroupSuite(
        "lemma-2.2", lemma22_instances, lemma22_evaluate, prepare=_np_context,
        notes=("hypotheses are evaluated on the corpus: a builtin counts as N_p-saturated "
               "when its N_p-saturation audit is clean, and C_p in Com(F) is read as "
               "C_p in Com(F intersected with the corpus)",),
    ),
    "lemma-2.3": GroupSuite(
        "lemma-2.3", _extension_instances, lemma23_evaluate, prepare=_np_context,
        notes=("formations: builtins with a clean N_p-saturation audit containing every "
               "corpus p-group",),
    ),
    "lemma-2.4": GroupSuite(
        "lemma-2.4", _extension_instances, lemma24_evaluate, prepare=_np_context,
        notes=("formations: builtins with a clean N_p-saturation audit containing every "
               "corpus p-group",),
    ),
    "lemma-2.6": GroupSuite("lemma-2.6", lemma26_instances, lemma26_evaluate),
    "lemma-2.7": GroupSuite("lemma-2.7", lemma27_instances, lemma27_evaluate),
    "lemma-2.8": GroupSuite("lemma-2.8", lemma28_instances, lemma28_evaluate),
    "lemma-3.1": GroupSuite(
        "lemma-3.1", lemma31_instances, lemma31_evaluate,
        notes=("an empty intersection of small centralizers is the whole group",),
    ),
    "prop-agreement": GroupSuite("prop-agreement", agreement_instances, agreement_evaluate),
    "thm-4.4": GroupSuite("thm-4.4", _transform_instances("thm-4.4"), transform_evaluate),
    "thm-5.1": GroupSuite("thm-5.1", _transform_instances("thm-5.1"), transform_evaluate),
    "lemma-4.3": GroupSuite("lemma-4.3", _transform_instances("lemma-4.3"), transform_evaluate),
    "thm-4.5-equiv": CorpusSuite(
        "thm-4.5-equiv", equiv_instances, equiv_evaluate,
        notes=("agreement means both audits are clean or both find violations",),
    ),
    "canonical-reconstruction": CorpusSuite(
        "canonical-reconstruction", canonical_instances, canonical_evaluate,
        notes=("composition satellite with f(S) = quotients of G/C^S(G) over corpus members, "
               "empty outside Com",),
    ),
    "closure": GroupSuite("closure", closure_suite_instances, closure_suite_evaluate),
    "saturation": CorpusSuite("saturation", saturation_claim_instances, saturation_claim_evaluate),
    "known-classes": GroupSuite("known-classes", known_instances, known_evaluate),
}

SUITE_IDS = tuple(SUITES)


def get_suite(suite_id):
    try:
        return SUITES[suite_id]
    except KeyError:
        raise DomainError(
            f"unknown suite {suite_id!r} (expected one of {', '.join(SUITE_IDS)} or all)"
        ) from None
