"""Acceptance criteria, one test per criterion.

The end-to-end run (criterion 10) executes the CLI twice over the builtin
corpus; the suite-level criteria read their suite's part of the first
report and add independent checks where a criterion names them.  Each test
records one PASS/FAIL line, printed in the terminal summary.
"""

import json
import shutil
import subprocess
import sys
import time

import pytest

from formlab.centralizers import centralizer_of_section_mask
from formlab.formations import IsoSet, closure_audit, parse_formation
from formlab.formations.expr import BUILTINS
from formlab.harness import builtin_corpus, saturation_audit, strip_timing, verify_suite
from formlab.harness import suites
from formlab.permcore import are_isomorphic
from formlab.permcore.named import special_linear_2, symmetric
from formlab.permcore.ops import sylow_mask
from formlab.satellites import membership, shipped_names, shipped_spec
from formlab.structure import all_chief_factors, normal_subgroups

RESULTS = []
FULL_RUN_LIMIT = 600.0


def record(n, ok, text):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _command():
    exe = shutil.which("formlab")
    return [exe] if exe else [sys.executable, "-m", "formlab.cli"]


def _run_all(out):
    start = time.perf_counter()
    proc = subprocess.run(
        _command() + ["verify", "--suite", "all", "--corpus", "builtin", "--report", str(out)],
        capture_output=True, text=True,
    )
    return proc, time.perf_counter() - start


@pytest.fixture(scope="module")
def full_runs(tmp_path_factory):
    d = tmp_path_factory.mktemp("e2e")
    runs = []
    for i in range(2):
        out = d / f"run{i}.json"
        proc, seconds = _run_all(out)
        data = json.loads(out.read_text()) if out.exists() else None
        runs.append((proc, seconds, data))
    return runs


@pytest.fixture(scope="module")
def parts(full_runs):
    data = full_runs[0][2]
    assert data is not None, full_runs[0][0].stderr
    return {p["suite"]: p for p in data["parts"]}


@pytest.fixture(scope="module")
def corpus():
    return builtin_corpus()


def _violations(part):
    return len(part["violations"])


# 1 -----------------------------------------------------------------------------


def test_criterion_1_lemma28(parts):
    # timed on its own, on freshly built groups with empty caches
    fresh = builtin_corpus()
    start = time.perf_counter()
    report = verify_suite("lemma-2.8", fresh)
    seconds = time.perf_counter() - start
    SL = fresh.get("SL(2,3)")
    instances = list(suites.lemma28_instances(SL, None))
    ok_inst, detail = suites.lemma28_evaluate(SL, {"p": 2})
    ok = (report.clean and parts["lemma-2.8"]["clean"] and are_isomorphic(SL, special_linear_2(3))
          and {"check": "cp-modulo-frattini-op", "p": 2} in instances
          and ok_inst and detail["l_order"] == 2 and seconds < 60)
    record(1, ok, f"lemma-2.8 checked {report.checked}, {len(report.violations)} violations, "
                  f"SL(2,3) p=2 |L|={detail['l_order']}, {seconds:.1f}s")


# 2 -----------------------------------------------------------------------------


def test_criterion_2_lemma31(parts):
    part = parts["lemma-3.1"]
    classes = set(suites.SMALL_CENTRALIZER_CLASSES)
    ok = part["clean"] and classes == {"p2", "p3", "p2,p3", "A5", "p2,complement"}
    record(2, ok, f"lemma-3.1 over {len(classes)} classes, checked {part['checked']}, "
                  f"{_violations(part)} violations")


# 3 -----------------------------------------------------------------------------


def test_criterion_3_agreement(parts):
    part = parts["prop-agreement"]
    kinds = {shipped_spec(n).kind for n in shipped_names()} - {"xlocal"}
    reduction = shipped_spec("omega2-empty-complement")
    ok = (part["clean"] and kinds == {"local", "omegalocal", "composition", "lcomposition"}
          and reduction.complement_value.text() == "empty")
    record(3, ok, f"prop-agreement kinds {sorted(kinds)}, checked {part['checked']}, "
                  f"{_violations(part)} disagreements")


# 4 -----------------------------------------------------------------------------


def _all_sylows_normal(G):
    lat = set(normal_subgroups(G).masks)
    return all(sylow_mask(G, p) in lat for p in G.prime_divisors())


def _inner_on_every_chief_factor(G):
    t = G.table
    for f in all_chief_factors(G):
        c = centralizer_of_section_mask(G, f.upper.mask, f.lower.mask)
        if t.join(f.upper.mask, c) != G.whole:
            return False
    return True


def test_criterion_4_known_classes(corpus):
    nil, star = shipped_spec("nilpotent"), shipped_spec("quasinilpotent")
    names = corpus.names()
    nil_cls = {n for n in names if membership(corpus.get(n), nil)}
    nil_oracle = {n for n in names if _all_sylows_normal(corpus.get(n))}
    star_cls = {n for n in names if membership(corpus.get(n), star)}
    star_oracle = {n for n in names if _inner_on_every_chief_factor(corpus.get(n))}
    expected_in = {"A5", "SL(2,5)"} | nil_oracle
    expected_out = {"S3", "A4", "S4", "S5"}
    ok = (nil_cls == nil_oracle and star_cls == star_oracle
          and expected_in <= star_cls and not expected_out & star_cls)
    record(4, ok, f"nilpotent class {len(nil_cls)}/{len(nil_oracle)} groups, "
                  f"N* class {len(star_cls)}/{len(star_oracle)} groups")


# 5 -----------------------------------------------------------------------------


def test_criterion_5_saturation(corpus):
    ab = saturation_audit(parse_formation("abelian"), "2-saturated", corpus)
    nil = saturation_audit(parse_formation("nilpotent"), "saturated", corpus)
    mixed = parse_formation("and(nilpotent, sylow-abelian 2)")
    mixed_sat = saturation_audit(mixed, "saturated", corpus)
    mixed_3 = saturation_audit(mixed, "3-saturated", corpus)
    qn = saturation_audit(parse_formation("quasinilpotent"), "solubly-saturated", corpus)
    a = "Q8" in ab.witness_groups()
    b = nil.clean
    c = "Q8" in mixed_sat.witness_groups() and mixed_3.clean
    d = qn.clean
    record(5, a and b and c and d,
           f"(a) {a} (b) {b} (c) {c} (d) {d}")


# 6 -----------------------------------------------------------------------------


def test_criterion_6_transforms(parts):
    summary, ok = [], True
    for sid in ("thm-4.4", "thm-5.1", "lemma-4.3"):
        chains = suites.TRANSFORMS[sid]
        specs = {name for name, _ in chains}
        round_trip = any(len(chain) > 1 for _, chain in chains)
        ok &= parts[sid]["clean"] and len(specs) >= 3 and round_trip
        summary.append(f"{sid} {len(specs)} specs {_violations(parts[sid])} mismatches")
    record(6, ok, "; ".join(summary))


# 7 -----------------------------------------------------------------------------


def test_criterion_7_equivalence(parts):
    part = parts["thm-4.5-equiv"]
    combos = len(suites.EQUIV_FORMATIONS) * len(suites.EQUIV_OMEGAS)
    ok = part["clean"] and combos == 15 and part["checked"] == 15
    record(7, ok, f"thm-4.5-equiv {part['checked']} audit pairs, {_violations(part)} discrepancies")


# 8 -----------------------------------------------------------------------------


def test_criterion_8_canonical(parts):
    part = parts["canonical-reconstruction"]
    ok = part["clean"] and set(suites.CANONICAL_FORMATIONS) == {
        "nilpotent", "supersoluble", "quasinilpotent"}
    record(8, ok, f"canonical-reconstruction checked {part['checked']}, "
                  f"{_violations(part)} mismatches")


# 9 -----------------------------------------------------------------------------


def test_criterion_9_closure(parts, corpus):
    part = parts["closure"]
    covered = set(BUILTINS) <= set(suites.CLOSURE_FORMATIONS)
    S3 = symmetric(3)
    report = closure_audit(IsoSet((S3,), ("S3",)), corpus)
    q = [v for v in report.violations if v.instance["check"] == "Q"]
    orders = {v.detail["quotient_order"] for v in q}
    ok = part["clean"] and covered and {v.group for v in q} == {"S3"} and orders == {1, 2}
    record(9, ok, f"closure checked {part['checked']}, {_violations(part)} violations; "
                  f"IsoSet([S3]) Q-violations at {sorted({v.group for v in q})} "
                  f"quotient orders {sorted(orders)}")


# 10 ----------------------------------------------------------------------------


def test_criterion_10_end_to_end(full_runs):
    (p1, s1, d1), (p2, s2, d2) = full_runs
    same = d1 is not None and d2 is not None and strip_timing(d1) == strip_timing(d2)
    ok = p1.returncode == 0 and p2.returncode == 0 and same and max(s1, s2) < FULL_RUN_LIMIT
    record(10, ok, f"verify all: exit {p1.returncode}/{p2.returncode}, "
                   f"{s1:.0f}s/{s2:.0f}s, identical JSON {same}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
