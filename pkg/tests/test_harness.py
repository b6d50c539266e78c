import json

import pytest

from formlab.errors import FormlabError
from formlab.formations import parse_formation
from formlab.harness import (
    SUITE_IDS,
    builtin_corpus,
    check_manifest,
    emit_report,
    get_suite,
    load_corpus,
    pinned_manifest,
    replay,
    replay_saturation,
    resolve_corpus,
    saturation_audit,
    section_module,
    split_extension,
    strip_timing,
    verify_suite,
    write_corpus,
)
from formlab.harness.construct import modules_isomorphic, section_matrices
from formlab.harness.saturation import parse_kind
from formlab.permcore import are_isomorphic, direct_product
from formlab.permcore.named import cyclic, elementary_abelian, quaternion, symmetric
from formlab.report import AuditReport
from formlab.structure import chief_series, normal_subgroups


# -- corpus ----------------------------------------------------------------------


def test_corpus_bounds():
    c60 = builtin_corpus(max_order=60)
    assert "A5" in c60.names()
    assert "PSL(2,7)" not in c60.names()
    assert all(c60.get(n).order() <= 60 for n in c60.names())
    assert builtin_corpus(max_order=1).names() == ["C1"]


def test_default_corpus_matches_pinned_manifest(corpus):
    assert len(corpus) >= 50
    pinned = pinned_manifest()
    assert len(pinned["entries"]) == len(corpus)
    check_manifest(corpus, pinned)


def test_corpus_has_no_isomorphic_duplicates(corpus):
    names = corpus.names()
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            A, B = corpus.get(a), corpus.get(b)
            if A.order() == B.order() and A.order() <= 24:
                assert not are_isomorphic(A, B), (a, b)


def test_write_and_load_round_trip(tmp_path):
    c = builtin_corpus(max_order=24)
    write_corpus(c, tmp_path)
    back = load_corpus(tmp_path)
    assert back.names() == c.names()
    for n in c.names():
        assert back.get(n).order() == c.get(n).order()
    first = sorted(tmp_path.glob("*.grp"))[0]
    first.write_text(first.read_text() + "(1 2)\n")
    with pytest.raises(FormlabError):
        load_corpus(tmp_path)


def test_resolve_corpus():
    assert len(resolve_corpus("builtin:12")) == len(builtin_corpus(max_order=12))
    with pytest.raises(FormlabError):
        resolve_corpus("/nonexistent/corpus")


# -- split extensions ---------------------------------------------------------------


def test_split_extension_recovers_s4():
    S4 = symmetric(4)
    v4 = chief_series(S4)[0]
    E = split_extension(S4, v4.upper.mask, 1, v4.upper.mask)
    assert E.order() == 24
    assert are_isomorphic(E, S4)


def test_split_extension_central_factor():
    Q = quaternion()
    z = chief_series(Q)[0]
    E = split_extension(Q, z.upper.mask, 1, Q.whole)
    assert are_isomorphic(E, cyclic(2))
    top = chief_series(Q)[1]
    E = split_extension(Q, top.upper.mask, top.lower.mask, top.upper.mask)
    assert E.order() == 4 and E.is_abelian()


def test_module_isomorphism():
    G = direct_product(cyclic(2), symmetric(3))
    lat = normal_subgroups(G)
    twos = [m for m in lat.masks if m.bit_count() == 2]
    mods = [section_matrices(G, m, 1) for m in twos]
    assert all(modules_isomorphic(a, mods[0]) for a in mods)
    a3 = next(m for m in lat.masks if m.bit_count() == 3)
    assert modules_isomorphic(section_matrices(G, a3, 1), mods[0]) is False


# -- saturation ---------------------------------------------------------------------


def test_parse_kind():
    assert parse_kind("2-saturated") == ("p-saturated", (2,))
    assert parse_kind("saturated") == ("saturated", ())
    with pytest.raises(FormlabError):
        parse_kind("bogus")


def test_saturation_examples(corpus):
    ab = saturation_audit(parse_formation("abelian"), "2-saturated", corpus)
    assert "Q8" in {v.group for v in ab.violations}
    assert saturation_audit(parse_formation("nilpotent"), "saturated", corpus).clean
    mixed = parse_formation("and(nilpotent, sylow-abelian 2)")
    bad = saturation_audit(mixed, "saturated", corpus)
    assert "Q8" in {v.group for v in bad.violations}


def test_saturation_witness_replays(corpus):
    F = parse_formation("abelian")
    report = saturation_audit(F, "2-saturated", corpus)
    for v in report.violations:
        assert replay_saturation(F, corpus.get(v.group), v.instance)
    data = json.loads(emit_report(report))
    q8 = next(v for v in data["violations"] if v["group"] == "Q8")
    assert q8["instance"]["normal"]
    assert q8["detail"] == {"quotient_in_class": True, "group_in_class": False}


# -- suites and reports ------------------------------------------------------------------


def test_suite_ids_are_unique():
    assert len(SUITE_IDS) == len(set(SUITE_IDS))
    for sid in SUITE_IDS:
        assert get_suite(sid).id == sid
    with pytest.raises(FormlabError):
        get_suite("lemma-9.9")


def test_replay_of_a_forced_violation():
    corpus = builtin_corpus(max_order=24)
    report = verify_suite("lemma-2.8", corpus)
    assert report.clean
    inst = {"suite": "lemma-2.8", "check": "cp-modulo-frattini-op", "p": 2}
    assert not replay({"group": "SL(2,3)", "instance": inst}, corpus)


def test_empty_report_json():
    data = json.loads(emit_report(AuditReport(suite="x")))
    assert data["violations"] == []


def test_text_report_layout():
    corpus = builtin_corpus(max_order=12)
    report = verify_suite("lemma-2.7", corpus)
    text = emit_report(report, "text")
    lines = text.strip().splitlines()
    for n in corpus.names():
        assert any(line.split()[0] == n for line in lines)
    assert lines[-1].startswith("summary: lemma-2.7")


def test_report_written_to_file(tmp_path):
    corpus = builtin_corpus(max_order=12)
    report = verify_suite("lemma-2.8", corpus)
    out = tmp_path / "r.json"
    emit_report(report, "json", out)
    assert json.loads(out.read_text())["suite"] == "lemma-2.8"


def test_deterministic_json():
    corpus = builtin_corpus(max_order=24)
    a = json.loads(emit_report(verify_suite("lemma-3.1", corpus)))
    b = json.loads(emit_report(verify_suite("lemma-3.1", corpus)))
    assert strip_timing(a) == strip_timing(b)


def test_parallel_matches_serial():
    corpus = builtin_corpus(max_order=24)
    a = json.loads(emit_report(verify_suite("lemma-2.1", corpus)))
    b = json.loads(emit_report(verify_suite("lemma-2.1", corpus, jobs=2)))
    assert strip_timing(a) == strip_timing(b)
