"""Running suites over a corpus, replaying witnesses and writing reports."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from ..errors import DomainError
from ..formations.audit import corpus_entries
from ..permcore.groups import parse_group
from ..permcore.perm import format_group_text
from ..report import AuditReport, dumps
from .suites import SUITE_IDS, get_suite


def _group_results(suite, G, ctx):
    out = []
    for instance in suite.instances(G, ctx):
        ok, detail = suite.evaluate(G, instance)
        out.append((ok, {"suite": suite.id, **instance}, detail))
    return out


def _worker(suite_id, name, text, ctx):
    G = parse_group(text, name=name)
    return _group_results(get_suite(suite_id), G, ctx)


def _corpus_label(corpus):
    return getattr(corpus, "label", "custom")


def verify_suite(suite_id, corpus, jobs=1, pool=None):
    """Run one suite (or ``all``) and return its report."""
    if suite_id == "all":
        return verify_all(corpus, jobs)
    suite = get_suite(suite_id)
    start = time.perf_counter()
    report = AuditReport(suite=suite_id, corpus=_corpus_label(corpus), notes=list(suite.notes))
    entries = corpus_entries(corpus)
    if suite.per_group:
        ctx = suite.prepare(corpus) if suite.prepare else None
        if jobs > 1 or pool is not None:
            own = pool is None
            pool = pool or ProcessPoolExecutor(max_workers=jobs)
            try:
                futures = [
                    pool.submit(_worker, suite_id, name,
                                format_group_text(G.degree, G.generators), ctx)
                    for name, G in entries
                ]
                results = [f.result() for f in futures]
            finally:
                if own:
                    pool.shutdown()
        else:
            results = [_group_results(suite, G, ctx) for _, G in entries]
        for (name, _), rows in zip(entries, results):
            report.verdicts.setdefault(name, "clean")
            for ok, instance, detail in rows:
                report.add(name, ok, instance, detail)
    else:
        for name, instance in suite.instances(corpus):
            ok, detail = suite.evaluate(corpus, name, instance)
            report.add(name, ok, {"suite": suite_id, **instance}, detail)
    report.timing = time.perf_counter() - start
    return report


def verify_all(corpus, jobs=1):
    start = time.perf_counter()
    report = AuditReport(suite="all", corpus=_corpus_label(corpus))
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for suite_id in SUITE_IDS:
            part = verify_suite(suite_id, corpus, jobs, pool=pool)
            report.parts.append(part)
            report.checked += part.checked
            report.violations.extend(part.violations)
    finally:
        if pool is not None:
            pool.shutdown()
    report.verdicts = {p.suite: ("clean" if p.clean else "violation") for p in report.parts}
    report.timing = time.perf_counter() - start
    return report


def replay(violation, corpus):
    """True when a recorded violation still fails on re-evaluation."""
    instance = dict(violation.instance if hasattr(violation, "instance") else violation["instance"])
    group = violation.group if hasattr(violation, "group") else violation["group"]
    suite = get_suite(instance.pop("suite"))
    if suite.per_group:
        G = dict(corpus_entries(corpus))[group]
        ok, _ = suite.evaluate(G, instance)
    else:
        ok, _ = suite.evaluate(corpus, group, instance)
    return not ok


def strip_timing(data):
    """A report's JSON without timing fields (for determinism checks)."""
    if isinstance(data, dict):
        return {k: strip_timing(v) for k, v in data.items() if k != "timing"}
    if isinstance(data, list):
        return [strip_timing(v) for v in data]
    return data


def emit_report(report, fmt="json", path=None):
    """Serialize ``report``; writes to ``path`` when given and returns the text."""
    if fmt == "json":
        text = dumps(report.to_json())
    elif fmt == "text":
        text = report.to_text()
    else:
        raise DomainError(f"unknown report format {fmt!r} (expected json or text)")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
