"""Corpora, saturation audits and verification suites."""

from .construct import section_module, split_extension
from .corpus import (
    Corpus,
    CorpusEntry,
    builtin_corpus,
    check_manifest,
    default_corpus,
    load_corpus,
    pinned_manifest,
    resolve_corpus,
    write_corpus,
)
from .runner import emit_report, replay, strip_timing, verify_all, verify_suite
from .saturation import hypothesis_masks, parse_kind, replay_saturation, saturation_audit
from .suites import SUITE_IDS, SUITES, get_suite

__all__ = [
    "Corpus", "CorpusEntry", "SUITES", "SUITE_IDS", "builtin_corpus", "check_manifest",
    "default_corpus", "emit_report", "get_suite", "hypothesis_masks", "load_corpus",
    "parse_kind", "pinned_manifest", "replay", "replay_saturation", "resolve_corpus",
    "saturation_audit", "section_module", "split_extension", "strip_timing", "verify_all",
    "verify_suite", "write_corpus",
]
