"""Formations with decidable membership, residuals and closure audits."""

from .audit import canonical_value, closure_audit, corpus_entries, dedup_isomorphic
from .classes import CoSet, SimpleClassSpec
from .dsl import format_formation, parse_formation
from .expr import (
    BUILTINS,
    Abelian,
    All,
    And,
    ClassOf,
    EClass,
    Empty,
    FormationExpr,
    FormSimple,
    GProduct,
    IsoSet,
    Nilpotent,
    NilpotentAbelianSylow,
    PGroups,
    PiGroups,
    QuasiNilpotent,
    Soluble,
    Supersoluble,
    Trivial,
    contains,
    formation_contains,
    is_empty,
    quotient_contains,
    residual,
    residual_mask,
)
