"""Permutation-group kernel."""

from .groups import PermGroup, Subgroup, is_prime, parse_group, prime_factors, read_group
from .isomorphism import are_isomorphic, find_isomorphism
from .ops import (
    center,
    conjugacy_classes,
    contains_element,
    derived_subgroup,
    direct_product,
    group_order,
    is_soluble,
    normal_closure,
    subgroup_generated,
    sylow_subgroup,
)
from .perm import Permutation, format_group_text, parse_cycles
from .quotient import Epimorphism, coset_action, quotient, section
from .semidirect import Module, SemidirectProduct, semidirect

__all__ = [
    "Epimorphism", "Module", "PermGroup", "Permutation", "SemidirectProduct", "Subgroup",
    "are_isomorphic", "center", "conjugacy_classes", "contains_element", "coset_action",
    "derived_subgroup", "direct_product", "find_isomorphism", "format_group_text",
    "group_order", "is_prime", "is_soluble", "normal_closure", "parse_cycles", "parse_group",
    "prime_factors", "quotient", "read_group", "section", "semidirect", "subgroup_generated",
    "sylow_subgroup",
]
