"""AG-groups: left invertive groupoids with a left identity and inverses.

Validation, translation groups (left section, multiplication group, inner
mapping group), an equational law checker, small-group recognition and an
isomorph-free enumerator.
"""
__version__ = "0.1.0"

from .core import AGGroup, NotAnAGGroup, check_axioms, classify, validate
from .enumeration import SearchConfig, canonical_form, enumerate_ag_groups
from .groupid import GroupTable, is_isomorphic, recognize
from .laws import builtin_laws, check_law, parse_law, run_suite
from .mapgroup import PermGroup, closure, inner_mapping_group, left_section, mult_group, right_section
from .tables import CayleyTable, Permutation, compose, invert, parse_table, serialize_table

__all__ = [
    "AGGroup", "CayleyTable", "GroupTable", "NotAnAGGroup", "PermGroup", "Permutation", "SearchConfig",
    "builtin_laws", "canonical_form", "check_axioms", "check_law", "classify", "closure", "compose",
    "enumerate_ag_groups", "inner_mapping_group", "invert", "is_isomorphic", "left_section",
    "mult_group", "parse_law", "parse_table", "recognize", "right_section", "run_suite",
    "serialize_table", "validate",
]
