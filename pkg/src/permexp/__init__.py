"""Permutation-group engine and exact checks of p^(d(G)-2) <= |G|/exp(G)."""

from .config import Caps, CapExceeded, DEFAULT_CAPS
from .group import (
    Homomorphism,
    PermGroup,
    all_subgroups,
    coset_action,
    derived_subgroup,
    maximal_subgroups,
    normal_closure,
    quotient,
    subgroup,
)
from .invariants import (
    GroupInvariants,
    d_pgroup,
    exponent,
    invariants_report,
    max_element_order,
    min_generators,
    ratio_E,
    smallest_prime,
    structural_flags,
    sylow,
    sylow_system,
)
from .perm import Permutation, compose, element_order, format_cycles, identity, parse_cycles
from .theorem import TheoremVerdict, check_theorem

__version__ = "0.1.0"

__all__ = [
    "Caps", "CapExceeded", "DEFAULT_CAPS", "Homomorphism", "PermGroup", "all_subgroups",
    "coset_action", "derived_subgroup", "maximal_subgroups", "normal_closure", "quotient",
    "subgroup", "GroupInvariants", "d_pgroup", "exponent", "invariants_report",
    "max_element_order", "min_generators", "ratio_E", "smallest_prime", "structural_flags",
    "sylow", "sylow_system", "Permutation", "compose", "element_order", "format_cycles",
    "identity", "parse_cycles", "TheoremVerdict", "check_theorem",
]
