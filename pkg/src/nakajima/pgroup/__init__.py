"""Finite p-groups: closure, invariants, maximal subgroups, isomorphism."""

from .group import (
    FiniteGroup, Fingerprint, center, census, closure, derived_subgroup, element_orders,
    exponent, fingerprint, frattini_subgroup, generated, lower_central_series,
    nilpotency_class, rank_d,
)
from .structure import (
    burnside_basis, extend_hom, find_isomorphism, is_isomorphic, maximal_subgroup_sets,
    maximal_subgroups, minimal_generating_set, presentation_check,
)
from .reference import identify, quotient, reference_group

__all__ = [
    "FiniteGroup", "Fingerprint", "burnside_basis", "center", "census", "closure",
    "derived_subgroup", "element_orders", "exponent", "extend_hom", "find_isomorphism",
    "fingerprint", "frattini_subgroup", "generated", "identify", "is_isomorphic", "lower_central_series",
    "maximal_subgroup_sets", "maximal_subgroups", "minimal_generating_set", "nilpotency_class",
    "presentation_check", "quotient", "rank_d", "reference_group",
]
