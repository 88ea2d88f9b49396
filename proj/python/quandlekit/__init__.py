"""Finite quandles, Alexander quandles and maximal connected decompositions."""

from ._quandlekit import (
    AxiomViolationError,
    NotASubquandle,
    ParseError,
    Quandle,
    UnsupportedPresentation,
    alexander,
    check_axioms,
    component_ideal,
    components,
    conj_cyclic,
    conj_symmetric,
    dihedral,
    find_isomorphism,
    is_connected,
    maximal_decomposition,
    prop_5_6,
    type_of,
    verify,
)

__all__ = [
    "AxiomViolationError",
    "NotASubquandle",
    "ParseError",
    "Quandle",
    "UnsupportedPresentation",
    "alexander",
    "check_axioms",
    "component_ideal",
    "components",
    "conj_cyclic",
    "conj_symmetric",
    "dihedral",
    "find_isomorphism",
    "is_connected",
    "maximal_decomposition",
    "prop_5_6",
    "type_of",
    "verify",
]
