"""Exact oriented matroid tools for neighborly polytopes."""

from ._core import (
    Chirotope,
    bounds,
    brute_lex_extension_count,
    canonical_form,
    classify,
    contraction,
    cyclic_polytope,
    deletion,
    dual,
    enumerate_family,
    facets,
    gale_sew,
    is_valid,
    labeled_corank3_count,
    lex_extend,
    sew,
    stc,
    universal_flags,
)

__all__ = [
    "Chirotope",
    "bounds",
    "brute_lex_extension_count",
    "canonical_form",
    "classify",
    "contraction",
    "cyclic_polytope",
    "deletion",
    "dual",
    "enumerate_family",
    "facets",
    "gale_sew",
    "is_valid",
    "labeled_corank3_count",
    "lex_extend",
    "sew",
    "stc",
    "universal_flags",
]
