"""Python bindings for the sl3 web skein calculus engine."""

from ._core import (
    LaurentPoly,
    Sl3Error,
    Web,
    bracket,
    certify_indecomposable,
    certify_not_isomorphic,
    classify,
    enumerate,
    evaluate_foams,
    glue,
    graded_hom_dim,
    invariant_dim,
    is_nice,
    load_webs,
    mirror,
    parse_webs,
    reduce,
    theta_value,
    verify_key_lemma,
)

__all__ = [
    "LaurentPoly",
    "Sl3Error",
    "Web",
    "bracket",
    "certify_indecomposable",
    "certify_not_isomorphic",
    "classify",
    "enumerate",
    "evaluate_foams",
    "glue",
    "graded_hom_dim",
    "invariant_dim",
    "is_nice",
    "load_webs",
    "mirror",
    "parse_webs",
    "reduce",
    "theta_value",
    "verify_key_lemma",
]
