"""Exact integer combinatorics for the anti-canonical class of BSDH varieties.

Root systems and Weyl-group words feed a Picard-group calculus with two
bases, positivity verdicts and a Demazure-operator character.
"""
from .bsdh import (
    Classification,
    PicardClass,
    anticanonical_o_coeffs,
    anticanonical_x_coeffs,
    classify,
    coxeter_census,
    coxeter_gg_criterion,
    fano_all_expressions_bruteforce,
    fano_all_expressions_criterion,
    minuscule_gg_check,
    o_coeffs_via_decomposition,
    o_to_x,
    x_to_o,
)
from .character import Character, anticanonical_character, character_lowest_weight_report
from .errors import (
    BSDHError,
    HypothesisError,
    InvariantViolation,
    LetterError,
    NotMinusculeError,
    NotReducedError,
    RankError,
)
from .rootsys import DynkinType, RootSystem, build_root_system, minuscule_weights, root_system
from .weyl import (
    WeylElement,
    all_reduced_words,
    commutation_classes,
    element_of,
    is_reduced,
    longest_element,
    parse_word,
)

__all__ = [
    "Classification",
    "PicardClass",
    "anticanonical_o_coeffs",
    "anticanonical_x_coeffs",
    "classify",
    "coxeter_census",
    "coxeter_gg_criterion",
    "fano_all_expressions_bruteforce",
    "fano_all_expressions_criterion",
    "minuscule_gg_check",
    "o_coeffs_via_decomposition",
    "o_to_x",
    "x_to_o",
    "Character",
    "anticanonical_character",
    "character_lowest_weight_report",
    "BSDHError",
    "HypothesisError",
    "InvariantViolation",
    "LetterError",
    "NotMinusculeError",
    "NotReducedError",
    "RankError",
    "DynkinType",
    "RootSystem",
    "build_root_system",
    "minuscule_weights",
    "root_system",
    "WeylElement",
    "all_reduced_words",
    "commutation_classes",
    "element_of",
    "is_reduced",
    "longest_element",
    "parse_word",
]

__version__ = "0.1.0"
