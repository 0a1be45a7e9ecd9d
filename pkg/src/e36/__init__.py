"""Exact arithmetic for the Lie superalgebra E(3,6) inside E(5,10).

Brackets of vector fields and closed 2-forms, the g0 = sl3 + sl2 + gl1
structure, the model of sl(3) irreducibles, induced modules M(F) with
singular vector search, and the smash-product D-operators.
"""

from .algebra import NAMED, Weight, check_relation_suite, e36_membership, g0_weight, graded_dimension, named_element
from .doperators import D_OPS, DBAR, SMElement, d_apply, dbar_apply, dpow_expand, hwv_decompose, lht
from .e510 import (
    InvariantError,
    SuperElement,
    TwoForm,
    VectorField,
    consistent_degree,
    d,
    dp,
    secondary_degree,
    super_bracket,
    wedge_bracket,
    x,
)
from .induced import InducedElement, InducedModule, parametric_y_search, reorder, singular_search
from .model import IrrepF, ModelElement, hwv_test
from .parser import ParseError, InvalidElementError, parse_element, parse_expression
from .scalar import Polynomial, format_rational
from .verify import LemmaReport, enumerate_hwv_lambda, kernel_e0prime, theorem41_scan, verify_lemma

__all__ = [
    "NAMED", "Weight", "check_relation_suite", "e36_membership", "g0_weight", "graded_dimension", "named_element",
    "D_OPS", "DBAR", "SMElement", "d_apply", "dbar_apply", "dpow_expand", "hwv_decompose", "lht",
    "InvariantError", "SuperElement", "TwoForm", "VectorField", "consistent_degree", "d", "dp",
    "secondary_degree", "super_bracket", "wedge_bracket", "x",
    "InducedElement", "InducedModule", "parametric_y_search", "reorder", "singular_search",
    "IrrepF", "ModelElement", "hwv_test", "ParseError", "InvalidElementError", "parse_element",
    "parse_expression", "Polynomial", "format_rational",
    "LemmaReport", "enumerate_hwv_lambda", "kernel_e0prime", "theorem41_scan", "verify_lemma",
]
