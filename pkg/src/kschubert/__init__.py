"""Exact Schubert calculus in (equivariant) K-theory of flag varieties."""

__version__ = "0.1.0"

from .rootdata import CartanDatum, RootSystem, root_system
from .weyl import WeylElement, WeylGroup, format_word, parse_word, weyl_group
from .laurent import LaurentPoly, TensorElem, mono, one
from .demazure import CONVENTION, bar_w, demazure, euler_char, euler_char_T
from .lifts import ordinary_lift, schubert_lift_r, tensor_lift, u0_ordinary
from .structconst import (
    equivariant_chevalley,
    equivariant_constants,
    equivariant_partial,
    equivariant_table,
    expand_line_bundle,
    ordinary_chevalley,
    ordinary_constants,
    ordinary_partial,
    ordinary_table,
)
from .wonderful import KFlagElement, KXElement, gamma, kdec_basis_check, kx_multiply, lambda_class
from .oracle import TorusPoint, expand_by_evaluation, generic_point, reduce_modulo_augmented_invariants, weyl_dim
from .verify import run_suite

__all__ = [
    "CONVENTION",
    "CartanDatum",
    "KFlagElement",
    "KXElement",
    "LaurentPoly",
    "RootSystem",
    "TensorElem",
    "TorusPoint",
    "WeylElement",
    "WeylGroup",
    "bar_w",
    "demazure",
    "equivariant_chevalley",
    "equivariant_constants",
    "equivariant_partial",
    "equivariant_table",
    "euler_char",
    "euler_char_T",
    "expand_by_evaluation",
    "expand_line_bundle",
    "format_word",
    "gamma",
    "generic_point",
    "kdec_basis_check",
    "kx_multiply",
    "lambda_class",
    "mono",
    "one",
    "ordinary_chevalley",
    "ordinary_constants",
    "ordinary_lift",
    "ordinary_partial",
    "ordinary_table",
    "parse_word",
    "reduce_modulo_augmented_invariants",
    "root_system",
    "run_suite",
    "schubert_lift_r",
    "tensor_lift",
    "u0_ordinary",
    "weyl_dim",
    "weyl_group",
]
