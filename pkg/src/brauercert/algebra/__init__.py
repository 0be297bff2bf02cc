"""Exact arithmetic: integers, rationals, finite fields, polynomials, cyclotomics."""

from .cyclo import CycloRing, CyclotomicInt, cyclotomic_valuation
from .finitefield import (
    Fq,
    FqElement,
    build_ext_field,
    dlog,
    power_residue_order,
    primitive_root_of_unity,
)
from .rings import QQ, ZZ, PolyRing, additive_order_mod1, qmod1
from .ternary import TernaryForm
from .unipoly import (
    UniPoly,
    det_bareiss,
    gcd_bivariate,
    has_root_in_extension,
    is_separable,
    resultant,
    roots_in_field,
)

__all__ = [
    "CycloRing",
    "CyclotomicInt",
    "cyclotomic_valuation",
    "Fq",
    "FqElement",
    "build_ext_field",
    "dlog",
    "power_residue_order",
    "primitive_root_of_unity",
    "QQ",
    "ZZ",
    "PolyRing",
    "additive_order_mod1",
    "qmod1",
    "TernaryForm",
    "UniPoly",
    "det_bareiss",
    "gcd_bivariate",
    "has_root_in_extension",
    "is_separable",
    "resultant",
    "roots_in_field",
]
