"""JSON wire formats for polynomials and field descriptors.

Polynomials serialize as arrays of [exponent-tuple, coefficient-string]
pairs with decimal coefficients; field descriptors as {p, m, defining_poly}.
"""

from __future__ import annotations

from fractions import Fraction

from .finitefield import Fq
from .rings import QQ, ZZ
from .ternary import TernaryForm
from .unipoly import UniPoly


def unipoly_to_json(f: UniPoly):
    return [
        [[i], f.ring.coeff_str(c)]
        for i, c in enumerate(f.coeffs)
        if not f.ring.is_zero(c)
    ]


def ternary_to_json(f: TernaryForm):
    return f.to_json_obj()


def field_to_json(field: Fq):
    return field.to_json_obj()


def field_from_json(obj) -> Fq:
    return Fq(int(obj["p"]), int(obj["m"]), tuple(int(c) for c in obj["defining_poly"]))


def coeff_from_str(ring, s: str):
    if ring == ZZ:
        return int(s)
    if ring == QQ:
        return Fraction(s)
    if isinstance(ring, Fq):
        return ring.from_coeffs([int(t) for t in s.split(",")])
    raise TypeError(f"no string decoding for domain {ring!r}")


def unipoly_from_json(ring, obj) -> UniPoly:
    if not obj:
        return UniPoly(ring, ())
    top = max(e[0][0] for e in obj)
    coeffs = [ring.zero()] * (top + 1)
    for expo, s in obj:
        coeffs[expo[0]] = coeff_from_str(ring, s)
    return UniPoly(ring, coeffs)


def ternary_from_json(ring, obj) -> TernaryForm:
    if not obj:
        return TernaryForm(ring, 0, {})
    degree = sum(obj[0][0])
    terms = {tuple(expo): coeff_from_str(ring, s) for expo, s in obj}
    return TernaryForm(ring, degree, terms)
