"""Coefficient-domain descriptors for the polynomial types.

A "ring" here is a lightweight descriptor providing zero/one/from_int
plus exact division; the elements themselves (int, Fraction, FqElement,
CyclotomicInt, UniPoly) carry the arithmetic operators.  Polynomials
store a reference to their declared coefficient domain.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import IntegralityViolation


class IntRing:
    """The rational integers."""

    is_field = False
    name = "ZZ"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return int(n)

    def is_zero(self, a) -> bool:
        return a == 0

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r != 0:
            raise IntegralityViolation(f"{a} not divisible by {b} in ZZ")
        return q

    def coeff_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, IntRing)

    def __hash__(self):
        return hash("ZZ")


class FractionRing:
    """The rational numbers, exact."""

    is_field = True
    name = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def is_zero(self, a) -> bool:
        return a == 0

    def exact_div(self, a, b):
        return Fraction(a) / Fraction(b)

    def inv(self, a):
        return 1 / Fraction(a)

    def coeff_str(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, FractionRing)

    def __hash__(self):
        return hash("QQ")


ZZ = IntRing()
QQ = FractionRing()


class PolyRing:
    """Univariate polynomials over a base domain, used as a coefficient domain.

    This is what lets resultants over ZZ[y] or F_p[y] run through the same
    Sylvester/Bareiss code path as resultants over a field.
    """

    is_field = False

    def __init__(self, base, var: str = "y"):
        from .unipoly import UniPoly  # local import to avoid a cycle

        self.base = base
        self.var = var
        self._poly = UniPoly

    @property
    def name(self):
        return f"{self.base.name}[{self.var}]"

    def zero(self):
        return self._poly(self.base, ())

    def one(self):
        return self._poly(self.base, (self.base.one(),))

    def from_int(self, n: int):
        return self._poly(self.base, (self.base.from_int(n),))

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def exact_div(self, a, b):
        return a.exact_div(b)

    def coeff_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.base == other.base and self.var == other.var

    def __hash__(self):
        return hash(("PolyRing", self.base, self.var))


def qmod1(x: Fraction) -> Fraction:
    """Canonical representative of x in Q/Z, in [0, 1)."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def additive_order_mod1(x: Fraction) -> int:
    """Additive order of x + Z in Q/Z (the reduced denominator)."""
    return qmod1(x).denominator
