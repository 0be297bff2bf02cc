"""Exact arithmetic in Z_(p)[zeta] for zeta a primitive p^2-th root of unity.

Elements are residue polynomials modulo the p^2-th cyclotomic polynomial
Phi(x) = 1 + x^p + x^(2p) + ... + x^((p-1)p), with rational coefficients
whose denominators are prime to p.  Since the power basis is an integral
basis, an element lies in the localized ring exactly when every
coefficient denominator is prime to p; that invariant is re-checked on
construction.  The uniformizer is lam2 = zeta - 1 and the valuation is
computed through the norm (a single resultant), using that p is totally
ramified with residue degree one.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import IntegralityViolation, ZeroElement
from . import nt
from .rings import QQ, ZZ
from .unipoly import UniPoly, resultant


class CycloRing:
    """Coefficient-domain descriptor for Z_(p)[zeta_{p^2}]."""

    is_field = False

    def __init__(self, p: int):
        nt.require_prime(p)
        self.p = p
        self.phi = p * (p - 1)  # degree of the p^2-th cyclotomic polynomial

    @property
    def name(self):
        return f"Z_({self.p})[zeta_{self.p**2}]"

    def zero(self):
        return CyclotomicInt(self, (Fraction(0),) * self.phi, check=False)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return self.from_rational(Fraction(n))

    def from_rational(self, a: Fraction):
        a = Fraction(a)
        coeffs = (a,) + (Fraction(0),) * (self.phi - 1)
        return CyclotomicInt(self, coeffs)

    def zeta2(self):
        """The class of x: a primitive p^2-th root of unity."""
        coeffs = [Fraction(0)] * self.phi
        coeffs[1] = Fraction(1)
        return CyclotomicInt(self, tuple(coeffs), check=False)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def exact_div(self, a, b):
        return a.exact_div(b)

    def coeff_str(self, a) -> str:
        return ";".join(QQ.coeff_str(c) for c in a.coeffs)

    def reduce(self, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
        """Reduce a raw coefficient list modulo Phi_{p^2}."""
        phi, p = self.phi, self.p
        c = list(coeffs)
        for i in range(len(c) - 1, phi - 1, -1):
            a = c[i]
            if a == 0:
                continue
            c[i] = Fraction(0)
            # x^i = -x^(i-phi) * (1 + x^p + ... + x^((p-2)p))
            base = i - phi
            for k in range(p - 1):
                c[base + k * p] -= a
        c = c[:phi] + [Fraction(0)] * (phi - len(c))
        return tuple(c[:phi])

    def cyclotomic_polynomial(self) -> UniPoly:
        coeffs = [0] * (self.phi + 1)
        for k in range(self.p):
            coeffs[k * self.p] = 1
        return UniPoly.from_ints(QQ, coeffs)

    def __eq__(self, other):
        return isinstance(other, CycloRing) and self.p == other.p

    def __hash__(self):
        return hash(("CycloRing", self.p))


class CyclotomicInt:
    """An element of Z_(p)[zeta_{p^2}], immutable."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycloRing, coeffs, check: bool = True):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != ring.phi:
            raise ValueError("representative has wrong length")
        if check:
            for c in coeffs:
                if c.denominator % ring.p == 0:
                    raise IntegralityViolation(
                        f"denominator {c.denominator} not prime to p={ring.p}"
                    )
        self.ring = ring
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicInt)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring.p, self.coeffs))

    def __repr__(self):
        top = max((i for i, c in enumerate(self.coeffs) if c != 0), default=0)
        return f"Cyclo(p={self.ring.p}, [{', '.join(str(c) for c in self.coeffs[:top + 1])}])"

    # -- ring operations (closed in the localized ring) -------------------------

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicInt(
            self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), check=False
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return CyclotomicInt(
            self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), check=False
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CyclotomicInt(self.ring, tuple(-a for a in self.coeffs), check=False)

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (2 * self.ring.phi - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj != 0:
                    out[i + j] += ai * bj
        return CyclotomicInt(self.ring, self.ring.reduce(out), check=False)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers leave the ring; use exact_div")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, CyclotomicInt):
            if other.ring != self.ring:
                raise ValueError("cyclotomic elements over different primes")
            return other
        return self.ring.from_rational(Fraction(other))

    def scale_rational(self, a: Fraction) -> "CyclotomicInt":
        """Multiply by an exact rational; must stay p-integral."""
        a = Fraction(a)
        return CyclotomicInt(self.ring, tuple(c * a for c in self.coeffs))

    # -- division ----------------------------------------------------------------

    def _as_qpoly(self) -> UniPoly:
        return UniPoly(QQ, list(self.coeffs))

    def exact_div(self, other: "CyclotomicInt") -> "CyclotomicInt":
        """self / other when the quotient is p-integral; raises otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic element")
        phi_poly = self.ring.cyclotomic_polynomial()
        # inverse of other in Q(zeta) by the extended Euclidean algorithm
        r0, r1 = phi_poly, other._as_qpoly()
        s0 = UniPoly(QQ, ())
        s1 = UniPoly.constant(QQ, Fraction(1))
        while not r1.is_zero() and r1.degree > 0:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r1.is_zero():  # pragma: no cover - Phi is irreducible
            raise ZeroDivisionError("noninvertible element")
        inv = s1.scale(1 / r1.coeffs[0])
        prod = self._as_qpoly() * inv
        coeffs = self.ring.reduce(list(prod.coeffs) + [Fraction(0)])
        try:
            return CyclotomicInt(self.ring, coeffs)
        except IntegralityViolation as exc:
            raise IntegralityViolation(f"quotient not p-integral: {exc}") from exc

    # -- valuation ----------------------------------------------------------------

    def valuation(self):
        """The lam2-adic valuation; +infinity for zero.

        Computed as v_p(Res(Phi_{p^2}, self)): the norm, since p is totally
        ramified with residue degree one.
        """
        if self.is_zero():
            return math.inf
        # split off the rational content so the resultant runs over Z
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = math.gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        prim = [int(c / content) for c in self.coeffs]
        phi_z = UniPoly.from_ints(ZZ, [int(c) for c in self.ring.cyclotomic_polynomial().coeffs])
        norm_prim = resultant(phi_z, UniPoly(ZZ, prim))
        v = nt.valuation(norm_prim, self.ring.p) if norm_prim != 0 else math.inf
        return self.ring.phi * (
            nt.valuation(content.numerator, self.ring.p)
            - nt.valuation(content.denominator, self.ring.p)
        ) + v

    def residue_mod_lam2(self, field) -> object:
        """Image in the residue field F_p (the map sends zeta to 1)."""
        total = Fraction(0)
        for c in self.coeffs:
            total += c
        p = self.ring.p
        num = total.numerator % p
        den = total.denominator % p
        return field.el(num * pow(den, p - 2, p))

    def key(self):
        return self.coeffs


def cyclotomic_valuation(x: CyclotomicInt):
    """Module-level alias for the lam2-adic valuation."""
    return x.valuation()
