"""Univariate polynomials over a declared coefficient domain.

The same dense representation serves F_p, F_{p^m}, Q, Z, Z[y] (nested)
and the cyclotomic coefficient ring.  Resultants go through a single
fraction-free Bareiss determinant of the Sylvester matrix, so they are
exact over Z[y] and friends as well as over fields.
"""

from __future__ import annotations

import hashlib
import random

from ..errors import IntegralityViolation, Undefined, ZeroElement
from .finitefield import Fq
from .rings import PolyRing


class UniPoly:
    """Dense univariate polynomial; coeffs ascending, no trailing zeros."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        coeffs = list(coeffs)
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_ints(cls, ring, ints):
        return cls(ring, [ring.from_int(n) for n in ints])

    @classmethod
    def x(cls, ring):
        return cls(ring, [ring.zero(), ring.one()])

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, [c])

    # -- basics ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self):
        if self.is_zero():
            raise ZeroElement("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero()

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(type(self)), self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            parts.append(f"({c})*X^{i}" if i else f"({c})")
        return " + ".join(parts)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.ring.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return UniPoly(self.ring, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.ring.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return UniPoly(self.ring, [x - y for x, y in zip(a, b)])

    def __neg__(self):
        return UniPoly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero() or other.is_zero():
                return UniPoly(self.ring, ())
            z = self.ring.zero()
            out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if self.ring.is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(self.ring, out)
        return self.scale(other)

    def scale(self, c):
        return UniPoly(self.ring, [a * c for a in self.coeffs])

    def __pow__(self, e: int):
        result = UniPoly.constant(self.ring, self.ring.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int):
        """Multiply by X^k."""
        if self.is_zero():
            return self
        return UniPoly(self.ring, [self.ring.zero()] * k + list(self.coeffs))

    def derivative(self):
        return UniPoly(
            self.ring,
            [c * self.ring.from_int(i) for i, c in enumerate(self.coeffs)][1:],
        )

    def evaluate(self, x):
        """Horner evaluation at an element of the coefficient domain."""
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn, new_ring):
        return UniPoly(new_ring, [fn(c) for c in self.coeffs])

    # -- division (field coefficients or monic divisor) -------------------------

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(ring, ()), self
        lead = other.lc()
        if ring.is_field:
            lead_inv = ring.inv(lead)
        else:
            lead_inv = None
        quo = [ring.zero()] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if ring.is_zero(top):
                continue
            c = top * lead_inv if lead_inv is not None else ring.exact_div(top, lead)
            quo[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
        return UniPoly(ring, quo), UniPoly(ring, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly"):
        """Quotient when the division is exact; IntegralityViolation otherwise."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise IntegralityViolation("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.ring.inv(self.lc()))

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd; requires field coefficients."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def pow_mod(self, e: int, mod: "UniPoly") -> "UniPoly":
        result = UniPoly.constant(self.ring, self.ring.one()) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result


# ---------------------------------------------------------------------------
# determinants and resultants
# ---------------------------------------------------------------------------

def det_bareiss(rows, ring):
    """Fraction-free determinant; exact over any integral domain."""
    n = len(rows)
    if n == 0:
        return ring.one()
    m = [list(r) for r in rows]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if ring.is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not ring.is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = ring.exact_div(num, prev)
            m[i][k] = ring.zero()
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def sylvester_matrix(f: UniPoly, g: UniPoly):
    """Sylvester matrix with the f-block on top (deg g rows of f)."""
    m, n = f.degree, g.degree
    ring = f.ring
    z = ring.zero()
    size = m + n
    rows = []
    fdesc = list(reversed(f.coeffs))
    gdesc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([z] * i + fdesc + [z] * (size - m - 1 - i))
    for i in range(m):
        rows.append([z] * i + gdesc + [z] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly):
    """Res(f, g) = det of the Sylvester matrix, f-rows first.

    Vanishes iff f and g share a root in the algebraic closure.  With this
    convention Res(f, c) = c^deg(f) for constants and Res(f, g*h) =
    Res(f, g) * Res(f, h).
    """
    if f.is_zero() and g.is_zero():
        raise Undefined("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return f.ring.zero()
    ring = f.ring
    if f.degree == 0 and g.degree == 0:
        return ring.one()
    if g.degree == 0:
        return g.lc() ** f.degree if f.degree > 0 else ring.one()
    if f.degree == 0:
        return f.lc() ** g.degree
    return det_bareiss(sylvester_matrix(f, g), ring)


def is_separable(f: UniPoly) -> bool:
    """True iff gcd(f, f') is constant (field coefficients)."""
    if f.is_zero():
        raise ZeroElement("separability of the zero polynomial")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero():
        return False
    return f.gcd(d).degree == 0


# ---------------------------------------------------------------------------
# roots over finite fields
# ---------------------------------------------------------------------------

def has_root_in_extension(f: UniPoly, m: int) -> bool:
    """Does f over F_q have a root in F_{q^m}?

    Checked as gcd(f, X^{q^m} - X) nonconstant, with X^{q^m} computed by
    modular exponentiation; never enumerates the extension.
    """
    if f.is_zero():
        raise ZeroElement("zero polynomial")
    field = f.ring
    if not isinstance(field, Fq):
        raise TypeError("has_root_in_extension needs finite-field coefficients")
    if f.degree == 0:
        return False
    x = UniPoly.x(field)
    t = x.pow_mod(field.q**m, f)
    return f.gcd(t - x).degree > 0


def _seed_material(f: UniPoly, seed: int) -> int:
    h = hashlib.sha256()
    h.update(str(seed).encode())
    h.update(repr((f.ring.p, f.ring.m)).encode())
    for c in f.coeffs:
        h.update(repr(c.coeffs).encode())
    return int.from_bytes(h.digest()[:8], "big")


def roots_in_field(f: UniPoly, seed: int = 0) -> list:
    """All roots of f lying in its own coefficient field, sorted canonically.

    Equal-degree splitting with a deterministic PRNG keyed to the input, so
    results are byte-stable run to run.
    """
    field = f.ring
    if not isinstance(field, Fq):
        raise TypeError("roots_in_field needs finite-field coefficients")
    if f.is_zero():
        raise ZeroElement("zero polynomial has every root")
    if f.degree == 0:
        return []
    x = UniPoly.x(field)
    t = x.pow_mod(field.q, f)
    s = f.gcd(t - x)
    if s.degree <= 0:
        return []
    roots = []
    rng = random.Random(_seed_material(f, seed))

    def split(g: UniPoly):
        if g.degree == 1:
            roots.append(-g.coeffs[0] / g.coeffs[1])
            return
        if field.p == 2:
            # tiny fields only; scan
            for a in field.elements():
                if g.evaluate(a).is_zero():
                    roots.append(a)
            return
        while True:
            a = field.from_coeffs([rng.randrange(field.p) for _ in range(field.m)])
            h = (x + UniPoly.constant(field, a)).pow_mod((field.q - 1) // 2, g)
            d = g.gcd(h - UniPoly.constant(field, field.one()))
            if 0 < d.degree < g.degree:
                split(d)
                split(g.exact_div(d).monic())
                return

    split(s.monic())
    roots.sort(key=lambda r: r.key())
    return roots


# ---------------------------------------------------------------------------
# bivariate helpers: polynomials in x over F[y] (PolyRing coefficients)
# ---------------------------------------------------------------------------

def content_y(f: UniPoly) -> UniPoly:
    """gcd of the F[y]-coefficients of f in (F[y])[x]."""
    ring = f.ring
    assert isinstance(ring, PolyRing)
    c = ring.zero()
    for a in f.coeffs:
        c = c.gcd(a) if not c.is_zero() else a
    return c if not c.is_zero() else ring.zero()


def primitive_part_y(f: UniPoly) -> UniPoly:
    if f.is_zero():
        return f
    c = content_y(f)
    return UniPoly(f.ring, [a.exact_div(c) for a in f.coeffs])


def pseudo_rem(f: UniPoly, g: UniPoly) -> UniPoly:
    """prem(f, g): remainder of lc(g)^(deg f - deg g + 1) * f by g."""
    if g.is_zero():
        raise ZeroDivisionError("pseudo-division by zero")
    d = f.degree - g.degree
    if d < 0:
        return f
    ring = f.ring
    rem = f
    lead = g.lc()
    for k in range(d, -1, -1):
        top = rem.coeff(k + g.degree)
        rem = UniPoly(ring, [c * lead for c in rem.coeffs])
        if not ring.is_zero(top):
            rem = rem - UniPoly(ring, [top]).shift(k) * g
    return rem


def gcd_bivariate(f: UniPoly, g: UniPoly) -> UniPoly:
    """Primitive gcd in x of two elements of (F[y])[x], via a primitive PRS."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    a, b = primitive_part_y(f), primitive_part_y(g)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_rem(a, b)
        a, b = b, (primitive_part_y(r) if not r.is_zero() else r)
    # normalize: scale the leading y-coefficient monic so the result is canonical
    lead = a.lc()
    if not lead.is_zero():
        inv = lead.ring.inv(lead.lc())
        a = UniPoly(a.ring, [c.scale(inv) for c in a.coeffs])
    return a
