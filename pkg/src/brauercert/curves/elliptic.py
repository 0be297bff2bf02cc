"""Chord-tangent group law on a smooth plane cubic with a flex origin.

The law is computed by exact line intersection: restrict the cubic to
the line through two points, strip the known roots, and read off the
third.  No Weierstrass normal form is assumed.
"""

from __future__ import annotations

from ..algebra import nt
from ..algebra.finitefield import Fq, build_ext_field, descend, embed
from ..algebra.ternary import TernaryForm
from ..errors import NotOnCurve, SingularPoint
from .plane import DEFAULT_ENUM_BUDGET, PlaneCurve, _second_point_on_line
from .points import ProjPoint


def line_through(p: ProjPoint, q: ProjPoint) -> TernaryForm:
    """The line through two distinct points (cross-product coefficients)."""
    if p == q:
        raise ValueError("need two distinct points")
    x1, y1, z1 = p.coords
    x2, y2, z2 = q.coords
    a = y1 * z2 - z1 * y2
    b = z1 * x2 - x1 * z2
    c = x1 * y2 - y1 * x2
    return TernaryForm(p.field, 1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})


class CubicModel:
    """A certified-smooth degree-3 plane curve with a chosen flex origin."""

    def __init__(self, curve: PlaneCurve, origin: ProjPoint, smooth_report=None):
        if curve.degree != 3:
            raise ValueError("cubic model needs a degree-3 curve")
        if not curve.contains(origin):
            raise NotOnCurve("origin not on the curve")
        report = smooth_report if smooth_report is not None else curve.certify_smooth()
        if not report.smooth:
            raise SingularPoint(f"curve is singular at {report.witness!r}")
        _, is_flex, _ = curve.tangent_and_flex(origin)
        if not is_flex:
            raise ValueError("origin must be a flex")
        self.curve = curve
        self.origin = origin
        self.smooth_report = report

    @property
    def field(self) -> Fq:
        return self.curve.field

    def origin_in(self, ext: Fq) -> ProjPoint:
        return ProjPoint(ext, tuple(embed(c, ext) for c in self.origin.coords))

    def require_on(self, point: ProjPoint):
        if not self.curve.contains(point):
            raise NotOnCurve(f"{point!r} not on the curve")

    # -- the star operation: third intersection ------------------------------------

    def third_intersection(self, p: ProjPoint, q: ProjPoint):
        """(third point of the line through p and q, the line itself)."""
        kappa = p.field
        form = self.curve.form
        if p == q:
            line = self.curve.tangent_line(p)
            b = _second_point_on_line(line, p)
            g = form.restrict_to_line(p.coords, b.coords, ring=kappa)
            cs = [g.coeff(i) for i in range(4)]
            if not (cs[0].is_zero() and cs[1].is_zero()):
                raise ArithmeticError("tangency bookkeeping failed")  # pragma: no cover
            if cs[3].is_zero():
                return b, line  # third root sits at t = infinity, i.e. at b
            t = -cs[2] / cs[3]
            coords = tuple(pc + t * bc for pc, bc in zip(p.coords, b.coords))
            return ProjPoint(kappa, coords), line
        line = line_through(p, q)
        g = form.restrict_to_line(p.coords, q.coords, ring=kappa)
        cs = [g.coeff(i) for i in range(4)]
        if not (cs[0].is_zero() and cs[3].is_zero()):
            raise NotOnCurve("line endpoints are not both on the curve")
        if cs[2].is_zero():
            return q, line  # q is a double intersection
        t = -cs[1] / cs[2]
        coords = tuple(pc + t * qc for pc, qc in zip(p.coords, q.coords))
        return ProjPoint(kappa, coords), line

    # -- group law -------------------------------------------------------------------

    def add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        self.require_on(p)
        self.require_on(q)
        o = self.origin_in(p.field)
        r, _ = self.third_intersection(p, q)
        s, _ = self.third_intersection(o, r)
        return s

    def neg(self, p: ProjPoint) -> ProjPoint:
        self.require_on(p)
        o = self.origin_in(p.field)
        if p == o:
            return o
        r, _ = self.third_intersection(o, p)
        return r

    def mul(self, n: int, p: ProjPoint) -> ProjPoint:
        if n < 0:
            return self.mul(-n, self.neg(p))
        acc = self.origin_in(p.field)
        base = p
        while n:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    def point_order(self, p: ProjPoint, group_order: int) -> int:
        """Order of p given a multiple of it (factored-order descent)."""
        o = self.origin_in(p.field)
        n = group_order
        for ell, e in nt.factorize(group_order).items():
            for _ in range(e):
                if self.mul(n // ell, p) == o:
                    n //= ell
                else:
                    break
        return n

    # -- group structure ------------------------------------------------------------

    def order_and_structure(self, m: int = 1, budget: int = DEFAULT_ENUM_BUDGET):
        """(|E(F_{q^m})|, invariant factors (a, b) with a | b, order function).

        The group order comes from exhaustive enumeration; the invariant
        factors from n-torsion counts for prime powers n dividing it.
        """
        pts = self.curve.enumerate_points(m, budget)
        n_points = len(pts)
        o = self.origin_in(build_ext_field(self.field.p, m))
        a = 1
        for ell in nt.factorize(n_points):
            k = 0
            while n_points % ell ** (2 * (k + 1)) == 0:
                tor = ell ** (k + 1)
                count = sum(1 for pt in pts if self.mul(tor, pt) == o)
                if count == tor * tor:
                    k += 1
                else:
                    break
            a *= ell**k
        b = n_points // a
        assert b % a == 0

        def order_fn(p: ProjPoint) -> int:
            return self.point_order(p, n_points)

        return n_points, (a, b), order_fn

    def trace_to_base(self, p: ProjPoint) -> ProjPoint:
        """Sum of the m Frobenius conjugates of p; lands in E(F_p)."""
        self.require_on(p)
        m = p.field.m
        acc = p
        cur = p
        for _ in range(m - 1):
            cur = cur.frobenius()
            acc = self.add(acc, cur)
        if acc.frobenius() != acc:  # pragma: no cover
            raise ArithmeticError("trace is not Frobenius-fixed")
        base = self.field
        coords = tuple(descend(c, base) for c in acc.coords)
        return ProjPoint(base, coords)
