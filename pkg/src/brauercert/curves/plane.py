"""Projective plane curves over prime fields: points, smoothness, tangency.

Smoothness over the algebraic closure is decided by chart-wise resultant
elimination with the Bezout degree bound (d-1)^2 on singular closed
points; intersection multiplicities and function valuations come from
exact local branch expansions at smooth points.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.finitefield import Fq, FqElement, build_ext_field, embed
from ..algebra.rings import PolyRing
from ..algebra.ternary import TernaryForm
from ..algebra.unipoly import (
    UniPoly,
    gcd_bivariate,
    has_root_in_extension,
    is_separable,
    resultant,
    roots_in_field,
)
from ..errors import (
    BudgetExceeded,
    Indeterminate,
    NotOnCurve,
    NotProper,
    SingularPoint,
    ZeroElement,
)
from .points import ClosedPoint, ProjPoint

DEFAULT_ENUM_BUDGET = 1 << 26


# ---------------------------------------------------------------------------
# roots of a prime-field polynomial, organized by exact degree
# ---------------------------------------------------------------------------

def _squarefree_radical(f: UniPoly) -> UniPoly:
    """Radical of f over F_p (same root set, squarefree)."""
    field = f.ring
    while True:
        d = f.derivative()
        if not d.is_zero():
            g = f.gcd(d)
            if g.degree == 0:
                return f.monic()
            f = f.exact_div(g).monic()
            continue
        if f.degree == 0:
            return f.monic()
        # f = h(y^p); over F_p the p-th root just contracts exponents
        p = field.p
        coeffs = [f.coeff(i) for i in range(0, f.degree + 1, p)]
        f = UniPoly(field, coeffs)


def roots_by_degree(f: UniPoly, bound: int, seed: int = 0):
    """All roots of f (over F_p) of degree <= bound, as (degree, root) pairs.

    Roots of degree e are returned as elements of the canonical F_{p^e};
    every geometric root appears exactly once (full conjugate orbits).
    """
    base = f.ring
    if f.degree <= 0:
        return []
    f = _squarefree_radical(f)
    out = []
    x = UniPoly.x(base)
    rem = f
    for e in range(1, bound + 1):
        if rem.degree <= 0:
            break
        t = x.pow_mod(base.p**e, rem)
        part = rem.gcd(t - x)
        if part.degree > 0:
            rem = rem.exact_div(part).monic()
            ext = build_ext_field(base.p, e)
            lifted = UniPoly(ext, [ext.el(c) for c in part.coeffs])
            for r in roots_in_field(lifted, seed):
                out.append((e, r))
    return out


# ---------------------------------------------------------------------------
# common zeros of a bivariate system over the algebraic closure
# ---------------------------------------------------------------------------

@dataclass
class BivariateSolution:
    points: list  # (x0, y0, field) with both coordinates in `field`
    degenerate: list  # witness points on positive-dimensional components


def _specialize_inner(poly: UniPoly, y0: FqElement) -> UniPoly:
    """Evaluate the inner (y) variable of (F[y])[x] at y0, landing over y0's field."""
    ext = y0.field
    out = []
    for c in poly.coeffs:  # c is a UniPoly over the prime field
        acc = ext.zero()
        for cc in reversed(c.coeffs):
            acc = acc * y0 + ext.el(cc)
        out.append(acc)
    return UniPoly(ext, out)


def _lift_poly(poly: UniPoly, dst: Fq) -> UniPoly:
    return UniPoly(dst, [embed(c, dst) for c in poly.coeffs])


def _content_poly(f: UniPoly) -> UniPoly:
    """Content of an (F_p[y])[x] polynomial, as a poly in y."""
    ring = f.ring
    c = ring.zero()
    for a in f.coeffs:
        c = c.gcd(a) if not c.is_zero() else a
    return c


def solve_bivariate(system, base: Fq, bound: int, seed: int = 0) -> BivariateSolution:
    """Common zeros of a finite set of (F_p[y])[x] polynomials, up to degree bound.

    Returns geometric solutions; positive-dimensional families are reported
    through one witness point each instead of being enumerated.
    """
    sol = BivariateSolution(points=[], degenerate=[])
    _solve_rec(list(system), base, bound, seed, sol, depth=0)
    return sol


def _witness_on_bivariate(f: UniPoly, base: Fq, bound: int, seed: int, sol: BivariateSolution):
    """One point on the zero set of a single nonconstant bivariate polynomial."""
    for n in range(base.p):
        y0 = base.el(n)
        spec = _specialize_inner(f, y0)
        if spec.is_zero():
            sol.degenerate.append((base.zero(), y0, base))
            return
        if spec.degree > 0:
            for e in range(1, bound + 1):
                ext = build_ext_field(base.p, e)
                lifted = _lift_poly(spec, ext)
                roots = roots_in_field(lifted, seed)
                if roots:
                    sol.degenerate.append((roots[0], embed(y0, ext), ext))
                    return
    # x-degree 0 everywhere tried: constraint is purely in y
    cont = _content_poly(f) if f.degree < 1 else None
    if cont is not None and cont.degree > 0:
        for e, r in roots_by_degree(cont, bound, seed):
            ext = r.field
            sol.degenerate.append((ext.zero(), r, ext))
            return
    sol.degenerate.append((base.zero(), base.zero(), base))  # pragma: no cover


def _solve_rec(system, base: Fq, bound: int, seed: int, sol: BivariateSolution, depth: int):
    if depth > 16:  # pragma: no cover - recursion is degree-decreasing
        raise ArithmeticError("bivariate elimination did not terminate")
    inner = PolyRing(base)
    polys = [f for f in system if not f.is_zero()]
    if not polys:
        sol.degenerate.append((base.zero(), base.zero(), base))
        return
    y_constraints = []
    x_polys = []
    for f in polys:
        if f.degree == 0:
            c = f.coeffs[0]  # a poly in y
            if c.degree == 0:
                return  # a nonzero constant: no common zeros
            y_constraints.append(c)
        else:
            x_polys.append(f)

    if not x_polys:
        cand = y_constraints[0]
        for c in y_constraints[1:]:
            cand = cand.gcd(c)
        if cand.degree == 0:
            return
        for e, y0 in roots_by_degree(cand, bound, seed):
            sol.degenerate.append((y0.field.zero(), y0, y0.field))
        return

    if len(x_polys) == 1 and not y_constraints:
        _witness_on_bivariate(x_polys[0], base, bound, seed, sol)
        return

    f = min(x_polys, key=lambda g: g.degree)
    others = [g for g in x_polys if g is not f]

    # peel any shared y-content first: it cuts out vertical lines
    if others:
        cf = _content_poly(f)
        for g in others:
            cf = cf.gcd(_content_poly(g)) if not cf.is_zero() else _content_poly(g)
        for yc in y_constraints:
            cf = cf.gcd(yc)
        if cf.degree > 0:
            for e, y0 in roots_by_degree(cf, bound, seed):
                sol.degenerate.append((y0.field.zero(), y0, y0.field))

    cand = None
    for g in others:
        r = resultant(f, g)  # a poly in y
        if r.is_zero():
            common = gcd_bivariate(f, g)
            if common.degree >= 1:
                rest = [h for h in polys if h is not f and h is not g]
                _solve_rec([common] + rest, base, bound, seed, sol, depth + 1)
                _solve_rec(
                    [f.exact_div(common), g.exact_div(common)] + rest,
                    base,
                    bound,
                    seed,
                    sol,
                    depth + 1,
                )
                return
            # resultant vanished through shared y-content only; drop it
            fp = UniPoly(inner, [c.exact_div(_content_poly(f)) for c in f.coeffs]) \
                if _content_poly(f).degree > 0 else f
            gp = UniPoly(inner, [c.exact_div(_content_poly(g)) for c in g.coeffs]) \
                if _content_poly(g).degree > 0 else g
            rest = [h for h in polys if h is not f and h is not g]
            _solve_rec([fp, gp] + rest, base, bound, seed, sol, depth + 1)
            return
        cand = r if cand is None else cand.gcd(r)
    for yc in y_constraints:
        cand = yc if cand is None else cand.gcd(yc)

    if cand is None:
        # single x-poly plus nothing else to eliminate against
        _witness_on_bivariate(f, base, bound, seed, sol)
        return
    if cand.degree == 0:
        return

    seen = set()
    for e, y0 in roots_by_degree(cand, bound, seed):
        ext_y = y0.field
        specs = []
        all_zero = True
        for g in x_polys:
            s = _specialize_inner(g, y0)
            if not s.is_zero():
                all_zero = False
                specs.append(s)
        if all_zero:
            sol.degenerate.append((ext_y.zero(), y0, ext_y))
            continue
        # the y-constraints must also vanish at y0
        ok = True
        for yc in y_constraints:
            acc = ext_y.zero()
            for cc in reversed(yc.coeffs):
                acc = acc * y0 + ext_y.el(cc)
            if not acc.is_zero():
                ok = False
                break
        if not ok:
            continue
        g_all = specs[0]
        for s in specs[1:]:
            g_all = g_all.gcd(s)
        if g_all.degree == 0:
            continue
        for k in range(1, min(bound // e, g_all.degree) + 1):
            if not has_root_in_extension(g_all, k):
                continue
            ext = build_ext_field(base.p, e * k)
            lifted = _lift_poly(g_all, ext)
            y_lift = embed(y0, ext)
            for x0 in roots_in_field(lifted, seed):
                key = (e * k, x0.key(), y_lift.key())
                if key in seen:
                    continue
                seen.add(key)
                sol.points.append((x0, y_lift, ext))


# ---------------------------------------------------------------------------
# plane curves
# ---------------------------------------------------------------------------

@dataclass
class SmoothnessReport:
    smooth: bool
    witness: ClosedPoint | None = None
    geometrically_connected: bool = True  # plane curves are connected
    discriminant_cross_check: bool | None = None


@dataclass
class IntersectionPoint:
    point: ClosedPoint
    multiplicity: int
    transversal: bool


@dataclass
class IntersectionReport:
    points: list
    verdict: str  # NORMAL_CROSSINGS or FAIL
    bezout_total: int
    resultant_separable: bool | None


class PlaneCurve:
    """V(F) in P^2 for a nonzero homogeneous form F over a prime field."""

    def __init__(self, form: TernaryForm):
        if form.is_zero():
            raise ZeroElement("curve needs a nonzero form")
        if not isinstance(form.ring, Fq) or form.ring.m != 1:
            raise ValueError("plane curves are supported over prime base fields")
        self.field = form.ring
        self.form = form
        self.degree = form.degree

    # -- membership and points ------------------------------------------------

    def contains(self, point: ProjPoint) -> bool:
        return self.form.evaluate(point.coords).is_zero()

    def enumerate_points(self, m: int = 1, budget: int = DEFAULT_ENUM_BUDGET):
        """All F_{q^m}-points, deterministically ordered by coordinate key."""
        q2m = self.field.q ** (2 * m)
        if q2m > budget:
            raise BudgetExceeded(
                f"enumeration needs q^2m = {q2m} > budget {budget}", required=q2m
            )
        ext = build_ext_field(self.field.p, m)
        pts = set()
        # affine chart z = 1: fix y, solve the x-polynomial
        chart = self.form.to_xy_poly(2)  # (F_p[y])[x]
        for y0 in ext.elements():
            xpoly = _specialize_inner(chart, y0)
            if xpoly.is_zero():
                for x0 in ext.elements():
                    pts.add(ProjPoint(ext, (x0, y0, ext.one())))
            elif xpoly.degree == 0:
                continue
            else:
                for x0 in roots_in_field(xpoly):
                    pts.add(ProjPoint(ext, (x0, y0, ext.one())))
        # the line z = 0: points (t:1:0) and (1:0:0)
        zline = UniPoly(
            ext,
            [
                ext.el(self.form.coeff((i, self.degree - i, 0)))
                for i in range(self.degree + 1)
            ],
        )
        if zline.is_zero():
            for t in ext.elements():
                pts.add(ProjPoint(ext, (t, ext.one(), ext.zero())))
            pts.add(ProjPoint(ext, (ext.one(), ext.zero(), ext.zero())))
        else:
            for t in roots_in_field(zline):
                pts.add(ProjPoint(ext, (t, ext.one(), ext.zero())))
            if zline.degree < self.degree:
                # the x^d coefficient vanished, so (1:0:0) is on the curve
                pts.add(ProjPoint(ext, (ext.one(), ext.zero(), ext.zero())))
        return sorted(pts, key=lambda P: P.key())

    def count_points(self, m: int = 1, budget: int = DEFAULT_ENUM_BUDGET) -> int:
        return len(self.enumerate_points(m, budget))

    # -- tangency --------------------------------------------------------------

    def gradient_at(self, point: ProjPoint):
        return self.form.gradient(point.coords)

    def is_smooth_at(self, point: ProjPoint) -> bool:
        if not self.contains(point):
            raise NotOnCurve(f"{point!r} not on the curve")
        return not all(c.is_zero() for c in self.gradient_at(point))

    def tangent_line(self, point: ProjPoint) -> TernaryForm:
        """The tangent at a smooth point, with coefficients in the point's field."""
        if not self.is_smooth_at(point):
            raise SingularPoint(f"{point!r} is singular")
        gx, gy, gz = self.gradient_at(point)
        return TernaryForm(point.field, 1, {(1, 0, 0): gx, (0, 1, 0): gy, (0, 0, 1): gz})

    def tangent_and_flex(self, point: ProjPoint):
        """(tangent line, is_flex, contact multiplicity) at a smooth point."""
        line = self.tangent_line(point)
        second = _second_point_on_line(line, point)
        restricted = self.form.restrict_to_line(point.coords, second.coords)
        if restricted.is_zero():
            raise Indeterminate("tangent line lies on the curve")
        contact = 0
        while contact <= restricted.degree and restricted.coeff(contact).is_zero():
            contact += 1
        hess_val = self.form.hessian().evaluate(point.coords)
        is_flex = hess_val.is_zero()
        if self.field.p not in (2, 3):
            assert is_flex == (contact >= 3), "hessian/contact disagreement"
        return line, is_flex, contact

    # -- local analytic data ------------------------------------------------------

    def branch_expansion(self, point: ProjPoint, prec: int) -> "BranchExpansion":
        """Power-series parametrization of the curve branch at a smooth point."""
        if not self.is_smooth_at(point):
            raise SingularPoint(f"{point!r} is singular")
        chart = point.chart()
        others = [i for i in range(3) if i != chart]
        kappa = point.field
        u0 = point.coords[others[0]]
        v0 = point.coords[others[1]]
        gu = embed_form_eval(self.form.partial(others[0]), point)
        gv = embed_form_eval(self.form.partial(others[1]), point)
        g = self.form.to_xy_poly(chart)
        zero, one = kappa.zero(), kappa.one()
        if not gv.is_zero():
            param_index = 0
            u = [u0, one] + [zero] * (prec - 2)
            v = [v0] + [zero] * (prec - 1)
            slope = gv
        else:
            param_index = 1
            u = [u0] + [zero] * (prec - 1)
            v = [v0, one] + [zero] * (prec - 2)
            slope = gu
        solve = v if param_index == 0 else u
        inv_slope = slope.inv()
        for k in range(1, prec):
            r = _eval_series_bivariate(g, u, v, k + 1, kappa)
            ck = r[k] if k < len(r) else zero
            if ck.is_zero():
                continue
            solve[k] = solve[k] - ck * inv_slope
        return BranchExpansion(self, point, chart, u, v, prec)

    def form_valuation(self, form: TernaryForm, point: ProjPoint):
        """(valuation, leading unit) of form/chart^deg along the branch at point.

        The leading unit depends on the chosen uniformizer; callers combine
        it only in parameter-independent ways (tame symbols).
        """
        bound = form.degree * self.degree + 2
        prec = min(bound, self.degree + 2)
        while True:
            branch = self.branch_expansion(point, prec)
            series = branch.form_series(form)
            for i, c in enumerate(series):
                if not c.is_zero():
                    return i, c
            if prec >= bound:
                raise Indeterminate(
                    "form vanishes on the curve branch beyond the Bezout bound"
                )
            prec = min(bound, prec * 2)

    # -- global certification ------------------------------------------------------

    def certify_smooth(self, seed: int = 0) -> SmoothnessReport:
        """SMOOTH certificate or a singular closed point.

        Chart-by-chart elimination; singular closed points have degree at
        most (d-1)^2 by Bezout on two partial derivatives.
        """
        d = self.degree
        system_forms = [self.form] + [self.form.partial(i) for i in range(3)]
        nonzero = [f for f in system_forms if not f.is_zero()]
        bound = max((d - 1) ** 2, 1)
        if all(self.form.partial(i).is_zero() for i in range(3)):
            # inseparable form: every point of the curve is singular
            witness = self._any_point(bound, seed)
            return SmoothnessReport(smooth=False, witness=witness)
        zeros = common_projective_zeros(nonzero, self.field, bound, seed)
        report = SmoothnessReport(smooth=not zeros, witness=zeros[0] if zeros else None)
        wshape = _weierstrass_shape(self.form)
        if wshape is not None:
            report.discriminant_cross_check = wshape
            assert wshape == report.smooth, "discriminant cross-check disagrees"
        return report

    def _any_point(self, bound: int, seed: int) -> ClosedPoint | None:
        chart = self.form.to_xy_poly(2)
        for n in range(self.field.p):
            y0 = self.field.el(n)
            spec = _specialize_inner(chart, y0)
            if spec.is_zero():
                return ClosedPoint(ProjPoint(self.field, (self.field.zero(), y0, self.field.one())))
            if spec.degree > 0:
                for e in range(1, bound + 1):
                    ext = build_ext_field(self.field.p, e)
                    roots = roots_in_field(_lift_poly(spec, ext), seed)
                    if roots:
                        return ClosedPoint(ProjPoint(ext, (roots[0], embed(y0, ext), ext.one())))
        return None  # pragma: no cover

    def intersection_with_form(self, form: TernaryForm, seed: int = 0):
        """Divisor cut out on this curve by a form: [(ClosedPoint, multiplicity)].

        The curve must be smooth at the intersection points (valuations come
        from branch expansions).  Checked against the Bezout total.
        """
        if form.is_zero():
            raise Indeterminate("zero form cuts out no divisor")
        bound = self.degree * form.degree
        pts = common_projective_zeros([self.form, form], self.field, max(bound, 1), seed)
        out = []
        total = 0
        for cp in pts:
            v, _ = self.form_valuation(form, cp.rep)
            out.append((cp, v))
            total += v * cp.degree
        if total != bound:
            raise ArithmeticError(
                f"Bezout audit failed: multiplicities sum to {total}, expected {bound}"
            )
        return out


@dataclass
class BranchExpansion:
    curve: PlaneCurve
    point: ProjPoint
    chart: int
    u: list
    v: list
    prec: int

    def form_series(self, form: TernaryForm):
        """Series of form/chart_coord^deg along the branch."""
        g = form.to_xy_poly(self.chart)
        return _eval_series_bivariate(g, self.u, self.v, self.prec, self.point.field)


def embed_form_eval(form: TernaryForm, point: ProjPoint):
    """Evaluate a form whose coefficients live in a subfield of the point's field."""
    return form.evaluate(point.coords)


def _eval_series_bivariate(g: UniPoly, u, v, prec: int, kappa: Fq):
    """Evaluate (F[y2])[y1] at truncated series y1 = u(t), y2 = v(t)."""
    zero = kappa.zero()

    def smul(a, b):
        out = [zero] * prec
        for i, ai in enumerate(a):
            if i >= prec or ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if i + j >= prec:
                    break
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return out

    def sadd(a, b):
        return [x + y for x, y in zip(a, b)]

    def liftconst(c):
        return [embed(c, kappa)] + [zero] * (prec - 1)

    u = list(u[:prec]) + [zero] * max(0, prec - len(u))
    v = list(v[:prec]) + [zero] * max(0, prec - len(v))
    # Horner in the outer variable; inner coefficients evaluated at v first
    acc = [zero] * prec
    for c in reversed(g.coeffs):  # c: UniPoly over base in y2
        inner = [zero] * prec
        for cc in reversed(c.coeffs):
            inner = sadd(smul(inner, v), liftconst(cc))
        acc = sadd(smul(acc, u), inner)
    return acc


def _second_point_on_line(line: TernaryForm, point: ProjPoint) -> ProjPoint:
    """A canonical point on the line distinct from the given one."""
    kappa = point.field
    a = line.coeff((1, 0, 0))
    b = line.coeff((0, 1, 0))
    c = line.coeff((0, 0, 1))
    a, b, c = (embed(t, kappa) if not isinstance(t, int) else kappa.el(t) for t in (a, b, c))
    candidates = []
    one, zero = kappa.one(), kappa.zero()
    if not a.is_zero():
        candidates += [ProjPoint(kappa, (-b / a, one, zero)), ProjPoint(kappa, (-c / a, zero, one))]
    elif not b.is_zero():
        candidates += [ProjPoint(kappa, (one, zero, zero)), ProjPoint(kappa, (zero, -c / b, one))]
    else:
        candidates += [ProjPoint(kappa, (one, zero, zero)), ProjPoint(kappa, (zero, one, zero))]
    for q in candidates:
        if q != point:
            return q
    raise AssertionError("line has a single point?")  # pragma: no cover


def common_projective_zeros(forms, base: Fq, bound: int, seed: int = 0):
    """Common zeros in P^2 over the algebraic closure, as sorted ClosedPoints.

    Positive-dimensional loci are reported through witness points.  Degrees
    are capped by `bound`, which callers justify by Bezout.
    """
    found: dict = {}
    # chart z = 1
    system = [f.to_xy_poly(2) for f in forms]
    sol = solve_bivariate(system, base, bound, seed)
    for x0, y0, ext in sol.points + sol.degenerate:
        cp = ClosedPoint(ProjPoint(ext, (x0, y0, ext.one())))
        if all(f.evaluate(cp.rep.coords).is_zero() for f in forms):
            found[cp.key()] = cp
    # the line z = 0: parametrize (t : 1 : 0), then the leftover (1 : 0 : 0)
    t_polys = []
    for f in forms:
        coeffs = [f.coeff((i, f.degree - i, 0)) for i in range(f.degree + 1)]
        t_polys.append(UniPoly(base, coeffs))
    nonzero = [g for g in t_polys if not g.is_zero()]
    if not nonzero:
        # every form vanishes on z = 0: the whole line is common
        cp = ClosedPoint(ProjPoint(base, (base.zero(), base.one(), base.zero())))
        found[cp.key()] = cp
    else:
        g_all = nonzero[0]
        for g in nonzero[1:]:
            g_all = g_all.gcd(g)
        if g_all.degree > 0:
            for e, t0 in roots_by_degree(g_all, bound, seed):
                ext = t0.field
                cp = ClosedPoint(ProjPoint(ext, (t0, ext.one(), ext.zero())))
                if all(f.evaluate(cp.rep.coords).is_zero() for f in forms):
                    found[cp.key()] = cp
    inf_pt = ProjPoint(base, (base.one(), base.zero(), base.zero()))
    if all(f.evaluate(inf_pt.coords).is_zero() for f in forms):
        cp = ClosedPoint(inf_pt)
        found[cp.key()] = cp
    return [found[k] for k in sorted(found)]


def normal_crossings_profile(c1: PlaneCurve, c2: PlaneCurve, seed: int = 0) -> IntersectionReport:
    """Intersection points of two smooth curves with multiplicities and tangency.

    NORMAL_CROSSINGS iff every intersection point is transversal of
    multiplicity one; the eliminated-variable resultant's separability is
    reported alongside as the paper-style certificate.
    """
    f1 = c1.form.to_xy_poly(2)
    f2 = c2.form.to_xy_poly(2)
    common = gcd_bivariate(f1, f2)
    if common.degree >= 1:
        raise NotProper("curves share a component")
    res = resultant(f1, f2)
    if res.is_zero():
        raise NotProper("curves share a component (vanishing resultant)")
    sep = is_separable(res) if res.degree > 0 else True

    bound = c1.degree * c2.degree
    pts = common_projective_zeros([c1.form, c2.form], c1.field, bound, seed)
    entries = []
    total = 0
    all_transversal_mult1 = True
    for cp in pts:
        v, _ = c1.form_valuation(c2.form, cp.rep)
        g1 = c1.gradient_at(cp.rep)
        g2 = c2.gradient_at(cp.rep)
        cross = [
            g1[1] * g2[2] - g1[2] * g2[1],
            g1[2] * g2[0] - g1[0] * g2[2],
            g1[0] * g2[1] - g1[1] * g2[0],
        ]
        transversal = not all(c.is_zero() for c in cross)
        entries.append(IntersectionPoint(point=cp, multiplicity=v, transversal=transversal))
        total += v * cp.degree
    if total != bound:
        raise ArithmeticError(
            f"Bezout audit failed: intersection numbers sum to {total}, expected {bound}"
        )
    ok = all(e.multiplicity == 1 and e.transversal for e in entries)
    return IntersectionReport(
        points=entries,
        verdict="NORMAL_CROSSINGS" if ok else "FAIL",
        bezout_total=total,
        resultant_separable=sep,
    )


def _weierstrass_shape(form: TernaryForm):
    """If the cubic has Weierstrass shape, return (discriminant != 0); else None.

    y^2 z + a1 xyz + a3 y z^2 = x^3 + a2 x^2 z + a4 x z^2 + a6 z^3, used only
    as a cross-check on the elimination-based smoothness certificate.
    """
    if form.degree != 3:
        return None
    ring = form.ring
    c = form.coeff((0, 2, 1))
    if c.is_zero():
        return None
    inv = ring.inv(c)
    get = lambda e: form.coeff(e) * inv

    expected = {(0, 2, 1), (1, 1, 1), (0, 1, 2), (3, 0, 0), (2, 0, 1), (1, 0, 2), (0, 0, 3)}
    if any(e not in expected for e in form.terms):
        return None
    if get((3, 0, 0)) != ring.el(-1):
        return None
    a1 = get((1, 1, 1))
    a3 = get((0, 1, 2))
    a2 = -get((2, 0, 1))
    a4 = -get((1, 0, 2))
    a6 = -get((0, 0, 3))
    b2 = a1 * a1 + a2 * 4
    b4 = a1 * a3 + a4 * 2
    b6 = a3 * a3 + a6 * 4
    b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    disc = -b2 * b2 * b8 - b4 * b4 * b4 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9
    return not disc.is_zero()
