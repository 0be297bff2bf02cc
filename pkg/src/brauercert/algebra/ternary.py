"""Homogeneous ternary forms over a declared coefficient domain."""

from __future__ import annotations

from .rings import PolyRing
from .unipoly import UniPoly


class TernaryForm:
    """Sparse homogeneous polynomial in (x, y, z) of a fixed degree."""

    __slots__ = ("ring", "degree", "terms")

    def __init__(self, ring, degree: int, terms: dict):
        clean = {}
        for expo, c in terms.items():
            if not ring.is_zero(c):
                ex, ey, ez = expo
                if ex + ey + ez != degree:
                    raise ValueError(f"monomial {expo} not of degree {degree}")
                clean[(ex, ey, ez)] = c
        self.ring = ring
        self.degree = degree
        self.terms = clean

    @classmethod
    def from_int_terms(cls, ring, degree: int, terms: dict):
        return cls(ring, degree, {e: ring.from_int(c) for e, c in terms.items()})

    @classmethod
    def line(cls, ring, a, b, c):
        """The linear form a*x + b*y + c*z."""
        return cls(ring, 1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, expo):
        return self.terms.get(tuple(expo), self.ring.zero())

    def __eq__(self, other):
        return (
            isinstance(other, TernaryForm)
            and self.ring == other.ring
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, tuple(sorted((e, repr(c)) for e, c in self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (ex, ey, ez), c in sorted(self.terms.items(), reverse=True):
            mono = "".join(s for s, e in (("x", ex), ("y", ey), ("z", ez)) for _ in range(e))
            bits.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(bits)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return TernaryForm(self.ring, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TernaryForm(self.ring, self.degree, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TernaryForm):
            out = {}
            for (a1, b1, c1), u in self.terms.items():
                for (a2, b2, c2), v in other.terms.items():
                    key = (a1 + a2, b1 + b2, c1 + c2)
                    w = u * v
                    out[key] = out[key] + w if key in out else w
            return TernaryForm(self.ring, self.degree + other.degree, out)
        return self.scale(other)

    def scale(self, c):
        return TernaryForm(self.ring, self.degree, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, e: int):
        result = TernaryForm(self.ring, 0, {(0, 0, 0): self.ring.one()})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- calculus ---------------------------------------------------------------

    def partial(self, var: int) -> "TernaryForm":
        """d/dx, d/dy or d/dz for var = 0, 1, 2; degree drops by one."""
        out = {}
        for expo, c in self.terms.items():
            e = expo[var]
            if e == 0:
                continue
            new = list(expo)
            new[var] = e - 1
            key = tuple(new)
            add = c * self.ring.from_int(e)
            out[key] = out[key] + add if key in out else add
        return TernaryForm(self.ring, max(self.degree - 1, 0), out)

    def hessian(self) -> "TernaryForm":
        """Determinant of the matrix of second partials; degree 3(d-2)."""
        h = [[self.partial(i).partial(j) for j in range(3)] for i in range(3)]
        return (
            h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
            - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
            + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
        )

    # -- evaluation and specialization --------------------------------------------

    def evaluate(self, coords):
        """Value at (x, y, z); coordinates may live in an extension of the domain."""
        x, y, z = coords
        acc = None
        for (ex, ey, ez), c in self.terms.items():
            term = x**ex * y**ey * z**ez * c
            acc = term if acc is None else acc + term
        if acc is None:
            return x**0 * self.ring.zero()
        return acc

    def gradient(self, coords):
        return tuple(self.partial(i).evaluate(coords) for i in range(3))

    def substitute(self, mat) -> "TernaryForm":
        """F(A*(x,y,z)) for a 3x3 matrix A of coefficient-domain entries."""
        ring = self.ring
        vars_ = [
            TernaryForm.line(ring, mat[0][0], mat[0][1], mat[0][2]),
            TernaryForm.line(ring, mat[1][0], mat[1][1], mat[1][2]),
            TernaryForm.line(ring, mat[2][0], mat[2][1], mat[2][2]),
        ]
        out = TernaryForm(ring, self.degree, {})
        for (ex, ey, ez), c in self.terms.items():
            term = vars_[0] ** ex * vars_[1] ** ey * vars_[2] ** ez
            out = out + term.scale(c)
        return out

    def to_xy_poly(self, chart: int = 2) -> UniPoly:
        """Dehomogenize (chart coordinate = 1) into ((F[y2])[y1] shape.

        Returns a UniPoly in the first remaining coordinate whose coefficients
        are UniPolys in the second remaining coordinate.  Coordinate order:
        chart 2 -> (x, y), chart 1 -> (x, z), chart 0 -> (y, z).
        """
        others = [i for i in range(3) if i != chart]
        inner = PolyRing(self.ring)
        max_outer = max((e[others[0]] for e in self.terms), default=0)
        cols: list[dict[int, object]] = [dict() for _ in range(max_outer + 1)]
        for expo, c in self.terms.items():
            i = expo[others[0]]
            j = expo[others[1]]
            cols[i][j] = cols[i][j] + c if j in cols[i] else c
        coeffs = []
        for col in cols:
            if not col:
                coeffs.append(inner.zero())
                continue
            top = max(col)
            coeffs.append(UniPoly(self.ring, [col.get(k, self.ring.zero()) for k in range(top + 1)]))
        return UniPoly(inner, coeffs)

    def restrict_to_line(self, a_coords, b_coords, ring=None) -> UniPoly:
        """G(A + t*B) as a polynomial in t (degree <= deg G).

        A and B are points spanning a line; together with the implied s-power
        this is the binary form G(sA + tB) with s = 1.  The result lives over
        the coordinates' field, which may extend the coefficient domain.
        """
        if ring is None:
            ring = getattr(a_coords[0], "field", self.ring)
        coord_polys = [
            UniPoly(ring, [a_coords[i], b_coords[i]]) for i in range(3)
        ]
        acc = UniPoly(ring, ())
        for (ex, ey, ez), c in self.terms.items():
            term = coord_polys[0] ** ex * coord_polys[1] ** ey * coord_polys[2] ** ez
            acc = acc + term.scale(c)
        return acc

    def to_json_obj(self):
        return [
            [list(e), self.ring.coeff_str(c)]
            for e, c in sorted(self.terms.items(), reverse=True)
        ]
