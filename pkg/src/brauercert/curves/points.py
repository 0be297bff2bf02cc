"""Projective points over F_{p^m} and their Frobenius orbits (closed points)."""

from __future__ import annotations

from ..algebra.finitefield import Fq, FqElement, build_ext_field, descend


class ProjPoint:
    """A point of P^2 over some F_{p^m}, normalized (first nonzero coord is 1)."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Fq, coords):
        coords = tuple(field.el(c) if isinstance(c, int) else field.el(c) for c in coords)
        if len(coords) != 3 or all(c.is_zero() for c in coords):
            raise ValueError("projective point needs three coordinates, not all zero")
        for i, c in enumerate(coords):
            if not c.is_zero():
                inv = c.inv()
                coords = tuple(x * inv for x in coords)
                break
        self.field = field
        self.coords = coords

    @classmethod
    def rational(cls, field: Fq, x: int, y: int, z: int) -> "ProjPoint":
        return cls(field, (field.el(x), field.el(y), field.el(z)))

    def frobenius(self, k: int = 1) -> "ProjPoint":
        return ProjPoint(self.field, tuple(c.frobenius(k) for c in self.coords))

    def degree(self) -> int:
        """Size of the Frobenius orbit (over the prime field)."""
        cur = self.frobenius()
        d = 1
        while cur != self:
            cur = cur.frobenius()
            d += 1
        return d

    def is_rational(self) -> bool:
        return all(c.in_prime_field() for c in self.coords)

    def key(self):
        return tuple(c.key() for c in self.coords)

    def chart(self) -> int:
        """Index of the first nonzero (normalized to 1) coordinate."""
        for i, c in enumerate(self.coords):
            if not c.is_zero():
                return i
        raise AssertionError  # pragma: no cover

    def __eq__(self, other):
        return (
            isinstance(other, ProjPoint)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.key()))

    def __repr__(self):
        if self.field.m == 1:
            return f"({self.coords[0].coeffs[0]}:{self.coords[1].coeffs[0]}:{self.coords[2].coeffs[0]})"
        return f"({self.coords[0]!r}:{self.coords[1]!r}:{self.coords[2]!r})"


class ClosedPoint:
    """A Frobenius orbit of geometric points; degree is the orbit size.

    Canonical representative: the lexicographically least orbit member by
    coordinate key, making downstream certificates byte-stable.
    """

    __slots__ = ("field", "orbit", "degree")

    def __init__(self, point: ProjPoint):
        orbit = [point]
        cur = point.frobenius()
        while cur != point:
            orbit.append(cur)
            cur = cur.frobenius()
        orbit.sort(key=lambda q: q.key())
        self.field = point.field
        self.orbit = tuple(orbit)
        self.degree = len(orbit)

    @property
    def rep(self) -> ProjPoint:
        return self.orbit[0]

    def is_minimal(self) -> bool:
        """True when the ambient field is exactly the residue field F_{p^degree}."""
        return self.field.m == self.degree

    def minimal(self) -> "ClosedPoint":
        """The same closed point with coordinates rewritten over F_{p^degree}."""
        if self.is_minimal():
            return self
        target = build_ext_field(self.field.p, self.degree)
        coords = tuple(descend(c, target) for c in self.rep.coords)
        return ClosedPoint(ProjPoint(target, coords))

    def residue_field(self) -> Fq:
        return build_ext_field(self.field.p, self.degree)

    def key(self):
        m = self.minimal()
        return (self.degree, m.rep.key())

    def to_json_obj(self):
        m = self.minimal()
        return {
            "degree": self.degree,
            "representative": [list(c.coeffs) for c in m.rep.coords],
            "field": m.field.to_json_obj(),
        }

    def __eq__(self, other):
        return isinstance(other, ClosedPoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"ClosedPoint(deg={self.degree}, rep={self.rep!r})"


def embed_point(point: ProjPoint, dst: Fq) -> ProjPoint:
    """View a point over a subfield inside a larger field."""
    from ..algebra.finitefield import embed

    return ProjPoint(dst, tuple(embed(c, dst) for c in point.coords))
