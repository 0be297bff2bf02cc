"""Finite fields F_{p^m} with exact, reproducible models.

A field is described by (p, m, defining polynomial); the defining
polynomial is the lexicographically first monic irreducible of degree m
over F_p (constant coefficient least significant in the ordering), so
descriptors are identical across runs and platforms.  Elements are
residue polynomials of degree < m stored as int tuples.
"""

from __future__ import annotations

import threading

from ..errors import BudgetExceeded, InvalidPrime, NoRootsOfUnity, ZeroElement
from . import nt

# Fields are capped at q = p^m <= 2**48; desk-scale targets stay far below.
FIELD_SIZE_CAP = 1 << 48

_registry: dict[tuple[int, int], "Fq"] = {}
_registry_lock = threading.Lock()


# ---------------------------------------------------------------------------
# raw dense polynomials over F_p (int tuples, ascending), used only for the
# irreducibility search; everything else goes through UniPoly
# ---------------------------------------------------------------------------

def _ptrim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        a = list(_ptrim(a))
        if len(a) - 1 < df:
            break
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * fi) % p
        a = list(_ptrim(a))
    return _ptrim(a)


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _pmodexp(base, e, f, p):
    result = (1,)
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _minus_x(g, p):
    """g(x) - x over F_p."""
    out = list(g) + [0] * max(0, 2 - len(g))
    out[1] = (out[1] - 1) % p
    return _ptrim(out)


def _is_irreducible(f, p):
    """Monic f over F_p irreducible, by the Frobenius-power criterion."""
    m = len(f) - 1
    if m == 1:
        return True
    x = (0, 1)
    if _minus_x(_pmodexp(x, p**m, f, p), p):
        return False
    for ell in nt.factorize(m):
        d = _minus_x(_pmodexp(x, p ** (m // ell), f, p), p)
        if len(_pgcd(d, f, p)) - 1 != 0:
            return False
    return True


class Fq:
    """Descriptor of F_{p^m}; also serves as a coefficient domain for UniPoly."""

    is_field = True

    def __init__(self, p: int, m: int, poly: tuple[int, ...]):
        self.p = p
        self.m = m
        self.poly = poly  # monic, degree m, ints in [0, p), ascending
        self.q = p**m

    @property
    def name(self):
        return f"F_{self.p}" if self.m == 1 else f"F_{self.p}^{self.m}"

    # -- ring protocol ------------------------------------------------------

    def zero(self) -> "FqElement":
        return FqElement(self, (0,) * self.m)

    def one(self) -> "FqElement":
        return self.el(1)

    def from_int(self, n: int) -> "FqElement":
        return self.el(n)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def exact_div(self, a, b):
        return a / b

    def inv(self, a):
        return a.inv()

    def coeff_str(self, a) -> str:
        if self.m == 1:
            return str(a.coeffs[0])
        return ",".join(str(c) for c in a.coeffs)

    # -- construction helpers -----------------------------------------------

    def el(self, v) -> "FqElement":
        """Coerce an int (or base-field FqElement) into this field."""
        if isinstance(v, FqElement):
            if v.field is self or v.field == self:
                return v
            if v.field.m == 1 and v.field.p == self.p:
                return self.el(v.coeffs[0])
            raise ValueError(f"cannot coerce element of {v.field.name} into {self.name}")
        return FqElement(self, (v % self.p,) + (0,) * (self.m - 1))

    def from_coeffs(self, coeffs) -> "FqElement":
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.m:
            raise ValueError("representative too long")
        c += [0] * (self.m - len(c))
        return FqElement(self, tuple(c))

    def elements(self):
        """All q elements, in canonical (lexicographic coefficient) order."""
        def rec(i):
            if i == self.m:
                yield ()
                return
            for rest in rec(i + 1):
                for c in range(self.p):
                    yield (c,) + rest
        for tup in sorted(rec(0)):
            yield FqElement(self, tup)

    def multiplicative_generator(self) -> "FqElement":
        """Smallest generator of F_q^* in canonical element order."""
        fac = nt.factorize(self.q - 1)
        for a in self.elements():
            if a.is_zero():
                continue
            if all((a ** ((self.q - 1) // ell)) != self.one() for ell in fac):
                return a
        raise ArithmeticError("no generator found")  # pragma: no cover

    def to_json_obj(self):
        return {"p": self.p, "m": self.m, "defining_poly": list(self.poly)}

    def __eq__(self, other):
        return (
            isinstance(other, Fq)
            and self.p == other.p
            and self.m == other.m
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.p, self.m, self.poly))

    def __repr__(self):
        return f"Fq(p={self.p}, m={self.m})"


class FqElement:
    """An element of F_{p^m}, immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Fq, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _pair(self, other):
        """Coerce (self, other) into a common field; prime embeds in extension."""
        if not isinstance(other, FqElement):
            other = self.field.el(other)
        if other.field == self.field:
            return self, other
        if other.field.p != self.field.p:
            raise ValueError("elements of different characteristics")
        if other.field.m == 1:
            return self, self.field.el(other.coeffs[0])
        if self.field.m == 1:
            return other.field.el(self.coeffs[0]), other
        raise ValueError("elements of incompatible extension fields")

    def __add__(self, other):
        a, b = self._pair(other)
        p = a.field.p
        return FqElement(a.field, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        p = a.field.p
        return FqElement(a.field, tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        p = self.field.p
        return FqElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        a, b = self._pair(other)
        f = a.field
        if f.m == 1:
            return FqElement(f, (a.coeffs[0] * b.coeffs[0] % f.p,))
        prod = _pmul(a.coeffs, b.coeffs, f.p)
        red = _pmod(prod, f.poly, f.p)
        return FqElement(f, tuple(red) + (0,) * (f.m - len(red)))

    __rmul__ = __mul__

    def inv(self) -> "FqElement":
        f = self.field
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if f.m == 1:
            return FqElement(f, (pow(self.coeffs[0], f.p - 2, f.p),))
        # extended Euclid on representative vs defining polynomial
        a, b = _ptrim(self.coeffs), f.poly
        sa, sb = (1,), ()
        while len(b) > 1 or (b and b[0] != 0):
            if not b:
                break
            q, r = _pdivmod(a, b, f.p)
            a, b = b, r
            sa, sb = sb, _psub(sa, _pmul(q, sb, f.p), f.p)
        # a is now a nonzero constant gcd
        c_inv = pow(a[0], f.p - 2, f.p)
        res = tuple((x * c_inv) % f.p for x in sa)
        res = _pmod(res, f.poly, f.p)
        return FqElement(f, tuple(res) + (0,) * (f.m - len(res)))

    def __truediv__(self, other):
        a, b = self._pair(other)
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.field.el(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, k: int = 1) -> "FqElement":
        """Apply x -> x^(p^k)."""
        return self ** (self.field.p ** (k % self.field.m))

    def absolute_trace(self) -> "FqElement":
        """Trace down to F_p, returned as an element of this field (a constant)."""
        t = self
        x = self
        for _ in range(self.field.m - 1):
            x = x ** self.field.p
            t = t + x
        return t

    def in_prime_field(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        """The value of a prime-subfield element as an int in [0, p)."""
        if not self.in_prime_field():
            raise ValueError("element not in the prime subfield")
        return self.coeffs[0]

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ZeroElement("order of zero")
        return nt.multiplicative_order(lambda k: self**k, self.field.one(), self.field.q - 1)

    def key(self):
        """Canonical sort/hash key."""
        return self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.el(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        if self.field == other.field:
            return self.coeffs == other.coeffs
        try:
            a, b = self._pair(other)
        except ValueError:
            return False
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def __repr__(self):
        if self.field.m == 1:
            return f"{self.coeffs[0]}~{self.field.name}"
        return f"{list(self.coeffs)}~{self.field.name}"


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return _ptrim(tuple((x - y) % p for x, y in zip(a, b)))


def _pdivmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(1, len(a) - db)
    while True:
        a = list(_ptrim(a))
        if len(a) - 1 < db or not a:
            break
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        q[shift] = coef
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
    return _ptrim(q), _ptrim(a)


def build_ext_field(p: int, m: int) -> Fq:
    """The canonical model of F_{p^m}.

    Deterministic: the defining polynomial is the first monic irreducible of
    degree m in the base-p coefficient ordering.  m = 1 uses 'x - 0'.
    Descriptors are cached and shared; construction is thread-safe.
    """
    nt.require_prime(p)
    if m < 1:
        raise ValueError("degree must be >= 1")
    if p**m > FIELD_SIZE_CAP:
        raise BudgetExceeded(f"field size {p}^{m} exceeds cap {FIELD_SIZE_CAP}", required=p**m)
    key = (p, m)
    with _registry_lock:
        if key in _registry:
            return _registry[key]
    if m == 1:
        field = Fq(p, 1, (0, 1))
    else:
        field = None
        for n in range(p**m):
            digits = tuple((n // p**i) % p for i in range(m))
            f = digits + (1,)
            if _is_irreducible(f, p):
                field = Fq(p, m, f)
                break
        if field is None:  # pragma: no cover
            raise ArithmeticError("no irreducible polynomial found")
    with _registry_lock:
        field = _registry.setdefault(key, field)
    return field


def dlog(g: FqElement, x: FqElement):
    """Smallest e >= 0 with g^e = x, or None if x is outside <g>.

    Baby-step/giant-step over the cyclic group <g>; O(sqrt(|<g>|)) ops.
    """
    if g.is_zero() or x.is_zero():
        raise ZeroElement("dlog needs nonzero elements")
    if g.field != x.field:
        raise ValueError("dlog arguments in different fields")
    n = g.multiplicative_order()
    # <g> is the unique subgroup of its order in a cyclic group
    if x**n != g.field.one():
        return None
    m = 1
    while m * m < n:
        m += 1
    baby: dict[tuple, int] = {}
    e = g.field.one()
    for j in range(m):
        baby.setdefault(e.key(), j)
        e = e * g
    giant_step = (g**m).inv()
    cur = x
    for i in range(m + 1):
        j = baby.get(cur.key())
        if j is not None:
            return i * m + j
        cur = cur * giant_step
    return None  # pragma: no cover


def power_residue_order(u: FqElement, d: int) -> int:
    """Order of the class of u in F_q^* / (F_q^*)^d.

    Requires d | q - 1 (i.e. mu_d inside the field); equals the smallest
    e | d with u^(e(q-1)/d) = 1.
    """
    if u.is_zero():
        raise ZeroElement("unit required")
    q = u.field.q
    if d < 1 or (q - 1) % d != 0:
        raise NoRootsOfUnity(f"d={d} does not divide q-1={q - 1}")
    h = u ** ((q - 1) // d)
    return nt.multiplicative_order(lambda k: h**k, u.field.one(), d)


def primitive_root_of_unity(field: Fq, d: int) -> FqElement:
    """A canonical primitive d-th root of unity in the field (d | q-1)."""
    if (field.q - 1) % d != 0:
        raise NoRootsOfUnity(f"no primitive {d}-th roots of unity in {field.name}")
    g = field.multiplicative_generator()
    return g ** ((field.q - 1) // d)


# ---------------------------------------------------------------------------
# subfield embeddings F_{p^a} -> F_{p^b} for a | b
# ---------------------------------------------------------------------------

_embed_cache: dict[tuple[int, int, int], FqElement] = {}
_embed_lock = threading.Lock()


def _generator_image(src: Fq, dst: Fq) -> FqElement:
    """Canonical image of the class of x of src inside dst (src degree | dst degree)."""
    key = (src.p, src.m, dst.m)
    with _embed_lock:
        if key in _embed_cache:
            return _embed_cache[key]
    from .unipoly import UniPoly, roots_in_field  # deferred: unipoly imports this module

    f = UniPoly.from_ints(dst, src.poly)  # defining poly has prime-field coefficients
    roots = roots_in_field(f)
    if not roots:  # pragma: no cover
        raise ArithmeticError("defining polynomial has no root in the larger field")
    image = roots[0]  # least root in canonical order: a fixed embedding
    with _embed_lock:
        image = _embed_cache.setdefault(key, image)
    return image


def embed(elt: FqElement, dst: Fq) -> FqElement:
    """Map an element of F_{p^a} into F_{p^b} along the canonical embedding (a | b)."""
    src = elt.field
    if src == dst:
        return elt
    if src.p != dst.p or dst.m % src.m != 0:
        raise ValueError(f"no embedding {src.name} -> {dst.name}")
    if src.m == 1:
        return dst.el(elt.coeffs[0])
    g = _generator_image(src, dst)
    acc = dst.zero()
    for c in reversed(elt.coeffs):
        acc = acc * g + dst.el(c)
    return acc


def descend(elt: FqElement, dst: Fq) -> FqElement:
    """Inverse of embed: rewrite an element known to lie in the subfield dst.

    Solves a small F_p-linear system against the power basis of the embedded
    subfield generator.
    """
    src = elt.field
    if src == dst:
        return elt
    if dst.m == 1:
        if not elt.in_prime_field():
            raise ValueError("element does not lie in the prime field")
        return dst.el(elt.coeffs[0])
    if src.p != dst.p or src.m % dst.m != 0:
        raise ValueError(f"no descent {src.name} -> {dst.name}")
    g = _generator_image(dst, src)
    p = src.p
    # columns: coordinates of g^i in src, i < dst.m
    cols = []
    acc = src.one()
    for _ in range(dst.m):
        cols.append(acc.coeffs)
        acc = acc * g
    # solve sum_i v_i * g^i = elt by Gaussian elimination over F_p
    rows = src.m
    aug = [[cols[j][i] % p for j in range(dst.m)] + [elt.coeffs[i] % p] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(dst.m):
        piv = next((i for i in range(r, rows) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    sol = [0] * dst.m
    for idx, c in enumerate(piv_cols):
        sol[c] = aug[idx][-1]
    out = dst.from_coeffs(sol)
    if embed(out, src) != elt:
        raise ValueError("element does not lie in the requested subfield")
    return out
