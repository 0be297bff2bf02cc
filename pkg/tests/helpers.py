"""Independent oracles shared by the test modules.

These deliberately avoid the library's own code paths: determinants by
cofactor expansion, orders by brute force, divisor sums by trial
division, chord-tangent sums by point search.
"""

from __future__ import annotations


def det_cofactor(rows, ring):
    """Determinant by recursive cofactor expansion (exponential; tiny inputs)."""
    n = len(rows)
    if n == 0:
        return ring.one()
    if n == 1:
        return rows[0][0]
    total = ring.zero()
    for j in range(n):
        a = rows[0][j]
        if ring.is_zero(a):
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * det_cofactor(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def brute_dlog(g, x, cap):
    """Smallest e >= 0 with g^e = x, scanning exponents up to cap."""
    cur = g.field.one()
    for e in range(cap + 1):
        if cur == x:
            return e
        cur = cur * g
    return None


def brute_subgroup(g, cap):
    out = set()
    cur = g.field.one()
    for _ in range(cap + 1):
        if cur.key() in out:
            break
        out.add(cur.key())
        cur = cur * g
    return out


def sigma_r(n: int, r: int) -> int:
    """Divisor power sum by trial division."""
    return sum(d**r for d in range(1, n + 1) if n % d == 0)
