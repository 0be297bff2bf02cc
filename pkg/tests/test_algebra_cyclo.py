import math
import random
from fractions import Fraction

import pytest

from brauercert.algebra import CycloRing, build_ext_field, cyclotomic_valuation
from brauercert.errors import IntegralityViolation


def test_uniformizer_has_valuation_one():
    for p in (3, 5):
        ring = CycloRing(p)
        lam2 = ring.zeta2() - ring.one()
        assert cyclotomic_valuation(lam2) == 1


def test_valuation_of_p():
    # norm of p is p^phi(p^2), so v(p) = p(p-1)
    for p in (3, 5):
        ring = CycloRing(p)
        assert cyclotomic_valuation(ring.from_int(p)) == p * (p - 1)


def test_valuation_of_lam():
    # lam = zeta - 1 for zeta = zeta2^p a primitive p-th root: v = p
    for p in (3, 5):
        ring = CycloRing(p)
        lam = ring.zeta2() ** p - ring.one()
        assert cyclotomic_valuation(lam) == p


def test_valuation_zero_is_infinite():
    ring = CycloRing(3)
    assert cyclotomic_valuation(ring.zero()) == math.inf


def test_valuation_is_additive_and_ultrametric():
    rng = random.Random(42)
    ring = CycloRing(3)

    def rand_el():
        coeffs = [Fraction(rng.randrange(-6, 7)) for _ in range(ring.phi)]
        from brauercert.algebra.cyclo import CyclotomicInt

        return CyclotomicInt(ring, coeffs)

    for _ in range(15):
        x, y = rand_el(), rand_el()
        if x.is_zero() or y.is_zero():
            continue
        vx, vy = cyclotomic_valuation(x), cyclotomic_valuation(y)
        assert cyclotomic_valuation(x * y) == vx + vy
        s = x + y
        if not s.is_zero():
            assert cyclotomic_valuation(s) >= min(vx, vy)


def test_power_basis_integrality_enforced():
    ring = CycloRing(3)
    from brauercert.algebra.cyclo import CyclotomicInt

    with pytest.raises(IntegralityViolation):
        CyclotomicInt(ring, [Fraction(1, 3)] + [Fraction(0)] * (ring.phi - 1))
    # denominators prime to p are fine
    CyclotomicInt(ring, [Fraction(1, 2)] + [Fraction(0)] * (ring.phi - 1))


def test_exact_div_by_unit_and_violation():
    ring = CycloRing(3)
    lam2 = ring.zeta2() - ring.one()
    # lam2^2 / lam2 = lam2, exact
    sq = lam2 * lam2
    assert sq.exact_div(lam2) == lam2
    # 1 / lam2 is not p-integral
    with pytest.raises(IntegralityViolation):
        ring.one().exact_div(lam2)


def test_lam_power_over_p_is_a_unit():
    # v(lam^(p-1)) = p(p-1) = v(p), so lam^(p-1)/p is a unit
    for p in (3, 5):
        ring = CycloRing(p)
        lam = ring.zeta2() ** p - ring.one()
        lam_pow = lam ** (p - 1)
        assert cyclotomic_valuation(lam_pow) == p * (p - 1)
        unit = lam_pow.scale_rational(Fraction(1, p))
        assert cyclotomic_valuation(unit) == 0


def test_residue_mod_lam2():
    ring = CycloRing(3)
    f3 = build_ext_field(3, 1)
    z = ring.zeta2()
    assert z.residue_mod_lam2(f3) == f3.one()
    lam2 = z - ring.one()
    assert lam2.residue_mod_lam2(f3).is_zero()
    # p/lam^(p-1) reduces to -1 (Wilson-type unit)
    lam = z**3 - ring.one()
    unit = ring.from_int(3).exact_div(lam * lam)
    assert unit.residue_mod_lam2(f3) == f3.el(-1)
