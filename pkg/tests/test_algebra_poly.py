import random
from fractions import Fraction

import pytest

from brauercert.algebra import (
    QQ,
    ZZ,
    PolyRing,
    TernaryForm,
    UniPoly,
    build_ext_field,
    det_bareiss,
    gcd_bivariate,
    has_root_in_extension,
    is_separable,
    resultant,
    roots_in_field,
)
from brauercert.errors import Undefined

from helpers import det_cofactor

# the two ternary cubics of the flagship bad-reduction example, over Z
F1_TERMS = {
    (0, 2, 1): 1,   # y^2 z
    (0, 1, 2): 1,   # y z^2
    (3, 0, 0): -1,  # -x^3
    (2, 0, 1): -1,  # -x^2 z
    (1, 0, 2): 7,   # 7 x z^2
    (0, 0, 3): -5,  # -5 z^3
}
F2_TERMS = {
    (2, 0, 1): 1,   # x^2 z
    (0, 3, 0): -1,  # -y^3
    (0, 0, 3): 26,  # 26 z^3
}

# printed form of the eliminated-variable resultant: (y - 3) * octic
OCTIC = [9585, 3209, 1084, -587, -196, -66, 9, 3, 1]


def f1_f2_over(ring):
    f1 = TernaryForm.from_int_terms(ring, 3, F1_TERMS)
    f2 = TernaryForm.from_int_terms(ring, 3, F2_TERMS)
    return f1, f2


def eq13_product(ring) -> UniPoly:
    lin = UniPoly.from_ints(ring, [-3, 1])
    octic = UniPoly.from_ints(ring, OCTIC)
    return lin * octic


def test_membership_values_over_z():
    f1, f2 = f1_f2_over(ZZ)
    assert f1.evaluate((-1, 3, 1)) == 0
    assert f2.evaluate((-1, 3, 1)) == 0
    assert f1.evaluate((1, 0, 1)) == 0
    assert f2.evaluate((1, 0, 1)) == 27


def test_resultant_trivial_convention():
    # forced by the f-rows-first Sylvester convention
    f = UniPoly.from_ints(ZZ, [-1, 1])
    g = UniPoly.from_ints(ZZ, [-2, 1])
    assert resultant(f, g) == -1


def test_resultant_constant_case():
    f = UniPoly.from_ints(ZZ, [1, 2, 3])  # degree 2
    assert resultant(f, UniPoly.from_ints(ZZ, [5])) == 25
    with pytest.raises(Undefined):
        resultant(UniPoly(ZZ, ()), UniPoly(ZZ, ()))


def test_bareiss_matches_cofactor_oracle():
    rng = random.Random(5)
    for n in range(1, 5):
        for _ in range(10):
            rows = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(n)]
            assert det_bareiss(rows, ZZ) == det_cofactor(rows, ZZ)


def test_eq13_resultant_exact():
    # eliminate x from the two dehomogenized cubics; coefficients live in Z[y]
    f1, f2 = f1_f2_over(ZZ)
    fx = f1.to_xy_poly(chart=2)  # (Z[y])[x]
    gx = f2.to_xy_poly(chart=2)
    res = resultant(fx, gx)  # a UniPoly over Z in y
    ring = PolyRing(ZZ)
    # oracle: cofactor expansion of the same Sylvester matrix
    from brauercert.algebra.unipoly import sylvester_matrix

    oracle = det_cofactor(sylvester_matrix(fx, gx), ring)
    assert res == oracle
    expected = eq13_product(ZZ)
    # the printed product is the monic normalization of the resultant: the
    # determinant itself carries leading coefficient -1 in this convention
    assert res == expected.scale(-1)
    assert res.scale(-1) == expected
    assert res.degree == 9


def test_eq13_separability_mod_p():
    # separable exactly away from {2, 3, 37, 97, 29723, 447692787897013}
    for p, expect in [(19, True), (37, False), (97, False), (5, True), (29723, False)]:
        field = build_ext_field(p, 1)
        poly = eq13_product(ZZ).map_coeffs(lambda c: field.el(c), field)
        assert is_separable(poly) is expect


def test_separability_simple():
    f7 = build_ext_field(7, 1)
    f = UniPoly.from_ints(f7, [-1, 0, 1])  # x^2 - 1, roots +-1
    assert is_separable(f)
    g = UniPoly.from_ints(f7, [1, 0, 0, 0, 0, 0, 0, 1])  # x^7 + 1 = (x + 1)^7
    assert not is_separable(g)


def test_resultant_multiplicative_in_second_argument():
    rng = random.Random(17)
    f19 = build_ext_field(19, 1)
    for _ in range(25):
        def rand_poly(dmax):
            d = rng.randrange(1, dmax + 1)
            coeffs = [f19.el(rng.randrange(19)) for _ in range(d)] + [f19.el(rng.randrange(1, 19))]
            return UniPoly(f19, coeffs)

        f, g, h = rand_poly(3), rand_poly(3), rand_poly(3)
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_resultant_vanishes_iff_common_root():
    rng = random.Random(23)
    f5 = build_ext_field(5, 1)
    seen_zero = seen_nonzero = 0
    for _ in range(60):
        def rand_poly():
            d = rng.randrange(1, 4)
            coeffs = [f5.el(rng.randrange(5)) for _ in range(d)] + [f5.el(rng.randrange(1, 5))]
            return UniPoly(f5, coeffs)

        f, g = rand_poly(), rand_poly()
        r = resultant(f, g)
        common = f.gcd(g)
        if f5.is_zero(r):
            seen_zero += 1
            assert common.degree > 0
            bound = f.degree * g.degree
            assert any(
                has_root_in_extension(common, m) for m in range(1, max(bound, 1) + 1)
            )
        else:
            seen_nonzero += 1
            assert common.degree == 0
    assert seen_zero > 0 and seen_nonzero > 0


def test_has_root_in_extension_examples():
    f7 = build_ext_field(7, 1)
    f = UniPoly.from_ints(f7, [1, 0, 1])  # x^2 + 1
    assert not has_root_in_extension(f, 1)  # -1 is not a square mod 7
    assert has_root_in_extension(f, 2)  # quadratics split over F_{p^2}
    lin = UniPoly.from_ints(f7, [-3, 1])
    for m in (1, 2, 5):
        assert has_root_in_extension(lin, m)


def test_roots_in_field():
    f19 = build_ext_field(19, 1)
    # (x - 2)(x - 5)(x - 5) has roots {2, 5}
    f = UniPoly.from_ints(f19, [-2, 1]) * UniPoly.from_ints(f19, [-5, 1]) ** 2
    roots = roots_in_field(f)
    assert sorted(r.as_int() for r in roots) == [2, 5]
    # determinism
    assert [r.key() for r in roots_in_field(f)] == [r.key() for r in roots]


def test_roots_in_extension_field():
    f49 = build_ext_field(7, 2)
    x2p1 = UniPoly.from_ints(f49, [1, 0, 1])
    roots = roots_in_field(x2p1)
    assert len(roots) == 2
    for r in roots:
        assert (r * r + f49.one()).is_zero()


def test_hessian_fermat_cubic():
    f = TernaryForm.from_int_terms(ZZ, 3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
    h = f.hessian()
    assert h.degree == 3
    assert h.terms == {(1, 1, 1): 216}


def test_hessian_of_quadratic_is_constant():
    q = TernaryForm.from_int_terms(ZZ, 2, {(2, 0, 0): 1, (0, 1, 1): 3, (0, 2, 0): 2})
    h = q.hessian()
    assert h.degree == 0


def test_hessian_covariance_under_substitution():
    rng = random.Random(31)
    f11 = build_ext_field(11, 1)
    f = TernaryForm(
        f11,
        3,
        {
            (3, 0, 0): f11.el(2),
            (1, 1, 1): f11.el(5),
            (0, 2, 1): f11.el(7),
            (0, 0, 3): f11.el(1),
        },
    )
    for _ in range(5):
        while True:
            mat = [[f11.el(rng.randrange(11)) for _ in range(3)] for _ in range(3)]
            det = det_bareiss(mat, f11)
            if not det.is_zero():
                break
        lhs = f.substitute(mat).hessian()
        rhs = f.hessian().substitute(mat).scale(det * det)
        assert lhs == rhs


def test_gcd_bivariate_common_factor():
    ring = PolyRing(build_ext_field(7, 1))
    f7 = ring.base
    x_common = TernaryForm.from_int_terms(f7, 1, {(1, 0, 0): 1, (0, 1, 0): 1})  # x + y
    a = TernaryForm.from_int_terms(f7, 1, {(1, 0, 0): 1, (0, 0, 1): 3})  # x + 3z
    b = TernaryForm.from_int_terms(f7, 1, {(0, 1, 0): 1, (0, 0, 1): 5})  # y + 5z
    f = (x_common * a).to_xy_poly(2)
    g = (x_common * b).to_xy_poly(2)
    d = gcd_bivariate(f, g)
    assert d.degree == 1  # degree in x
    expect = x_common.to_xy_poly(2)
    # compare up to a unit: normalize by matching leading structure
    assert d.degree == expect.degree
    lead_ratio = None
    for c_d, c_e in zip(d.coeffs, expect.coeffs):
        if c_d.is_zero() and c_e.is_zero():
            continue
        assert not c_d.is_zero() and not c_e.is_zero()
    # d divides both inputs exactly
    f.exact_div(d)
    g.exact_div(d)


def test_unipoly_json_roundtrip():
    from brauercert.algebra.serialize import unipoly_from_json, unipoly_to_json

    f = UniPoly.from_ints(ZZ, [3, 0, -7, 1])
    obj = unipoly_to_json(f)
    assert obj == [[[0], "3"], [[2], "-7"], [[3], "1"]]
    assert unipoly_from_json(ZZ, obj) == f
    g = UniPoly(QQ, [Fraction(1, 2), Fraction(-3)])
    assert unipoly_from_json(QQ, unipoly_to_json(g)) == g
    f19 = build_ext_field(19, 1)
    h = UniPoly.from_ints(f19, [4, 0, 18])
    assert unipoly_from_json(f19, unipoly_to_json(h)) == h


def test_ternary_json_roundtrip():
    from brauercert.algebra.serialize import ternary_from_json, ternary_to_json

    f1, _ = f1_f2_over(ZZ)
    assert ternary_from_json(ZZ, ternary_to_json(f1)) == f1
