import random

import pytest

from brauercert.algebra import (
    Fq,
    build_ext_field,
    dlog,
    power_residue_order,
    primitive_root_of_unity,
)
from brauercert.algebra import nt
from brauercert.errors import InvalidPrime, NoRootsOfUnity, ZeroElement

from helpers import brute_dlog, brute_subgroup


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 19, 97, 29723]
    for p in primes:
        assert nt.is_prime(p)
    for n in [0, 1, 4, 9, 91, 1001, 29724]:
        assert not nt.is_prime(n)


def test_is_prime_large_exclusion_prime():
    # the 15-digit prime from the separability exclusion list
    assert nt.is_prime(447692787897013)


def test_factorize_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(2, 10**9)
        fac = nt.factorize(n)
        prod = 1
        for p, e in fac.items():
            assert nt.is_prime(p)
            prod *= p**e
        assert prod == n


def test_build_prime_field():
    f7 = build_ext_field(7, 1)
    assert f7.poly == (0, 1)  # the 'x - 0' convention for prime fields
    assert f7.q == 7


def test_build_ext_field_7_2_is_first_irreducible():
    # squares mod 7 are {1, 2, 4}; -1 = 6 is a non-square, so x^2 + 1 is
    # the first monic irreducible quadratic in the coefficient ordering
    assert sorted({(a * a) % 7 for a in range(1, 7)}) == [1, 2, 4]
    f49 = build_ext_field(7, 2)
    assert f49.poly == (1, 0, 1)
    # x^2 + 1 splits there: the generator class is a root
    i = f49.from_coeffs([0, 1])
    assert (i * i + f49.one()).is_zero()


def test_build_ext_field_19_3_group_order():
    f = build_ext_field(19, 3)
    assert f.q - 1 == 6858  # 19^3 - 1
    g = f.multiplicative_generator()
    assert g.multiplicative_order() == 6858


def test_build_ext_field_rejects_composite():
    with pytest.raises(InvalidPrime):
        build_ext_field(10, 2)


def test_field_axioms_random_sample():
    rng = random.Random(3)
    for (p, m) in [(5, 1), (7, 2), (3, 4)]:
        field = build_ext_field(p, m)
        els = [field.from_coeffs([rng.randrange(p) for _ in range(m)]) for _ in range(8)]
        for a in els:
            for b in els:
                assert a + b == b + a
                assert a * b == b * a
                for c in els:
                    assert (a + b) + c == a + (b + c)
                    assert (a * b) * c == a * (b * c)
                    assert a * (b + c) == a * b + a * c
            if not a.is_zero():
                assert a * a.inv() == field.one()


def test_frobenius_fixes_prime_field():
    field = build_ext_field(5, 3)
    for n in range(5):
        assert field.el(n).frobenius() == field.el(n)
    g = field.multiplicative_generator()
    assert g.frobenius(3) == g  # full power of Frobenius is the identity


def test_dlog_example_f19():
    f19 = build_ext_field(19, 1)
    g, x = f19.el(2), f19.el(7)
    # oracle: brute scan; 2^6 = 64 = 7 mod 19
    assert brute_dlog(g, x, 18) == 6
    assert dlog(g, x) == 6


def test_dlog_identity():
    f19 = build_ext_field(19, 1)
    assert dlog(f19.el(2), f19.one()) == 0


def test_dlog_outside_subgroup():
    # 7 has order 3 mod 19: <7> = {1, 7, 11}; 2 is outside
    f19 = build_ext_field(19, 1)
    g = f19.el(7)
    assert brute_subgroup(g, 19) == {(1,), (7,), (11,)}
    assert dlog(g, f19.el(2)) is None


def test_dlog_matches_brute_on_extension_field():
    field = build_ext_field(3, 4)
    g = field.multiplicative_generator()
    rng = random.Random(11)
    for _ in range(10):
        e = rng.randrange(field.q - 1)
        x = g**e
        d = dlog(g, x)
        assert d == e
        assert g**d == x


def test_dlog_zero_raises():
    f19 = build_ext_field(19, 1)
    with pytest.raises(ZeroElement):
        dlog(f19.zero(), f19.one())


def test_power_residue_order_examples():
    f19 = build_ext_field(19, 1)
    # 2^6 = 7 != 1 mod 19, so 2 is not a cube and its class has order 3
    assert pow(2, 6, 19) == 7
    assert power_residue_order(f19.el(2), 3) == 3
    # 8 = 2^3 is a cube
    assert power_residue_order(f19.el(8), 3) == 1
    assert power_residue_order(f19.one(), 3) == 1


def test_power_residue_order_brute_agreement():
    f19 = build_ext_field(19, 1)
    d = 6
    cubes = {pow(a, d, 19) for a in range(1, 19)}

    def brute_class_order(u):
        # smallest e | d with u^e a d-th power
        for e in nt.divisors(d):
            if pow(u, e * (19 - 1) // d, 19) == 1:
                return e
        raise AssertionError

    _ = cubes
    for u in range(1, 19):
        assert power_residue_order(f19.el(u), d) == brute_class_order(u)


def test_power_residue_order_requires_roots_of_unity():
    f19 = build_ext_field(19, 1)
    with pytest.raises(NoRootsOfUnity):
        power_residue_order(f19.el(2), 5)  # 5 does not divide 18


def test_primitive_root_of_unity():
    f19 = build_ext_field(19, 1)
    z = primitive_root_of_unity(f19, 3)
    assert z != f19.one()
    assert z**3 == f19.one()


def test_registry_returns_same_descriptor():
    assert build_ext_field(19, 3) is build_ext_field(19, 3)


def test_field_json_roundtrip():
    from brauercert.algebra.serialize import field_from_json, field_to_json

    f = build_ext_field(7, 2)
    obj = field_to_json(f)
    assert obj == {"p": 7, "m": 2, "defining_poly": [1, 0, 1]}
    assert field_from_json(obj) == f
