"""Tests for coefficient ring arithmetic."""
import math
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from zbasis.coeffring import (FieldPairError, RingDescriptor, RingMismatchError, annihilator, coeff_lcm,
                              divisor_unit, ext_gcd, ideal_gen_pair, lcm_multipliers)

ZZ = RingDescriptor.integers()
QQ = RingDescriptor.rationals()
Z12 = RingDescriptor.integers_mod(12)


def test_ext_gcd_bezout_identity():
    """g = s*a + t*b with g the nonnegative gcd, including negative inputs."""
    rng = random.Random(7)
    for _ in range(200):
        a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        g, s, t = ext_gcd(a, b)
        assert g >= 0
        assert s * a + t * b == g
        if a or b:
            assert a % g == 0 and b % g == 0


def test_ext_gcd_small_cases():
    """Known values and the all-zero case."""
    assert ext_gcd(0, 0) == (0, 0, 0)
    assert ext_gcd(2, 3) == (1, -1, 1)
    assert ext_gcd(240, 46)[0] == 2


def test_ideal_gen_pair_over_integers():
    """gcd with cofactors, redundancy when one coefficient divides the other."""
    gen = ideal_gen_pair(ZZ, 4, 6)
    assert gen.c == 2 and gen.df * 4 + gen.dg * 6 == 2
    assert not gen.redundant

    gen = ideal_gen_pair(ZZ, 3, 6)
    assert gen.redundant
    assert (gen.c, gen.df, gen.dg) == (3, 1, 0)


def test_ideal_gen_pair_modular():
    """Over ZZ/12 the Bezout combination holds modulo 12."""
    gen = ideal_gen_pair(Z12, 4, 6)
    assert not gen.redundant
    assert (gen.df * 4 + gen.dg * 6) % 12 == gen.c == 2

    # 5 is a unit, so it divides everything
    assert ideal_gen_pair(Z12, 5, 4).redundant


def test_ideal_gen_pair_rejects_field():
    with pytest.raises(FieldPairError):
        ideal_gen_pair(QQ, Fraction(1), Fraction(2))


def test_annihilator():
    """n / gcd(n, c) over ZZ/n, zero elsewhere."""
    assert annihilator(Z12, 4) == 3
    assert annihilator(Z12, 6) == 2
    assert annihilator(Z12, 5) == 0
    assert annihilator(ZZ, 4) == 0


@pytest.mark.parametrize("n", [12, 100, 2 ** 6 * 3 ** 2 * 7, 2129600])
def test_divisor_unit(n):
    """A unit of ZZ/n taking c to gcd(c, n)."""
    ring = RingDescriptor.integers_mod(n)
    for c in random.Random(n).sample(range(1, n), min(n - 1, 200)):
        u = divisor_unit(ring, c)
        assert ring.is_unit(u)
        assert u * c % n == math.gcd(c, n)
    assert divisor_unit(Z12, 8) == 5
    with pytest.raises(RingMismatchError):
        divisor_unit(ZZ, 3)


def test_coeff_lcm_and_multipliers():
    """Positive lcm over ZZ; multipliers are taken before reduction mod n."""
    assert coeff_lcm(ZZ, 4, 6) == 12
    assert coeff_lcm(ZZ, -4, 6) == 12
    assert coeff_lcm(RingDescriptor.integers_mod(100), 4, 6) == 12
    assert lcm_multipliers(ZZ, 4, 6) == (3, 2)
    assert lcm_multipliers(Z12, 4, 6) == (3, 2)


def test_divides_and_exact_quotient_modular():
    """Divisibility in ZZ/12 goes through gcd with the modulus."""
    assert Z12.divides(4, 8)
    assert not Z12.divides(4, 6)
    assert Z12.divides(5, 7)
    q = Z12.exact_quotient(8, 4)
    assert (q * 4) % 12 == 8
    q = Z12.exact_quotient(7, 5)
    assert (q * 5) % 12 == 7


def test_exact_quotient_integers_requires_divisibility():
    assert ZZ.exact_quotient(-12, 4) == -3
    with pytest.raises(ValueError):
        ZZ.exact_quotient(7, 2)


def test_units_and_normalization():
    """lc > 0 over ZZ, monic over QQ, ZZ/n left alone."""
    assert ZZ.normal_unit(-3) == -1
    assert ZZ.normal_unit(3) == 1
    assert QQ.normal_unit(Fraction(3, 2)) == Fraction(2, 3)
    assert Z12.normal_unit(4) == 1
    assert Z12.is_unit(5) and not Z12.is_unit(4)
    assert ZZ.is_unit(-1) and not ZZ.is_unit(2)


def test_divisibility_rank():
    assert Z12.divisibility_rank(8) == 4
    assert ZZ.divisibility_rank(-6) == 6
    assert QQ.divisibility_rank(Fraction(5, 3)) == 0


def test_ring_construction_and_coercion():
    """Invalid moduli and non-integral fractions are rejected."""
    with pytest.raises(ValueError):
        RingDescriptor.integers_mod(1)
    with pytest.raises(RingMismatchError):
        ZZ.coerce(Fraction(1, 2))
    assert Z12.coerce(-1) == 11
    assert ZZ.coerce(Fraction(4, 2)) == 2
    assert RingDescriptor.integers_mod(10**200).describe() == "ZZ/1" + "0" * 200
    assert Z12 == RingDescriptor.integers_mod(12) and Z12 != ZZ
