"""Tests for monomials, orderings and sparse polynomial arithmetic."""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from zbasis.coeffring import RingDescriptor, RingMismatchError
from zbasis.polynomial import (MAX_EXPONENT, Comparison, ExponentOverflowError, Monomial, MonomialOrdering,
                               OrderingMismatchError, Polynomial, Term, ZeroPolynomialError, compare,
                               ecart, leading_term, sort_descending, term_divides)


def mono(*exps):
    return Monomial(exps)


def test_global_orderings():
    """lp and dp on small monomials."""
    dp = MonomialOrdering.from_name("dp", 3)
    lp = MonomialOrdering.from_name("lp", 3)
    assert compare(mono(2, 0, 0), mono(1, 1, 0), dp) is Comparison.GREATER
    assert compare(mono(1, 1, 0), mono(0, 0, 2), dp) is Comparison.GREATER
    assert compare(mono(0, 0, 3), mono(1, 0, 0), dp) is Comparison.GREATER
    assert compare(mono(1, 0, 0), mono(0, 0, 3), lp) is Comparison.GREATER
    assert compare(mono(1, 2, 0), mono(1, 2, 0), lp) is Comparison.EQUAL


def test_local_orderings():
    """1 is the largest monomial under ls and ds."""
    ds = MonomialOrdering.from_name("ds", 2)
    ls = MonomialOrdering.from_name("ls", 2)
    assert compare(mono(0, 0), mono(1, 0), ds) is Comparison.GREATER
    assert compare(mono(0, 1), mono(2, 0), ds) is Comparison.GREATER
    assert compare(mono(1, 0), mono(0, 1), ds) is Comparison.GREATER
    assert compare(mono(1, 0), mono(2, 0), ls) is Comparison.GREATER
    assert ds.is_local and not ds.is_global


def test_unknown_ordering_name():
    with pytest.raises(ValueError):
        MonomialOrdering.from_name("wp", 2)


def test_monomial_arithmetic():
    a, b = mono(2, 1), mono(1, 3)
    assert (a * b).exponents == (3, 4)
    assert a.lcm(b).exponents == (2, 3)
    assert mono(1, 1).divides(a)
    assert not b.divides(a)
    assert (a / mono(1, 0)).exponents == (1, 1)
    assert mono(1, 0).coprime(mono(0, 2))


def test_exponent_overflow():
    with pytest.raises(ExponentOverflowError):
        Monomial((MAX_EXPONENT + 1, 0))
    with pytest.raises(ExponentOverflowError):
        Monomial((MAX_EXPONENT, 0)) * Monomial((1, 0))


def test_terms_sorted_and_combined(poly):
    """Terms come out descending, like monomials merged, zeros dropped."""
    f = poly("1 + x + 2*x^2 - x + y")
    assert [t.monomial.exponents for t in f.terms] == [(2, 0), (0, 1), (0, 0)]
    assert f.lt == Term(2, mono(2, 0))
    assert leading_term(f) == f.lt
    assert f.length == 3


def test_leading_data_under_local_ordering(poly):
    """Under ds the constant leads and the ecart measures the degree gap."""
    f = poly("6 + y + x^2", order="ds")
    assert f.lc == 6 and f.lm.is_one()
    assert f.degree == 2
    assert ecart(f) == 2


def test_zero_polynomial_accessors():
    ring, order = RingDescriptor.integers(), MonomialOrdering.from_name("dp", 1)
    zero = Polynomial.zero(ring, order)
    assert zero.is_zero() and not zero
    assert zero.degree == -1
    with pytest.raises(ZeroPolynomialError):
        zero.lc
    with pytest.raises(ZeroPolynomialError):
        zero.tail()


def test_arithmetic(poly):
    f, g = poly("x + 1"), poly("x - 1")
    assert f * g == poly("x^2 - 1")
    assert f + g == poly("2*x")
    assert f - g == poly("2")
    assert f.sub_scaled(1, mono(1, 0), g) == poly("2*x + 1 - x^2")
    assert f.mul_term(Term(3, mono(0, 1))) == poly("3*x*y + 3*y")
    assert -f == poly("-x - 1")


def test_modular_arithmetic_drops_zero_coefficients(poly):
    """4*x times 3 vanishes in ZZ/12."""
    f = poly("4*x + 2", ring="ZZ/12", variables="x")
    assert f.scale(3) == poly("6", ring="ZZ/12", variables="x")
    assert poly("13*x", ring="ZZ/12", variables="x") == poly("x", ring="ZZ/12", variables="x")


def test_mixing_rings_or_orderings_fails(poly):
    with pytest.raises(RingMismatchError):
        poly("x") + poly("x", ring="ZZ/5")
    with pytest.raises(OrderingMismatchError):
        poly("x") + poly("x", order="ds")


def test_normalized_and_units(poly):
    """Sign normalization over ZZ, monic over QQ, local units."""
    assert poly("-2*x + 1").normalized() == poly("2*x - 1")
    assert poly("3*x + 1", ring="QQ").normalized() == poly("x + 1/3", ring="QQ")
    assert poly("1 + x", order="ds").is_unit()
    assert not poly("1 + x").is_unit()
    assert poly("-1").is_unit()
    assert poly("5", ring="ZZ/12", variables="x").is_unit()


def test_term_divides_uses_coefficients(poly):
    ring = RingDescriptor.integers()
    assert term_divides(poly("2*x").lt, poly("4*x*y").lt, ring)
    assert not term_divides(poly("2*x").lt, poly("3*x*y").lt, ring)


def test_sort_descending(poly):
    ordered = sort_descending([poly("7"), poly("y - 4"), poly("x + 4")])
    assert ordered == [poly("x + 4"), poly("y - 4"), poly("7")]


def test_max_coeff_bits(poly):
    assert poly("255*x + 1").max_coeff_bits() == 8
