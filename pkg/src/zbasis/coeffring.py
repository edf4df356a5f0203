#!/usr/bin/env python3
"""
Coefficient rings for zbasis.
Contains RingDescriptor (ZZ, ZZ/n, QQ), ext_gcd, ideal_gen_pair, annihilator and coeff_lcm.

Coefficients are plain Python values: int for ZZ and ZZ/n (canonical
representatives in [0, n) for the latter) and fractions.Fraction for QQ.
The ring travels with the polynomial, not with every coefficient.
"""
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Tuple, Union

Coefficient = Union[int, Fraction]


class FieldPairError(ValueError):
    """Raised when gcd-pair machinery is asked to work over QQ."""


class RingMismatchError(ValueError):
    """Raised when values from different coefficient rings are combined."""


class RingKind(Enum):
    INTEGERS = "ZZ"
    INTEGERS_MOD = "ZZ/n"
    RATIONALS = "QQ"


class RingDescriptor:
    """One of ZZ, ZZ/n (n >= 2, any size, zero divisors allowed) or QQ."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: RingKind, modulus: Optional[int] = None):
        if kind is RingKind.INTEGERS_MOD:
            if modulus is None or modulus < 2:
                raise ValueError(f"ZZ/n needs a modulus n >= 2, got {modulus}")
        elif modulus is not None:
            raise ValueError(f"{kind.value} does not take a modulus")
        self.kind = kind
        self.modulus = modulus

    @classmethod
    def integers(cls) -> "RingDescriptor":
        return cls(RingKind.INTEGERS)

    @classmethod
    def integers_mod(cls, n: int) -> "RingDescriptor":
        return cls(RingKind.INTEGERS_MOD, n)

    @classmethod
    def rationals(cls) -> "RingDescriptor":
        return cls(RingKind.RATIONALS)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingDescriptor):
            return NotImplemented
        return self.kind is other.kind and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.kind, self.modulus))

    def __repr__(self) -> str:
        return f"RingDescriptor({self.describe()})"

    def describe(self) -> str:
        """Ring name as written in ideal files: ZZ, ZZ/12 or QQ."""
        if self.kind is RingKind.INTEGERS_MOD:
            return f"ZZ/{self.modulus}"
        return self.kind.value

    @property
    def is_field(self) -> bool:
        return self.kind is RingKind.RATIONALS

    @property
    def is_integers(self) -> bool:
        return self.kind is RingKind.INTEGERS

    @property
    def is_modular(self) -> bool:
        return self.kind is RingKind.INTEGERS_MOD

    # Element handling

    def coerce(self, value: Coefficient) -> Coefficient:
        """Bring an int or Fraction into canonical form for this ring."""
        if self.kind is RingKind.RATIONALS:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise RingMismatchError(f"{value} is not an element of {self.describe()}")
            value = value.numerator
        if self.kind is RingKind.INTEGERS_MOD:
            return value % self.modulus
        return int(value)

    def reduce(self, value: Coefficient) -> Coefficient:
        """Canonicalize the result of ring arithmetic on canonical values."""
        if self.kind is RingKind.INTEGERS_MOD:
            return value % self.modulus
        return value

    def one(self) -> Coefficient:
        return Fraction(1) if self.is_field else 1

    def is_unit(self, value: Coefficient) -> bool:
        if self.kind is RingKind.RATIONALS:
            return value != 0
        if self.kind is RingKind.INTEGERS_MOD:
            return gcd(value, self.modulus) == 1
        return value in (1, -1)

    def divides(self, a: Coefficient, b: Coefficient) -> bool:
        """True when b lies in the ideal generated by a."""
        if a == 0:
            return b == 0
        if self.kind is RingKind.RATIONALS:
            return True
        if self.kind is RingKind.INTEGERS_MOD:
            return b % gcd(a, self.modulus) == 0
        return b % a == 0

    def exact_quotient(self, b: Coefficient, a: Coefficient) -> Coefficient:
        """Canonical q with q*a = b; requires divides(a, b)."""
        if self.kind is RingKind.RATIONALS:
            return b / a
        if self.kind is RingKind.INTEGERS:
            q, r = divmod(b, a)
            if r:
                raise ValueError(f"{a} does not divide {b} in ZZ")
            return q
        n = self.modulus
        g = gcd(a, n)
        if b % g:
            raise ValueError(f"{a} does not divide {b} in ZZ/{n}")
        m = n // g
        if m == 1:
            return 0
        return (b // g) * pow(a // g, -1, m) % m

    def normal_unit(self, value: Coefficient) -> Coefficient:
        """Unit u such that u*value is the preferred associate (lc > 0 over ZZ, 1 over QQ)."""
        if self.kind is RingKind.RATIONALS:
            return 1 / value
        if self.kind is RingKind.INTEGERS and value < 0:
            return -1
        return 1

    def divisibility_rank(self, value: Coefficient) -> int:
        """Size measure that never decreases along divisibility chains."""
        if self.kind is RingKind.RATIONALS:
            return 0
        if self.kind is RingKind.INTEGERS_MOD:
            return gcd(value, self.modulus)
        return abs(value)

    def bit_length(self, value: Coefficient) -> int:
        if isinstance(value, Fraction):
            return max(abs(value.numerator).bit_length(), value.denominator.bit_length())
        return abs(value).bit_length()

    def format(self, value: Coefficient) -> str:
        if isinstance(value, Fraction) and value.denominator == 1:
            return str(value.numerator)
        return str(value)


class IdealGenerator(NamedTuple):
    """Result of ideal_gen_pair: c = df*cf + dg*cg generates <cf, cg>."""

    c: Coefficient
    df: Coefficient
    dg: Coefficient
    redundant: bool


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Extended Euclid: (g, s, t) with g = gcd(a, b) >= 0 and g = s*a + t*b.

    The cofactors are the ones produced by the plain remainder sequence on
    |a|, |b|, hence |s| <= |b/g| and |t| <= |a/g| whenever both are nonzero.
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = abs(a), abs(b)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if a < 0:
        old_s = -old_s
    if b < 0:
        old_t = -old_t
    return old_r, old_s, old_t


def ideal_gen_pair(ring: RingDescriptor, cf: Coefficient, cg: Coefficient) -> IdealGenerator:
    """Generator c of <cf, cg> with Bezout cofactors and the redundancy flag."""
    if ring.is_field:
        raise FieldPairError("gcd-pairs are not defined over QQ; every pair is redundant")
    if cf == 0 or cg == 0:
        raise ValueError("ideal_gen_pair needs nonzero coefficients")
    if ring.divides(cf, cg):
        return IdealGenerator(cf, 1, 0, True)
    if ring.divides(cg, cf):
        return IdealGenerator(cg, 0, 1, True)
    g, s, t = ext_gcd(cf, cg)
    return IdealGenerator(ring.reduce(g), ring.reduce(s), ring.reduce(t), False)


def annihilator(ring: RingDescriptor, c: Coefficient) -> Coefficient:
    """Generator of {x : x*c = 0}; zero unless c is a zero divisor of ZZ/n."""
    if not ring.is_modular:
        return ring.coerce(0)
    n = ring.modulus
    return (n // gcd(n, c)) % n


def divisor_unit(ring: RingDescriptor, c: Coefficient) -> Coefficient:
    """Unit u of ZZ/n with u*c = gcd(c, n); requires c != 0."""
    if not ring.is_modular:
        raise RingMismatchError(f"divisor_unit needs ZZ/n, got {ring.describe()}")
    n = ring.modulus
    g = gcd(c, n)
    m = n // g
    u = pow(c // g, -1, m) if m > 1 else 1
    while gcd(u, n) != 1:
        u += m
    return u % n


def coeff_lcm(ring: RingDescriptor, a: Coefficient, b: Coefficient) -> Coefficient:
    """Positive lcm over ZZ, lcm of representatives mod n over ZZ/n, 1 over QQ."""
    if ring.is_field:
        return Fraction(1)
    value = abs(a * b) // gcd(a, b)
    return ring.reduce(value)


def lcm_multipliers(ring: RingDescriptor, a: Coefficient, b: Coefficient) -> Tuple[Coefficient, Coefficient]:
    """Multipliers (lcm/a, lcm/b), computed before reduction mod n."""
    if ring.is_field:
        return 1 / a, 1 / b
    value = abs(a * b) // gcd(a, b)
    return ring.reduce(value // a), ring.reduce(value // b)
