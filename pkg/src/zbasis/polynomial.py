#!/usr/bin/env python3
"""
Monomials, monomial orderings and sparse polynomials for zbasis.

A Polynomial is an immutable tuple of Terms kept strictly descending under
its ordering. Every ordering key used here is linear in the exponent
vector, so multiplying all terms by one monomial keeps them sorted.
"""
from enum import Enum, IntEnum
from operator import add as _add, sub as _sub
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .coeffring import Coefficient, RingDescriptor, RingMismatchError

MAX_EXPONENT = 2 ** 31 - 1


class ExponentOverflowError(OverflowError):
    """Raised when a monomial exponent leaves the supported range."""


class OrderingMismatchError(ValueError):
    """Raised when polynomials with different orderings are combined."""


class ZeroPolynomialError(ValueError):
    """Raised by leading-term accessors on the zero polynomial."""


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Monomial:
    """Exponent vector with cached total degree."""

    __slots__ = ("exponents", "degree", "_hash", "_key", "_key_owner")

    def __init__(self, exponents: Sequence[int]):
        exps = tuple(exponents)
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        self.exponents = exps
        self.degree = sum(exps)
        self._hash = hash(exps)
        self._key: Optional[tuple] = None
        self._key_owner: Optional["OrderingKind"] = None

    @classmethod
    def _make(cls, exps: Tuple[int, ...]) -> "Monomial":
        """Build from exponents known to be nonnegative; only overflow is checked."""
        m = cls.__new__(cls)
        m.exponents = exps
        m.degree = sum(exps)
        if m.degree > MAX_EXPONENT and max(exps) > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent overflow in {exps}")
        m._hash = hash(exps)
        m._key = None
        m._key_owner = None
        return m

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def is_one(self) -> bool:
        return self.degree == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise ValueError("monomials over different variable counts")
        return Monomial._make(tuple(map(_add, self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        for a, b in zip(self.exponents, other.exponents):
            if a > b:
                return False
        return True

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other.exponents} does not divide {self.exponents}")
        return Monomial._make(tuple(map(_sub, self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial._make(tuple(map(max, self.exponents, other.exponents)))

    def coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exponents, other.exponents))


class OrderingKind(Enum):
    LEX = "lp"
    DEGREVLEX = "dp"
    NEGLEX = "ls"
    NEGDEGREVLEX = "ds"


def _revlex_tail(exps: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(-e for e in reversed(exps))


def _sort_key(kind: OrderingKind, m: Monomial) -> tuple:
    exps = m.exponents
    if kind is OrderingKind.LEX:
        return exps
    if kind is OrderingKind.DEGREVLEX:
        return (m.degree,) + _revlex_tail(exps)
    if kind is OrderingKind.NEGLEX:
        return tuple(-e for e in exps)
    return (-m.degree,) + _revlex_tail(exps)


class MonomialOrdering:
    """lp, dp (global) and ls, ds (local) on a fixed number of variables."""

    __slots__ = ("kind", "nvars")

    def __init__(self, kind: OrderingKind, nvars: int):
        if nvars < 1:
            raise ValueError(f"an ordering needs at least one variable, got {nvars}")
        self.kind = kind
        self.nvars = nvars

    @classmethod
    def from_name(cls, name: str, nvars: int) -> "MonomialOrdering":
        try:
            return cls(OrderingKind(name), nvars)
        except ValueError:
            raise ValueError(f"unknown ordering '{name}' (expected lp, dp, ls or ds)") from None

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def is_global(self) -> bool:
        return self.kind in (OrderingKind.LEX, OrderingKind.DEGREVLEX)

    @property
    def is_local(self) -> bool:
        return not self.is_global

    def key(self, m: Monomial) -> tuple:
        """Sort key; a larger key means a larger monomial."""
        if m._key_owner is self.kind:
            return m._key  # type: ignore[return-value]
        k = _sort_key(self.kind, m)
        m._key = k
        m._key_owner = self.kind
        return k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialOrdering):
            return NotImplemented
        return self.kind is other.kind and self.nvars == other.nvars

    def __hash__(self) -> int:
        return hash((self.kind, self.nvars))

    def __repr__(self) -> str:
        return f"MonomialOrdering({self.kind.value}, {self.nvars})"


def degrevlex_key(m: Monomial) -> tuple:
    """Fixed DegRevLex key, independent of the active ordering."""
    return _sort_key(OrderingKind.DEGREVLEX, m)


def compare(a: Monomial, b: Monomial, ordering: MonomialOrdering) -> Comparison:
    if a.nvars != ordering.nvars or b.nvars != ordering.nvars:
        raise ValueError(
            f"dimension mismatch: {a.nvars} and {b.nvars} exponents for {ordering.nvars} variables"
        )
    ka, kb = _sort_key(ordering.kind, a), _sort_key(ordering.kind, b)
    if ka > kb:
        return Comparison.GREATER
    if ka < kb:
        return Comparison.LESS
    return Comparison.EQUAL


class Term(NamedTuple):
    coefficient: Coefficient
    monomial: Monomial


class Polynomial:
    """Sparse polynomial: nonzero terms, strictly descending, no repeated monomial."""

    __slots__ = ("terms", "ring", "ordering", "_hash")

    def __init__(self, terms: Iterable[Term], ring: RingDescriptor, ordering: MonomialOrdering,
                 _trusted: bool = False):
        self.ring = ring
        self.ordering = ordering
        self._hash: Optional[int] = None
        if _trusted:
            self.terms: Tuple[Term, ...] = tuple(terms)
            return
        combined: Dict[Monomial, Coefficient] = {}
        for coeff, mono in terms:
            if mono.nvars != ordering.nvars:
                raise ValueError(f"monomial {mono.exponents} does not have {ordering.nvars} variables")
            combined[mono] = combined.get(mono, 0) + ring.coerce(coeff)
        key = ordering.key
        kept = [Term(ring.coerce(c), m) for m, c in combined.items()]
        kept = [t for t in kept if t.coefficient != 0]
        kept.sort(key=lambda t: key(t.monomial), reverse=True)
        self.terms = tuple(kept)

    # Constructors

    @classmethod
    def zero(cls, ring: RingDescriptor, ordering: MonomialOrdering) -> "Polynomial":
        return cls((), ring, ordering, _trusted=True)

    @classmethod
    def constant(cls, value: Coefficient, ring: RingDescriptor, ordering: MonomialOrdering) -> "Polynomial":
        return cls([Term(value, Monomial.one(ordering.nvars))], ring, ordering)

    @classmethod
    def from_dict(cls, data: Dict[Tuple[int, ...], Coefficient], ring: RingDescriptor,
                  ordering: MonomialOrdering) -> "Polynomial":
        return cls([Term(c, Monomial(e)) for e, c in data.items()], ring, ordering)

    # Def 2.2 accessors

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def length(self) -> int:
        return len(self.terms)

    def _require_nonzero(self, what: str) -> None:
        if not self.terms:
            raise ZeroPolynomialError(f"{what} of the zero polynomial")

    @property
    def lt(self) -> Term:
        self._require_nonzero("leading term")
        return self.terms[0]

    @property
    def lc(self) -> Coefficient:
        self._require_nonzero("leading coefficient")
        return self.terms[0].coefficient

    @property
    def lm(self) -> Monomial:
        self._require_nonzero("leading monomial")
        return self.terms[0].monomial

    def tail(self) -> "Polynomial":
        self._require_nonzero("tail")
        return Polynomial(self.terms[1:], self.ring, self.ordering, _trusted=True)

    @property
    def degree(self) -> int:
        """Maximal total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(t.monomial.degree for t in self.terms)

    @property
    def ecart(self) -> int:
        self._require_nonzero("ecart")
        return self.degree - self.terms[0].monomial.degree

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0].monomial.is_one())

    def is_term(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """Units of the ring itself, or of the localization under a local ordering."""
        if not self.terms:
            return False
        lead = self.terms[0]
        if not lead.monomial.is_one() or not self.ring.is_unit(lead.coefficient):
            return False
        return self.ordering.is_local or len(self.terms) == 1

    def max_coeff_bits(self) -> int:
        bits = self.ring.bit_length
        return max((bits(t.coefficient) for t in self.terms), default=0)

    # Arithmetic

    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot combine {self.ring.describe()} with {other.ring.describe()}")
        if self.ordering != other.ordering:
            raise OrderingMismatchError(f"cannot combine {self.ordering} with {other.ordering}")

    def _new(self, terms: Iterable[Term]) -> "Polynomial":
        return Polynomial(terms, self.ring, self.ordering, _trusted=True)

    def _merge(self, a: Sequence[Term], b: Sequence[Term]) -> "Polynomial":
        key = self.ordering.key
        reduce = self.ring.reduce
        out: List[Term] = []
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            ta, tb = a[i], b[j]
            ka, kb = key(ta.monomial), key(tb.monomial)
            if ka > kb:
                out.append(ta)
                i += 1
            elif ka < kb:
                out.append(tb)
                j += 1
            else:
                c = reduce(ta.coefficient + tb.coefficient)
                if c != 0:
                    out.append(Term(c, ta.monomial))
                i += 1
                j += 1
        if i < la:
            out.extend(a[i:])
        if j < lb:
            out.extend(b[j:])
        return self._new(out)

    def _scaled_terms(self, c: Coefficient, m: Optional[Monomial]) -> List[Term]:
        reduce = self.ring.reduce
        out = []
        for coeff, mono in self.terms:
            value = reduce(coeff * c)
            if value != 0:
                out.append(Term(value, mono * m if m is not None else mono))
        return out

    def add(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self._merge(self.terms, other.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self.add(other)

    def neg(self) -> "Polynomial":
        return self._new(self._scaled_terms(-1, None))

    def __neg__(self) -> "Polynomial":
        return self.neg()

    def sub(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self._merge(self.terms, other._scaled_terms(-1, None))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self.sub(other)

    def scale(self, c: Coefficient) -> "Polynomial":
        return self._new(self._scaled_terms(self.ring.coerce(c), None))

    def mul_term(self, t: Term) -> "Polynomial":
        c = self.ring.coerce(t.coefficient)
        m = None if t.monomial.is_one() else t.monomial
        return self._new(self._scaled_terms(c, m))

    def sub_scaled(self, c: Coefficient, m: Monomial, g: "Polynomial") -> "Polynomial":
        """self - c * x^m * g."""
        self._check(g)
        shift = None if m.is_one() else m
        return self._merge(self.terms, g._scaled_terms(self.ring.reduce(-c), shift))

    def mul(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.ring, self.ordering)
        acc: Dict[Monomial, Coefficient] = {}
        for ca, ma in self.terms:
            for cb, mb in other.terms:
                mono = ma * mb
                acc[mono] = acc.get(mono, 0) + ca * cb
        return Polynomial([Term(c, m) for m, c in acc.items()], self.ring, self.ordering)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return self.mul(other)

    def normalized(self) -> "Polynomial":
        """Preferred associate: lc > 0 over ZZ, monic over QQ, unchanged over ZZ/n."""
        if not self.terms:
            return self
        u = self.ring.normal_unit(self.lc)
        return self if u == 1 else self.scale(u)

    def change_ring(self, ring: RingDescriptor) -> "Polynomial":
        return Polynomial(self.terms, ring, self.ordering)

    # Comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.ring == other.ring and self.ordering == other.ordering
                and self.terms == other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.ordering, self.terms))
        return self._hash

    def __repr__(self) -> str:
        parts = [f"{t.coefficient}*{t.monomial.exponents}" for t in self.terms]
        return f"Polynomial({' + '.join(parts) or '0'}; {self.ring.describe()}, {self.ordering.name})"


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f.add(g)


def mul_term(f: Polynomial, t: Term) -> Polynomial:
    return f.mul_term(t)


def sub_scaled(f: Polynomial, c: Coefficient, m: Monomial, g: Polynomial) -> Polynomial:
    return f.sub_scaled(c, m, g)


def leading_term(f: Polynomial) -> Term:
    return f.lt


def leading_coeff(f: Polynomial) -> Coefficient:
    return f.lc


def leading_monomial(f: Polynomial) -> Monomial:
    return f.lm


def tail(f: Polynomial) -> Polynomial:
    return f.tail()


def length(f: Polynomial) -> int:
    return f.length


def degree(f: Polynomial) -> int:
    return f.degree


def ecart(f: Polynomial) -> int:
    return f.ecart


def term_divides(g: Term, h: Term, ring: RingDescriptor) -> bool:
    """lt(g) | lt(h) as terms: monomial and coefficient divisibility."""
    return g.monomial.divides(h.monomial) and ring.divides(g.coefficient, h.coefficient)


def sort_descending(polys: Sequence[Polynomial]) -> List[Polynomial]:
    """Canonical basis order: descending leading monomials, then by coefficient size."""
    nonzero = [p for p in polys if p]
    if not nonzero:
        return []
    ordering = nonzero[0].ordering
    ring = nonzero[0].ring
    return sorted(
        nonzero,
        key=lambda p: (ordering.key(p.lm), -ring.divisibility_rank(p.lc)),
        reverse=True,
    )
