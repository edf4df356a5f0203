#!/usr/bin/env python3
"""
Ideal file parser and printer for zbasis.

    # comment
    ring ZZ/12[x,y,z] order dp;
    ideal I = 4*x + 2, x*y - (y + 1)^2;
    expect S = ...;

Coefficients are unsigned decimals (a/b only over QQ), ^ binds tighter than
*, and juxtaposition is not multiplication. The printer writes the same
grammar, so printed output parses back to the same source.
"""
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .coeffring import RingDescriptor, RingMismatchError
from .polynomial import (MAX_EXPONENT, ExponentOverflowError, Monomial, MonomialOrdering,
                         Polynomial, Term)

ORDER_NAMES = ("lp", "dp", "ls", "ds")
SINGLE_LINE_WIDTH = 72

_TOKEN_RE = re.compile(r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<num>\d+)"
                       r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[\[\],;=+\-*^/()−])")


class IdealSyntaxError(ValueError):
    """Parse failure at a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise IdealSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup or ""
        column = pos - line_start + 1
        pos = match.end()
        if kind == "nl":
            line, line_start = line + 1, pos
        elif kind == "punct":
            value = match.group()
            yield Token("punct", "-" if value == "−" else value, line, column)
        elif kind in ("num", "ident"):
            yield Token(kind, match.group(), line, column)
        elif kind == "comment":
            yield Token("comment", match.group()[1:].strip(), line, column)
    yield Token("eof", "", line, pos - line_start + 1)


@dataclass
class IdealSource:
    """A parsed ideal file: ring, variables, ordering, generators and an optional expected basis."""

    name: str
    ring: RingDescriptor
    variables: Tuple[str, ...]
    ordering: MonomialOrdering
    generators: List[Polynomial]
    expected: Optional[List[Polynomial]] = None
    ideal_name: str = "I"
    expect_name: str = "S"
    comments: List[str] = field(default_factory=list)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def generator_texts(self) -> List[str]:
        return [format_polynomial(p, self.variables) for p in self.generators]

    @property
    def expected_texts(self) -> Optional[List[str]]:
        if self.expected is None:
            return None
        return [format_polynomial(p, self.variables) for p in self.expected]

    def with_ring(self, ring: RingDescriptor) -> "IdealSource":
        """Same source over another coefficient ring; fractions cannot move to ZZ or ZZ/n."""
        if ring == self.ring:
            return self
        try:
            gens = [p.change_ring(ring) for p in self.generators]
            expected = None if self.expected is None else [p.change_ring(ring) for p in self.expected]
        except RingMismatchError as e:
            raise IdealSyntaxError(f"coefficient not valid in ring: {e}") from None
        return replace(self, ring=ring, generators=gens, expected=expected)

    def with_generators(self, generators: Sequence[Polynomial], ideal_name: Optional[str] = None) -> "IdealSource":
        """Same ring and expected basis, new generators, no comments."""
        return replace(self, generators=list(generators), ideal_name=ideal_name or self.ideal_name,
                       comments=[])


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.comments = [t.text for t in self.tokens if t.kind == "comment"]
        self.tokens = [t for t in self.tokens if t.kind != "comment"]
        self.pos = 0
        self.ring: Optional[RingDescriptor] = None
        self.variables: Tuple[str, ...] = ()
        self.ordering: Optional[MonomialOrdering] = None

    # Token helpers

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, token: Optional[Token] = None) -> IdealSyntaxError:
        tok = token or self.current
        return IdealSyntaxError(message, tok.line, tok.column)

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.current
        return tok.kind in ("punct", "ident") and tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.current.text or "end of input"
            raise self.error(f"expected '{text}', found '{found}'")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            found = self.current.text or "end of input"
            raise self.error(f"expected {what}, found '{found}'")
        return self.advance()

    # Declarations

    def parse_ring(self) -> RingDescriptor:
        start = self.current
        name = self.expect_kind("ident", "ZZ, ZZ/n or QQ")
        if name.text == "QQ":
            return RingDescriptor.rationals()
        if name.text != "ZZ":
            raise self.error(f"unknown coefficient ring '{name.text}'", name)
        if not self.at("/"):
            return RingDescriptor.integers()
        self.advance()
        modulus = int(self.expect_kind("num", "a modulus").text)
        if self.at("^"):
            self.advance()
            modulus **= int(self.expect_kind("num", "an exponent").text)
        if modulus < 2:
            raise self.error(f"modulus must be at least 2, got {modulus}", start)
        return RingDescriptor.integers_mod(modulus)

    def parse_ring_decl(self, keyword: Token) -> None:
        if self.ring is not None:
            raise self.error("duplicate ring declaration", keyword)
        ring = self.parse_ring()
        self.expect("[")
        names: List[str] = []
        while True:
            tok = self.expect_kind("ident", "a variable name")
            if tok.text in names:
                raise self.error(f"duplicate variable '{tok.text}'", tok)
            names.append(tok.text)
            if not self.at(","):
                break
            self.advance()
        self.expect("]")
        self.expect("order")
        order = self.expect_kind("ident", "an ordering")
        if order.text not in ORDER_NAMES:
            raise self.error(f"unknown ordering '{order.text}', expected one of {', '.join(ORDER_NAMES)}", order)
        self.expect(";")
        self.ring = ring
        self.variables = tuple(names)
        self.ordering = MonomialOrdering.from_name(order.text, len(names))

    def parse_poly_list(self) -> Tuple[str, List[Polynomial]]:
        if self.ring is None:
            raise self.error("ring must be declared first")
        label = self.expect_kind("ident", "a name").text
        self.expect("=")
        polys = [self.parse_poly()]
        while self.at(","):
            self.advance()
            polys.append(self.parse_poly())
        self.expect(";")
        return label, polys

    # Polynomials

    def _const(self, value) -> Polynomial:
        assert self.ring is not None and self.ordering is not None
        return Polynomial([Term(value, Monomial.one(len(self.variables)))], self.ring, self.ordering)

    def parse_poly(self) -> Polynomial:
        terms: List[Term] = []
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.advance().text == "-" else 1
        while True:
            part = self.parse_term()
            terms.extend(part.terms if sign > 0 else part.neg().terms)
            if not (self.at("+") or self.at("-")):
                break
            sign = -1 if self.advance().text == "-" else 1
        assert self.ring is not None and self.ordering is not None
        return Polynomial(terms, self.ring, self.ordering)

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while self.at("*"):
            tok = self.advance()
            try:
                result = result * self.parse_factor()
            except ExponentOverflowError as e:
                raise self.error(str(e), tok) from None
        return result

    def parse_factor(self) -> Polynomial:
        start = self.current
        base = self.parse_atom()
        if not self.at("^"):
            return base
        self.advance()
        if self.at("(") or self.at("-"):
            raise self.error("exponent must be an unsigned integer")
        exp_tok = self.expect_kind("num", "an exponent")
        e = int(exp_tok.text)
        if e > MAX_EXPONENT:
            raise self.error(f"exponent {e} exceeds {MAX_EXPONENT}", exp_tok)
        if base.is_term():
            c, m = base.terms[0]
            try:
                mono = Monomial(tuple(x * e for x in m.exponents))
            except ExponentOverflowError as err:
                raise self.error(str(err), start) from None
            return Polynomial([Term(c ** e, mono)], base.ring, base.ordering)
        return _power(base, e)

    def parse_atom(self) -> Polynomial:
        tok = self.current
        assert self.ring is not None and self.ordering is not None
        if tok.kind == "num":
            self.advance()
            value = int(tok.text)
            if self.at("/"):
                self.advance()
                den = self.expect_kind("num", "a denominator")
                if not self.ring.is_field:
                    raise self.error(f"coefficient not valid in ring {self.ring.describe()}", tok)
                if int(den.text) == 0:
                    raise self.error("zero denominator", den)
                return self._const(Fraction(value, int(den.text)))
            return self._const(value)
        if tok.kind == "ident":
            self.advance()
            if tok.text not in self.variables:
                raise self.error(f"unknown variable '{tok.text}'", tok)
            exps = [0] * len(self.variables)
            exps[self.variables.index(tok.text)] = 1
            return Polynomial([Term(1, Monomial(exps))], self.ring, self.ordering)
        if self.at("("):
            self.advance()
            inner = self.parse_poly()
            self.expect(")")
            return inner
        raise self.error(f"expected a coefficient, variable or '(', found '{tok.text or 'end of input'}'")


def _power(p: Polynomial, e: int) -> Polynomial:
    result = Polynomial.constant(1, p.ring, p.ordering)
    base = p
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def parse_ideal_file(text: str, name: str = "<input>") -> IdealSource:
    """Parse and validate an ideal file.

    Raises:
        IdealSyntaxError: on any syntax error, unknown variable, coefficient
            not valid in the ring, or duplicate declaration
    """
    parser = _Parser(text)
    generators: Optional[List[Polynomial]] = None
    expected: Optional[List[Polynomial]] = None
    ideal_name, expect_name = "I", "S"
    while parser.current.kind != "eof":
        keyword = parser.expect_kind("ident", "'ring', 'ideal' or 'expect'")
        if keyword.text == "ring":
            parser.parse_ring_decl(keyword)
        elif keyword.text == "ideal":
            if generators is not None:
                raise parser.error("duplicate ideal declaration", keyword)
            ideal_name, generators = parser.parse_poly_list()
        elif keyword.text == "expect":
            if expected is not None:
                raise parser.error("duplicate expect declaration", keyword)
            expect_name, expected = parser.parse_poly_list()
        else:
            raise parser.error(f"unknown statement '{keyword.text}'", keyword)
    if parser.ring is None or parser.ordering is None:
        raise parser.error("missing ring declaration")
    if generators is None:
        raise parser.error("missing ideal declaration")
    return IdealSource(name, parser.ring, parser.variables, parser.ordering, generators,
                       expected, ideal_name, expect_name, parser.comments)


def parse_ring_spec(text: str) -> RingDescriptor:
    """Ring names as accepted by --ring: ZZ, QQ, ZZ/n or ZZ/b^e."""
    parser = _Parser(text)
    ring = parser.parse_ring()
    if parser.current.kind != "eof":
        raise parser.error(f"unexpected '{parser.current.text}' after ring")
    return ring


def parse_polynomial(text: str, source: "IdealSource") -> Polynomial:
    """One polynomial over the ring, variables and ordering of source."""
    parser = _Parser(text)
    parser.ring, parser.variables, parser.ordering = source.ring, source.variables, source.ordering
    p = parser.parse_poly()
    if parser.current.kind != "eof":
        raise parser.error(f"unexpected '{parser.current.text}' after polynomial")
    return p


def format_polynomial(p: Polynomial, variables: Optional[Sequence[str]] = None) -> str:
    """Terms in descending order with explicit * and ^; 0 for the zero polynomial."""
    if p.is_zero():
        return "0"
    names = list(variables) if variables is not None else [f"x{i + 1}" for i in range(p.ordering.nvars)]
    fmt = p.ring.format
    parts: List[str] = []
    for idx, (c, m) in enumerate(p.terms):
        negative = c < 0
        magnitude = -c if negative else c
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(names, m.exponents) if e)
        if not mono:
            text = fmt(magnitude)
        elif magnitude == 1:
            text = mono
        else:
            text = f"{fmt(magnitude)}*{mono}"
        if idx == 0:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f" - {text}" if negative else f" + {text}")
    return "".join(parts)


def _format_list(keyword: str, label: str, texts: Sequence[str]) -> List[str]:
    single = f"{keyword} {label} = {', '.join(texts)};"
    if len(single) <= SINGLE_LINE_WIDTH:
        return [single]
    body = [f"  {t}," for t in texts]
    body[-1] = body[-1][:-1] + ";"
    return [f"{keyword} {label} ="] + body


def format_ideal_source(source: IdealSource) -> str:
    """Render a source in the file grammar."""
    lines = [f"# {c}" if c else "#" for c in source.comments]
    lines.append(f"ring {source.ring.describe()}[{','.join(source.variables)}] order {source.ordering.name};")
    lines += _format_list("ideal", source.ideal_name, source.generator_texts)
    if source.expected is not None:
        lines += _format_list("expect", source.expect_name, source.expected_texts or [])
    return "\n".join(lines) + "\n"
