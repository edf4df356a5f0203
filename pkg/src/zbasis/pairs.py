#!/usr/bin/env python3
"""
Critical pairs for zbasis.
Contains spoly, gpoly, epoly, the lazy PairQueue and update_queue for the ALL and JUST strategies.
"""
import heapq
import itertools
from dataclasses import dataclass, field
from enum import IntEnum
from typing import List, NamedTuple, Optional, Sequence, Set, Tuple

from .coeffring import Coefficient, annihilator, ideal_gen_pair, lcm_multipliers
from .config import Strategy
from .polynomial import Monomial, Polynomial, degrevlex_key


class EmptyQueueError(IndexError):
    """Raised by select on an empty queue."""


class PairKind(IntEnum):
    """Pair kinds; the value is the selection priority on equal lcm monomials."""

    GCD = 0
    S = 1
    EXT = 2


class Multiplier(NamedTuple):
    """Coefficient and monomial a pair polynomial multiplies one argument by."""

    coefficient: Coefficient
    monomial: Monomial


def _require_nonzero(*polys: Polynomial) -> None:
    for p in polys:
        if p.is_zero():
            raise ValueError("pair polynomials need nonzero arguments")


def spoly_multipliers(f: Polynomial, g: Polynomial) -> Tuple[Multiplier, Multiplier]:
    """(a, m_a), (b, m_b) with spoly(f, g) = a*m_a*f - b*m_b*g."""
    _require_nonzero(f, g)
    lcm = f.lm.lcm(g.lm)
    a, b = lcm_multipliers(f.ring, f.lc, g.lc)
    return Multiplier(a, lcm / f.lm), Multiplier(b, lcm / g.lm)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    mf, mg = spoly_multipliers(f, g)
    return f.mul_term(mf).sub_scaled(mg.coefficient, mg.monomial, g)


def gpoly_multipliers(f: Polynomial, g: Polynomial) -> Tuple[Multiplier, Multiplier, bool]:
    """(df, m_f), (dg, m_g), redundant with gpoly(f, g) = df*m_f*f + dg*m_g*g."""
    _require_nonzero(f, g)
    gen = ideal_gen_pair(f.ring, f.lc, g.lc)
    lcm = f.lm.lcm(g.lm)
    return Multiplier(gen.df, lcm / f.lm), Multiplier(gen.dg, lcm / g.lm), gen.redundant


def gpoly(f: Polynomial, g: Polynomial) -> Tuple[Polynomial, bool]:
    """Gcd-polynomial of f and g and whether it is redundant."""
    mf, mg, redundant = gpoly_multipliers(f, g)
    return combine(f, mf, g, mg), redundant


def combine(f: Polynomial, mf: Multiplier, g: Polynomial, mg: Multiplier) -> Polynomial:
    """mf*f + mg*g, skipping zero multipliers."""
    result = f.mul_term(mf) if mf.coefficient != 0 else Polynomial.zero(f.ring, f.ordering)
    if mg.coefficient != 0:
        result = result.sub_scaled(-mg.coefficient, mg.monomial, g)
    return result


def epoly(f: Polynomial) -> Polynomial:
    """Ann(lc(f)) * f; zero unless lc(f) is a zero divisor."""
    _require_nonzero(f)
    return f.scale(annihilator(f.ring, f.lc))


def gcd_pair_redundant(f: Polynomial, g: Polynomial) -> bool:
    ring = f.ring
    return ring.divides(f.lc, g.lc) or ring.divides(g.lc, f.lc)


@dataclass(frozen=True)
class CriticalPair:
    kind: PairKind
    i: int
    j: Optional[int]
    lcm_monomial: Monomial
    insertion_seq: int

    def sort_key(self) -> tuple:
        m = self.lcm_monomial
        return (m.degree, degrevlex_key(m), int(self.kind), self.insertion_seq)

    def descriptor(self) -> Tuple[str, int, Optional[int]]:
        return (self.kind.name, self.i, self.j)


@dataclass
class PairQueue:
    """Pending pairs ordered by lcm degree, DegRevLex lcm, kind, then insertion order."""

    strategy: Strategy = Strategy.ALL
    product_criterion: bool = False
    _heap: List[Tuple[tuple, CriticalPair]] = field(default_factory=list)
    _seen: Set[Tuple[PairKind, int, Optional[int]]] = field(default_factory=set)
    _counter: "itertools.count[int]" = field(default_factory=itertools.count)
    created: int = 0
    skipped: int = 0

    def push(self, kind: PairKind, i: int, j: Optional[int], lcm_monomial: Monomial) -> bool:
        """Enqueue a pair unless an identical (kind, i, j) entry was seen before."""
        if j is not None and i > j:
            i, j = j, i
        ident = (kind, i, j)
        if ident in self._seen:
            return False
        self._seen.add(ident)
        pair = CriticalPair(kind, i, j, lcm_monomial, next(self._counter))
        heapq.heappush(self._heap, (pair.sort_key(), pair))
        self.created += 1
        return True

    def select(self) -> CriticalPair:
        if not self._heap:
            raise EmptyQueueError("select from an empty pair queue")
        return heapq.heappop(self._heap)[1]

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)


def update_queue(queue: PairQueue, basis: Sequence[Polynomial], new_index: int) -> PairQueue:
    """Enqueue the pairs formed by basis[new_index] with every earlier element."""
    h = basis[new_index]
    ring = h.ring
    for idx in range(new_index):
        g = basis[idx]
        lcm = g.lm.lcm(h.lm)
        if ring.is_field:
            if queue.product_criterion and g.lm.coprime(h.lm):
                queue.skipped += 1
                continue
            queue.push(PairKind.S, idx, new_index, lcm)
            continue
        redundant = gcd_pair_redundant(g, h)
        if queue.strategy is Strategy.ALL:
            queue.push(PairKind.S, idx, new_index, lcm)
            if not redundant:
                queue.push(PairKind.GCD, idx, new_index, lcm)
        elif redundant:
            queue.push(PairKind.S, idx, new_index, lcm)
        else:
            queue.push(PairKind.GCD, idx, new_index, lcm)
    if ring.is_modular and annihilator(ring, h.lc) != 0:
        queue.push(PairKind.EXT, new_index, None, h.lm)
    return queue


def materialize(pair: CriticalPair, basis: Sequence[Polynomial]) -> Polynomial:
    """Build the polynomial a selected pair stands for."""
    if pair.kind is PairKind.EXT:
        return epoly(basis[pair.i])
    f, g = basis[pair.i], basis[pair.j]  # type: ignore[index]
    if pair.kind is PairKind.S:
        return spoly(f, g)
    return gpoly(f, g)[0]
