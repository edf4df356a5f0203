#!/usr/bin/env python3
"""
Integer pre-check for zbasis.

Computes a basis of the ideal over QQ while tracking cofactors. If that
basis is {1} the ideal contains a nonzero integer; if it contains a single
monomial the ideal contains an integer multiple of it. In both cases the
cleared cofactors certify the element over ZZ and it is added to the
generators, which keeps coefficient growth of the integer run in check.
"""
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from .coeffring import RingDescriptor
from .config import StdConfig, Strategy
from .engine import run_std
from .polynomial import Polynomial, Term

logger = logging.getLogger(__name__)

RATIONAL_CONFIG = StdConfig(strategy=Strategy.ALL, interreduce=True, tail_reduce_output=True,
                            product_criterion=True)


@dataclass
class Certificate:
    """target = sum(cofactors[i] * generators[i]) over ZZ."""

    target: Polynomial
    cofactors: List[Polynomial]
    denominator_lcm: int

    def expand(self, generators: Sequence[Polynomial]) -> Polynomial:
        if len(generators) != len(self.cofactors):
            raise ValueError(f"certificate has {len(self.cofactors)} cofactors for {len(generators)} generators")
        total = Polynomial.zero(self.target.ring, self.target.ordering)
        for q, f in zip(self.cofactors, generators):
            if q and f:
                total = total + q * f
        return total

    def verify(self, generators: Sequence[Polynomial]) -> bool:
        return self.expand(generators) == self.target


@dataclass
class PrecheckResult:
    generators: List[Polynomial]
    certificate: Optional[Certificate]
    rational_basis: List[Polynomial]

    @property
    def augmented(self) -> bool:
        return self.certificate is not None


def std_q_with_cofactors(generators: Sequence[Polynomial], stop: Optional[threading.Event] = None,
                         config: Optional[StdConfig] = None) -> Tuple[List[Polynomial], List[List[Polynomial]]]:
    """Reduced basis over QQ and, per element, its cofactors for every generator."""
    rationals = RingDescriptor.rationals()
    gens = [g.change_ring(rationals) for g in generators]
    state = run_std(gens, config=config or RATIONAL_CONFIG, stop=stop, track_cofactors=True)
    zero = Polynomial.zero(rationals, gens[0].ordering)
    matrix = [[row.get(i, zero) for i in range(len(gens))] for row in state.cofactors or []]
    return state.basis, matrix


def _denominator_lcm(row: Sequence[Polynomial]) -> int:
    d = 1
    for q in row:
        for c, _ in q.terms:
            d = lcm(d, Fraction(c).denominator)
    return d


def _pick_term_element(basis: Sequence[Polynomial]) -> Optional[int]:
    terms = [k for k, g in enumerate(basis) if g.is_term()]
    if not terms:
        return None
    ordering = basis[0].ordering
    return min(terms, key=lambda k: ordering.key(basis[k].lm))


def pre_integer_check(generators: Sequence[Polynomial], stop: Optional[threading.Event] = None) -> PrecheckResult:
    """Augment generators with a certified integer or term of the ideal, if there is one."""
    if not generators:
        raise ValueError("pre_integer_check needs at least one generator")
    ring, ordering = generators[0].ring, generators[0].ordering
    if not ring.is_integers:
        raise ValueError(f"pre_integer_check works over ZZ, not {ring.describe()}")
    if ordering.is_local:
        raise ValueError("pre_integer_check needs a global ordering")

    basis, matrix = std_q_with_cofactors(generators, stop=stop)
    k = _pick_term_element(basis)
    if k is None:
        logger.info("precheck found no term in the ideal; generators unchanged")
        return PrecheckResult(list(generators), None, basis)

    row = matrix[k]
    d = _denominator_lcm(row)
    cofactors = [q.scale(d).change_ring(ring) for q in row]
    target = Polynomial([Term(d, basis[k].lm)], ring, ordering)
    certificate = Certificate(target, cofactors, d)
    if not certificate.verify(generators):
        raise RuntimeError("precheck certificate does not expand to its target")
    logger.info("precheck certified %s * %s", d, basis[k].lm.exponents)
    return PrecheckResult(list(generators) + [target], certificate, basis)
