#!/usr/bin/env python3
"""
Basis verification for zbasis.
Contains is_strong_basis, equivalent and in_ideal.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from .config import StdConfig
from .pairs import epoly, gpoly, spoly
from .polynomial import MonomialOrdering, Polynomial
from .reduction import normal_form

PairDescriptor = Tuple[str, int, Optional[int]]


@dataclass
class VerificationReport:
    passed: bool
    failures: List[Tuple[PairDescriptor, Polynomial]] = field(default_factory=list)
    checked_pair_count: int = 0


def _reorder(S: Sequence[Polynomial], ordering: Optional[MonomialOrdering]) -> List[Polynomial]:
    out = [p for p in S if p]
    if ordering is None:
        return out
    return [p if p.ordering == ordering else Polynomial(p.terms, p.ring, ordering) for p in out]


def _pair_checks(S: Sequence[Polynomial]) -> List[Tuple[PairDescriptor, Callable[[], Polynomial]]]:
    checks: List[Tuple[PairDescriptor, Callable[[], Polynomial]]] = []
    over_field = bool(S) and S[0].ring.is_field
    for j in range(len(S)):
        for i in range(j):
            checks.append((("S", i, j), lambda i=i, j=j: spoly(S[i], S[j])))
            if over_field:
                continue
            g, redundant = gpoly(S[i], S[j])
            if not redundant:
                checks.append((("GCD", i, j), lambda g=g: g))
        checks.append((("EXT", j, None), lambda j=j: epoly(S[j])))
    return checks


def is_strong_basis(S: Sequence[Polynomial], ordering: Optional[MonomialOrdering] = None,
                    jobs: int = 1, config: Optional[StdConfig] = None) -> VerificationReport:
    """Reduce every s-, gcd- and extended polynomial of S against S.

    Args:
        S: Candidate basis
        ordering: Ordering to check under, defaults to that of S
        jobs: Worker threads for the pair reductions
        config: Caps and ecart rule for local orderings

    Returns:
        VerificationReport; failures are sorted by pair kind and indices
    """
    basis = _reorder(S, ordering)
    checks = _pair_checks(basis)

    def run(check: Tuple[PairDescriptor, Callable[[], Polynomial]]) -> Tuple[PairDescriptor, Polynomial]:
        descriptor, build = check
        p = build()
        return descriptor, normal_form(p, basis, config) if p else p

    if jobs > 1 and len(checks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, checks))
    else:
        results = [run(c) for c in checks]

    failures = [(d, r) for d, r in results if r]
    failures.sort(key=lambda item: (item[0][1], item[0][2] if item[0][2] is not None else -1, item[0][0]))
    return VerificationReport(not failures, failures, len(checks))


def in_ideal(f: Polynomial, S: Sequence[Polynomial], ordering: Optional[MonomialOrdering] = None,
             config: Optional[StdConfig] = None) -> bool:
    """Membership test; S must be a strong standard basis."""
    if f.is_zero():
        return True
    basis = _reorder(S, ordering)
    if ordering is not None and f.ordering != ordering:
        f = Polynomial(f.terms, f.ring, ordering)
    if not basis:
        return False
    return normal_form(f, basis, config).is_zero()


def equivalent(S1: Sequence[Polynomial], S2: Sequence[Polynomial],
               ordering: Optional[MonomialOrdering] = None, config: Optional[StdConfig] = None) -> bool:
    """True when each basis reduces to zero against the other."""
    a, b = _reorder(S1, ordering), _reorder(S2, ordering)
    return (all(in_ideal(f, b, config=config) for f in a)
            and all(in_ideal(f, a, config=config) for f in b))
