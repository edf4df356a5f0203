#!/usr/bin/env python3
"""
Normal forms for zbasis.

reduce_global is strong (term-divisibility) reduction for global orderings.
reduce_mora is the ecart-driven reduction for local orderings; it grows a
private reducer set with intermediate remainders and, over ZZ and ZZ/n,
their gcd-polynomials with the current reducers.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .coeffring import Coefficient
from .config import EcartRule, StdConfig
from .pairs import gpoly
from .polynomial import Monomial, Polynomial, Term, term_divides

logger = logging.getLogger(__name__)

DEFAULT_REDUCTION_CAP = 100_000


class LocalOrderingError(ValueError):
    """Raised when reduce_global is handed a local ordering."""


class Origin(Enum):
    INPUT = "input"
    ECART = "ecart"
    GCD = "gcd"


class ReducerSet:
    """Reducers with origin flags; augmented members are appended, never replace."""

    def __init__(self, members: Iterable[Polynomial] = (), origin: Origin = Origin.INPUT):
        self.members: List[Polynomial] = []
        self.origins: List[Origin] = []
        self.ecarts: List[int] = []
        self._present: Set[Polynomial] = set()
        for p in members:
            self.append(p, origin)

    def append(self, p: Polynomial, origin: Origin) -> bool:
        """Add p unless it is zero or already a member."""
        if p.is_zero() or p in self._present:
            return False
        if self.members:
            first = self.members[0]
            if p.ring != first.ring or p.ordering != first.ordering:
                raise ValueError("reducer set members must share ring and ordering")
        self.members.append(p)
        self.origins.append(origin)
        self.ecarts.append(p.ecart)
        self._present.add(p)
        return True

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.members)

    def __getitem__(self, index: int) -> Polynomial:
        return self.members[index]


@dataclass
class QuotientStep:
    """One reduction step h -> h - coefficient * monomial * G[index]."""

    index: int
    coefficient: Coefficient
    monomial: Monomial


@dataclass
class MoraTrace:
    steps: List[Polynomial] = field(default_factory=list)
    reducers: List[int] = field(default_factory=list)
    augmented: List[Tuple[Polynomial, Origin]] = field(default_factory=list)

    @property
    def augmentation_log(self) -> List[Polynomial]:
        return [p for p, _ in self.augmented]

    @property
    def gcd_augmented(self) -> List[Polynomial]:
        return [p for p, origin in self.augmented if origin is Origin.GCD]


class IterationCapExceeded(RuntimeError):
    """Raised when a reduction runs past its step budget."""

    def __init__(self, cap: int, trace: Optional[MoraTrace] = None):
        super().__init__(f"reduction exceeded the iteration cap of {cap} steps")
        self.cap = cap
        self.trace = trace


def reduce_global(f: Polynomial, G: Sequence[Polynomial], tail_reduce: bool = False,
                  quotients: Optional[List[QuotientStep]] = None) -> Polynomial:
    """Strong normal form of f with respect to G under a global ordering.

    Args:
        f: Polynomial to reduce
        G: Reducers, tried in index order
        tail_reduce: Keep reducing below the leading term
        quotients: If given, every step is recorded here

    Returns:
        r with f - r in <G> and r = 0 or lt(r) not term-divisible by any lt(g)
    """
    if f.ordering.is_local:
        raise LocalOrderingError("reduce_global needs a global ordering; use reduce_mora")
    ring = f.ring
    reducers = [(g.lm, g.lc, idx, g) for idx, g in enumerate(G) if g]
    h = f
    done: List[Term] = []
    while h:
        c, m = h.terms[0]
        for gm, gc, idx, g in reducers:
            if gm.divides(m) and ring.divides(gc, c):
                q = ring.exact_quotient(c, gc)
                shift = m / gm
                if quotients is not None:
                    quotients.append(QuotientStep(idx, q, shift))
                h = h.sub_scaled(q, shift, g)
                break
        else:
            if not tail_reduce:
                break
            done.append(h.terms[0])
            h = h.tail()
    if not done:
        return h
    return Polynomial(done + list(h.terms), f.ring, f.ordering, _trusted=True)


def _choose_reducer(h: Polynomial, T: ReducerSet, rule: EcartRule) -> Optional[int]:
    ring = h.ring
    c, m = h.terms[0]
    eh = h.ecart
    best: Optional[int] = None
    best_ecart = 0
    for idx, g in enumerate(T.members):
        if not (g.lm.divides(m) and ring.divides(g.lc, c)):
            continue
        eg = T.ecarts[idx]
        if rule is EcartRule.FIRST and eg <= eh:
            return idx
        if best is None or eg < best_ecart:
            best, best_ecart = idx, eg
    return best


def reduce_mora(f: Polynomial, G: Iterable[Polynomial], gcd_augment: bool = True,
                iteration_cap: int = DEFAULT_REDUCTION_CAP,
                ecart_rule: EcartRule = EcartRule.FIRST) -> Tuple[Polynomial, MoraTrace]:
    """Weak normal form of f with respect to G for local orderings.

    Returns the remainder h (0 or lt(h) outside the term-multiple closure of
    lt(G)) and the trace of intermediate remainders and augmentations.
    """
    T = ReducerSet(G)
    trace = MoraTrace()
    ring = f.ring
    h = f
    while h:
        pick = _choose_reducer(h, T, ecart_rule)
        if pick is None:
            break
        if len(trace.steps) >= iteration_cap:
            raise IterationCapExceeded(iteration_cap, trace)
        g = T[pick]
        if T.ecarts[pick] > h.ecart:
            existing = list(T.members)
            if T.append(h, Origin.ECART):
                trace.augmented.append((h, Origin.ECART))
            if gcd_augment and not ring.is_field:
                for t in existing:
                    gp, redundant = gpoly(h, t)
                    if redundant:
                        continue
                    if T.append(gp, Origin.GCD):
                        trace.augmented.append((gp, Origin.GCD))
                        logger.debug("gcd-augmented reducer set with %r", gp)
        q = ring.exact_quotient(h.lc, g.lc)
        h = h.sub_scaled(q, h.lm / g.lm, g)
        trace.steps.append(h)
        trace.reducers.append(pick)
    return h, trace


def normal_form(f: Polynomial, G: Sequence[Polynomial], config: Optional[StdConfig] = None,
                tail_reduce: bool = False) -> Polynomial:
    """reduce_global or reduce_mora, whichever fits the ordering of f."""
    if f.ordering.is_global:
        return reduce_global(f, G, tail_reduce=tail_reduce)
    cfg = config or StdConfig()
    h, _ = reduce_mora(f, G, gcd_augment=cfg.gcd_augment, iteration_cap=cfg.reduction_cap,
                       ecart_rule=cfg.ecart_rule)
    return h


def minimal_indices(S: Sequence[Polynomial]) -> List[int]:
    """Indices of the elements kept by interreduction, in their original order."""
    live = [i for i, p in enumerate(S) if p]
    if not live:
        return []
    ring = S[live[0]].ring
    order = sorted(live, key=lambda i: (S[i].lm.degree, ring.divisibility_rank(S[i].lc), i))
    kept: List[int] = []
    for i in order:
        lead = S[i].lt
        if any(term_divides(S[k].lt, lead, ring) for k in kept):
            continue
        kept.append(i)
    return sorted(kept)


def interreduce(S: Sequence[Polynomial], tail_reduce: bool = False) -> List[Polynomial]:
    """Drop elements whose leading term another element's leading term divides."""
    kept = [S[i] for i in minimal_indices(S)]
    if tail_reduce and kept and kept[0].ordering.is_global:
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:]
            kept[i] = reduce_global(kept[i], others, tail_reduce=True)
    return [p.normalized() for p in kept]
