#!/usr/bin/env python3
"""
Standard basis engine for zbasis.
Contains std, std_with_stats and run_std, the Buchberger loop shared by ZZ, ZZ/n and QQ.

The loop keeps every element it appends; redundant ones are removed only
by the final interreduction so pair indices stay stable during the run.
Optionally every element carries its cofactors with respect to the input
generators, which is what the rational pre-check builds its certificates on.

Over ZZ with a global ordering, once a constant d is known to lie in the
ideal the rest of the computation runs over ZZ/d. Each element of that
basis is scaled so its leading coefficient divides d and lifted back to ZZ;
together with d the lifts form a strong basis over ZZ.
"""
import logging
import threading
import time
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .coeffring import Coefficient, RingDescriptor, RingMismatchError, annihilator, divisor_unit
from .config import StdConfig
from .pairs import (CriticalPair, PairKind, PairQueue, combine, gpoly_multipliers, materialize,
                    spoly_multipliers, update_queue)
from .polynomial import Monomial, MonomialOrdering, OrderingMismatchError, Polynomial, Term
from .reduction import QuotientStep, minimal_indices, reduce_global, reduce_mora

logger = logging.getLogger(__name__)

Cofactors = Dict[int, Polynomial]
ProgressCallback = Callable[["StdStats"], None]


class StdInterrupted(RuntimeError):
    """Raised when the stop event is set while the loop is running."""

    def __init__(self, stats: "StdStats"):
        super().__init__(f"std interrupted after {stats.pairs_selected} pairs")
        self.stats = stats


class PairCapExceeded(RuntimeError):
    def __init__(self, cap: int, stats: "StdStats"):
        super().__init__(f"std exceeded the pair cap of {cap} selected pairs")
        self.cap = cap
        self.stats = stats


@dataclass
class StdStats:
    pairs_created: int = 0
    pairs_selected: int = 0
    pairs_zero: int = 0
    pairs_reduced_to_zero: int = 0
    basis_additions: int = 0
    max_coeff_bits: int = 0
    coeff_bits_snapshots: List[int] = field(default_factory=list)
    wall_time: float = 0.0
    precheck_constant: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "pairs_created": self.pairs_created,
            "pairs_selected": self.pairs_selected,
            "pairs_zero": self.pairs_zero,
            "pairs_reduced_to_zero": self.pairs_reduced_to_zero,
            "basis_additions": self.basis_additions,
            "max_coeff_bits": self.max_coeff_bits,
            "wall_time": round(self.wall_time, 6),
            "precheck_constant": self.precheck_constant,
        }


# Cofactor vectors are sparse maps from input index to polynomial.

def _cof_scale(cof: Cofactors, c: Coefficient, m: Monomial) -> Cofactors:
    out = {}
    for k, q in cof.items():
        scaled = q.mul_term(Term(c, m))
        if scaled:
            out[k] = scaled
    return out


def _cof_sub_scaled(a: Cofactors, c: Coefficient, m: Monomial, b: Cofactors) -> Cofactors:
    """a - c*x^m*b."""
    out = dict(a)
    for k, q in b.items():
        base = out.get(k)
        value = (base if base is not None else Polynomial.zero(q.ring, q.ordering)).sub_scaled(c, m, q)
        if value:
            out[k] = value
        else:
            out.pop(k, None)
    return out


@dataclass
class BasisState:
    """Basis under construction together with its pair queue and counters."""

    ring: RingDescriptor
    ordering: MonomialOrdering
    queue: PairQueue
    stats: StdStats = field(default_factory=StdStats)
    basis: List[Polynomial] = field(default_factory=list)
    cofactors: Optional[List[Cofactors]] = None
    contains_unit: bool = False
    on_progress: Optional[ProgressCallback] = None

    @property
    def tracking(self) -> bool:
        return self.cofactors is not None

    def add(self, h: Polynomial, cof: Optional[Cofactors]) -> None:
        """Sign-normalize h and append it, enqueueing its pairs."""
        u = self.ring.normal_unit(h.lc)
        if u != 1:
            h = h.scale(u)
            if cof is not None:
                cof = _cof_scale(cof, u, Monomial.one(self.ordering.nvars))
        if h.is_unit():
            self._collapse_to_one(h, cof)
            return
        self.basis.append(h)
        if self.cofactors is not None:
            self.cofactors.append(cof or {})
        before = self.queue.created
        update_queue(self.queue, self.basis, len(self.basis) - 1)
        self._record_addition(h, self.queue.created - before)

    def _collapse_to_one(self, h: Polynomial, cof: Optional[Cofactors]) -> None:
        one = Polynomial.constant(1, self.ring, self.ordering)
        self.basis = [one]
        if self.cofactors is not None:
            inverse = self.ring.exact_quotient(self.ring.one(), h.lc)
            self.cofactors = [_cof_scale(cof or {}, inverse, one.lm)]
        self.queue = PairQueue(self.queue.strategy, self.queue.product_criterion)
        self.contains_unit = True
        self._record_addition(one, 0)
        logger.info("ideal contains a unit; basis is {1}")

    def _record_addition(self, h: Polynomial, new_pairs: int) -> None:
        stats = self.stats
        stats.basis_additions += 1
        stats.pairs_created += new_pairs
        stats.max_coeff_bits = max(stats.max_coeff_bits, h.max_coeff_bits())
        stats.coeff_bits_snapshots.append(stats.max_coeff_bits)
        logger.debug("basis size %d, %d pairs queued", len(self.basis), len(self.queue))
        if self.on_progress is not None:
            self.on_progress(stats)

    def materialize(self, pair: CriticalPair) -> Tuple[Polynomial, Optional[Cofactors]]:
        if self.cofactors is None:
            return materialize(pair, self.basis), None
        f, cf = self.basis[pair.i], self.cofactors[pair.i]
        if pair.kind is PairKind.EXT:
            a = annihilator(self.ring, f.lc)
            return f.scale(a), _cof_scale(cf, a, Monomial.one(self.ordering.nvars))
        g, cg = self.basis[pair.j], self.cofactors[pair.j]  # type: ignore[index]
        if pair.kind is PairKind.S:
            mf, mg = spoly_multipliers(f, g)
            h = f.mul_term(mf).sub_scaled(mg.coefficient, mg.monomial, g)
            cof = _cof_sub_scaled(_cof_scale(cf, *mf), mg.coefficient, mg.monomial, cg)
            return h, cof
        mf, mg, _ = gpoly_multipliers(f, g)
        cof = _cof_sub_scaled(_cof_scale(cf, *mf), -mg.coefficient, mg.monomial, cg)
        return combine(f, mf, g, mg), cof

    def reduce(self, h: Polynomial, cof: Optional[Cofactors], config: StdConfig,
               tail_reduce: bool = False, against: Optional[Sequence[int]] = None) -> Tuple[Polynomial, Optional[Cofactors]]:
        indices = list(range(len(self.basis))) if against is None else list(against)
        reducers = [self.basis[i] for i in indices]
        if self.ordering.is_local:
            r, _ = reduce_mora(h, reducers, gcd_augment=config.gcd_augment,
                               iteration_cap=config.reduction_cap, ecart_rule=config.ecart_rule)
            return r, None
        quotients: Optional[List[QuotientStep]] = [] if cof is not None else None
        r = reduce_global(h, reducers, tail_reduce=tail_reduce, quotients=quotients)
        if cof is not None and self.cofactors is not None:
            for step in quotients or ():
                cof = _cof_sub_scaled(cof, step.coefficient, step.monomial,
                                      self.cofactors[indices[step.index]])
        return r, cof

    def finalize(self, config: StdConfig) -> None:
        """Interreduce and optionally tail-reduce the basis in place."""
        if config.interreduce:
            keep = minimal_indices(self.basis)
            self.basis = [self.basis[i] for i in keep]
            if self.cofactors is not None:
                self.cofactors = [self.cofactors[i] for i in keep]
        if config.tail_reduce_output and self.ordering.is_global:
            for i in range(len(self.basis)):
                others = [k for k in range(len(self.basis)) if k != i]
                cof = self.cofactors[i] if self.cofactors is not None else None
                r, cof = self.reduce(self.basis[i], cof, config, tail_reduce=True, against=others)
                self.basis[i] = r
                if self.cofactors is not None:
                    self.cofactors[i] = cof or {}


def _uniform(generators: Sequence[Polynomial], ordering: Optional[MonomialOrdering]) -> List[Polynomial]:
    if not generators:
        raise ValueError("std needs at least one generator")
    ring = generators[0].ring
    target = ordering or generators[0].ordering
    out = []
    for g in generators:
        if g.ring != ring:
            raise RingMismatchError(f"generators mix {ring.describe()} and {g.ring.describe()}")
        if g.ordering.nvars != target.nvars:
            raise OrderingMismatchError(f"generators mix {target.nvars} and {g.ordering.nvars} variables")
        out.append(g if g.ordering == target else Polynomial(g.terms, ring, target))
    return out


def run_std(generators: Sequence[Polynomial], ordering: Optional[MonomialOrdering] = None,
            config: Optional[StdConfig] = None, stop: Optional[threading.Event] = None,
            on_progress: Optional[ProgressCallback] = None, track_cofactors: bool = False) -> BasisState:
    """Run the Buchberger loop and return the final state.

    Args:
        generators: Input polynomials; zeros are dropped
        ordering: Ordering to compute under, defaults to the generators' one
        config: Strategy, caps and output options
        stop: Checked once per selected pair; when set the run raises StdInterrupted
        on_progress: Called with the stats after every basis addition
        track_cofactors: Keep each element's cofactors with respect to generators

    Returns:
        BasisState whose basis is a strong standard basis of the ideal
    """
    cfg = config or StdConfig()
    gens = _uniform(generators, ordering)
    ring, order = gens[0].ring, gens[0].ordering
    if track_cofactors and order.is_local:
        raise ValueError("cofactor tracking needs a global ordering")

    started = time.perf_counter()
    state = BasisState(ring, order, PairQueue(cfg.strategy, cfg.product_criterion and ring.is_field),
                       cofactors=[] if track_cofactors else None, on_progress=on_progress)

    if cfg.precheck and not track_cofactors:
        gens = _apply_precheck(gens, cfg, stop, state.stats)

    lift = cfg.constant_lift and ring.is_integers and order.is_global and not track_cofactors
    constant = _common_constant(gens) if lift else None
    if constant is not None:
        _lift_from_constant(state, gens, constant, cfg, stop, started)
        state.finalize(cfg)
        state.stats.wall_time = time.perf_counter() - started
        return state

    one = Monomial.one(order.nvars)
    for idx, g in enumerate(gens):
        if g.is_zero():
            continue
        cof = {idx: Polynomial([Term(1, one)], ring, order)} if track_cofactors else None
        state.add(g, cof)
        if state.contains_unit:
            break

    while state.queue and not state.contains_unit:
        if stop is not None and stop.is_set():
            state.stats.wall_time = time.perf_counter() - started
            raise StdInterrupted(state.stats)
        if cfg.pair_cap is not None and state.stats.pairs_selected >= cfg.pair_cap:
            state.stats.wall_time = time.perf_counter() - started
            raise PairCapExceeded(cfg.pair_cap, state.stats)
        pair = state.queue.select()
        state.stats.pairs_selected += 1
        h, cof = state.materialize(pair)
        if h.is_zero():
            state.stats.pairs_zero += 1
            continue
        h, cof = state.reduce(h, cof, cfg)
        if h.is_zero():
            state.stats.pairs_reduced_to_zero += 1
            continue
        state.add(h, cof)
        if lift and h.is_constant() and not state.contains_unit:
            _lift_from_constant(state, list(state.basis), abs(h.lc), cfg, stop, started)
            break

    state.finalize(cfg)
    state.stats.wall_time = time.perf_counter() - started
    logger.info("std finished: %d elements, %d pairs selected, %.3fs",
                len(state.basis), state.stats.pairs_selected, state.stats.wall_time)
    return state


def _common_constant(gens: Sequence[Polynomial]) -> Optional[int]:
    """gcd of the nonzero constant generators when it is not a unit."""
    d = 0
    for g in gens:
        if g and g.is_constant():
            d = gcd(d, int(g.lc))
    return d if d > 1 else None


def _merge_stats(into: StdStats, sub: StdStats) -> None:
    into.pairs_created += sub.pairs_created
    into.pairs_selected += sub.pairs_selected
    into.pairs_zero += sub.pairs_zero
    into.pairs_reduced_to_zero += sub.pairs_reduced_to_zero
    into.basis_additions += sub.basis_additions
    for bits in sub.coeff_bits_snapshots:
        into.max_coeff_bits = max(into.max_coeff_bits, bits)
        into.coeff_bits_snapshots.append(into.max_coeff_bits)


def _lift_from_constant(state: BasisState, source: Sequence[Polynomial], d: int, cfg: StdConfig,
                        stop: Optional[threading.Event], started: float) -> None:
    """Replace the state's basis by a strong basis over ZZ of <source>, which contains d."""
    ring, order = state.ring, state.ordering
    quotient = RingDescriptor.integers_mod(d)
    images = [img for img in (p.change_ring(quotient) for p in source) if img]
    logger.info("constant %d lies in the ideal; continuing over %s", d, quotient.describe())

    pair_cap = cfg.pair_cap
    if pair_cap is not None:
        pair_cap -= state.stats.pairs_selected
        if pair_cap < 1:
            state.stats.wall_time = time.perf_counter() - started
            raise PairCapExceeded(cfg.pair_cap, state.stats)  # type: ignore[arg-type]

    lifted = [Polynomial.constant(d, ring, order)]
    if images:
        sub_cfg = replace(cfg, precheck=False, interreduce=True, tail_reduce_output=False, pair_cap=pair_cap)
        try:
            sub = run_std(images, order, sub_cfg, stop=stop, on_progress=state.on_progress)
        except StdInterrupted as e:
            _merge_stats(state.stats, e.stats)
            state.stats.wall_time = time.perf_counter() - started
            raise StdInterrupted(state.stats) from None
        except PairCapExceeded as e:
            _merge_stats(state.stats, e.stats)
            state.stats.wall_time = time.perf_counter() - started
            raise PairCapExceeded(cfg.pair_cap, state.stats) from None  # type: ignore[arg-type]
        _merge_stats(state.stats, sub.stats)
        for g in sub.basis:
            lifted.append(g.scale(divisor_unit(quotient, g.lc)).change_ring(ring))

    state.queue = PairQueue(state.queue.strategy, state.queue.product_criterion)
    units = [p for p in lifted if p.is_unit()]
    if units:
        state._collapse_to_one(units[0], None)
        return
    state.basis = lifted


def _apply_precheck(gens: List[Polynomial], cfg: StdConfig, stop: Optional[threading.Event],
                    stats: StdStats) -> List[Polynomial]:
    ring, order = gens[0].ring, gens[0].ordering
    if not ring.is_integers or order.is_local:
        logger.warning("precheck needs ZZ and a global ordering; skipped for %s %s",
                       ring.describe(), order.name)
        return gens
    from .parser import format_polynomial
    from .precheck import pre_integer_check

    result = pre_integer_check(gens, stop=stop)
    if result.certificate is not None:
        stats.precheck_constant = format_polynomial(result.certificate.target)
        logger.info("precheck added %s", stats.precheck_constant)
    return result.generators


def std_with_stats(generators: Sequence[Polynomial], ordering: Optional[MonomialOrdering] = None,
                   config: Optional[StdConfig] = None, stop: Optional[threading.Event] = None,
                   on_progress: Optional[ProgressCallback] = None) -> Tuple[List[Polynomial], StdStats]:
    state = run_std(generators, ordering, config, stop=stop, on_progress=on_progress)
    return state.basis, state.stats


def std(generators: Sequence[Polynomial], ordering: Optional[MonomialOrdering] = None,
        config: Optional[StdConfig] = None) -> List[Polynomial]:
    """Strong standard basis of the ideal the generators span."""
    return run_std(generators, ordering, config).basis
