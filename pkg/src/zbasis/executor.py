#!/usr/bin/env python3
"""
Run execution module for zbasis.
Contains run_source, run_bench and race_precheck.
"""
import logging
import threading
import time
from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .config import StdConfig, Strategy
from .corpus import get_corpus_entry, load_corpus_source
from .engine import PairCapExceeded, StdInterrupted, StdStats, run_std
from .parser import IdealSource, format_polynomial
from .polynomial import Polynomial
from .precheck import Certificate, pre_integer_check
from .reduction import IterationCapExceeded
from .verify import VerificationReport, is_strong_basis

logger = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_TIMEOUT = "timeout"
STATUS_CAP = "cap"
STATUS_FAILED = "failed"


@dataclass
class RunResult:
    name: str
    strategy: str
    ring: str
    status: str
    basis: List[Polynomial] = field(default_factory=list)
    stats: StdStats = field(default_factory=StdStats)
    wall_ms: float = 0.0
    report: Optional[VerificationReport] = None
    certificate: Optional[Certificate] = None
    variant: str = "plain"
    error: Optional[str] = None

    @property
    def verified(self) -> str:
        """CSV value: true, false, skipped, timeout or cap."""
        if self.status == STATUS_TIMEOUT:
            return "timeout"
        if self.status == STATUS_CAP:
            return "cap"
        if self.report is None:
            return "skipped"
        return "true" if self.report.passed else "false"

    def as_row(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "strategy": self.strategy,
            "ring": self.ring,
            "wall_ms": f"{self.wall_ms:.0f}",
            "basis_size": len(self.basis) if self.status in (STATUS_OK, STATUS_FAILED) else "",
            "max_coeff_bits": self.stats.max_coeff_bits,
            "verified": self.verified,
        }


def run_source(source: IdealSource, config: Optional[StdConfig] = None, timeout: Optional[float] = None,
               verify: bool = False, stop: Optional[threading.Event] = None) -> RunResult:
    """Compute a basis of source under config, optionally bounded by timeout seconds.

    Cap and timeout conditions are reported through the status, never raised.
    """
    cfg = config or StdConfig()
    stop = stop or threading.Event()
    if timeout is not None and timeout <= 0:
        stop.set()
    timer = threading.Timer(timeout, stop.set) if timeout is not None and timeout > 0 else None
    result = RunResult(source.name, cfg.strategy.value, source.ring.describe(), STATUS_OK,
                       variant="precheck" if cfg.precheck else "plain")
    started = time.perf_counter()
    if timer is not None:
        timer.daemon = True
        timer.start()
    try:
        generators = source.generators
        if cfg.precheck and source.ring.is_integers and source.ordering.is_global:
            pre = pre_integer_check(generators, stop=stop)
            generators = pre.generators
            result.certificate = pre.certificate
        state = run_std(generators, source.ordering, cfg.merged(precheck=False), stop=stop)
        result.basis, result.stats = state.basis, state.stats
        if result.certificate is not None:
            result.stats.precheck_constant = format_polynomial(result.certificate.target, source.variables)
    except StdInterrupted as e:
        result.status, result.stats, result.error = STATUS_TIMEOUT, e.stats, str(e)
    except (PairCapExceeded, IterationCapExceeded) as e:
        result.status, result.error = STATUS_CAP, str(e)
    finally:
        if timer is not None:
            timer.cancel()
        result.wall_ms = (time.perf_counter() - started) * 1000
    if result.status == STATUS_OK and verify:
        result.report = is_strong_basis(result.basis, jobs=cfg.jobs, config=cfg)
        if not result.report.passed:
            result.status = STATUS_FAILED
    logger.info("%s [%s] %s in %.0f ms", result.name, result.strategy, result.status, result.wall_ms)
    return result


def run_bench(names: Sequence[str], strategies: Sequence[Strategy], config: Optional[StdConfig] = None,
              timeout: Optional[float] = None, jobs: int = 1, verify: bool = True) -> List[RunResult]:
    """Run every (entry, strategy) combination; results come back in input order."""
    cfg = config or StdConfig()
    sources = {name: load_corpus_source(name) for name in names}
    tasks = [(name, s) for name in names for s in strategies]

    def run(task) -> RunResult:
        name, strategy = task
        return run_source(sources[name], cfg.merged(strategy=strategy), timeout=timeout, verify=verify)

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(run, tasks))


def reference_factor(name: str) -> Optional[float]:
    """Published JUST/ALL time ratio of a corpus entry, if both timings exist."""
    ref = get_corpus_entry(name).get("reference_ms") or {}
    if ref.get("all") and ref.get("just"):
        return ref["just"] / ref["all"]
    return None


def race_precheck(source: IdealSource, config: Optional[StdConfig] = None,
                  timeout: Optional[float] = None, verify: bool = False) -> RunResult:
    """Run the plain and the precheck variant side by side; the first to finish wins."""
    cfg = config or StdConfig()
    variants = {"plain": cfg.merged(precheck=False), "precheck": cfg.merged(precheck=True)}
    stops = {name: threading.Event() for name in variants}
    with ThreadPoolExecutor(max_workers=len(variants)) as pool:
        futures = {pool.submit(run_source, source, variants[name], timeout, verify, stops[name]): name
                   for name in variants}
        pending = set(futures)
        finished: List[RunResult] = []
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            finished += [f.result() for f in done]
            winner = next((r for r in finished if r.status == STATUS_OK), None)
            if winner is not None:
                for f in pending:
                    stops[futures[f]].set()
                logger.info("race won by the %s variant", winner.variant)
                return winner
    return finished[0]
