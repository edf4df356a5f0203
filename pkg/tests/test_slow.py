"""Corpus runs that take minutes; enable with ZBASIS_SLOW=1."""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from zbasis.config import StdConfig, Strategy
from zbasis.corpus import get_corpus_entry, list_corpus, load_corpus_source
from zbasis.executor import STATUS_OK, STATUS_TIMEOUT, run_source
from zbasis.verify import equivalent, in_ideal

pytestmark = pytest.mark.slow

ENTRY_TIMEOUT = 600
PRECHECK_TIMEOUT = 1800


def test_seventy_generators_with_precheck():
    """The certified constant goes in first and the run finishes over ZZ/2129600."""
    source = load_corpus_source("ex70")
    result = run_source(source, StdConfig(precheck=True), timeout=PRECHECK_TIMEOUT, verify=True)
    assert result.status == STATUS_OK, result.error
    cert = result.certificate
    assert cert.target.is_constant() and cert.target.lc != 0
    assert cert.verify(source.generators)
    assert result.report.passed
    integers = [p for p in result.basis if p.is_constant()]
    assert len(integers) == 1
    assert cert.target.lc % integers[0].lc == 0
    assert all(in_ideal(g, result.basis) for g in source.generators)


@pytest.mark.parametrize("name", ["A2", "A5", "A8", "A10", "B3", "B5"])
@pytest.mark.parametrize("strategy", [Strategy.ALL, Strategy.JUST])
def test_random_corpus_entries(name, strategy):
    result = run_source(load_corpus_source(name), StdConfig(strategy=strategy), verify=True)
    assert result.status == STATUS_OK
    assert result.report.passed


@pytest.mark.parametrize("name", list_corpus("all"))
def test_every_random_entry_with_favourable_strategy(name):
    """Each entry finishes within ten minutes with its faster strategy."""
    strategy = Strategy(get_corpus_entry(name)["favourable"])
    result = run_source(load_corpus_source(name), StdConfig(strategy=strategy), timeout=ENTRY_TIMEOUT,
                        verify=True)
    assert result.status == STATUS_OK, f"{name} [{strategy.value}]: {result.status}"
    assert result.report.passed


@pytest.mark.parametrize("name", list_corpus("all"))
def test_strategies_agree(name):
    """ALL and JUST give equivalent bases; only the unfavourable strategy may run out of time."""
    source = load_corpus_source(name)
    favourable = Strategy(get_corpus_entry(name)["favourable"])
    runs = {s: run_source(source, StdConfig(strategy=s), timeout=ENTRY_TIMEOUT) for s in Strategy}
    assert runs[favourable].status == STATUS_OK, f"{name} [{favourable.value}]: {runs[favourable].status}"
    other = next(s for s in Strategy if s is not favourable)
    if runs[other].status == STATUS_TIMEOUT:
        pytest.skip(f"{name}: {other.value} did not finish within {ENTRY_TIMEOUT}s")
    assert runs[other].status == STATUS_OK
    assert equivalent(runs[Strategy.ALL].basis, runs[Strategy.JUST].basis)


def test_large_modulus():
    result = run_source(load_corpus_source("B1_mod_10e200"), StdConfig(), verify=True)
    assert result.status == STATUS_OK
    assert result.report.passed
