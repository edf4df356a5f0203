"""Tests for the std engine."""
import random
import sys
import threading
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from zbasis.config import StdConfig, Strategy
from zbasis.engine import PairCapExceeded, StdInterrupted, run_std, std, std_with_stats
from zbasis.polynomial import Polynomial
from zbasis.reduction import reduce_mora
from zbasis.verify import equivalent, in_ideal, is_strong_basis

EX33 = "x + 4, x*y + 9, x - y + 8"
EX42 = "6 + y + x^2, 4 + x"


def lead_set(basis):
    return {(p.lc, p.lm.exponents) for p in basis}


@pytest.mark.parametrize("strategy", [Strategy.ALL, Strategy.JUST])
def test_three_generator_ideal_contains_seven(polys, strategy):
    """The basis is {7, x + 4, y - 4} up to equivalence with leading terms 7, x, y."""
    basis = std(polys(EX33), config=StdConfig(strategy=strategy))
    assert is_strong_basis(basis).passed
    assert equivalent(basis, polys("7, x + 4, y - 4"))
    assert lead_set(basis) == {(7, (0, 0)), (1, (1, 0)), (1, (0, 1))}


def test_local_ordering_example(polys, poly):
    """ds over ZZ: the basis matches the published one and reduces 4 + x to zero."""
    basis = std(polys(EX42, order="ds"))
    expected = polys("2 - x + y + x^2, x - 2*y - x^2 - x*y - x^3", order="ds")
    assert equivalent(basis, expected)
    assert is_strong_basis(basis).passed
    h, _ = reduce_mora(poly("4 + x", order="ds"), basis)
    assert h.is_zero()


def test_modular_ideal_with_zero_divisors(polys):
    """4x + 2 over ZZ/12 gives leading terms 6 and 2x."""
    gens = polys("4*x + 2", ring="ZZ/12", variables="x")
    basis = std(gens)
    assert lead_set(basis) == {(6, (0,)), (2, (1,))}
    assert is_strong_basis(basis).passed
    assert in_ideal(gens[0], basis)


def test_rational_ideal_uses_field_pairs(polys):
    basis = std(polys("x^2 - y, x*y - 1", ring="QQ"), config=StdConfig(tail_reduce_output=True))
    assert is_strong_basis(basis).passed
    assert all(p.lc == 1 for p in basis)


def test_unit_short_circuits(polys):
    """A unit anywhere makes the basis {1}."""
    assert std(polys("x, -1, y")) == polys("1")
    assert std(polys("x + 1, x")) == polys("1")
    assert std(polys("1 + x", order="ds")) == polys("1", order="ds")


def test_zero_generators_are_dropped(polys):
    assert std(polys("0, 2*x")) == polys("2*x")
    with pytest.raises(ValueError):
        std([])


def test_stats_counters(polys):
    """Counter relations that hold for every run."""
    progress = []
    basis, stats = std_with_stats(polys(EX33), on_progress=lambda s: progress.append(s.basis_additions))
    assert stats.pairs_selected >= stats.pairs_reduced_to_zero
    assert stats.pairs_created >= stats.pairs_selected
    assert stats.coeff_bits_snapshots == sorted(stats.coeff_bits_snapshots)
    assert stats.basis_additions == len(stats.coeff_bits_snapshots) == len(progress)
    assert stats.wall_time >= 0
    assert basis


def test_determinism(polys):
    assert std(polys(EX33)) == std(polys(EX33))


def test_stop_event_interrupts(polys):
    stop = threading.Event()
    stop.set()
    with pytest.raises(StdInterrupted):
        run_std(polys(EX33), stop=stop)


def test_pair_cap(polys):
    with pytest.raises(PairCapExceeded) as excinfo:
        std(polys(EX33), config=StdConfig(pair_cap=1))
    assert excinfo.value.cap == 1


def test_cofactor_tracking_reproduces_elements(polys):
    """Every element equals the combination of generators its cofactors describe."""
    gens = polys(EX33)
    state = run_std(gens, config=StdConfig(tail_reduce_output=True), track_cofactors=True)
    for element, cofactors in zip(state.basis, state.cofactors):
        total = Polynomial.zero(element.ring, element.ordering)
        for idx, q in cofactors.items():
            total = total + q * gens[idx]
        assert total == element


def test_cofactor_tracking_needs_global_ordering(polys):
    with pytest.raises(ValueError):
        run_std(polys(EX42, order="ds"), track_cofactors=True)


def test_interreduce_switch(polys):
    """Without interreduction the raw basis keeps every appended element."""
    raw = std(polys(EX33), config=StdConfig(interreduce=False))
    reduced = std(polys(EX33))
    assert len(raw) >= len(reduced)
    assert equivalent(raw, reduced)


def test_constant_generator_continues_modulo(polys):
    """With 12 among the generators the rest of the run happens over ZZ/12."""
    gens = polys("12, 4*x + 2, 3*x*y + 5")
    basis = std(gens)
    assert is_strong_basis(basis).passed
    assert equivalent(basis, std(gens, config=StdConfig(constant_lift=False)))
    assert all(12 % p.lc == 0 for p in basis)


def test_constant_found_during_run_bounds_coefficients(polys):
    """Once 7 turns up every other element has coefficients in [0, 7)."""
    basis = std(polys(EX33))
    assert Polynomial.constant(7, basis[0].ring, basis[0].ordering) in basis
    for p in basis:
        if not p.is_constant():
            assert all(0 <= c < 7 for c, _ in p.terms)


def test_constant_lift_switch(polys):
    """Disabled lifting keeps the integer loop; both runs agree."""
    gens = polys(EX33)
    plain, plain_stats = std_with_stats(gens, config=StdConfig(constant_lift=False))
    lifted, lifted_stats = std_with_stats(gens)
    assert equivalent(plain, lifted)
    assert lifted_stats.basis_additions == len(lifted_stats.coeff_bits_snapshots)


def test_constant_lift_respects_pair_cap(polys):
    gens = polys("12, 4*x + 2, 3*x*y + 5")
    with pytest.raises(PairCapExceeded) as excinfo:
        std(gens, config=StdConfig(pair_cap=1))
    assert excinfo.value.cap == 1


def random_ideal(rng, ring, nvars=2, ngens=2, degree=2, bound=10):
    names = "x,y,z"[: 2 * nvars - 1]
    symbols = names.split(",")
    gens = []
    for _ in range(ngens):
        terms = []
        for _ in range(rng.randint(1, 4)):
            exps = [rng.randint(0, degree) for _ in symbols]
            while sum(exps) > degree:
                exps[rng.randrange(len(exps))] -= 1
                exps = [max(0, e) for e in exps]
            mono = "*".join(f"{v}^{e}" for v, e in zip(symbols, exps) if e) or "1"
            terms.append(f"{rng.randint(1, bound)}*{mono}")
        gens.append(" + ".join(terms))
    return ", ".join(gens), names


def check_random_instance(polys, text, names, ring):
    gens = [g for g in polys(text, ring=ring, variables=names) if g]
    if not gens:
        return
    basis_all, stats = std_with_stats(gens, config=StdConfig(strategy=Strategy.ALL, constant_lift=False))
    basis_just = std(gens, config=StdConfig(strategy=Strategy.JUST))
    basis_lifted = std(gens)
    assert is_strong_basis(basis_all).passed
    assert is_strong_basis(basis_just).passed
    assert is_strong_basis(basis_lifted).passed
    assert all(in_ideal(g, basis_all) for g in gens)
    assert equivalent(basis_all, basis_just)
    assert equivalent(basis_all, basis_lifted)
    if stats.basis_additions > len(gens):
        assert not is_strong_basis(gens).passed


@pytest.mark.parametrize("ring", ["ZZ", "ZZ/12"])
def test_random_small_ideals(polys, ring):
    """Small random ideals: strong output, members reduce to zero, strategies agree."""
    rng = random.Random(2024)
    for _ in range(15):
        text, names = random_ideal(rng, ring)
        check_random_instance(polys, text, names, ring)


@pytest.mark.slow
@pytest.mark.parametrize("ring", ["ZZ", "ZZ/12"])
def test_random_ideal_suite(polys, ring):
    """Three variables, up to three generators of degree four, coefficients up to 100."""
    rng = random.Random(1)
    for _ in range(100):
        text, names = random_ideal(rng, ring, nvars=3, ngens=rng.randint(1, 3), degree=4, bound=100)
        check_random_instance(polys, text, names, ring)
