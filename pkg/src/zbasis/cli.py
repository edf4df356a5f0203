#!/usr/bin/env python3
"""
Main CLI entry point for zbasis.
Contains the std, check, reduce, precheck, bench and corpus commands.
"""
import json
import logging
from typing import List, Optional, Tuple

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from . import __version__
from .coeffring import RingMismatchError
from .config import ConfigError, EcartRule, StdConfig, Strategy, load_config
from .corpus import CORPUS_REGISTRY, FAMILIES, UnknownCorpusEntry, corpus_text, list_corpus, resolve_source
from .executor import (STATUS_CAP, STATUS_FAILED, STATUS_OK, STATUS_TIMEOUT, RunResult, race_precheck,
                       reference_factor, run_bench, run_source)
from .formatters import format_csv, format_json, format_text
from .parser import IdealSource, IdealSyntaxError, format_polynomial, parse_polynomial, parse_ring_spec
from .precheck import pre_integer_check
from .reduction import IterationCapExceeded, normal_form
from .verify import equivalent, is_strong_basis

console = Console()
err_console = Console(stderr=True)

CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])
INPUT_ERRORS = (IdealSyntaxError, ConfigError, UnknownCorpusEntry, RingMismatchError, OSError)


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]", force=True,
                        handlers=[RichHandler(console=err_console, show_path=False)])


def fail(ctx: click.Context, message: str, code: int = 1) -> None:
    err_console.print(f"[red]Error:[/red] {escape(message)}")
    ctx.exit(code)


def load_source(ctx: click.Context, target: str, ring: Optional[str]) -> IdealSource:
    try:
        source = resolve_source(target)
        if ring:
            source = source.with_ring(parse_ring_spec(ring))
        return source
    except INPUT_ERRORS as e:
        fail(ctx, str(e))
        raise  # unreachable, ctx.exit raises


def run_config(ctx: click.Context, **overrides) -> StdConfig:
    try:
        return ctx.obj["config"].merged(**overrides)
    except ConfigError as e:
        fail(ctx, str(e))
        raise


@click.group(context_settings=CONTEXT_SETTINGS)
@click.version_option(version=__version__, prog_name="zbasis")
@click.option("--verbose", "-v", count=True, help="Log progress to stderr (-vv for debug detail)")
@click.option("--config", "config_path", type=click.Path(dir_okay=False),
              help="JSON settings file (default: $ZBASIS_CONFIG or ~/.zbasis/config.json)")
@click.pass_context
def cli(ctx: click.Context, verbose: int, config_path: Optional[str]) -> None:
    """Strong standard bases over ZZ, ZZ/n and QQ."""
    setup_logging(verbose)
    ctx.ensure_object(dict)
    try:
        ctx.obj["config"] = load_config(config_path)
    except ConfigError as e:
        fail(ctx, str(e))


def report_status(ctx: click.Context, result: RunResult) -> None:
    """Exit 2 for timeouts and caps."""
    if result.status == STATUS_TIMEOUT:
        fail(ctx, f"{result.name}: timed out after {result.wall_ms / 1000:.1f}s", 2)
    if result.status == STATUS_CAP:
        fail(ctx, f"{result.name}: {result.error}", 2)


@cli.command(context_settings=CONTEXT_SETTINGS)
@click.argument("source")
@click.option("--strategy", type=click.Choice([s.value for s in Strategy]), help="Pair strategy")
@click.option("--precheck", is_flag=True, help="Add a certified integer or term found over QQ first")
@click.option("--tail-reduce", is_flag=True, help="Tail-reduce the printed basis")
@click.option("--timeout", type=float, help="Give up after this many seconds (exit 2)")
@click.option("--iteration-cap", type=int, help="Step budget of one Mora reduction")
@click.option("--pair-cap", type=int, help="Maximum number of selected pairs")
@click.option("--no-gcd-augment", is_flag=True, help="Debug: Mora reduction without gcd-polynomials")
@click.option("--ecart-rule", type=click.Choice([r.value for r in EcartRule]), help="Mora reducer choice")
@click.option("--ring", help="Override the coefficient ring: ZZ, QQ, ZZ/n or ZZ/b^e")
@click.option("--verify", is_flag=True, help="Check the result with is_strong_basis (exit 1 on failure)")
@click.option("--race", is_flag=True, help="Race the plain run against the precheck run")
@click.option("--format", "-f", "fmt", type=click.Choice(["text", "json", "csv"]), default="text",
              help="Output format")
@click.pass_context
def std(ctx: click.Context, source: str, strategy: Optional[str], precheck: bool,
        tail_reduce: bool, timeout: Optional[float], iteration_cap: Optional[int],
        pair_cap: Optional[int], no_gcd_augment: bool, ecart_rule: Optional[str], ring: Optional[str],
        verify: bool, race: bool, fmt: str) -> None:
    """Compute a strong standard basis of SOURCE (a file or corpus:NAME)."""
    src = load_source(ctx, source, ring)
    cfg = run_config(ctx, strategy=strategy, precheck=precheck or None, tail_reduce_output=tail_reduce or None,
                     reduction_cap=iteration_cap, pair_cap=pair_cap,
                     gcd_augment=False if no_gcd_augment else None, ecart_rule=ecart_rule)
    try:
        if race:
            result = race_precheck(src, cfg, timeout=timeout, verify=verify)
        else:
            result = run_source(src, cfg, timeout=timeout, verify=verify)
    except ValueError as e:
        fail(ctx, str(e))
        return
    report_status(ctx, result)

    if fmt == "json":
        extra = {"strategy": result.strategy, "variant": result.variant, "verified": result.verified}
        click.echo(format_json(src, result.basis, result.stats.as_dict(), extra))
    elif fmt == "csv":
        click.echo(format_csv([result.as_row()]), nl=False)
    else:
        click.echo(format_text(src, result.basis), nl=False)
    if result.stats.precheck_constant:
        err_console.print(f"precheck added [bold]{escape(result.stats.precheck_constant)}[/bold]")
    if result.status == STATUS_FAILED:
        failures = result.report.failures if result.report else []
        fail(ctx, f"basis failed verification on {len(failures)} pair polynomials")


@cli.command(context_settings=CONTEXT_SETTINGS)
@click.argument("source")
@click.option("--expected", is_flag=True, help="Also require equivalence with the expect block")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker threads for pair reductions")
@click.option("--iteration-cap", type=int, help="Step budget of one Mora reduction (exit 2)")
@click.option("--ring", help="Override the coefficient ring")
@click.pass_context
def check(ctx: click.Context, source: str, expected: bool, jobs: int, iteration_cap: Optional[int],
          ring: Optional[str]) -> None:
    """Check that the ideal in SOURCE is a strong standard basis."""
    src = load_source(ctx, source, ring)
    cfg = run_config(ctx, reduction_cap=iteration_cap)
    try:
        report = is_strong_basis(src.generators, jobs=max(1, jobs), config=cfg)
    except IterationCapExceeded as e:
        fail(ctx, f"{src.name}: {e}", 2)
        return
    for (kind, i, j), remainder in report.failures:
        label = f"{kind}({i}, {j})" if j is not None else f"{kind}({i})"
        click.echo(f"{label} -> {format_polynomial(remainder, src.variables)}")
    verdict = "passed" if report.passed else "failed"
    click.echo(f"{verdict}: {report.checked_pair_count} pair polynomials checked, "
               f"{len(report.failures)} failures")
    ok = report.passed
    if expected:
        if src.expected is None:
            fail(ctx, f"{src.name} has no expect block")
        try:
            same = equivalent(src.generators, src.expected or [], config=cfg)
        except IterationCapExceeded as e:
            fail(ctx, f"{src.name}: {e}", 2)
            return
        click.echo(f"expected basis: {'equivalent' if same else 'not equivalent'}")
        ok = ok and same
    if not ok:
        ctx.exit(1)


@cli.command("reduce", context_settings=CONTEXT_SETTINGS)
@click.argument("source")
@click.argument("polynomial")
@click.option("--against", type=click.Choice(["std", "ideal", "expected"]), default="std", show_default=True,
              help="Reducers: the computed basis, the generators as written, or the expect block")
@click.option("--iteration-cap", type=int, help="Step budget of the Mora reduction (exit 2)")
@click.option("--no-gcd-augment", is_flag=True, help="Debug: Mora reduction without gcd-polynomials")
@click.option("--ecart-rule", type=click.Choice([r.value for r in EcartRule]), help="Mora reducer choice")
@click.option("--ring", help="Override the coefficient ring")
@click.pass_context
def reduce_command(ctx: click.Context, source: str, polynomial: str, against: str,
                   iteration_cap: Optional[int], no_gcd_augment: bool, ecart_rule: Optional[str],
                   ring: Optional[str]) -> None:
    """Print the normal form of POLYNOMIAL with respect to SOURCE."""
    src = load_source(ctx, source, ring)
    cfg = run_config(ctx, reduction_cap=iteration_cap, gcd_augment=False if no_gcd_augment else None,
                     ecart_rule=ecart_rule)
    try:
        f = parse_polynomial(polynomial, src)
    except IdealSyntaxError as e:
        fail(ctx, str(e))
        return
    if against == "expected":
        if src.expected is None:
            fail(ctx, f"{src.name} has no expect block")
        reducers = src.expected or []
    elif against == "ideal":
        reducers = src.generators
    else:
        result = run_source(src, cfg)
        report_status(ctx, result)
        reducers = result.basis
    try:
        h = normal_form(f, reducers, config=cfg, tail_reduce=True)
    except IterationCapExceeded as e:
        fail(ctx, f"{polynomial}: {e}", 2)
        return
    click.echo(format_polynomial(h, src.variables))


@cli.command(context_settings=CONTEXT_SETTINGS)
@click.argument("source")
@click.option("--format", "-f", "fmt", type=click.Choice(["text", "json"]), default="text", help="Output format")
@click.pass_context
def precheck(ctx: click.Context, source: str, fmt: str) -> None:
    """Look for an integer or term in the ideal of SOURCE via a rational basis."""
    src = load_source(ctx, source, None)
    try:
        result = pre_integer_check(src.generators)
    except ValueError as e:
        fail(ctx, str(e))
        return
    names = src.variables
    cert = result.certificate
    if fmt == "json":
        payload = {
            "name": src.name,
            "rational_basis": [format_polynomial(p, names) for p in result.rational_basis],
            "target": format_polynomial(cert.target, names) if cert else None,
            "denominator_lcm": cert.denominator_lcm if cert else None,
            "cofactors": [format_polynomial(q, names) for q in cert.cofactors] if cert else None,
            "verified": cert.verify(src.generators) if cert else None,
        }
        click.echo(json.dumps(payload, indent=2))
        return
    if cert is None:
        click.echo("no integer or term found over QQ; generators unchanged")
        return
    click.echo(f"target: {format_polynomial(cert.target, names)}")
    click.echo(f"denominator lcm: {cert.denominator_lcm}")
    for i, q in enumerate(cert.cofactors, 1):
        click.echo(f"q{i} = {format_polynomial(q, names)}")
    verified = cert.verify(src.generators)
    click.echo(f"combination verified: {'true' if verified else 'false'}")
    if not verified:
        ctx.exit(1)


def bench_summary(results: List[RunResult]) -> Table:
    table = Table(title="ALL vs JUST")
    for column in ("name", "ALL ms", "JUST ms", "factor", "reference factor"):
        table.add_column(column, justify="right" if column != "name" else "left")
    by_name = {}
    for r in results:
        by_name.setdefault(r.name, {})[r.strategy] = r
    for name, runs in by_name.items():
        ms = {s: (f"{runs[s].wall_ms:.0f}" if s in runs and runs[s].status == STATUS_OK else
                  runs[s].verified if s in runs else "-") for s in ("all", "just")}
        factor = "-"
        if all(s in runs and runs[s].status == STATUS_OK and runs[s].wall_ms > 0 for s in ("all", "just")):
            factor = f"{runs['just'].wall_ms / runs['all'].wall_ms:.3g}"
        ref = reference_factor(name) if name in CORPUS_REGISTRY else None
        table.add_row(name, ms["all"], ms["just"], factor, f"{ref:.3g}" if ref else "-")
    return table


@cli.command(context_settings=CONTEXT_SETTINGS)
@click.argument("names", nargs=-1)
@click.option("--corpus", "family", type=click.Choice(["A", "B", "all", "worked", "finite"]),
              help="Run a whole family of corpus entries")
@click.option("--strategy", type=click.Choice(["all", "just", "both"]), default="both", show_default=True)
@click.option("--timeout", type=float, help="Per-run timeout in seconds; timed-out runs are recorded")
@click.option("--jobs", type=int, default=1, show_default=True, help="Runs executed in parallel")
@click.option("--no-verify", is_flag=True, help="Skip is_strong_basis on the results")
@click.option("--summary/--no-summary", default=True, help="Print an ALL/JUST table to stderr")
@click.pass_context
def bench(ctx: click.Context, names: Tuple[str, ...], family: Optional[str], strategy: str,
          timeout: Optional[float], jobs: int, no_verify: bool, summary: bool) -> None:
    """Benchmark corpus entries and write CSV rows to stdout."""
    selected = list(names) + (list_corpus(family) if family else [])
    if not selected:
        fail(ctx, "name corpus entries or pass --corpus")
    strategies = [Strategy.ALL, Strategy.JUST] if strategy == "both" else [Strategy(strategy)]
    cfg = run_config(ctx)
    try:
        results = run_bench(selected, strategies, cfg, timeout=timeout, jobs=jobs, verify=not no_verify)
    except INPUT_ERRORS as e:
        fail(ctx, str(e))
        return
    click.echo(format_csv([r.as_row() for r in results]), nl=False)
    if summary:
        err_console.print(bench_summary(results))
    if any(r.status == STATUS_FAILED for r in results):
        ctx.exit(1)


@cli.command(context_settings=CONTEXT_SETTINGS)
@click.option("--family", type=click.Choice(list(FAMILIES)), help="Only list one family")
@click.option("--show", "show_name", help="Print the ideal file of one entry")
@click.pass_context
def corpus(ctx: click.Context, family: Optional[str], show_name: Optional[str]) -> None:
    """List the embedded corpus."""
    if show_name:
        try:
            click.echo(corpus_text(show_name), nl=False)
        except UnknownCorpusEntry as e:
            fail(ctx, str(e))
        return
    table = Table(title="zbasis corpus")
    for column in ("name", "family", "favourable", "description"):
        table.add_column(column)
    for name in list_corpus(family):
        entry = CORPUS_REGISTRY[name]
        table.add_row(name, entry["family"], entry["favourable"] or "-", entry["description"])
    console.print(table)


def main() -> None:
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
