"""
hypercut CLI
============
Command-line entry point tying generators, solvers, decomposition,
verification and benchmarks together.

Usage:
    hypercut gen appendixB --n 100 --out fixtures/appendixB_n100.hgr
    hypercut mincut fixtures/appendixB_n100.hgr --algo cx --json
    hypercut verify instance.hgr --max-n 18 --repro-dir repro/
    hypercut decompose instance.hgr --phi 0.1
    hypercut report instance.hgr
    hypercut bench --suite random --out random.csv

Exit codes: 0 ok, 1 other error, 2 usage, 3 unreadable input,
4 verification mismatch. JSON and CSV go to stdout, diagnostics to stderr.
"""

import functools
import logging
import os
import sys
import time
from typing import Optional, Sequence

import click

from hypercut.bench import SCALING_AXES, SUITE_NAMES, run_suite, scaling_slope, write_csv
from hypercut.config import SolverConfig, load_config
from hypercut.driver import ALGORITHM_LABELS, run_algorithm, structural_report
from hypercut.errors import (
    DuplicateHyperedge,
    HypercutError,
    ParseError,
    SingletonHyperedge,
    VertexOutOfRange,
)
from hypercut.expander import hypergraph_expander_decomposition
from hypercut.generators import (
    GENERATORS,
    gen_complete_uniform,
    gen_nontrivial_example,
    gen_planted_small_cut,
    gen_random,
    gen_tight_example,
)
from hypercut.graph_loader import load_hgr, save_hgr, write_hgr
from hypercut.result_writer import ResultRecord, dumps, write_result
from hypercut.smallcut.dispatch import BRANCHES
from hypercut.validation import validate_seed
from hypercut.verify import verify_instance, write_repro

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_MISMATCH = 4

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

INPUT_ERRORS = (FileNotFoundError, ParseError, VertexOutOfRange, SingletonHyperedge, DuplicateHyperedge)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    raise click.exceptions.Exit(code)


def handle_errors(func):
    """Map library errors onto the documented exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except INPUT_ERRORS as e:
            _fail(str(e), EXIT_INPUT)
        except HypercutError as e:
            _fail(str(e), EXIT_ERROR)

    return wrapper


def _config(ctx: click.Context, **overrides) -> SolverConfig:
    return load_config(ctx.obj.get("config_path"), **overrides)


def _seed(value: int) -> int:
    try:
        return validate_seed(value)
    except HypercutError as e:
        raise click.BadParameter(str(e), param_hint="--seed") from None


# --- Group ---

@click.group()
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default="WARNING",
              show_default=True, help="Diagnostics level on stderr.")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="TOML file with a [hypercut] table.")
@click.pass_context
def cli(ctx: click.Context, log_level: str, config_path: Optional[str]) -> None:
    """Hypergraph minimum cuts."""
    logging.basicConfig(level=log_level.upper(), format=LOG_FORMAT, stream=sys.stderr, force=True)
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path


# --- gen ---

@cli.command()
@click.argument("kind", type=click.Choice(sorted(GENERATORS)))
@click.option("--n", "n", type=int, required=True, help="Vertex count (pair count times 2 for appendixB).")
@click.option("--r", "r", type=int, default=3, show_default=True)
@click.option("--m", "m", type=int, default=None, help="Hyperedge count for random.")
@click.option("--s", "s", type=int, default=1, show_default=True, help="Planted side size.")
@click.option("--lam", type=int, default=1, show_default=True, help="Planted cut capacity.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write here instead of stdout.")
@click.pass_context
@handle_errors
def gen(ctx, kind, n, r, m, s, lam, seed, out):
    """Generate an instance in .hgr format."""
    seed = _seed(seed)
    if kind == "random":
        if m is None:
            raise click.UsageError("gen random needs --m.")
        G = gen_random(n, r, m, seed)
    elif kind == "planted":
        G, side = gen_planted_small_cut(n, r, s, lam, seed, config=_config(ctx))
        click.echo(f"planted side: {sorted(side)}", err=True)
    elif kind == "appendixB":
        G = gen_nontrivial_example(n)
    elif kind == "appendixC":
        G = gen_tight_example(n, r)
    else:
        G = gen_complete_uniform(n, r)

    if out:
        path = save_hgr(G, out)
        click.echo(f"wrote {path} (n={G.n}, m={G.m})", err=True)
    else:
        click.echo(write_hgr(G), nl=False)


# --- mincut ---

@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--algo", type=click.Choice(ALGORITHM_LABELS), default="auto", show_default=True)
@click.option("--s", "s", type=int, default=None, help="Side bound for small and exhaustive.")
@click.option("--branch", type=click.Choice(sorted(BRANCHES)), default="auto", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--force-large-branch", is_flag=True, help="Run the full pipeline at any connectivity.")
@click.option("--json", "as_json", is_flag=True, help="Print the result record as JSON.")
@click.option("--drop-singletons", is_flag=True, help="Skip hyperedges with fewer than 2 vertices.")
@click.option("--timing", is_flag=True, help="Fill wall_ms (output is then not reproducible).")
@click.pass_context
@handle_errors
def mincut(ctx, path, algo, s, branch, seed, force_large_branch, as_json, drop_singletons, timing):
    """Compute a minimum cut of the hypergraph in PATH."""
    seed = _seed(seed)
    G = load_hgr(path, drop_singletons=drop_singletons)
    params = {"s": s, "branch": branch, "force_large": force_large_branch}

    start = time.perf_counter()
    cut, used = run_algorithm(algo, G, seed=seed, params=params, config=_config(ctx))
    wall_ms = (time.perf_counter() - start) * 1000.0 if timing else 0.0

    record = ResultRecord.from_cut(cut, G.n, seed=seed, wall_ms=wall_ms, params=used, algorithm=algo)
    if as_json:
        click.echo(write_result(record), nl=False)
    else:
        click.echo(f"lambda: {record.lambda_}")
        click.echo(f"side:   {record.side}")


# --- decompose ---

@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--phi", type=float, required=True, help="Conductance target in (0, 1/(r-1)].")
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
@handle_errors
def decompose(ctx, path, phi, seed):
    """Expander decomposition of PATH as JSON."""
    G = load_hgr(path)
    decomposition = hypergraph_expander_decomposition(G, phi, seed=_seed(seed), config=_config(ctx))
    click.echo(dumps(decomposition.to_dict()), nl=False)


# --- verify ---

@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--max-n", type=int, default=18, show_default=True, help="Oracle vertex limit.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--repro-dir", type=click.Path(file_okay=False), default=None,
              help="Where a mismatching instance is saved.")
@click.pass_context
@handle_errors
def verify(ctx, path, max_n, seed, repro_dir):
    """Cross-check every solver against the oracle; exit 4 on mismatch."""
    seed = _seed(seed)
    G = load_hgr(path)
    report = verify_instance(G, seed=seed, config=_config(ctx, oracle_limit=max_n))
    click.echo(dumps(report), nl=False)
    if not report["ok"]:
        directory = repro_dir or os.path.dirname(os.path.abspath(path))
        label = f"repro_{os.path.splitext(os.path.basename(path))[0]}_{seed}"
        write_repro(G, directory, label)
        raise click.exceptions.Exit(EXIT_MISMATCH)


# --- report ---

@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--max-n", type=int, default=None, help="Oracle vertex limit.")
@click.pass_context
@handle_errors
def report(ctx, path, max_n):
    """Structural min-cut report of PATH as JSON."""
    G = load_hgr(path)
    click.echo(dumps(structural_report(G, config=_config(ctx, oracle_limit=max_n))), nl=False)


# --- bench ---

@cli.command()
@click.option("--suite", type=click.Choice(SUITE_NAMES), required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV path; stdout when omitted.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--count", type=int, default=None, help="Instances in the random suite.")
@click.option("--threads", type=int, default=None, help="Worker threads (default: HYPERCUT_THREADS or CPUs).")
@click.option("--quiet", is_flag=True, help="Hide the progress bar.")
@click.pass_context
@handle_errors
def bench(ctx, suite, out, seed, count, threads, quiet):
    """Run a benchmark suite and write per-instance rows as CSV."""
    df = run_suite(suite, seed=_seed(seed), config=_config(ctx, threads=threads), count=count, quiet=quiet)
    if out:
        click.echo(f"wrote {write_csv(df, out)} ({len(df)} rows)", err=True)
    else:
        click.echo(write_csv(df), nl=False)

    if suite in SCALING_AXES:
        x, y = SCALING_AXES[suite]
        click.echo(f"log-log slope of {y} in {x}: {scaling_slope(df, x, y):.3f}", err=True)
    if "ok" in df and not df["ok"].dropna().all():
        click.echo("bench: some rows disagree with the expected capacity", err=True)
        raise click.exceptions.Exit(EXIT_MISMATCH)


# --- Entry points ---

def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="hypercut",
                      standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_ERROR
    return rv if isinstance(rv, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
