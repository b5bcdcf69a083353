"""
Command-line surface of ablab.

Exit codes: 0 success, 1 usage or validation error (and failed
verification checks), 2 numerical failure.
"""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence

import click

from . import __version__
from .core.errors import NumericalError
from .core.trajectory import Trajectory
from .interference.experiment import experiment_phase, simulate_experiment
from .interference.pattern import measure_fringe_shift, two_beam_pattern
from .phase.accumulate import stokes_residual
from .scenario.loader import load_scenario
from .scenario.writer import CsvWriter, field_grid_csv, fringe_csv
from .sources.coil import ToroidalCoil
from .sources.flux import diagnostic_disk, disk_circulation, flux_through_disk, lattice, sample_field_grid
from .sources.ring import InertFluxRing
from .verification import SUITE_NAMES, all_passed, render_table, run_suites

logger = logging.getLogger(__name__)

USAGE_EXIT = 1
NUMERICAL_EXIT = 2
CHECK_FAILURE_EXIT = 1
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
STOKES_VERTICES = 64


class NumericalFailure(click.ClickException):
    exit_code = NUMERICAL_EXIT


class ABLabGroup(click.Group):
    """Group mapping usage errors to exit 1 and library errors to click errors."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as exc:
            exc.exit_code = USAGE_EXIT
            raise

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = USAGE_EXIT
            raise
        except NumericalError as exc:
            raise NumericalFailure(f"{type(exc).__name__}: {exc}") from exc
        except ValueError as exc:
            raise click.ClickException(f"{type(exc).__name__}: {exc}") from exc


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT)
    logging.getLogger("ablab").setLevel(level)


def _parse_grid(ctx, param, value: Optional[str]) -> Optional[tuple[int, int, int]]:
    if value is None:
        return None
    try:
        counts = tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected three integers nx,ny,nz, got {value!r}") from None
    if len(counts) != 3:
        raise click.BadParameter(f"expected three integers nx,ny,nz, got {value!r}")
    return counts


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    path = CsvWriter.write_text(text, out)
    click.echo(f"wrote {path}", err=True)


@click.group(cls=ABLabGroup)
@click.option("-v", "--verbose", count=True, help="Log more (-v info, -vv debug) to stderr.")
@click.version_option(version=__version__, prog_name="ablab")
def cli(verbose: int) -> None:
    """Aharonov-Bohm phase laboratory."""
    configure_logging(verbose)


@cli.command()
@click.argument("scenario")
@click.option("--grid", callback=_parse_grid, help="Lattice size nx,ny,nz (default: scenario outputs).")
@click.option("--extent", type=float, default=None, help="Half-width of the lattice cube.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV path (default: stdout).")
def fields(scenario: str, grid, extent: Optional[float], out: Optional[str]) -> None:
    """Sample A and B on a regular lattice."""
    sc = load_scenario(scenario)
    shape = grid or sc.outputs.grid
    points = lattice(shape, sc.outputs.grid_extent if extent is None else extent)
    samples = sample_field_grid(sc.build_source(), points, near_wire_epsilon=sc.numerics.near_wire_epsilon)
    logger.info("sampled %d of %d lattice points", len(samples), len(points))
    _emit(field_grid_csv(samples), out or sc.outputs.fields_csv)


@cli.command()
@click.argument("scenario")
def flux(scenario: str) -> None:
    """Print the threaded flux by quadrature and in closed form, with the Stokes residual."""
    sc = load_scenario(scenario)
    source = sc.build_source()
    disk = diagnostic_disk(source)
    tol = sc.numerics.tolerance
    through = flux_through_disk(source, disk, tol)
    around = disk_circulation(source, disk)
    residual = stokes_residual(Trajectory.circle(disk, STOKES_VERTICES), disk, source, tol)

    lines = [
        f"scenario: {sc.name} ({sc.kind})",
        f"disk_radius: {disk.radius!r}",
        f"flux_quadrature: {through.value!r}",
        f"flux_error_estimate: {through.error!r}",
        f"circulation: {around.value!r}",
    ]
    if isinstance(source, ToroidalCoil):
        lines.append(f"flux_ideal_winding: {source.ideal_flux!r}")
    elif isinstance(source, InertFluxRing):
        lines.append(f"flux_analytic: {source.total_flux!r}")
    lines.append(f"stokes_residual: {residual!r}")
    click.echo("\n".join(lines))


@cli.command()
@click.argument("scenario")
@click.option("--swap", is_flag=True, help="Exchange the two subbeams.")
def phase(scenario: str, swap: bool) -> None:
    """Print the phase difference of the scenario's subbeam pair, term by term."""
    sc = load_scenario(scenario)
    result = experiment_phase(
        sc.build_source(),
        sc.geometry(),
        sc.beam.pairing,
        swap=swap,
        charge=sc.beam.charge,
        tol=sc.numerics.tolerance,
    )
    lines = [
        f"scenario: {sc.name} ({sc.kind}, {sc.beam.pairing}{', swapped' if swap else ''})",
        f"total: {result.total!r}",
        f"interaction_term: {result.interaction_term!r}",
        f"backreaction_term: {result.backreaction_term!r}",
        f"flux_term: {result.flux_term!r}",
        f"linking: {result.linking!r}",
        f"error_estimate: {result.error_estimate!r}",
    ]
    click.echo("\n".join(lines))


@cli.command()
@click.argument("scenario")
@click.option(
    "--suite",
    "suites",
    type=click.Choice(["all", *SUITE_NAMES]),
    multiple=True,
    default=("all",),
    show_default=True,
    help="Suite to run; repeatable.",
)
@click.pass_context
def verify(ctx: click.Context, scenario: str, suites: Sequence[str]) -> None:
    """Run the invariant suites and print a pass/fail table."""
    sc = load_scenario(scenario)
    outcomes = run_suites(sc, suites)
    click.echo(render_table(outcomes), nl=False)
    if not all_passed(outcomes):
        ctx.exit(CHECK_FAILURE_EXIT)


@cli.command()
@click.argument("scenario")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV path (default: stdout).")
def fringes(scenario: str, out: Optional[str]) -> None:
    """Emit the reference and shifted fringe patterns and the measured shift."""
    sc = load_scenario(scenario)
    geom = sc.geometry()
    n_samples = sc.numerics.samples_per_fringe * geom.fringe_count
    result = simulate_experiment(
        sc.build_source(),
        geom,
        sc.beam.pairing,
        charge=sc.beam.charge,
        n_samples=n_samples,
        tol=sc.numerics.tolerance,
    )
    reference = two_beam_pattern(geom, 0.0, n_samples)
    shift = measure_fringe_shift(reference, result.pattern)
    logger.info("delta_phi %.12g, measured shift %.6f period", result.delta_phi, shift)
    _emit(fringe_csv(reference, result.pattern, shift), out or sc.outputs.fringes_csv)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line with ``argv`` (default: ``sys.argv[1:]``) and return the exit code."""
    try:
        cli.main(args=None if argv is None else list(argv), prog_name="ablab")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    return 0


def entrypoint() -> None:
    sys.exit(run())
