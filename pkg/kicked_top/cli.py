import sys
from pathlib import Path

import click

from . import __version__
from .config import Mode, load_config
from .exceptions import ConfigError, KickedTopError
from .harness import report_document, report_table, run_grid, run_validation, save_json
from .propagator import EXPORT_CAP, ClassicalKickVariant, KickVariant, export_rotation_matrix
from .utils.file_utils import ensure_directory
from .utils.logging_utils import get_logger, setup_logging

EXIT_FAILURE = 1
EXIT_CONFIG = 2

logger = get_logger(__name__)


def _fail(command: str, error: Exception) -> None:
    click.echo(f"Error in {command}: {error}", err=True)
    sys.exit(EXIT_CONFIG if isinstance(error, ConfigError) else EXIT_FAILURE)


def _sweep(values):
    if not values:
        return None
    return list(values) if len(values) > 1 else values[0]


@click.group()
@click.version_option(version=__version__)
def cli():
    """Kicked top: quantum, moment-propagator and classical dynamics."""
    pass


# common experiment options shared by run and validate
def experiment_options(command):
    options = [
        click.option('--config', 'config_path', type=click.Path(dir_okay=False),
                     help='JSON config file; flags override its fields'),
        click.option('--theta', type=float, help='Initial polar angle [default: 1.0]'),
        click.option('--phi', type=float, help='Initial azimuth [default: 0.5]'),
        click.option('--seed', type=int, help='Seed for every random draw [default: 0]'),
        click.option('--out', 'output_dir', help='Output directory [default: results]'),
        click.option('--kq-variant', type=click.Choice([v.value for v in KickVariant]),
                     help='Quantum kick multiplier [default: eigen]'),
        click.option('--kc-variant', type=click.Choice([v.value for v in ClassicalKickVariant]),
                     help='Classical kick multiplier [default: tensor]'),
    ]
    for option in reversed(options):
        command = option(command)
    return command


@cli.command("run")
@experiment_options
@click.option('--k', 'k', type=float, multiple=True, help='Kick strength (repeat to sweep) [default: 3]')
@click.option('--two-j', 'two_j', type=int, multiple=True, help='Twice the spin (repeat to sweep) [default: 10]')
@click.option('--p', type=float, help='Rotation angle; moment and classical modes need pi/2 [default: pi/2]')
@click.option('--steps', type=int, help='Number of periods [default: 20]')
@click.option('--mode', type=click.Choice([m.value for m in Mode]), help='What to evolve [default: compare]')
@click.option('--ensemble-size', type=int, help='Points in the classical ensemble [default: 1000]')
@click.option('--workers', type=int, help='Grid points run in parallel [default: 1]')
def run_cmd(config_path, two_j, k, p, steps, theta, phi, mode, seed, ensemble_size, output_dir, workers,
            kq_variant, kc_variant):
    """Evolve one or more grid points and write CSV + JSON per point."""
    try:
        configs = load_config(config_path, {
            'two_j': _sweep(two_j), 'k': _sweep(k), 'p': p, 'steps': steps, 'theta': theta, 'phi': phi,
            'mode': mode, 'seed': seed, 'ensemble_size': ensemble_size, 'output_dir': output_dir,
            'workers': workers, 'kq_variant': kq_variant, 'kc_variant': kc_variant,
        })
        out = ensure_directory(configs[0].output_dir)
        setup_logging(out)
        logger.info(f"Running {len(configs)} grid point(s) with {configs[0].workers} worker(s)")

        written = run_grid(configs, configs[0].workers)
        for csv_path, _ in written:
            click.echo(f"Results written: {csv_path}")

    except KickedTopError as e:
        _fail('run', e)


@cli.command("validate")
@experiment_options
@click.option('--k', 'k', type=float, help='Kick strength for the map-level suites [default: 3]')
@click.option('--quick', is_flag=True, help='Smallest representations only (2j=1)')
def validate_cmd(config_path, k, theta, phi, seed, output_dir, kq_variant, kc_variant, quick):
    """Run the invariant suites and print a pass/fail table."""
    try:
        configs = load_config(config_path, {
            'k': k, 'theta': theta, 'phi': phi, 'seed': seed, 'output_dir': output_dir,
            'kq_variant': kq_variant, 'kc_variant': kc_variant,
        })
        config = configs[0]
        out = ensure_directory(config.output_dir)
        setup_logging(out)

        results = run_validation(config, quick=quick)
        click.echo(report_table(results).to_string(index=False))
        report_path = save_json(report_document(results, config, quick), out / 'validate_report.json')
        click.echo(f"Report written: {report_path}")

    except KickedTopError as e:
        _fail('validate', e)

    failed = [result.suite for result in results if not result.passed]
    if failed:
        click.echo(f"Failed suites: {', '.join(failed)}", err=True)
        sys.exit(EXIT_FAILURE)


@cli.command("export-r")
@click.option('--two-j', 'two_j', type=int, required=True, help='Twice the spin')
@click.option('--out', 'path', required=True, type=click.Path(dir_okay=False), help='Output JSON file')
@click.option('--cap', type=int, default=EXPORT_CAP, show_default=True, help='Largest 2j allowed')
def export_r_cmd(two_j, path, cap):
    """Export the quarter-turn moment rotation matrix R as JSON."""
    try:
        if two_j < 0:
            raise ConfigError("must be non-negative", field='two_j')
        written = export_rotation_matrix(two_j, Path(path), cap=cap)
        click.echo(f"Rotation matrix written: {written}")

    except KickedTopError as e:
        _fail('export-r', e)


if __name__ == '__main__':
    cli()
