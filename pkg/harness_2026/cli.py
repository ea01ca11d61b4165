# harness_2026/cli.py
"""Command-line entry point.

Exit codes: 0 success, 1 usage / I-O / input error, 2 proven-bound violation,
3 conjecture counterexample found.
"""
import logging
import sys
from typing import List, Optional, Sequence

import click
import yaml

from bounds_2026.block_discard import eval_block_discard
from bounds_2026.evaluate import evaluate_all, evaluate_bound
from bounds_2026.report import BoundReport, BoundId, reports_to_json, write_reports
from config_2026.config_loader import ConfigLoader2026
from numeric_core_2026.errors import RitzBoundsError
from numeric_core_2026.matrix_io import read_matrix, read_subspace
from numeric_core_2026.tolerance import TolerancePolicy
from .appendix import AppendixSuite2026
from .experiment import CHECKS, SCALAR_KINDS, ExperimentConfig, ProvenBoundViolation
from .figure1 import Figure1Sweep2026
from .fuzz import FuzzRunner2026

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
EXIT_OK, EXIT_ERROR, EXIT_VIOLATION, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3


def configure_logging(level: str = 'INFO', log_file: Optional[str] = None):
    numeric = getattr(logging, str(level).upper(), logging.INFO)
    if log_file:
        logging.basicConfig(level=numeric, format=LOG_FORMAT, filename=log_file, filemode='a')
        console = logging.StreamHandler()
        console.setLevel(numeric)
        console.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger('').addHandler(console)
    else:
        logging.basicConfig(level=numeric, format=LOG_FORMAT)
    logging.getLogger('').setLevel(numeric)


def _report_line(report: BoundReport) -> str:
    status = 'holds' if report.holds else 'FAILS'
    flags = ' (heuristic)' if report.heuristic else ''
    flags += ' (delta override)' if report.delta_override else ''
    return (f"{report.bound_id.value:28s} {report.grade.value:12s} {status:6s} "
            f"worst margin {report.worst_margin: .3e}{flags}")


def _exit_code(reports: Sequence[BoundReport]) -> int:
    if any(r.is_violation for r in reports):
        return EXIT_VIOLATION
    if any(r.is_counterexample for r in reports):
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _parse_eigs(text: str) -> List[int]:
    try:
        values = [int(token) for token in text.split(',') if token.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}", param_hint='--eigs')
    if not values or min(values) < 1:
        raise click.BadParameter("indices are 1-based positions in the decreasing spectrum", param_hint='--eigs')
    return [v - 1 for v in values]


@click.group()
@click.option('--env-file', default='.env', show_default=True, help='dotenv file with defaults.')
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              help='YAML experiment config; command-line flags override it.')
@click.option('--log-level', default=None, help='Overrides LOG_LEVEL.')
@click.pass_context
def cli(ctx, env_file, config_path, log_level):
    """Rayleigh-Ritz majorization bounds: evaluation, fuzzing and experiments."""
    settings = ConfigLoader2026(env_file).get_all_config()
    configure_logging(log_level or settings['LOG_LEVEL'], settings['LOG_FILE'] or None)
    experiment = ExperimentConfig.from_config(settings)
    if config_path:
        experiment = ExperimentConfig.from_yaml(config_path, base=experiment)
    ctx.obj = {
        'settings': settings,
        'policy': TolerancePolicy.from_config(settings),
        'experiment': experiment,
    }


@cli.command()
@click.option('--matrix', 'matrix_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--x', 'x_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--y', 'y_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--bound', 'bound_name', default='all', show_default=True)
@click.option('--json', 'json_path', type=click.Path(dir_okay=False), help='Write the reports as JSON.')
@click.option('--cap', type=int, default=None, help='Exhaustive-search cap for weyl_matching.')
@click.option('--delta', type=float, default=None, help='Gap override for the gap-based bounds.')
@click.pass_obj
def bounds(obj, matrix_path, x_path, y_path, bound_name, json_path, cap, delta):
    """Evaluate one bound (or all applicable ones) on A, X, Y read from matrix files."""
    policy = obj['policy']
    cap = cap if cap is not None else obj['experiment'].search_cap
    a = read_matrix(matrix_path)
    x = read_subspace(x_path, policy)
    y = read_subspace(y_path, policy)
    if bound_name.strip().lower() == 'all':
        reports = evaluate_all(a, x, y, policy, cap, delta=delta)
    else:
        try:
            bound_id = BoundId.parse(bound_name)
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint='--bound')
        reports = [evaluate_bound(a, x, y, bound_id, policy, cap, delta)]
    for report in reports:
        click.echo(_report_line(report))
    if json_path:
        write_reports(json_path, reports)
    else:
        click.echo(reports_to_json(reports))
    return _exit_code(reports)


@cli.command()
@click.option('--trials', type=int, default=None)
@click.option('--seed', type=int, default=None)
@click.option('--n-min', type=int, default=None)
@click.option('--n-max', type=int, default=None)
@click.option('--check', type=click.Choice(CHECKS), default=None)
@click.option('--kind', 'scalar_kind', type=click.Choice(SCALAR_KINDS), default=None)
@click.option('--workers', type=int, default=None)
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), help='JSONL trial records.')
@click.option('--counterexample-dir', type=click.Path(file_okay=False), default=None)
@click.pass_obj
def fuzz(obj, trials, seed, n_min, n_max, check, scalar_kind, workers, out_path, counterexample_dir):
    """Random trials against the conjecture and the proven bounds."""
    config = obj['experiment'].with_overrides(
        trials=trials, seed=seed, n_min=n_min, n_max=n_max, check=check,
        scalar_kind=scalar_kind, workers=workers, counterexample_dir=counterexample_dir,
        output_path=out_path,
    )
    summary = FuzzRunner2026(config, obj['policy']).run(records_path=out_path)
    click.echo(summary.table.to_string(index=False))
    click.echo(f"{summary.trials} trials, {summary.skipped} skipped")
    for path in summary.counterexample_paths:
        click.echo(f"counterexample: {path}")
    return summary.exit_code


@cli.command()
@click.option('--eps-min', type=float, default=None)
@click.option('--eps-max', type=float, default=None)
@click.option('--points', type=int, default=None)
@click.option('--trials-per-eps', type=int, default=None)
@click.option('--seed', type=int, default=None)
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), help='CSV output; stdout if omitted.')
@click.pass_obj
def figure1(obj, eps_min, eps_max, points, trials_per_eps, seed, out_path):
    """Additive-perturbation sweep comparing the mixed bound with Weyl's bound."""
    config = obj['experiment'].with_overrides(
        eps_min=eps_min, eps_max=eps_max, eps_points=points,
        trials_per_eps=trials_per_eps, seed=seed, output_path=out_path,
    )
    sweep = Figure1Sweep2026(config, obj['policy'])
    result = sweep.run()
    if out_path:
        summary_path = sweep.write(result, out_path)
        click.echo(f"wrote {out_path} and {summary_path}")
    else:
        click.echo(result.to_frame().to_csv(index=False, float_format='%.17g'), nl=False)
    for column, slope in result.slopes.items():
        click.echo(f"slope {column}: {slope:.4f}", err=True)
    for path in result.counterexample_paths:
        click.echo(f"counterexample: {path}")
    return result.exit_code


@cli.command()
@click.option('--trials', type=int, default=None)
@click.option('--seed', type=int, default=None)
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), help='CSV of the pass/fail table.')
@click.pass_obj
def appendix(obj, trials, seed, out_path):
    """Randomized property suite for the supporting matrix inequalities."""
    config = obj['experiment'].with_overrides(trials=trials, seed=seed)
    table = AppendixSuite2026(config, obj['policy']).run()
    click.echo(table.to_string(index=False))
    if out_path:
        table.to_csv(out_path, index=False, float_format='%.17g')
    return EXIT_VIOLATION if (table['failures'] > 0).any() else EXIT_OK


@cli.command('block-discard')
@click.option('--matrix', 'matrix_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--k', 'k', required=True, type=int)
@click.option('--eigs', required=True, help='1-based eigenvalue positions, e.g. 1,3.')
@click.option('--json', 'json_path', type=click.Path(dir_okay=False))
@click.pass_obj
def block_discard(obj, matrix_path, k, eigs, json_path):
    """Eigenvalue change after discarding the off-diagonal blocks of A."""
    a = read_matrix(matrix_path)
    report = eval_block_discard(a, k, _parse_eigs(eigs), obj['policy'])
    scaled = report.context['scaled']
    click.echo(_report_line(report))
    click.echo(f"{scaled['bound_id']:28s} {'proven':12s} {'holds' if scaled['holds'] else 'FAILS':6s}")
    if json_path:
        write_reports(json_path, [report])
    if not scaled['holds']:
        return EXIT_VIOLATION
    return EXIT_OK if report.holds else EXIT_COUNTEREXAMPLE


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        result = cli.main(args=list(argv) if argv is not None else None,
                          prog_name='ritz-bounds', standalone_mode=False)
    except ProvenBoundViolation as e:
        click.echo(f"Proven bound violation: {e}", err=True)
        if e.artifact_path:
            click.echo(f"artifact: {e.artifact_path}")
        return EXIT_VIOLATION
    except click.ClickException as e:
        e.show()
        return EXIT_ERROR
    except click.Abort:
        click.echo('Aborted', err=True)
        return EXIT_ERROR
    except (RitzBoundsError, ValueError, OSError, yaml.YAMLError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        click.echo(f"Error: {e}", err=True)
        return EXIT_ERROR
    return int(result or 0)


if __name__ == '__main__':
    sys.exit(main())
