import click
from flask import Blueprint, current_app

from scaling.sigma import Psi, psi_strip, sigma_det, sigma_series
from utils.commands import common_config, register_builder, run, table_options
from utils.tables import FunctionTable

evaluate_sigma_bp = Blueprint('sigma', __name__, cli_group=None)


@register_builder('sigma')
def build_sigma_table(config):
    spec = config.quadrature()
    table = FunctionTable(columns=['x', 'rho', 'sigma_series', 'sigma_det', 'Psi', 'psi'])
    for x in config.x_values:
        for rho in config.rho_values:
            series = sigma_series(x, rho, config.order, spec)
            det = sigma_det(x, rho, config.modes, spec, verify=config.extra.get('verify', False))
            table.append([
                x, rho, series.value, det.value,
                Psi(x, rho, config.order, spec), psi_strip(x, rho, config.order, spec),
            ])
    return table


@evaluate_sigma_bp.cli.command('sigma')
@click.option('--x', 'x_values', type=float, multiple=True, required=True,
              help='Temperature scaling variable (repeatable).')
@click.option('--rho', 'rho_values', type=float, multiple=True, required=True,
              help='Aspect ratio (repeatable).')
@click.option('--modes', type=click.IntRange(min=1), default=None,
              help='Determinant modes per parity (default from configuration).')
@click.option('--verify', is_flag=True,
              help='Fail with exit code 2 when the determinant leaves the series bound.')
@table_options
def evaluate_sigma(x_values, rho_values, modes, verify, fmt, output, order, rel_tol):
    """Residual partition function by series and by determinant."""
    if modes is None:
        modes = current_app.config['DEFAULT_MODES']
    config = common_config('sigma', fmt, output, order, rel_tol,
                           x_values=x_values, rho_values=rho_values, modes=modes,
                           extra={'verify': verify})
    return run(config)
