import click
from flask import Blueprint

from scaling.casimir import theta_sc, theta_total
from utils.commands import (
    common_config,
    ordered_map,
    register_builder,
    run,
    table_options,
    x_grid,
)
from utils.tables import FunctionTable

theta_table_bp = Blueprint('theta_table', __name__, cli_group=None)


def _theta_rows(x, config):
    if x == 0:
        return [[x, rho, None, None, 'divergent'] for rho in config.rho_values]
    spec = config.quadrature()
    surface_corner = theta_sc(x, spec=spec)
    return [[x, rho, theta_total(x, rho, config.order, spec), surface_corner, '']
            for rho in config.rho_values]


@register_builder('theta-table')
def build_theta_table(config):
    table = FunctionTable(columns=['x', 'rho', 'theta_total', 'theta_sc', 'note'])
    blocks = ordered_map(lambda x: _theta_rows(x, config), config.x_values, config.threads)
    for rows in blocks:
        for row in rows:
            table.append(row)
    return table


@theta_table_bp.cli.command('theta-table')
@click.option('--x-min', type=float, required=True)
@click.option('--x-max', type=float, required=True)
@click.option('--steps', type=click.IntRange(min=1), required=True)
@click.option('--rho', 'rho_values', type=click.FloatRange(min=0, min_open=True),
              multiple=True, required=True, help='Aspect ratio (repeatable).')
@table_options
def theta_table_command(x_min, x_max, steps, rho_values, fmt, output, order, rel_tol):
    """Casimir potential Theta(x, rho) on an x grid."""
    config = common_config('theta-table', fmt, output, order, rel_tol,
                           x_values=x_grid(x_min, x_max, steps), rho_values=rho_values,
                           extra={'x_min': x_min, 'x_max': x_max, 'steps': steps})
    return run(config)
