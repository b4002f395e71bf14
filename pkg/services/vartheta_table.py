import click
from flask import Blueprint

from scaling.casimir import vartheta_total
from utils.commands import (
    common_config,
    ordered_map,
    register_builder,
    run,
    table_options,
    x_grid,
)
from utils.tables import FunctionTable

vartheta_table_bp = Blueprint('vartheta_table', __name__, cli_group=None)


@register_builder('vartheta-table')
def build_vartheta_table(config):
    table = FunctionTable(columns=['x', 'rho', 'vartheta'])
    spec = config.quadrature()
    points = [(x, rho) for x in config.x_values for rho in config.rho_values]
    values = ordered_map(lambda p: vartheta_total(p[0], p[1], config.order, spec),
                         points, config.threads)
    for (x, rho), value in zip(points, values):
        table.append([x, rho, value])
    return table


@vartheta_table_bp.cli.command('vartheta-table')
@click.option('--x-min', type=float, required=True)
@click.option('--x-max', type=float, required=True)
@click.option('--steps', type=click.IntRange(min=1), required=True)
@click.option('--rho', 'rho_values', type=click.FloatRange(min=0, min_open=True),
              multiple=True, required=True, help='Aspect ratio (repeatable).')
@table_options
def vartheta_table_command(x_min, x_max, steps, rho_values, fmt, output, order, rel_tol):
    """Casimir force vartheta(x, rho) on an x grid."""
    config = common_config('vartheta-table', fmt, output, order, rel_tol,
                           x_values=x_grid(x_min, x_max, steps), rho_values=rho_values,
                           extra={'x_min': x_min, 'x_max': x_max, 'steps': steps})
    return run(config)
