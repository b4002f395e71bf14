import click
from flask import Blueprint

from scaling.weights import weight
from utils.commands import common_config, register_builder, run, table_options
from utils.tables import FunctionTable

list_weights_bp = Blueprint('weights', __name__, cli_group=None)


@register_builder('weights')
def build_weights_table(config):
    x = config.x_values[0]
    spec = config.quadrature()
    table = FunctionTable(columns=['mu', 'v', 'method'])
    for mu in range(1, config.count + 1):
        record = weight(mu, x, spec)
        table.append([record.mu, record.v, record.method])
    return table


@list_weights_bp.cli.command('weights')
@click.option('--x', 'x', type=float, required=True, help='Temperature scaling variable.')
@click.option('--count', type=click.IntRange(min=1), default=4, show_default=True,
              help='Number of modes.')
@table_options
def list_weights(x, count, fmt, output, order, rel_tol):
    """Mode weights v_mu(x)."""
    config = common_config('weights', fmt, output, order, rel_tol, x_values=(x,), count=count)
    return run(config)
