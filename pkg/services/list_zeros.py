import click
from flask import Blueprint

from scaling.roots import find_zeros
from utils.commands import common_config, register_builder, run, table_options
from utils.tables import FunctionTable

list_zeros_bp = Blueprint('zeros', __name__, cli_group=None)


def _phi_cell(zero):
    # the imaginary zero is shown as i|Phi|; phi_sq carries the full value
    if zero.is_imaginary:
        return f"{zero.phi:.10g}i"
    return zero.phi


@register_builder('zeros')
def build_zeros_table(config):
    x = config.x_values[0]
    table = FunctionTable(columns=['mu', 'phi', 'phi_sq', 'gamma'])
    for zero in find_zeros(config.count, x):
        table.append([zero.mu, _phi_cell(zero), zero.phi_sq, zero.gamma])
    return table


@list_zeros_bp.cli.command('zeros')
@click.option('--x', 'x', type=float, required=True, help='Temperature scaling variable.')
@click.option('--count', type=click.IntRange(min=1), default=4, show_default=True,
              help='Number of zeros.')
@table_options
def list_zeros(x, count, fmt, output, order, rel_tol):
    """Zeros Phi_mu of the characteristic function and Gamma_mu."""
    config = common_config('zeros', fmt, output, order, rel_tol, x_values=(x,), count=count)
    return run(config)
