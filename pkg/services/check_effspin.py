import click
from flask import Blueprint

from scaling.effspin import MAX_SPINS, build_model, enumerate_partition, magnetization, subset_series
from scaling.sigma import psi_strip
from utils.commands import common_config, register_builder, run, table_options
from utils.tables import FunctionTable

check_effspin_bp = Blueprint('effspin_check', __name__, cli_group=None)


@register_builder('effspin-check')
def build_effspin_table(config):
    x = config.x_values[0]
    rho = config.rho_values[0]
    table = FunctionTable(columns=['n', 'z_eff', 'z_series', 'magnetization', 'psi'])
    spec = config.quadrature()
    psi = psi_strip(x, rho, config.order, spec)
    for n in range(2, config.spins + 1, 2):
        model = build_model(x, n, spec)
        table.append([
            n,
            enumerate_partition(model, rho),
            subset_series(x, rho, n, spec),
            magnetization(model, rho),
            psi,
        ])
    return table


@check_effspin_bp.cli.command('effspin-check')
@click.option('--x', 'x', type=float, required=True, help='Temperature scaling variable.')
@click.option('--rho', type=click.FloatRange(min=0, min_open=True), required=True)
@click.option('--spins', type=click.IntRange(min=2, max=MAX_SPINS), default=8, show_default=True)
@table_options
def check_effspin(x, rho, spins, fmt, output, order, rel_tol):
    """Effective spin model against the amplitude series."""
    config = common_config('effspin-check', fmt, output, order, rel_tol,
                           x_values=(x,), rho_values=(rho,), spins=spins)
    return run(config)
