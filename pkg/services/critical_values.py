import math

import click
from flask import Blueprint

from scaling.casimir import casimir_amplitude, vartheta_total
from scaling.sigma import critical_coefficients, psi_strip, rational_estimate, sigma_critical_closed, sigma_series
from utils.commands import common_config, register_builder, run, table_options
from utils.specialfn import eisenstein_E2
from utils.tables import FunctionTable

critical_values_bp = Blueprint('critical', __name__, cli_group=None)


def _coefficient_table(config):
    table = FunctionTable(columns=['n', 'coefficient', 'numerator', 'denominator'])
    for n, value in critical_coefficients(config.coefficients):
        fraction = rational_estimate(value)
        table.append([n, value, fraction.numerator, fraction.denominator])
    return table


@register_builder('critical')
def build_critical_table(config):
    if config.coefficients:
        return _coefficient_table(config)
    table = FunctionTable(columns=[
        'rho', 'sigma_series', 'sigma_closed', 'psi', 'psi_closed',
        'vartheta', 'vartheta_closed', 'casimir_amplitude',
    ])
    spec = config.quadrature()
    for rho in config.rho_values:
        e2 = eisenstein_E2(rho)
        table.append([
            rho,
            sigma_series(0.0, rho, config.order, spec).value,
            sigma_critical_closed(rho),
            psi_strip(0.0, rho, config.order, spec),
            math.pi / 48.0 * (e2 - 1.0),
            vartheta_total(0.0, rho, config.order, spec),
            math.pi / 48.0 * e2,
            casimir_amplitude(rho, config.order),
        ])
    return table


@critical_values_bp.cli.command('critical')
@click.option('--rho', 'rho_values', type=click.FloatRange(min=0, min_open=True),
              multiple=True, default=(1.0,), show_default=True,
              help='Aspect ratio (repeatable).')
@click.option('--coefficients', type=click.IntRange(min=0), default=0,
              help='Print the first N critical series coefficients instead.')
@table_options
def critical_values(rho_values, coefficients, fmt, output, order, rel_tol):
    """Critical-point values against their closed forms."""
    config = common_config('critical', fmt, output, order, rel_tol,
                           rho_values=rho_values, coefficients=coefficients)
    return run(config)
