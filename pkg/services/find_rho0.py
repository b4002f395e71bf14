from flask import Blueprint

from scaling.casimir import find_rho0
from utils.commands import common_config, register_builder, run, table_options
from utils.tables import FunctionTable

find_rho0_bp = Blueprint('rho0', __name__, cli_group=None)


@register_builder('rho0')
def build_rho0_output(config):
    rho0 = find_rho0()
    if config.fmt == 'csv':
        # a bare number, not a table
        return format(rho0, '.12g')
    return FunctionTable(columns=['rho0'], rows=[[rho0]])


@find_rho0_bp.cli.command('rho0')
@table_options
def find_rho0_command(fmt, output, order, rel_tol):
    """Aspect ratio where the critical Casimir force changes sign."""
    return run(common_config('rho0', fmt, output, order, rel_tol))
