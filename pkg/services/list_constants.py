import math

from flask import Blueprint

from scaling.casimir import find_rho0
from scaling.sigma import psi_strip
from scaling.strip import theta_oo
from scaling.thermo_constants import corner_constant, surface_critical_value
from scaling.weights import weight_v_special_xneg1
from utils.commands import common_config, register_builder, run, table_options
from utils.specialfn import catalan_constant
from utils.tables import FunctionTable

list_constants_bp = Blueprint('constants', __name__, cli_group=None)


@register_builder('constants')
def build_constants_table(config):
    spec = config.quadrature()
    rows = [
        ('catalan', catalan_constant()),
        ('z_critical', math.sqrt(2.0) - 1.0),
        ('theta_strip_0', theta_oo(0.0, spec)),
        ('psi_0_1', psi_strip(0.0, 1.0, config.order, spec)),
        ('v1_x_neg1', weight_v_special_xneg1(spec)),
        ('rho0', find_rho0()),
        ('corner_constant', corner_constant()),
        ('surface_critical', surface_critical_value()),
    ]
    return FunctionTable(columns=['name', 'value'], rows=[list(row) for row in rows])


@list_constants_bp.cli.command('constants')
@table_options
def list_constants(fmt, output, order, rel_tol):
    """Named constants of the scaling functions."""
    return run(common_config('constants', fmt, output, order, rel_tol))
