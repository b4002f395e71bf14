import logging
import sys

import click
from flask import Flask
from flask.cli import FlaskGroup

import config
from utils.errors import EXIT_INVALID, EXIT_NONCONVERGENCE, EXIT_OK, ConvergenceError, DomainError

# Import all command blueprints
from services.list_zeros import list_zeros_bp
from services.list_weights import list_weights_bp
from services.evaluate_sigma import evaluate_sigma_bp
from services.theta_table import theta_table_bp
from services.vartheta_table import vartheta_table_bp
from services.critical_values import critical_values_bp
from services.list_constants import list_constants_bp
from services.find_rho0 import find_rho0_bp
from services.check_effspin import check_effspin_bp

BLUEPRINTS = (
    list_zeros_bp,
    list_weights_bp,
    evaluate_sigma_bp,
    theta_table_bp,
    vartheta_table_bp,
    critical_values_bp,
    list_constants_bp,
    find_rho0_bp,
    check_effspin_bp,
)


def create_app():
    app = Flask(__name__)
    app.config.from_object(config)
    for blueprint in BLUEPRINTS:
        app.register_blueprint(blueprint)
    return app


cli = FlaskGroup(
    name="casimir-rect",
    help="Tables of the Casimir scaling functions of the critical Ising rectangle.",
    create_app=create_app,
    add_default_commands=False,
    add_version_option=False,
    load_dotenv=False,
)


def main(argv=None):
    """Run one command; returns the exit code instead of exiting."""
    logging.basicConfig(
        level=config.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        result = cli.main(args=argv, prog_name="casimir-rect", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_INVALID
    except click.Abort:
        return EXIT_INVALID
    except ConvergenceError as e:
        logging.getLogger(__name__).error(f"Numerical non-convergence: {e}")
        return EXIT_NONCONVERGENCE
    except DomainError as e:
        logging.getLogger(__name__).error(f"Invalid arguments: {e}")
        return EXIT_INVALID
    except ArithmeticError as e:
        logging.getLogger(__name__).error(f"Floating-point failure: {e}")
        return EXIT_NONCONVERGENCE
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
