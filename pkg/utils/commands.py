from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import wraps
import sys

import click
import numpy as np
from flask import current_app

from config import VERSION
from utils.errors import (
    EXIT_INVALID,
    EXIT_NONCONVERGENCE,
    EXIT_OK,
    ConvergenceError,
    DomainError,
)
from utils.quad import QuadratureSpec
from utils.tables import FORMATS, emit_table

COMMANDS = (
    "zeros",
    "weights",
    "sigma",
    "theta-table",
    "vartheta-table",
    "critical",
    "constants",
    "rho0",
    "effspin-check",
)

# command name -> callable(RunConfig) -> FunctionTable
TABLE_BUILDERS = {}


@dataclass(frozen=True)
class RunConfig:
    command: str
    x_values: tuple = ()
    rho_values: tuple = ()
    order: int = 8
    modes: int = 16
    rel_tol: float = 1e-12
    fmt: str = "csv"
    output: str = None
    count: int = 4
    spins: int = 8
    coefficients: int = 0
    threads: int = 1
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise DomainError(f"format must be one of {', '.join(FORMATS)}, got {self.fmt!r}")
        if self.order < 1 or self.modes < 1 or self.count < 1 or self.spins < 1:
            raise DomainError("order, modes, count and spins must be >= 1")
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.threads < 1:
            raise DomainError(f"threads must be >= 1, got {self.threads}")

    def quadrature(self):
        """QuadratureSpec carrying the requested relative tolerance."""
        return QuadratureSpec(rel_tol=self.rel_tol)

    def echo(self):
        """Config as it appears in JSON meta; keys sorted for byte-stable output."""
        values = {
            "command": self.command,
            "x_values": list(self.x_values),
            "rho_values": list(self.rho_values),
            "order": self.order,
            "modes": self.modes,
            "rel_tol": self.rel_tol,
            "count": self.count,
            "spins": self.spins,
            "coefficients": self.coefficients,
        }
        values.update(self.extra)
        return dict(sorted(values.items()))


def register_builder(command):
    """Decorator registering the table builder for ``command``."""
    def decorator(f):
        TABLE_BUILDERS[command] = f
        return f
    return decorator


def x_grid(x_min, x_max, steps):
    """``steps`` evenly spaced points on [x_min, x_max]; exact zero where the grid crosses it."""
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    if x_max < x_min:
        raise DomainError(f"empty range [{x_min}, {x_max}]")
    if steps == 1:
        return (float(x_min),)
    grid = np.linspace(x_min, x_max, steps)
    spacing = (x_max - x_min) / (steps - 1)
    grid[np.abs(grid) < 1e-9 * spacing] = 0.0
    return tuple(float(x) for x in grid)


def ordered_map(func, items, threads):
    """func over items on a worker pool; results keep the order of items."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def _write(table, config, sink):
    if isinstance(table, str):
        sink.write(table + "\n")
        return
    table.meta = {"tool": "casimir-rect", "version": VERSION, "config": config.echo()}
    emit_table(table, config.fmt, sink)


def run(config):
    """Build and write the table for ``config``; returns the process exit code."""
    logger = current_app.logger
    builder = TABLE_BUILDERS.get(config.command)
    if builder is None:
        logger.error(f"No table builder registered for {config.command}")
        return EXIT_INVALID
    try:
        table = builder(config)
        if config.output:
            with open(config.output, "w", newline="") as sink:
                _write(table, config, sink)
        else:
            _write(table, config, sys.stdout)
            sys.stdout.flush()
    except ConvergenceError as e:
        logger.error(f"Numerical non-convergence in {config.command}: {e}")
        return EXIT_NONCONVERGENCE
    except ArithmeticError as e:
        logger.error(f"Floating-point failure in {config.command}: {e}")
        return EXIT_NONCONVERGENCE
    except (DomainError, ValueError) as e:
        logger.error(f"Invalid arguments for {config.command}: {e}")
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"Cannot write output: {e}")
        return EXIT_INVALID
    return EXIT_OK


def table_options(f):
    """Decorator adding the options every table command shares."""
    @click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv",
                  show_default=True, help="Output format.")
    @click.option("--output", type=click.Path(dir_okay=False), default=None,
                  help="Write to this file instead of standard output.")
    @click.option("--order", type=click.IntRange(min=1), default=None,
                  help="Series order N (default from configuration).")
    @click.option("--rel-tol", type=float, default=None,
                  help="Quadrature relative tolerance (default from configuration).")
    @wraps(f)
    def decorated(*args, **kwargs):
        config = current_app.config
        if kwargs.get("order") is None:
            kwargs["order"] = config["DEFAULT_ORDER"]
        if kwargs.get("rel_tol") is None:
            kwargs["rel_tol"] = config["DEFAULT_REL_TOL"]
        return f(*args, **kwargs)

    return decorated


def common_config(command, fmt, output, order, rel_tol, **fields):
    """RunConfig from the shared options plus command-specific fields."""
    try:
        return RunConfig(
            command=command,
            fmt=fmt,
            output=output,
            order=order,
            rel_tol=rel_tol,
            threads=current_app.config["THREADS"],
            **fields,
        )
    except DomainError as e:
        raise click.UsageError(str(e)) from e
