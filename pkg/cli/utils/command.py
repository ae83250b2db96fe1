from __future__ import annotations

import argparse
import sys

from pydantic import ValidationError as ConfigError

from poisson_pencils.services import RunConfig, RunResult, run
from .logger import RichLogger


def add_numeric_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--order", type=int, help="Even order of the root expansions.")
    parser.add_argument("--samples", type=int, help="Number of sample points.")
    parser.add_argument("--seed", type=int, help="Seed of the sample-point generator.")
    parser.add_argument("--tol", type=float, help="Constancy tolerance.")
    parser.add_argument("--max-order", dest="max_order", type=int, help="Neumann series bound.")


def build_config(logger: RichLogger, **values) -> RunConfig | None:
    try:
        return RunConfig(**{k: v for k, v in values.items() if v is not None})
    except ConfigError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "config"
        logger.error(f"Invalid option {location}: {first['msg']}")
        return None


def execute(logger: RichLogger, **values) -> tuple[int, RunResult | None]:
    """Runs a command and writes its report; machine-readable output stays undecorated."""
    config = build_config(logger, **values)
    if config is None:
        return 2, None
    result = run(config)
    if result.error:
        logger.error(result.error)
        return result.exit_code, result
    if result.output and not (config.command == "verify" and config.emit != "json"):
        sys.stdout.write(result.output if result.output.endswith("\n") else result.output + "\n")
    return result.exit_code, result
