from __future__ import annotations

import argparse
import importlib
import importlib.metadata
import logging
import pkgutil
import sys
from pathlib import Path
from typing import Dict, List

from rich.console import Console
from rich.logging import RichHandler

from poisson_pencils.core.config import settings

from .utils import RichLogger


CLI_PACKAGE = "cli"
COMMANDS_PATH = Path(__file__).resolve().parent
COMMAND_IGNORES = {"__main__", "utils", "__pycache__"}
LIBRARY_LOGGER = settings.app.name

console = RichLogger()


def _discover_commands() -> List[Dict[str, str]]:
    """
    Subcommand packages under cli/ with their descriptions.
    """

    commands: List[Dict[str, str]] = []
    for module_info in pkgutil.iter_modules([str(COMMANDS_PATH)]):
        if module_info.name.startswith("_") or module_info.name in COMMAND_IGNORES:
            continue
        commands.append(
            {"name": module_info.name, "description": _command_description(module_info.name)}
        )
    return sorted(commands, key=lambda item: item["name"])


def _command_description(command: str) -> str:
    try:
        module = importlib.import_module(f"{CLI_PACKAGE}.{command}")
    except Exception:
        return ""
    return getattr(module, "CLI_DESCRIPTION", None) or (module.__doc__ or "").strip()


def _load_command(command: str):
    module = importlib.import_module(f"{CLI_PACKAGE}.{command}")
    if not hasattr(module, "main"):
        raise SystemExit(f"Module '{CLI_PACKAGE}.{command}' is missing a main(argv) function.")
    return module.main


def _print_command_list(commands: List[Dict[str, str]]) -> None:
    width = max((len(cmd["name"]) for cmd in commands), default=0)
    console.info("[bold]Available commands:[/]")
    console.steps(f"{cmd['name'].ljust(width)}  {cmd['description']}" for cmd in commands)
    console.info("\nExample: ppl invariants --pencil kdv --emit text")


def _resolve_version() -> str:
    try:
        return importlib.metadata.version("poisson-pencils")
    except importlib.metadata.PackageNotFoundError:
        return "local-development"


def _configure_logging(verbosity: int) -> None:
    """Library diagnostics go to stderr so report output stays parseable."""
    if verbosity <= 0:
        return
    library = logging.getLogger(LIBRARY_LOGGER)
    library.setLevel(logging.DEBUG if verbosity > 1 else logging.INFO)
    if not any(isinstance(handler, RichHandler) for handler in library.handlers):
        handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
        library.addHandler(handler)


def main(argv: List[str] | None = None) -> int:
    args_list = list(argv) if argv is not None else sys.argv[1:]
    commands = _discover_commands()
    command_names = {cmd["name"] for cmd in commands}

    parser = argparse.ArgumentParser(
        prog="ppl",
        description="Poisson pencils on loop algebras: algebra, pencil, reduce, invariants, verify.",
    )
    parser.add_argument("command", nargs="?", help="Subcommand to execute (see --list).")
    parser.add_argument("command_args", nargs=argparse.REMAINDER, help=argparse.SUPPRESS)
    parser.add_argument("-l", "--list", action="store_true", help="List subcommands and exit.")
    parser.add_argument("-V", "--version", action="store_true", help="Show the package version.")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log library progress to stderr (-vv for debug detail).",
    )

    parsed = parser.parse_args(args_list)

    if parsed.version:
        print(_resolve_version())
        return 0

    if parsed.list or not parsed.command:
        _print_command_list(commands)
        return 0

    if parsed.command not in command_names:
        console.error(
            f"Unknown command '{parsed.command}'. Available: {', '.join(sorted(command_names))}"
        )
        return 2

    _configure_logging(parsed.verbose)
    remaining = parsed.command_args
    if remaining and remaining[0] == "--":
        remaining = remaining[1:]
    return _load_command(parsed.command)(remaining)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
