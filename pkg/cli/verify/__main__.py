from __future__ import annotations

import argparse
from typing import Iterable, Optional

from cli.utils import RichLogger, execute
from poisson_pencils.core.constants import Constants


logger = RichLogger()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppl verify",
        description="Run verification suites; exit 1 when any check fails.",
    )
    parser.add_argument(
        "-s",
        "--suite",
        default="all",
        choices=("all",) + Constants.VERIFY_SUITES,
        help="Suite to run (default: all).",
    )
    parser.add_argument("--ranks", type=int, help="Largest rank of the Coxeter-table sweep (default: 6).")
    parser.add_argument("--samples", type=int, help="Number of sample points.")
    parser.add_argument("--seed", type=int, help="Seed of the sample-point generator.")
    parser.add_argument("--tol", type=float, help="Constancy tolerance.")
    parser.add_argument(
        "--emit",
        choices=("json", "text"),
        default="text",
        help="json prints the report document; text prints a table (default).",
    )
    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    code, result = execute(
        logger,
        command="verify",
        target=args.suite,
        emit=args.emit,
        ranks=args.ranks,
        samples=args.samples,
        seed=args.seed,
        tol=args.tol,
    )
    if result is None or result.document is None or args.emit == "json":
        return code

    rows = [
        (suite.name, check.name, check.ok, check.detail)
        for suite in result.document.suites
        for check in suite.checks
    ]
    logger.table("Verification", rows)
    if code == 0:
        logger.success("All checks passed.")
    else:
        failed = sorted({suite.name for suite in result.document.suites if not suite.ok})
        logger.error(f"Failed suites: {', '.join(failed)}")
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
