from __future__ import annotations

import argparse
from typing import Iterable, Optional

from cli.utils import RichLogger, add_numeric_arguments, execute


logger = RichLogger()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppl invariants",
        description="Central invariants c_i = lam^i_2 / (3 f^i) at seeded sample points.",
    )
    parser.add_argument("-p", "--pencil", required=True, help="Builtin name or JSON pencil file.")
    parser.add_argument("--emit", choices=("json", "latex", "text"), default="json")
    add_numeric_arguments(parser)
    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    code, _ = execute(
        logger,
        command="invariants",
        target=args.pencil,
        emit=args.emit,
        order=args.order,
        samples=args.samples,
        seed=args.seed,
        tol=args.tol,
        max_order=args.max_order,
    )
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
