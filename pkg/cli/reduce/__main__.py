from __future__ import annotations

import argparse
from typing import Iterable, Optional

from cli.utils import RichLogger, execute


logger = RichLogger()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppl reduce",
        description="Dirac reduction P' = A - B D^-1 C on a gauge slice.",
    )
    parser.add_argument("-p", "--pencil", required=True, help="Builtin name or JSON pencil file.")
    parser.add_argument(
        "-g",
        "--gauge",
        help="JSON gauge file {\"retained\": [...], \"fixed\": {...}} overriding the default.",
    )
    parser.add_argument(
        "--max-order",
        dest="max_order",
        type=int,
        help="Bound on the Neumann series of the D-block inverse.",
    )
    parser.add_argument("--emit", choices=("json", "latex", "text"), default="json")
    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    code, _ = execute(
        logger,
        command="reduce",
        target=args.pencil,
        gauge=args.gauge,
        max_order=args.max_order,
        emit=args.emit,
    )
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
