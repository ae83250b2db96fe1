from __future__ import annotations

import argparse
from typing import Iterable, Optional

from cli.utils import RichLogger, execute


logger = RichLogger()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppl algebra",
        description="Structure constants, invariant form, Coxeter numbers and leaf dimension of A_n, B_n, C_n, D_n.",
    )
    parser.add_argument("descriptor", help="Series and rank, e.g. A2, B3, C4, D5.")
    parser.add_argument(
        "--emit",
        choices=("json", "latex", "text"),
        default="json",
        help="Output format (default: json).",
    )
    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    code, _ = execute(logger, command="algebra", target=args.descriptor, emit=args.emit)
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
