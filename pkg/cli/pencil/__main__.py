from __future__ import annotations

import argparse
from typing import Iterable, Optional

from cli.utils import RichLogger, execute


logger = RichLogger()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppl pencil",
        description="Print a builtin or file pencil with its exactness and kernel reports.",
    )
    parser.add_argument(
        "-p",
        "--pencil",
        required=True,
        help="Builtin name (kdv, so5, sl3-frac, camassa-holm, scalar[:c=...]) or a JSON file.",
    )
    parser.add_argument("--emit", choices=("json", "latex", "text"), default="json")
    parser.add_argument("--samples", type=int, help="Kernel-intersection sample points.")
    parser.add_argument("--seed", type=int, help="Seed of the sample-point generator.")
    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    code, _ = execute(
        logger,
        command="pencil",
        target=args.pencil,
        emit=args.emit,
        samples=args.samples,
        seed=args.seed,
    )
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
