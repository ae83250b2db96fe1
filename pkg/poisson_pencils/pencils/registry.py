"""
Registry of the builtin pencils together with their gauge slices.
"""

from typing import Callable, Dict, Tuple

from ..core.constants import Constants
from ..core.exceptions import NotFoundError, ValidationError
from ..diffring import parse_diffpoly
from .builders import (
    ch_pencil,
    gds_sl3_pencil,
    kdv_pencil,
    scalar_deformation_pencil,
    so5_pencil,
)
from .instance import GaugeSpec, PencilInstance

Builtin = Tuple[PencilInstance, GaugeSpec]


def _kdv() -> Builtin:
    return kdv_pencil(), GaugeSpec.create([0], {1: 0, 2: 1})


def _so5() -> Builtin:
    return so5_pencil(), GaugeSpec.create([0, 1], {k: 0 for k in range(2, 10)})


def _sl3() -> Builtin:
    return gds_sl3_pencil(), GaugeSpec.create([0, 1, 2, 3], {k: 0 for k in range(4, 8)})


def _camassa_holm() -> Builtin:
    return ch_pencil(), GaugeSpec.create([0], {1: 0, 2: 0})


def _scalar(c: str = "1") -> Builtin:
    try:
        coefficient = parse_diffpoly(c, ["u"])
    except ValidationError as exc:
        raise ValidationError(f"invalid scalar deformation c={c!r}: {exc.message}") from exc
    name = "scalar" if c == "1" else f"scalar:c={c}"
    return scalar_deformation_pencil(coefficient, name=name), GaugeSpec.identity(1)


_BUILDERS: Dict[str, Callable[[], Builtin]] = {
    "kdv": _kdv,
    "so5": _so5,
    "sl3-frac": _sl3,
    "camassa-holm": _camassa_holm,
    "scalar": _scalar,
}


def builtin_names() -> Tuple[str, ...]:
    return Constants.BUILTIN_PENCILS


def builtin(name: str) -> Builtin:
    """
    Returns a builtin pencil and its gauge.

    The scalar family takes its deformation function inline: ``scalar:c=u^2+1``.
    """
    key, _, argument = name.strip().partition(":")
    if key == "scalar" and argument:
        label, _, value = argument.partition("=")
        if label.strip() != "c" or not value.strip():
            raise ValidationError(f"expected scalar:c=<expression>, got {name!r}")
        return _scalar(value.strip())
    if key not in _BUILDERS or argument:
        raise NotFoundError(
            f"unknown builtin pencil {name!r}; valid names: {', '.join(builtin_names())}",
            details={"valid": list(builtin_names())},
        )
    return _BUILDERS[key]()


def is_builtin(name: str) -> bool:
    return name.strip().partition(":")[0] in _BUILDERS
