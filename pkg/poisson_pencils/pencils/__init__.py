from .builders import (
    ch_pencil,
    chart_operator,
    chart_pencil,
    ds_pencil,
    gds_sl3_pencil,
    kdv_pencil,
    scalar_deformation_pencil,
    sl3_fractional_chart,
    so5_chart,
    so5_pencil,
)
from .exactness import ExactnessReport, check_exact
from .instance import Chart, GaugeSpec, PencilInstance
from .registry import builtin, builtin_names, is_builtin

__all__ = [
    "ch_pencil",
    "chart_operator",
    "chart_pencil",
    "ds_pencil",
    "gds_sl3_pencil",
    "kdv_pencil",
    "scalar_deformation_pencil",
    "sl3_fractional_chart",
    "so5_chart",
    "so5_pencil",
    "ExactnessReport",
    "check_exact",
    "Chart",
    "GaugeSpec",
    "PencilInstance",
    "builtin",
    "builtin_names",
    "is_builtin",
]
