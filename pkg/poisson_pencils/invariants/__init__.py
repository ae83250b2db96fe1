from .central import (
    CanonicalCoordinate,
    CanonicalData,
    CentralInvariantReport,
    CentralRecord,
    PointRecord,
    canonical_data,
    central_invariants,
    ds_predicted_ci,
)
from .hydro import HydroData, hydro_limit
from .roots import RootExpansion, RootSeries, lambda_roots
from .scaling import (
    EigenScalingReport,
    ScalingSample,
    ad_spectrum,
    cyclic_element,
    eigen_scaling_check,
    hausdorff,
)
from .symbols import (
    P,
    CharPoly,
    CharPolyRatio,
    MiuraSymbolReport,
    SymbolMatrix,
    char_poly,
    charpoly_ratio,
    exact_ratio,
    field_symbols,
    lambda_degree_check,
    leaf_char_poly,
    miura_symbol_check,
    polynomial_det,
    symbol,
)

__all__ = [
    "CanonicalCoordinate",
    "CanonicalData",
    "CentralInvariantReport",
    "CentralRecord",
    "PointRecord",
    "canonical_data",
    "central_invariants",
    "ds_predicted_ci",
    "HydroData",
    "hydro_limit",
    "RootExpansion",
    "RootSeries",
    "lambda_roots",
    "EigenScalingReport",
    "ScalingSample",
    "ad_spectrum",
    "cyclic_element",
    "eigen_scaling_check",
    "hausdorff",
    "P",
    "CharPoly",
    "CharPolyRatio",
    "MiuraSymbolReport",
    "SymbolMatrix",
    "char_poly",
    "charpoly_ratio",
    "exact_ratio",
    "field_symbols",
    "lambda_degree_check",
    "leaf_char_poly",
    "miura_symbol_check",
    "polynomial_det",
    "symbol",
]
