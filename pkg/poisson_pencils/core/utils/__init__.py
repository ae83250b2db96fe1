from .linalg import (
    from_domain_matrix,
    inverse,
    mat_vec,
    nullspace,
    pivot_columns,
    rank,
    to_domain_matrix,
    transpose,
)
from .rationals import format_rational, to_fraction, to_sympy_rational
from .sampling import RationalSampler

__all__ = [
    "from_domain_matrix",
    "inverse",
    "mat_vec",
    "nullspace",
    "pivot_columns",
    "rank",
    "to_domain_matrix",
    "transpose",
    "format_rational",
    "to_fraction",
    "to_sympy_rational",
    "RationalSampler",
]
