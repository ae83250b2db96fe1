from .bridge import EPS, LAM, from_sympy, jet_symbol, to_sympy
from .calculus import (
    EvolutionaryField,
    GradingVerdict,
    frechet,
    grading_check,
    lie_derivative,
    op_adjoint,
    op_compose,
    prolong_apply,
    total_x_derivative,
)
from .miura import MiuraMap, MiuraResult, miura_apply
from .operator import DiffOp, MatDiffOp, adjoint, compose, constant_matrix, pencil
from .parsing import parse_diffpoly, parse_matrix, parse_operator
from .poly import DiffPoly, Monomial, differential_degree
from .printing import default_names, format_diffop, format_diffpoly, format_matrix

__all__ = [
    "EPS",
    "LAM",
    "from_sympy",
    "jet_symbol",
    "to_sympy",
    "EvolutionaryField",
    "GradingVerdict",
    "frechet",
    "grading_check",
    "lie_derivative",
    "op_adjoint",
    "op_compose",
    "prolong_apply",
    "total_x_derivative",
    "MiuraMap",
    "MiuraResult",
    "miura_apply",
    "DiffOp",
    "MatDiffOp",
    "adjoint",
    "compose",
    "constant_matrix",
    "pencil",
    "parse_diffpoly",
    "parse_matrix",
    "parse_operator",
    "DiffPoly",
    "Monomial",
    "differential_degree",
    "default_names",
    "format_diffop",
    "format_diffpoly",
    "format_matrix",
]
