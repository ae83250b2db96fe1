"""
Parsing of differential polynomials and operators from their text form.

Jet variables are written ``u``, ``u_x``, ``u_xx``, ``u_xxx``, ``u_x4``, ...;
``eps``, ``lam`` and ``D`` stand for the deformation parameter, the pencil
parameter and the x-derivation. Operators are read in normal order ``a*D^m``.
"""

from tokenize import TokenError
from typing import Dict, List, Sequence, Tuple

from sympy import Add, Expr, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from ..core.constants import Constants
from ..core.exceptions import ValidationError
from .bridge import EPS, LAM, from_sympy
from .operator import DiffOp, MatDiffOp
from .poly import DiffPoly
from .printing import derivative_suffix

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_D = Symbol(Constants.DERIVATION_NAME)


def _jet_table(names: Sequence[str]) -> Dict[str, Tuple[Symbol, Tuple[int, int]]]:
    table = {}
    for field, name in enumerate(names):
        for order in range(Constants.MAX_PARSED_DERIVATIVE + 1):
            token = name + derivative_suffix(order)
            table[token] = (Symbol(token), (field, order))
    return table


def _parse(text: str, names: Sequence[str], allow_derivation: bool) -> Tuple[Expr, dict]:
    table = _jet_table(names)
    reserved = {Constants.EPSILON_NAME, Constants.LAMBDA_NAME, Constants.DERIVATION_NAME}
    clash = reserved.intersection(names)
    if clash:
        raise ValidationError(f"field names clash with reserved names: {sorted(clash)}")
    local_dict = {token: symbol for token, (symbol, _) in table.items()}
    local_dict[Constants.EPSILON_NAME] = EPS
    local_dict[Constants.LAMBDA_NAME] = LAM
    local_dict[Constants.DERIVATION_NAME] = _D
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    except (SympifyError, SyntaxError, TypeError, TokenError) as exc:
        raise ValidationError(f"cannot parse '{text}'", details=str(exc)) from exc
    known = set(local_dict.values())
    unknown = sorted(str(s) for s in expr.free_symbols if s not in known)
    if unknown:
        raise ValidationError(f"unknown names in '{text}': {', '.join(unknown)}")
    if not allow_derivation and _D in expr.free_symbols:
        raise ValidationError(f"derivation not allowed in a coefficient: '{text}'")
    return expr.expand(), {symbol: key for symbol, key in table.values()}


def parse_diffpoly(text: str, names: Sequence[str]) -> DiffPoly:
    expr, symbols = _parse(str(text), names, allow_derivation=False)
    try:
        return from_sympy(expr, symbols)
    except ValueError as exc:
        raise ValidationError(f"not a differential polynomial: '{text}'", details=str(exc)) from exc


def parse_operator(text: str, names: Sequence[str]) -> DiffOp:
    expr, symbols = _parse(str(text), names, allow_derivation=True)
    by_order: Dict[int, List[Expr]] = {}
    for term in Add.make_args(expr):
        if term == 0:
            continue
        coefficient, order = term.as_coeff_exponent(_D)
        if not order.is_Integer or order < 0 or _D in coefficient.free_symbols:
            raise ValidationError(f"bad power of {Constants.DERIVATION_NAME} in '{text}'")
        by_order.setdefault(int(order), []).append(coefficient)
    coeffs = {}
    for order, terms in by_order.items():
        try:
            coeffs[order] = from_sympy(Add(*terms), symbols)
        except ValueError as exc:
            raise ValidationError(f"not a differential operator: '{text}'", details=str(exc)) from exc
    return DiffOp(coeffs)


def parse_matrix(rows: Sequence[Sequence[str]], names: Sequence[str]) -> MatDiffOp:
    if not rows or any(len(row) != len(rows) for row in rows):
        raise ValidationError("operator matrix must be square and nonempty")
    return MatDiffOp([[parse_operator(entry, names) for entry in row] for row in rows])
