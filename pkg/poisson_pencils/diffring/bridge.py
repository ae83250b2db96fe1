"""
Conversion between DiffPoly and sympy expressions.

Jet variables map to symbols named ``w{i}_{s}``; the pencil parameter and the
deformation parameter map to ``lam`` and ``eps``.
"""

from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from sympy import Add, Expr, Integer, Rational, Symbol, expand

from ..core.constants import Constants
from ..core.utils import to_fraction
from .poly import DiffPoly, Monomial

LAM = Symbol(Constants.LAMBDA_NAME)
EPS = Symbol(Constants.EPSILON_NAME)


def jet_symbol(field: int, order: int = 0) -> Symbol:
    return Symbol(f"w{field}_{order}")


def to_sympy(
    poly: DiffPoly,
    symbols: Optional[Mapping[Tuple[int, int], Symbol]] = None,
    lam: Symbol = LAM,
    eps: Optional[Symbol] = EPS,
) -> Expr:
    """Expression of poly; with ``eps=None`` the deformation parameter is set to 1."""
    total = []
    for (variables, e, l), coefficient in poly.terms.items():
        term: Expr = Rational(coefficient.numerator, coefficient.denominator)
        for field, order, exponent in variables:
            symbol = symbols[(field, order)] if symbols else jet_symbol(field, order)
            term = term * symbol**exponent
        if l:
            term = term * lam**l
        if e and eps is not None:
            term = term * eps**e
        total.append(term)
    return Add(*total) if total else Integer(0)


def from_sympy(
    expr: Expr,
    symbols: Mapping[Symbol, Tuple[int, int]],
    lam: Symbol = LAM,
    eps: Symbol = EPS,
) -> DiffPoly:
    """
    Inverse of ``to_sympy`` for polynomial expressions in the given jet symbols.

    Raises ValueError on unknown symbols or non-polynomial terms.
    """
    terms: Dict[Monomial, Fraction] = {}
    for term in Add.make_args(expand(expr)):
        if term == 0:
            continue
        coefficient, rest = term.as_coeff_Mul()
        if not coefficient.is_Rational:
            raise ValueError(f"non-rational coefficient in {term}")
        powers: Dict[Tuple[int, int], int] = {}
        e = l = 0
        for base, exponent in rest.as_powers_dict().items():
            if base == 1:
                continue
            if not exponent.is_Integer:
                raise ValueError(f"non-integer power in {term}")
            exponent = int(exponent)
            if base == lam:
                l += exponent
            elif base == eps:
                e += exponent
            elif base in symbols:
                powers[symbols[base]] = powers.get(symbols[base], 0) + exponent
            else:
                raise ValueError(f"unknown symbol {base} in {term}")
            if base != eps and exponent < 0:
                raise ValueError(f"negative power of {base} in {term}")
        variables = tuple((f, s, x) for (f, s), x in sorted(powers.items()) if x)
        monomial = (variables, e, l)
        terms[monomial] = terms.get(monomial, Fraction(0)) + to_fraction(coefficient)
    return DiffPoly(terms)
