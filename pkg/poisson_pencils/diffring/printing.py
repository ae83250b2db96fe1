"""
Text and LaTeX rendering of differential polynomials and operators.

The text form is the one accepted by ``parsing``: ``-1/2*eps^2*u_xx*D^3``.
"""

import re
from fractions import Fraction
from typing import List, Optional, Sequence

from ..core.constants import Constants
from .poly import DiffPoly, Monomial

_NAME_REGEX = re.compile(r"^(?P<stem>[A-Za-z]+)(?P<index>\d+)$")


def default_names(count: int) -> List[str]:
    return [f"w{i + 1}" for i in range(count)]


def _name(names: Optional[Sequence[str]], field: int) -> str:
    if names is not None and field < len(names):
        return names[field]
    return f"w{field + 1}"


def derivative_suffix(order: int) -> str:
    if order == 0:
        return ""
    if order <= Constants.SPELLED_DERIVATIVES:
        return "_" + "x" * order
    return f"_x{order}"


def _latex_name(name: str, order: int) -> str:
    match = _NAME_REGEX.match(name)
    subscript = "x" * order if order <= Constants.SPELLED_DERIVATIVES else f"x^{{{order}}}"
    if match and match.group("stem") == "w":
        base = f"w^{{{match.group('index')}}}"
        return f"{base}_{{{subscript}}}" if order else base
    if match:
        index = match.group("index")
        stem = match.group("stem")
        return f"{stem}_{{{index}{',' + subscript if order else ''}}}"
    return f"{name}_{{{subscript}}}" if order else name


def _monomial_factors(monomial: Monomial, names, latex: bool) -> List[str]:
    variables, eps, lam = monomial
    factors: List[str] = []
    if eps:
        if latex:
            factors.append(r"\epsilon" + (f"^{{{eps}}}" if eps != 1 else ""))
        else:
            factors.append(Constants.EPSILON_NAME + (f"^{eps}" if eps != 1 else ""))
    for field, order, exponent in variables:
        name = _name(names, field)
        if latex:
            base = _latex_name(name, order)
            factors.append(f"({base})^{{{exponent}}}" if exponent != 1 else base)
        else:
            base = name + derivative_suffix(order)
            factors.append(f"{base}^{exponent}" if exponent != 1 else base)
    if lam:
        symbol = r"\lambda" if latex else Constants.LAMBDA_NAME
        factors.append(symbol + ((f"^{{{lam}}}" if latex else f"^{lam}") if lam != 1 else ""))
    return factors


def _format_coefficient(value: Fraction, latex: bool) -> str:
    if latex and value.denominator != 1:
        return rf"\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"
    return str(abs(value))


def _term(value: Fraction, factors: List[str], latex: bool) -> str:
    joiner = " " if latex else "*"
    if not factors:
        return _format_coefficient(value, latex)
    if abs(value) == 1:
        return joiner.join(factors)
    return _format_coefficient(value, latex) + joiner + joiner.join(factors)


def format_diffpoly(
    poly: DiffPoly, names: Optional[Sequence[str]] = None, latex: bool = False
) -> str:
    if poly.is_zero:
        return "0"
    parts: List[str] = []
    for monomial, value in poly:
        term = _term(value, _monomial_factors(monomial, names, latex), latex)
        sign = "-" if value < 0 else "+"
        if not parts:
            parts.append(term if sign == "+" else f"-{term}")
        else:
            parts.append(f"{sign} {term}")
    return " ".join(parts)


def _derivation(order: int, latex: bool) -> str:
    if latex:
        return r"\partial_x" + (f"^{{{order}}}" if order != 1 else "")
    return Constants.DERIVATION_NAME + (f"^{order}" if order != 1 else "")


def format_diffop(op, names: Optional[Sequence[str]] = None, latex: bool = False) -> str:
    if op.is_zero:
        return "0"
    joiner = " " if latex else "*"
    left, right = (r"\left(", r"\right)") if latex else ("(", ")")
    signed: List[tuple] = []
    for order, coefficient in sorted(op.coeffs.items(), reverse=True):
        if order == 0:
            for monomial, value in coefficient:
                body = _term(value, _monomial_factors(monomial, names, latex), latex)
                signed.append((value < 0, body))
        elif len(coefficient) == 1:
            ((monomial, value),) = coefficient.terms.items()
            factors = _monomial_factors(monomial, names, latex) + [_derivation(order, latex)]
            signed.append((value < 0, _term(value, factors, latex)))
        else:
            body = format_diffpoly(coefficient, names, latex)
            signed.append((False, f"{left}{body}{right}{joiner}{_derivation(order, latex)}"))

    parts: List[str] = []
    for negative, body in signed:
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"{'-' if negative else '+'} {body}")
    return " ".join(parts)


def format_matrix(matrix, names: Optional[Sequence[str]] = None, latex: bool = False) -> str:
    if latex:
        rows = [
            " & ".join(format_diffop(entry, names, latex=True) for entry in row)
            for row in matrix.entries
        ]
        return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"
    rows = ["[" + ", ".join(format_diffop(entry, names) for entry in row) + "]" for row in matrix.entries]
    return "[" + ", ".join(rows) + "]"
