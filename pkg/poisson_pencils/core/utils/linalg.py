"""
Exact linear algebra over the rationals, delegated to sympy's DomainMatrix.

Vectors and matrices enter and leave as lists of Fractions so callers never
touch the domain element types.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .rationals import to_fraction

Vector = Tuple[Fraction, ...]
Rows = Sequence[Sequence[Fraction]]


def to_domain_matrix(rows: Rows, ncols: int | None = None) -> DomainMatrix:
    nrows = len(rows)
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    data = [
        [QQ(int(to_fraction(x).numerator), int(to_fraction(x).denominator)) for x in row]
        for row in rows
    ]
    return DomainMatrix(data, (nrows, width), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> List[List[Fraction]]:
    return [[to_fraction(x) for x in row] for row in matrix.to_list()]


def nullspace(rows: Rows, ncols: int) -> List[Vector]:
    """Basis of {x : M x = 0}; the empty matrix has the whole space as kernel."""
    if not rows:
        return [
            tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)
        ]
    kernel = to_domain_matrix(rows, ncols).nullspace()
    return [tuple(row) for row in from_domain_matrix(kernel) if any(row)]


def rank(rows: Rows, ncols: int | None = None) -> int:
    if not rows:
        return 0
    return int(to_domain_matrix(rows, ncols).rank())


def inverse(rows: Rows) -> List[List[Fraction]]:
    """Inverse of a square rational matrix; raises ZeroDivisionError when singular."""
    matrix = to_domain_matrix(rows)
    if matrix.rank() < len(rows):
        raise ZeroDivisionError("matrix is singular")
    return from_domain_matrix(matrix.inv())


def pivot_columns(rows: Rows, ncols: int) -> Tuple[int, ...]:
    _, pivots = to_domain_matrix(rows, ncols).rref()
    return tuple(pivots)


def mat_vec(rows: Rows, vector: Sequence[Fraction]) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in rows)


def transpose(rows: Rows) -> List[List[Fraction]]:
    return [list(col) for col in zip(*rows)]
