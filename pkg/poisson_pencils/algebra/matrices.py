"""
Sparse rational matrices and the defining representations of the classical series.

A matrix is a dict {(row, col): Fraction} without zero entries. The orthogonal
and symplectic algebras are realized as {w : wS + S w^T = 0} for an
antidiagonal S whose signs fix the series.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

Position = Tuple[int, int]
SparseMatrix = Dict[Position, Fraction]


def unit(row: int, col: int, value: Fraction = Fraction(1)) -> SparseMatrix:
    return {(row, col): Fraction(value)}


def add(a: SparseMatrix, b: SparseMatrix, scale: Fraction = Fraction(1)) -> SparseMatrix:
    result = dict(a)
    for key, value in b.items():
        total = result.get(key, Fraction(0)) + scale * value
        if total:
            result[key] = total
        else:
            result.pop(key, None)
    return result


def scale(a: SparseMatrix, factor: Fraction) -> SparseMatrix:
    if not factor:
        return {}
    return {key: factor * value for key, value in a.items()}


def multiply(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
    for (row, col), value in b.items():
        by_row.setdefault(row, []).append((col, value))

    result: SparseMatrix = {}
    for (row, inner), value in a.items():
        for col, other in by_row.get(inner, ()):
            key = (row, col)
            total = result.get(key, Fraction(0)) + value * other
            if total:
                result[key] = total
            else:
                result.pop(key, None)
    return result


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return add(multiply(a, b), multiply(b, a), Fraction(-1))


def linear_combination(
    coefficients: Iterable[Fraction], matrices: Iterable[SparseMatrix]
) -> SparseMatrix:
    result: SparseMatrix = {}
    for coefficient, matrix in zip(coefficients, matrices):
        if coefficient:
            result = add(result, matrix, coefficient)
    return result


def to_dense(a: SparseMatrix, size: int) -> List[List[Fraction]]:
    dense = [[Fraction(0)] * size for _ in range(size)]
    for (row, col), value in a.items():
        dense[row][col] = value
    return dense


class ClassicalRealization:
    """
    Defining representation of one classical series.

    ``signs`` is None for sl(m); otherwise S = sum_a signs[a] e_{a, m-1-a}.
    """

    def __init__(self, series: str, rank: int):
        self.series = series
        self.rank = rank
        self.size, self.signs = self._signature(series, rank)

    @staticmethod
    def _signature(series: str, rank: int) -> Tuple[int, Optional[List[int]]]:
        if series == "A":
            return rank + 1, None
        if series == "B":
            size = 2 * rank + 1
            return size, [(-1) ** a for a in range(size)]
        if series == "C":
            size = 2 * rank
            return size, [1 if a < rank else -1 for a in range(size)]
        size = 2 * rank
        return size, [1] * size

    def mirror(self, index: int) -> int:
        return self.size - 1 - index

    @property
    def lower_is_positive(self) -> bool:
        return self.signs is not None

    def root_vector(self, row: int, col: int) -> Optional[Tuple[Position, SparseMatrix]]:
        """
        The algebra element with leading entry +1 at the lex-minimal position of
        the orbit of (row, col), or None when the orbit carries no element.
        """
        if self.signs is None:
            return (row, col), unit(row, col)

        partner = (self.mirror(col), self.mirror(row))
        leading = min((row, col), partner)
        other = partner if leading == (row, col) else (row, col)
        a, j = leading
        coefficient = Fraction(-self.signs[j], self.signs[a])
        element = add(unit(a, j), unit(*other), coefficient)
        if not element:
            return None
        if element.get(leading) != 1:
            element = scale(element, 1 / element[leading])
        return leading, element

    def cartan_functionals(self) -> List[List[int]]:
        """Diagonal elements used to read off roots as integer vectors."""
        if self.signs is None:
            return [
                [int(a == k) for a in range(self.size)] for k in range(self.size)
            ]
        return [
            [int(a == k) - int(a == self.mirror(k)) for a in range(self.size)]
            for k in range(self.rank)
        ]

    def root_of(self, position: Position) -> Tuple[int, ...]:
        row, col = position
        return tuple(d[row] - d[col] for d in self.cartan_functionals())

    def is_positive(self, position: Position) -> bool:
        row, col = position
        return row > col if self.lower_is_positive else row < col

    def root_vectors(self) -> Dict[Tuple[int, ...], Tuple[Position, SparseMatrix]]:
        vectors: Dict[Tuple[int, ...], Tuple[Position, SparseMatrix]] = {}
        for row in range(self.size):
            for col in range(self.size):
                if row == col:
                    continue
                found = self.root_vector(row, col)
                if found is None:
                    continue
                leading, element = found
                root = self.root_of(leading)
                vectors.setdefault(root, (leading, element))
        return vectors
