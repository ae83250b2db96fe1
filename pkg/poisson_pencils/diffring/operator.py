"""
Scalar and matrix differential operators in normal form sum_m a_m d^m.

All derivations stand to the right of their coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .poly import DiffPoly, Scalar

Coefficient = Union[DiffPoly, Scalar]


class DiffOp:
    """Map from derivative order to a nonzero DiffPoly coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, Coefficient]] = None):
        self.coeffs: Dict[int, DiffPoly] = {}
        if coeffs:
            for order, coefficient in coeffs.items():
                if order < 0:
                    raise ValueError("negative powers of d are not supported")
                coefficient = DiffPoly.coerce(coefficient)
                if coefficient:
                    self.coeffs[order] = coefficient

    @classmethod
    def zero(cls) -> "DiffOp":
        return cls()

    @classmethod
    def multiplication(cls, coefficient: Coefficient) -> "DiffOp":
        return cls({0: coefficient})

    @classmethod
    def derivation(cls, power: int = 1) -> "DiffOp":
        return cls({power: 1})

    @classmethod
    def coerce(cls, value: Union["DiffOp", Coefficient]) -> "DiffOp":
        if isinstance(value, DiffOp):
            return value
        return cls.multiplication(value)

    @property
    def order(self) -> int:
        return max(self.coeffs, default=-1)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, order: int) -> DiffPoly:
        return self.coeffs.get(order, DiffPoly.zero())

    def items(self) -> List[Tuple[int, DiffPoly]]:
        return sorted(self.coeffs.items())

    def __add__(self, other) -> "DiffOp":
        other = DiffOp.coerce(other)
        coeffs = dict(self.coeffs)
        for order, coefficient in other.coeffs.items():
            coeffs[order] = coeffs[order] + coefficient if order in coeffs else coefficient
        return DiffOp(coeffs)

    __radd__ = __add__

    def __neg__(self) -> "DiffOp":
        return DiffOp({m: -a for m, a in self.coeffs.items()})

    def __sub__(self, other) -> "DiffOp":
        return self + (-DiffOp.coerce(other))

    def __rsub__(self, other) -> "DiffOp":
        return DiffOp.coerce(other) - self

    def scale(self, factor: Coefficient) -> "DiffOp":
        """Left multiplication by a coefficient: a * P."""
        factor = DiffPoly.coerce(factor)
        return DiffOp({m: factor * a for m, a in self.coeffs.items()})

    def __mul__(self, other) -> "DiffOp":
        if isinstance(other, DiffOp):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "DiffOp":
        return self.scale(other)

    def __matmul__(self, other: "DiffOp") -> "DiffOp":
        return compose(self, DiffOp.coerce(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            try:
                other = DiffOp.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self) -> str:
        from .printing import format_diffop

        return f"DiffOp({format_diffop(self)})"

    def map_coefficients(self, function: Callable[[DiffPoly], DiffPoly]) -> "DiffOp":
        return DiffOp({m: function(a) for m, a in self.coeffs.items()})

    def adjoint(self) -> "DiffOp":
        return adjoint(self)


def compose(p: DiffOp, q: DiffOp) -> DiffOp:
    """
    Operator product using d^m b = sum_k C(m, k) b^(k) d^(m - k).
    """
    if p.is_zero or q.is_zero:
        return DiffOp.zero()
    top = p.order
    derivatives = {n: b.derivatives(top) for n, b in q.coeffs.items()}
    result: Dict[int, DiffPoly] = {}
    for m, a in p.coeffs.items():
        for n, b_derivatives in derivatives.items():
            for k in range(m + 1):
                b_k = b_derivatives[k]
                if not b_k:
                    continue
                term = a * b_k * comb(m, k)
                order = m - k + n
                result[order] = result[order] + term if order in result else term
    return DiffOp(result)


def adjoint(p: DiffOp) -> DiffOp:
    """Formal adjoint sum_m (-d)^m o a_m in normal form."""
    result: Dict[int, DiffPoly] = {}
    for m, a in p.coeffs.items():
        a_derivatives = a.derivatives(m)
        sign = -1 if m % 2 else 1
        for k in range(m + 1):
            term = a_derivatives[m - k] * (sign * comb(m, k))
            if not term:
                continue
            result[k] = result[k] + term if k in result else term
    return DiffOp(result)


class MatDiffOp:
    """Rectangular array of DiffOp entries; square for Poisson operators."""

    __slots__ = ("entries", "shape")

    def __init__(self, entries: Sequence[Sequence[Union[DiffOp, Coefficient]]], shape=None):
        rows = [tuple(DiffOp.coerce(entry) for entry in row) for row in entries]
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        if any(len(row) != shape[1] for row in rows) or len(rows) != shape[0]:
            raise ValueError("ragged operator matrix")
        self.entries: Tuple[Tuple[DiffOp, ...], ...] = tuple(rows)
        self.shape: Tuple[int, int] = tuple(shape)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatDiffOp":
        return cls([[DiffOp.zero() for _ in range(cols)] for _ in range(rows)], (rows, cols))

    @classmethod
    def identity(cls, size: int) -> "MatDiffOp":
        return cls(
            [[DiffOp.multiplication(int(i == j)) for j in range(size)] for i in range(size)],
            (size, size),
        )

    @classmethod
    def scalar(cls, operator: DiffOp) -> "MatDiffOp":
        return cls([[operator]], (1, 1))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["MatDiffOp"]]) -> "MatDiffOp":
        rows: List[List[DiffOp]] = []
        for block_row in blocks:
            height = block_row[0].shape[0]
            for i in range(height):
                row: List[DiffOp] = []
                for block in block_row:
                    row.extend(block.entries[i])
                rows.append(row)
        width = sum(block.shape[1] for block in blocks[0]) if blocks else 0
        return cls(rows, (len(rows), width))

    @property
    def size(self) -> int:
        if self.shape[0] != self.shape[1]:
            raise ValueError("size is only defined for square operators")
        return self.shape[0]

    def __getitem__(self, index: Tuple[int, int]) -> DiffOp:
        i, j = index
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def _combine(self, other: "MatDiffOp", function) -> "MatDiffOp":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return MatDiffOp(
            [[function(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.shape,
        )

    def __add__(self, other: "MatDiffOp") -> "MatDiffOp":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "MatDiffOp") -> "MatDiffOp":
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> "MatDiffOp":
        return self.map_entries(lambda entry: -entry)

    def scale(self, factor: Coefficient) -> "MatDiffOp":
        return self.map_entries(lambda entry: entry.scale(factor))

    def __matmul__(self, other: "MatDiffOp") -> "MatDiffOp":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        rows = []
        for i in range(self.shape[0]):
            row = []
            for j in range(other.shape[1]):
                total = DiffOp.zero()
                for k in range(self.shape[1]):
                    left, right = self.entries[i][k], other.entries[k][j]
                    if left and right:
                        total = total + compose(left, right)
                row.append(total)
            rows.append(row)
        return MatDiffOp(rows, (self.shape[0], other.shape[1]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatDiffOp):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __repr__(self) -> str:
        from .printing import format_matrix

        return f"MatDiffOp({format_matrix(self)})"

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for row in self.entries for entry in row)

    def map_entries(self, function: Callable[[DiffOp], DiffOp]) -> "MatDiffOp":
        return MatDiffOp([[function(entry) for entry in row] for row in self.entries], self.shape)

    def map_coefficients(self, function: Callable[[DiffPoly], DiffPoly]) -> "MatDiffOp":
        return self.map_entries(lambda entry: entry.map_coefficients(function))

    def adjoint(self) -> "MatDiffOp":
        """(P^dagger)_ij = (P_ji)^dagger."""
        rows, cols = self.shape
        return MatDiffOp(
            [[adjoint(self.entries[j][i]) for j in range(rows)] for i in range(cols)],
            (cols, rows),
        )

    def skew_defects(self) -> List[Tuple[int, int]]:
        """Index pairs (i, j), i <= j, with (P_ji)^dagger != -P_ij."""
        defects = []
        for i in range(self.size):
            for j in range(i, self.size):
                if adjoint(self.entries[j][i]) + self.entries[i][j]:
                    defects.append((i, j))
        return defects

    def is_skew_adjoint(self) -> bool:
        return not self.skew_defects()

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "MatDiffOp":
        rows, cols = list(rows), list(cols)
        return MatDiffOp(
            [[self.entries[i][j] for j in cols] for i in rows], (len(rows), len(cols))
        )

    def lam_coefficient(self, power: int) -> "MatDiffOp":
        return self.map_coefficients(lambda a: a.lam_coefficient(power))

    def lam_degree(self) -> int:
        return max(
            (a.lam_degree() for row in self.entries for entry in row for a in entry.coeffs.values()),
            default=0,
        )

    def pair(self) -> Tuple["MatDiffOp", "MatDiffOp"]:
        """(P1, P2) for a pencil P2 - lam P1 linear in lam."""
        return -self.lam_coefficient(1), self.lam_coefficient(0)

    def opposite(self) -> "MatDiffOp":
        """The same pencil in the opposite bracket-ordering convention."""
        return -self

    def substitute_constants(self, values: Mapping[int, Scalar]) -> "MatDiffOp":
        return self.map_coefficients(lambda a: a.substitute_constants(values))

    def rename(self, mapping: Mapping[int, int]) -> "MatDiffOp":
        return self.map_coefficients(lambda a: a.rename(mapping))

    def eps_exponents(self) -> set[int]:
        return {
            e for row in self.entries for entry in row for a in entry.coeffs.values()
            for e in a.eps_exponents()
        }

    def fields(self) -> set[int]:
        return {
            f for row in self.entries for entry in row for a in entry.coeffs.values()
            for f in a.fields()
        }

    def truncate_eps(self, max_power: int) -> Tuple["MatDiffOp", bool]:
        dropped = False

        def cut(a: DiffPoly) -> DiffPoly:
            nonlocal dropped
            kept, lost = a.truncate_eps(max_power)
            dropped = dropped or lost
            return kept

        result = self.map_coefficients(cut)
        return result, dropped


def pencil(p2: MatDiffOp, p1: MatDiffOp) -> MatDiffOp:
    """P2 - lam P1."""
    return p2 - p1.scale(DiffPoly.lam())


def constant_matrix(rows: Sequence[Sequence[Scalar]]) -> MatDiffOp:
    return MatDiffOp([[DiffOp.multiplication(Fraction(x)) for x in row] for row in rows])
