"""
Symbols of graded operators and characteristic polynomials.

The symbol keeps the derivative-free part of each coefficient and sends
eps^k D^(k+1) to p^(k+1). Entries are sympy polynomials in p, lam and the
field symbols w{i}_0.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Tuple

from sympy import Expr, Integer, Matrix, Poly, Symbol, div, expand, zeros
from sympy.polys.matrices import DomainMatrix

from ..algebra import kernel_ad, orth_complement
from ..core.constants import Constants
from ..core.exceptions import GradingError, IntegrityError, ValidationError
from ..core.logging import get_logger
from ..core.utils import to_sympy_rational
from ..diffring import LAM, DiffOp, MatDiffOp, MiuraMap, frechet, jet_symbol, to_sympy
from ..pencils import PencilInstance

logger = get_logger(__name__)

P = Symbol(Constants.SYMBOL_NAME)


def field_symbols(count: int) -> Tuple[Symbol, ...]:
    return tuple(jet_symbol(i, 0) for i in range(count))


def _entry_symbol(entry: DiffOp, shift: int, p_order: Optional[int]) -> Expr:
    total = Integer(0)
    for m, coefficient in entry.items():
        if p_order is not None and m > p_order:
            continue
        for monomial, value in coefficient.derivative_free_part():
            eps = monomial[1]
            if m != eps + shift:
                raise GradingError(
                    f"derivative-free term eps^{eps} at D^{m} has no symbol",
                    details={"order": m, "eps": eps},
                )
        part = to_sympy(coefficient.derivative_free_part(), eps=None)
        total = total + part * P**m
    return expand(total)


@dataclass(frozen=True)
class SymbolMatrix:
    entries: Tuple[Tuple[Expr, ...], ...]
    field_count: int
    p_truncation: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.entries)

    def matrix(self) -> Matrix:
        if not self.entries:
            return zeros(0, 0)
        return Matrix([list(row) for row in self.entries])

    def subs(self, values: Mapping[int, Fraction]) -> "SymbolMatrix":
        replacements = {jet_symbol(i, 0): to_sympy_rational(v) for i, v in values.items()}
        return SymbolMatrix(
            tuple(tuple(expand(e.xreplace(replacements)) for e in row) for row in self.entries),
            self.field_count,
            self.p_truncation,
        )

    def antisymmetry_defects(self) -> list:
        """Pairs (i, j) with entry(j, i)(p) != -entry(i, j)(-p)."""
        defects = []
        for i in range(self.size):
            for j in range(i, self.size):
                if expand(self.entries[j][i] + self.entries[i][j].xreplace({P: -P})) != 0:
                    defects.append((i, j))
        return defects


def symbol(operator: MatDiffOp, p_order: Optional[int] = None, shift: int = 1) -> SymbolMatrix:
    """
    Symbol matrix of an operator whose derivative-free terms sit at eps^k D^(k + shift).

    Poisson operators use shift 1; linearizations of Miura maps use shift 0.
    """
    rows, cols = operator.shape
    fields = max(operator.fields(), default=-1) + 1
    entries = tuple(
        tuple(_entry_symbol(operator[i, j], shift, p_order) for j in range(cols))
        for i in range(rows)
    )
    return SymbolMatrix(entries, fields, p_order)


def polynomial_det(matrix: Matrix) -> Expr:
    """Fraction-free determinant over the polynomial ring of the entries."""
    if matrix.rows == 0:
        return Integer(1)
    domain_matrix = DomainMatrix.from_Matrix(matrix)
    return expand(domain_matrix.domain.to_sympy(domain_matrix.det()))


@dataclass(frozen=True)
class CharPoly:
    poly: Expr
    lambda_degree: int
    size: int

    def at(self, values: Mapping[int, Fraction]) -> "CharPoly":
        replacements = {jet_symbol(i, 0): to_sympy_rational(v) for i, v in values.items()}
        return CharPoly(expand(self.poly.xreplace(replacements)), self.lambda_degree, self.size)


def char_poly(symbols: SymbolMatrix) -> CharPoly:
    poly = polynomial_det(symbols.matrix())
    degree = Poly(poly, LAM).degree() if poly.has(LAM) else 0
    logger.debug("char poly of a %dx%d symbol: lam-degree %d", symbols.size, symbols.size, degree)
    return CharPoly(poly=poly, lambda_degree=max(degree, 0), size=symbols.size)


def lambda_degree_check(c: CharPoly, alg_rank: int) -> bool:
    return c.lambda_degree == alg_rank


def leaf_char_poly(pencil: PencilInstance) -> CharPoly:
    """
    Characteristic polynomial of an algebra pencil restricted to the leaf
    I + (ker ad A)^perp, in parameters t1, t2, ... along the leaf directions.
    """
    alg = pencil.algebra
    if alg is None or pencil.chart is None or pencil.a_vector is None:
        raise ValidationError(f"pencil {pencil.name!r} is not built on an algebra")
    chart = pencil.chart
    directions = orth_complement(alg, kernel_ad(alg, pencil.a_vector)).basis_vectors
    params = [Symbol(f"t{k + 1}") for k in range(len(directions))]
    origin = chart.coordinates(alg, pencil.i_vector or chart.base)
    replacements = {}
    for index, phi in enumerate(chart.duals):
        value = to_sympy_rational(origin[index])
        for t, direction in zip(params, directions):
            value += t * to_sympy_rational(alg.pairing(direction, phi))
        replacements[jet_symbol(index, 0)] = value
    matrix = symbol(pencil.operator).matrix().xreplace(replacements)
    poly = polynomial_det(matrix)
    degree = Poly(poly, LAM).degree() if poly.has(LAM) else 0
    logger.debug("leaf char poly of %s: lam-degree %d", pencil.name, degree)
    return CharPoly(poly=poly, lambda_degree=degree, size=chart.size)


def _generators(*exprs: Expr) -> list:
    symbols = set()
    for expr in exprs:
        symbols |= expr.free_symbols
    return sorted(symbols, key=str) or [P]


def exact_ratio(numerator: Expr, denominator: Expr) -> Expr:
    """numerator / denominator when one divides the other exactly."""
    gens = _generators(numerator, denominator)
    quotient, remainder = div(numerator, denominator, *gens)
    if expand(remainder) == 0:
        return expand(quotient)
    quotient, remainder = div(denominator, numerator, *gens)
    if expand(remainder) == 0:
        return 1 / expand(quotient)
    raise IntegrityError(
        "characteristic polynomials are not proportional",
        details={"numerator": str(numerator), "denominator": str(denominator)},
    )


@dataclass(frozen=True)
class CharPolyRatio:
    value: Expr
    lambda_free: bool
    constant: bool


def charpoly_ratio(rm: CharPoly, rq: CharPoly) -> CharPolyRatio:
    """F_Q = R_Q / R_M with the flags for lam-freeness and full constancy."""
    if rm.poly == 0 or rq.poly == 0:
        raise IntegrityError("vanishing characteristic polynomial")
    value = exact_ratio(rq.poly, rm.poly)
    return CharPolyRatio(value=value, lambda_free=not value.has(LAM), constant=value.is_number)


@dataclass(frozen=True)
class MiuraSymbolReport:
    ok: bool
    p_order: int
    defect: Optional[str] = None


def miura_symbol_check(miura: MiuraMap, operator: MatDiffOp, order: int) -> MiuraSymbolReport:
    """
    Compares the symbol of L* P L*^dagger with l(p) pi(p) l(-p)^T up to p^(order + 1).
    """
    linearization = frechet(miura.functions, miura.size)
    transformed, _ = (linearization @ operator @ linearization.adjoint()).truncate_eps(order)
    p_order = order + 1
    left = symbol(linearization, shift=0).matrix()
    right = left.T.xreplace({P: -P})
    predicted = (left * symbol(operator).matrix() * right).applyfunc(
        lambda e: _truncate_p(expand(e), p_order)
    )
    actual = symbol(transformed, p_order=p_order).matrix()
    difference = (predicted - actual).applyfunc(expand)
    for i in range(difference.rows):
        for j in range(difference.cols):
            if difference[i, j] != 0:
                return MiuraSymbolReport(False, p_order, f"entry ({i}, {j}): {difference[i, j]}")
    return MiuraSymbolReport(True, p_order)


def _truncate_p(expr: Expr, p_order: int) -> Expr:
    if not expr.has(P):
        return expr
    poly = Poly(expr, P)
    return sum(
        (c * P**k for (k,), c in poly.terms() if k <= p_order), Integer(0)
    )
