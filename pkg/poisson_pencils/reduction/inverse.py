"""
Inversion of the D-block by a graded Neumann series around its leading
algebraic part.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from sympy import Matrix, Symbol, cancel
from sympy.polys.matrices import DomainMatrix

from ..core.config import settings
from ..core.exceptions import IntegrityError, ReductionError
from ..core.logging import get_logger
from ..diffring import DiffOp, MatDiffOp, from_sympy, jet_symbol, to_sympy

logger = get_logger(__name__)


@dataclass(frozen=True)
class DInverse:
    operator: MatDiffOp
    order: int
    leading_eps: int


def _leading_part(d: MatDiffOp, k0: int) -> Matrix:
    return Matrix(
        [
            [to_sympy(d[i, j].coefficient(0).eps_coefficient(k0), eps=None) for j in range(d.size)]
            for i in range(d.size)
        ]
    )


def _invert_leading(d0: Matrix, fields) -> MatDiffOp:
    domain_matrix = DomainMatrix.from_Matrix(d0)
    det = domain_matrix.domain.to_sympy(domain_matrix.det()).expand()
    if det == 0:
        raise ReductionError(
            "leading part of the D-block is singular: kernel intersection may be nontrivial"
        )
    if not det.is_number:
        raise ReductionError(
            "non-polynomial inverse: leading part of the D-block has non-constant determinant",
            details={"det": str(det)},
        )
    inverse = domain_matrix.to_field().inv().to_Matrix()
    symbols: Dict[Symbol, Tuple[int, int]] = {jet_symbol(f, 0): (f, 0) for f in fields}
    rows = []
    for i in range(inverse.rows):
        row = []
        for j in range(inverse.cols):
            try:
                row.append(DiffOp.multiplication(from_sympy(cancel(inverse[i, j]), symbols)))
            except ValueError as exc:
                raise ReductionError("non-polynomial inverse of the D-block", details=str(exc)) from exc
        rows.append(row)
    return MatDiffOp(rows)


def invert_d(d: MatDiffOp, max_order: int | None = None) -> DInverse:
    """
    d^-1 = (sum_k N^k) d0^-1 eps^-k0 with N = -d0^-1 (eps^-k0 d - d0), where eps^k0
    is the lowest power of eps in d and d0 its D-free part at that power.
    """
    max_order = settings.numeric.max_order if max_order is None else max_order
    size = d.size
    if size == 0:
        return DInverse(MatDiffOp.zeros(0, 0), 0, 0)
    exponents = d.eps_exponents()
    if not exponents:
        raise ReductionError("D-block vanishes: kernel intersection may be nontrivial")
    k0 = min(exponents)
    normalized = d.map_coefficients(lambda a: a.shift_eps(-k0))
    d0_inverse = _invert_leading(_leading_part(d, k0), d.fields())
    leading = MatDiffOp(
        [
            [DiffOp.multiplication(normalized[i, j].coefficient(0).eps_coefficient(0)) for j in range(size)]
            for i in range(size)
        ]
    )
    step = -(d0_inverse @ (normalized - leading))

    total = MatDiffOp.identity(size)
    power = MatDiffOp.identity(size)
    order = 0
    while True:
        power = power @ step
        if power.is_zero:
            break
        order += 1
        if order > max_order:
            raise ReductionError(
                f"Neumann series for the D-block did not terminate within {max_order} steps",
                details={"residual": repr(power)},
            )
        total = total + power

    inverse = (total @ d0_inverse).map_coefficients(lambda a: a.shift_eps(-k0))
    if d @ inverse != MatDiffOp.identity(size):
        raise IntegrityError("D-block inverse fails d o d^-1 = Id")
    logger.debug("inverted %dx%d D-block, Neumann order %d", size, size, order)
    return DInverse(operator=inverse, order=order, leading_eps=k0)
