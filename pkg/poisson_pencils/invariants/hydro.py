"""
Dispersionless limit of a pencil: the metrics g_a and Christoffel coefficients
Gamma_a of the hydrodynamic brackets g^{ij} D + Gamma^{ij}_k w^k_x.
"""

from dataclasses import dataclass
from typing import Tuple

from ..core.exceptions import DispersionlessLimitError
from ..diffring import DiffPoly, MatDiffOp

Matrix = Tuple[Tuple[DiffPoly, ...], ...]


@dataclass(frozen=True)
class HydroData:
    g1: Matrix
    g2: Matrix
    gamma1: Tuple[Matrix, ...]
    gamma2: Tuple[Matrix, ...]

    @property
    def size(self) -> int:
        return len(self.g1)


def _metric(p: MatDiffOp) -> Matrix:
    return tuple(
        tuple(entry.coefficient(1).eps_coefficient(0).derivative_free_part() for entry in row)
        for row in p.entries
    )


def _christoffel(p: MatDiffOp) -> Tuple[Matrix, ...]:
    """gamma[k][i][j] = Gamma^{ij}_k."""
    size = p.size
    return tuple(
        tuple(
            tuple(p[i, j].coefficient(0).eps_coefficient(0).linear_coefficient(k, 1) for j in range(size))
            for i in range(size)
        )
        for k in range(size)
    )


def hydro_limit(operator: MatDiffOp) -> HydroData:
    negative = sorted(e for e in operator.eps_exponents() if e < 0)
    if negative:
        raise DispersionlessLimitError(
            f"no dispersionless limit: the pencil contains eps^{negative[0]} terms",
            details={"eps_exponents": negative},
        )
    p1, p2 = operator.pair()
    return HydroData(
        g1=_metric(p1), g2=_metric(p2), gamma1=_christoffel(p1), gamma2=_christoffel(p2)
    )
