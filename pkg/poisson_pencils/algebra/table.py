from dataclasses import dataclass, field
from typing import Dict, List

from ..core.constants import Constants
from ..core.exceptions import IntegrityError
from ..core.logging import get_logger
from .lie import LieAlg, build_algebra, highest_root_data
from .subspace import eigenspace_dimensions, kernel_ad, orth_complement

logger = get_logger(__name__)


@dataclass(frozen=True)
class Table1Row:
    name: str
    h: int
    h_vee: int
    dim_leaf: int
    dim_g1: int | None = None
    theta_grading: Dict[int, int] = field(default_factory=dict)
    reference: bool = False


def table1_report(alg: LieAlg) -> Table1Row:
    """
    Coxeter data and the dimension of ker(ad E_theta)^perp.

    Raises IntegrityError when the leaf dimension differs from 2h_vee - 2 or the
    degree-one piece of the theta-grading differs from 2(h_vee - 2).
    """
    e_theta, _ = highest_root_data(alg)
    leaf = orth_complement(alg, kernel_ad(alg, e_theta))
    grading = eigenspace_dimensions(alg, alg.theta_degree)

    row = Table1Row(
        name=alg.name,
        h=alg.coxeter,
        h_vee=alg.dual_coxeter,
        dim_leaf=leaf.dim,
        dim_g1=grading.get(1, 0),
        theta_grading=grading,
    )

    if set(grading) - {-2, -1, 0, 1, 2}:
        raise IntegrityError(f"{alg.name}: theta-grading degrees {sorted(grading)}")
    if row.dim_leaf != 2 * row.h_vee - 2:
        raise IntegrityError(
            f"{alg.name}: leaf dimension {row.dim_leaf} != 2h_vee - 2 = {2 * row.h_vee - 2}"
        )
    if row.dim_g1 != 2 * (row.h_vee - 2):
        raise IntegrityError(
            f"{alg.name}: dim g^1 = {row.dim_g1} != 2(h_vee - 2) = {2 * (row.h_vee - 2)}"
        )
    if grading.get(2) != 1 or grading.get(-2) != 1:
        raise IntegrityError(f"{alg.name}: extreme theta-graded pieces are not lines")
    if alg.dim != alg.rank * (alg.coxeter + 1):
        raise IntegrityError(f"{alg.name}: N != n(h + 1)")

    logger.debug("table row %s: %s", alg.name, row)
    return row


def exceptional_rows() -> List[Table1Row]:
    return [
        Table1Row(name=name, h=h, h_vee=h_vee, dim_leaf=dim_leaf, reference=True)
        for name, (h, h_vee, dim_leaf) in Constants.EXCEPTIONAL_TABLE1.items()
    ]


def classical_rows(max_rank: int) -> List[Table1Row]:
    """Rows for A(1..R), B(2..R), C(2..R), D(3..R)."""
    rows = []
    for series, minimum in Constants.SERIES_MIN_RANK.items():
        for rank in range(minimum, max_rank + 1):
            rows.append(table1_report(build_algebra(series, rank)))
    return rows


def expected_row(series: str, rank: int) -> tuple[int, int, int]:
    """Closed forms of the classical rows: (h, h_vee, 2h_vee - 2)."""
    n = rank
    closed = {
        "A": (n + 1, n + 1, 2 * n),
        "B": (2 * n, 2 * n - 1, 4 * n - 4),
        "C": (2 * n, n + 1, 2 * n),
        "D": (2 * n - 2, 2 * n - 2, 4 * n - 6),
    }
    return closed[series]
