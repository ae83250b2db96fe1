"""
Builders for the loop-algebra pencils and the scalar deformation family.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from ..algebra import LieAlg, build_algebra, highest_root_data, principal_nilpotent
from ..algebra.matrices import SparseMatrix, add, unit
from ..core.exceptions import ConstructionError, ValidationError
from ..core.logging import get_logger
from ..diffring import DiffOp, DiffPoly, EvolutionaryField, MatDiffOp
from ..diffring.printing import default_names
from .instance import Chart, PencilInstance, Vector

logger = get_logger(__name__)

_DS = "ds"
_SWAPPED = "swapped-ch"


def _as_vector(alg: LieAlg, a: Sequence) -> Vector:
    if len(a) != alg.dim:
        raise ConstructionError(f"expected {alg.dim} coordinates for {alg.name}, got {len(a)}")
    return tuple(Fraction(x) for x in a)


def chart_operator(alg: LieAlg, chart: Chart, a: Vector, variant: str = _DS) -> MatDiffOp:
    """
    Pi^{ab} = -eps^-1 <Xi, [phi_a, phi_b]> - <phi_a, phi_b> D, with
    Xi = W - lam A for ``ds`` and Xi = A - lam W for ``swapped-ch``,
    W = base + sum_c z^c v_c.
    """
    if variant not in (_DS, _SWAPPED):
        raise ValidationError(f"chart pencils support variants ds and swapped-ch, got {variant!r}")
    size = chart.size
    lam, inv_eps = DiffPoly.lam(), DiffPoly.eps(-1)
    rows: List[List[DiffOp]] = [[DiffOp.zero()] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            metric = alg.pairing(chart.duals[i], chart.duals[j])
            beta = alg.bracket(chart.duals[i], chart.duals[j])
            covector = alg.lower(beta)
            paired_a = sum((x * y for x, y in zip(a, covector)), Fraction(0))
            paired_base = sum((x * y for x, y in zip(chart.base, covector)), Fraction(0))
            w_part = DiffPoly.constant(paired_base)
            for c, v in enumerate(chart.vectors):
                weight = sum((x * y for x, y in zip(v, covector)), Fraction(0))
                if weight:
                    w_part = w_part + DiffPoly.field(c) * weight
            if variant == _DS:
                xi = w_part - lam * paired_a
            else:
                xi = DiffPoly.constant(paired_a) - lam * w_part
            entry = DiffOp({0: -(inv_eps * xi), 1: -metric})
            rows[i][j] = entry
            if i != j:
                rows[j][i] = -entry.adjoint()
    return MatDiffOp(rows, (size, size))


def chart_pencil(
    alg: LieAlg,
    chart: Chart,
    a: Sequence,
    name: str,
    field_names: Optional[Sequence[str]] = None,
    variant: str = _DS,
    i_vector: Optional[Sequence] = None,
) -> PencilInstance:
    a = _as_vector(alg, a)
    if not any(a):
        raise ConstructionError("the distinguished element A must be nonzero")
    operator = chart_operator(alg, chart, a, variant)
    liouville = EvolutionaryField.constant([alg.pairing(a, phi) for phi in chart.duals])
    logger.debug("built %s pencil %s on %s", variant, name, alg.name)
    return PencilInstance(
        name=name,
        operator=operator,
        variant=variant,
        field_names=list(field_names or default_names(chart.size)),
        algebra=alg,
        a_vector=a,
        i_vector=tuple(Fraction(x) for x in i_vector) if i_vector is not None else chart.base,
        liouville=liouville,
        chart=chart,
    )


def ds_pencil(alg: LieAlg, a: Sequence, name: Optional[str] = None) -> PencilInstance:
    """
    The Drinfeld-Sokolov pencil in the fields w^l = <w, e_l>:
    Pi^{ij} = -eps^-1 sum_l c^{ij}_l (w^l - lam a^l) - g^{ij} D, with Z = a.
    """
    return chart_pencil(
        alg,
        Chart.dual(alg),
        a,
        name=name or f"ds-{alg.name}",
        i_vector=principal_nilpotent(alg),
    )


def ch_pencil() -> PencilInstance:
    """sl(2) pencil with P1 v = eps^-1 [v, w] and P2 v = eps^-1 [v, A] + v_x, A = X + Y."""
    alg = build_algebra("A", 1)
    a = alg.vector({"X1": 1, "Y1": 1})
    return chart_pencil(alg, Chart.dual(alg), a, name="camassa-holm", variant=_SWAPPED)


def kdv_pencil() -> PencilInstance:
    alg = build_algebra("A", 1)
    return ds_pencil(alg, highest_root_data(alg)[0], name="kdv")


def so5_chart(alg: LieAlg) -> Chart:
    """Leaf directions X4, X2, X3, H1 + H2 through Y1 + Y2, then transverse ones."""
    labels = [
        {"X4": 1},
        {"X2": 1},
        {"X3": 1},
        {"H1": 1, "H2": 1},
        {"X1": 1},
        {"H1": 1},
        {"Y1": 1},
        {"Y2": 1},
        {"Y3": 1},
        {"Y4": 1},
    ]
    return Chart.from_vectors(
        alg, [alg.vector(v) for v in labels], base=alg.vector({"Y1": 1, "Y2": 1})
    )


def so5_pencil() -> PencilInstance:
    alg = build_algebra("B", 2)
    chart = so5_chart(alg)
    names = [f"w{k}" for k in range(1, 5)] + [f"t{k}" for k in range(1, 7)]
    return chart_pencil(alg, chart, alg.vector({"X4": 1}), name="so5", field_names=names)


def _gl(entries: dict) -> SparseMatrix:
    matrix: SparseMatrix = {}
    for (row, col), value in entries.items():
        matrix = add(matrix, unit(row - 1, col - 1), Fraction(value))
    return matrix


def sl3_fractional_chart(alg: LieAlg) -> Chart:
    """
    Leaf through e31 with coordinates u0..u3, p0, p1, so that the leaf element is
    ((p0, u1, u3), (p1, u0 - p0, u2), (1, -p1, -u0)); transverse e31, e21.
    """
    matrices = [
        {(2, 2): 1, (3, 3): -1},
        {(1, 2): 1},
        {(2, 3): 1},
        {(1, 3): 1},
        {(1, 1): 1, (2, 2): -1},
        {(2, 1): 1, (3, 2): -1},
        {(3, 1): 1},
        {(2, 1): 1},
    ]
    vectors = [alg.coordinates(_gl(m)) for m in matrices]
    return Chart.from_vectors(alg, vectors, base=alg.coordinates(_gl({(3, 1): 1})))


def gds_sl3_pencil() -> PencilInstance:
    alg = build_algebra("A", 2)
    chart = sl3_fractional_chart(alg)
    a = alg.coordinates(_gl({(1, 2): 1, (2, 3): 1}))
    names = ["u0", "u1", "u2", "u3", "p0", "p1", "t1", "t2"]
    return chart_pencil(alg, chart, a, name="sl3-frac", field_names=names)


def scalar_deformation_pencil(c: DiffPoly, name: str = "scalar") -> PencilInstance:
    """2(u - lam) D + u_x + eps^2 (2c D^3 + 3c_x D^2 + c_xx D) for c = c(u)."""
    c = DiffPoly.coerce(c)
    if any(field != 0 for field in c.fields()):
        raise ValidationError("c must depend on the single field u")
    if not c.is_derivative_free:
        raise ValidationError("c must not depend on derivatives of u")
    if c.eps_exponents() - {0} or c.lam_degree():
        raise ValidationError("c must not depend on eps or lam")
    u, lam, eps2 = DiffPoly.field(0), DiffPoly.lam(), DiffPoly.eps(2)
    c_x, c_xx = c.derivative(), c.derivative().derivative()
    operator = DiffOp(
        {
            0: DiffPoly.field(0, 1),
            1: (u - lam) * 2 + eps2 * c_xx,
            2: eps2 * c_x * 3,
            3: eps2 * c * 2,
        }
    )
    return PencilInstance(
        name=name,
        operator=MatDiffOp.scalar(operator),
        variant="scalar",
        field_names=["u"],
        liouville=EvolutionaryField.constant([1]),
    )
