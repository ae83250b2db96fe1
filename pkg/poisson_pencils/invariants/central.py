"""
Canonical coordinates, the functions f^i and central invariants
c_i = lam^i_2 / (3 f^i) at sample points.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import mpmath
from sympy import Matrix, Poly, gcd

from ..algebra import LieAlg
from ..core.config import settings
from ..core.constants import Constants
from ..core.exceptions import IntegrityError, SemisimplicityError, ValidationError
from ..core.logging import get_logger
from ..core.utils import RationalSampler, to_fraction, to_sympy_rational
from ..diffring import LAM, MatDiffOp, jet_symbol, to_sympy
from .hydro import HydroData, hydro_limit
from .roots import Number, RootExpansion, leading_roots, lambda_roots
from .symbols import CharPoly, char_poly, polynomial_det, symbol

logger = get_logger(__name__)


@dataclass(frozen=True)
class CanonicalCoordinate:
    u: Number
    f: Number
    gradient: Tuple[Number, ...]


@dataclass(frozen=True)
class CanonicalData:
    coordinates: Tuple[CanonicalCoordinate, ...]
    diagonal_residual: float


def _as_mp(value: Number):
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return value


def _horner(coefficients: Sequence, x: Number) -> Number:
    total = Fraction(0) if isinstance(x, Fraction) else mpmath.mpf(0)
    for c in coefficients:
        total = total * x + c
    return total


def _quadratic(x: Sequence[Number], g: Sequence[Sequence[Fraction]], y: Sequence[Number]) -> Number:
    """x^T g y, exact when both vectors are."""
    if not all(isinstance(v, Fraction) for v in (*x, *y)):
        x, y = [_as_mp(v) for v in x], [_as_mp(v) for v in y]
        g = [[_as_mp(v) for v in row] for row in g]
    total = 0
    for a, xa in enumerate(x):
        for b, yb in enumerate(y):
            if g[a][b]:
                total += xa * g[a][b] * yb
    return Fraction(total) if isinstance(total, int) else total


def _lam_coefficients(expr, values, exact: bool) -> List[Number]:
    expr = expr.xreplace(values)
    if not expr.has(LAM):
        coefficients = [expr]
    else:
        coefficients = Poly(expr, LAM).all_coeffs()
    converted = [to_fraction(c) for c in coefficients]
    if exact:
        return converted
    return [_as_mp(c) for c in converted]


def canonical_data(
    h: HydroData, w0: Sequence[Fraction], precision: Optional[int] = None
) -> CanonicalData:
    """
    u^i are the roots of F = det(g2 - lam g1) at w0 and
    f^i = sum_ab (du^i/dw^a) g1^{ab} (du^i/dw^b), du/dw^a = -F_{w^a} / F_lam.
    """
    precision = settings.numeric.precision if precision is None else precision
    size = h.size
    if len(w0) != size:
        raise ValidationError(f"expected {size} field values, got {len(w0)}")
    g1 = Matrix([[to_sympy(a, eps=None) for a in row] for row in h.g1])
    g2 = Matrix([[to_sympy(a, eps=None) for a in row] for row in h.g2])
    characteristic = polynomial_det(g2 - LAM * g1)
    fields = [jet_symbol(a, 0) for a in range(size)]
    values = {s: to_sympy_rational(v) for s, v in zip(fields, w0)}
    at_point = Poly(characteristic.xreplace(values), LAM)
    if at_point.degree() < 1 or gcd(at_point, at_point.diff(LAM)).degree() > 0:
        raise SemisimplicityError("canonical coordinates are not pairwise distinct at the point")
    g1_values = [[to_fraction(x) for x in row] for row in g1.xreplace(values).tolist()]

    coordinates = []
    with mpmath.workdps(precision):
        partials = [characteristic.diff(s) for s in fields]
        lam_partial = characteristic.diff(LAM)
        for u, exact in leading_roots(at_point, precision):
            denominator = _horner(_lam_coefficients(lam_partial, values, exact), u)
            if not denominator:
                raise SemisimplicityError("F_lam vanishes at a canonical coordinate")
            gradient = tuple(
                -_horner(_lam_coefficients(partial, values, exact), u) / denominator
                for partial in partials
            )
            f = _quadratic(gradient, g1_values, gradient)
            coordinates.append(CanonicalCoordinate(u=u, f=f, gradient=gradient))

        residual = 0.0
        for i, ci in enumerate(coordinates):
            for j, cj in enumerate(coordinates):
                if i != j:
                    entry = _quadratic(ci.gradient, g1_values, cj.gradient)
                    residual = max(residual, float(abs(_as_mp(entry))))
    return CanonicalData(coordinates=tuple(coordinates), diagonal_residual=residual)


def ds_predicted_ci(alg: LieAlg) -> List[Fraction]:
    """c_i = <H_i, H_i> / 48."""
    return [
        alg.pairing(alg.basis_vector(k), alg.basis_vector(k)) / 48 for k in alg.cartan_indices
    ]


@dataclass(frozen=True)
class CentralRecord:
    u: Number
    lambda2: Number
    f: Number
    c: Number


@dataclass(frozen=True)
class PointRecord:
    point: Tuple[Fraction, ...]
    records: Tuple[CentralRecord, ...]
    odd_max: float
    diagonal_residual: float


@dataclass(frozen=True)
class CentralInvariantReport:
    points: Tuple[PointRecord, ...]
    spreads: Tuple[float, ...]
    constant: bool
    tolerance: float
    seed: Optional[int]
    order: int
    lambda_degree: int
    char_poly: CharPoly
    predicted: Optional[Tuple[Fraction, ...]] = None
    matches_prediction: Optional[bool] = None
    rejected: int = field(default=0)

    @property
    def values(self) -> List[List[Number]]:
        return [[record.c for record in point.records] for point in self.points]


def _real(value: Number) -> float:
    if isinstance(value, mpmath.mpc):
        return float(value.real)
    return float(value)


def _distance(a: Number, b: Number) -> float:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return float(abs(a - b))
    return float(abs(_as_mp(a) - _as_mp(b)))


def _leading_u(cp: CharPoly, w: Sequence[Fraction], precision: int) -> List[Number]:
    return [root.u for root in lambda_roots(cp, w, order=2, precision=precision).roots]


def _assign(found: Sequence, predicted: Sequence) -> List[int]:
    """Greedy nearest match: index into ``found`` for each predicted value."""
    remaining = list(range(len(found)))
    order = []
    for value in predicted:
        best = min(remaining, key=lambda j: float(abs(found[j] - value)))
        remaining.remove(best)
        order.append(best)
    return order


def _continue_branches(
    cp: CharPoly, start: PointRecord, end: PointRecord, branch_u: Sequence[Number], precision: int
) -> List[int]:
    """
    For each branch with canonical coordinate branch_u[i] at ``start``, the index of
    the record of ``end`` on the same branch.

    Roots are followed along the segment between the two points with a linear
    predictor, so transversal crossings keep their branch. Steps where roots
    collide are skipped.
    """
    current = [_as_mp(u) for u in branch_u]
    velocity = [mpmath.mpf(0)] * len(current)
    t_last = Fraction(0)
    steps = Constants.BRANCH_STEPS
    order = list(range(len(current)))
    for k in range(1, steps + 1):
        t = Fraction(k, steps)
        dt = _as_mp(t - t_last)
        if k == steps:
            found = [_as_mp(record.u) for record in end.records]
        else:
            w = tuple(a + t * (b - a) for a, b in zip(start.point, end.point))
            try:
                found = [_as_mp(u) for u in _leading_u(cp, w, precision)]
            except (SemisimplicityError, IntegrityError):
                continue
            if len(found) != len(current):
                continue
        predicted = [c + v * dt for c, v in zip(current, velocity)]
        order = _assign(found, predicted)
        following = [found[j] for j in order]
        velocity = [(f - c) / dt for f, c in zip(following, current)]
        current, t_last = following, t
    return order


def _branch_values(cp: CharPoly, results: Sequence[PointRecord], precision: int) -> List[List[Number]]:
    """c values grouped by branch, following each root from one sample point to the next."""
    width = min(len(point.records) for point in results)
    if any(len(point.records) != width for point in results):
        return [[point.records[i].c for point in results] for i in range(width)]
    columns = [[record.c] for record in results[0].records]
    branch_u = [record.u for record in results[0].records]
    for previous, point in zip(results, results[1:]):
        mapping = _continue_branches(cp, previous, point, branch_u, precision)
        for column, j in zip(columns, mapping):
            column.append(point.records[j].c)
        branch_u = [point.records[j].u for j in mapping]
    return columns


def _evaluate_point(
    cp: CharPoly, hydro: HydroData, w0: Tuple[Fraction, ...], order: int, precision: int
) -> PointRecord:
    expansion: RootExpansion = lambda_roots(cp, w0, order=order, precision=precision)
    canonical = canonical_data(hydro, w0, precision=precision)
    if len(expansion.roots) != len(canonical.coordinates):
        raise SemisimplicityError("root count of the symbol and of the metrics differ")
    records = []
    available = list(canonical.coordinates)
    for root in expansion.roots:
        match = min(available, key=lambda coordinate: _distance(coordinate.u, root.u))
        available.remove(match)
        if not match.f:
            raise SemisimplicityError("f vanishes at the point")
        if isinstance(root.lambda2, Fraction) and isinstance(match.f, Fraction):
            c = root.lambda2 / (3 * match.f)
        else:
            c = _as_mp(root.lambda2) / (3 * _as_mp(match.f))
        records.append(CentralRecord(u=root.u, lambda2=root.lambda2, f=match.f, c=c))
    records.sort(key=lambda record: _real(record.u))
    return PointRecord(
        point=tuple(w0),
        records=tuple(records),
        odd_max=expansion.odd_max,
        diagonal_residual=canonical.diagonal_residual,
    )


def central_invariants(
    target: Union[MatDiffOp, object],
    points: Optional[Sequence[Sequence[Fraction]]] = None,
    order: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
    algebra: Optional[LieAlg] = None,
    precision: Optional[int] = None,
) -> CentralInvariantReport:
    """
    Pipeline symbol -> char_poly -> lambda_roots -> canonical_data -> c_i at each point,
    with a constancy verdict over the points.

    ``target`` is an operator or anything carrying one (a pencil, a reduced pencil).
    """
    numeric = settings.numeric
    order = numeric.order if order is None else order
    samples = numeric.samples if samples is None else samples
    tol = numeric.constancy_tol if tol is None else tol
    precision = numeric.precision if precision is None else precision
    operator = target if isinstance(target, MatDiffOp) else target.operator
    algebra = algebra or getattr(target, "algebra", None)

    hydro = hydro_limit(operator)
    cp = char_poly(symbol(operator))
    size = operator.size

    rejected = 0
    results: List[PointRecord] = []
    if points is not None:
        used_seed = None
        for point in points:
            results.append(
                _evaluate_point(cp, hydro, tuple(to_fraction(x) for x in point), order, precision)
            )
    else:
        used_seed = numeric.seed if seed is None else seed
        sampler = RationalSampler(used_seed)
        while len(results) < samples:
            if rejected >= Constants.MAX_SAMPLE_ATTEMPTS:
                raise SemisimplicityError(
                    f"no semisimple sample point found in {rejected} attempts"
                )
            w0 = sampler.point(size)
            try:
                results.append(_evaluate_point(cp, hydro, w0, order, precision))
            except (SemisimplicityError, ZeroDivisionError) as exc:
                rejected += 1
                logger.debug("rejected sample point %s: %s", w0, exc)

    spreads = [
        max(_distance(a, b) for a in values for b in values)
        for values in _branch_values(cp, results, precision)
    ]
    constant = all(spread < tol for spread in spreads)

    predicted = matches = None
    if algebra is not None and getattr(target, "variant", "ds") == "ds":
        predicted = tuple(sorted(ds_predicted_ci(algebra)))
        matches = all(
            len(point.records) == len(predicted)
            and all(
                _distance(a, b) < tol
                for a, b in zip(sorted((r.c for r in point.records), key=_real), predicted)
            )
            for point in results
        )

    logger.info("central invariants: constant %s over %d points", constant, len(results))
    return CentralInvariantReport(
        points=tuple(results),
        spreads=tuple(spreads),
        constant=constant,
        tolerance=tol,
        seed=used_seed,
        order=order,
        lambda_degree=cp.lambda_degree,
        char_poly=cp,
        predicted=predicted,
        matches_prediction=matches,
        rejected=rejected,
    )
