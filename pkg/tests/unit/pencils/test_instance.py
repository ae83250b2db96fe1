"""
Unit tests for charts, gauges and pencil validation.
"""

from fractions import Fraction

import pytest

from poisson_pencils.algebra import build_algebra
from poisson_pencils.core.exceptions import (
    ConstructionError,
    GradingError,
    SkewAdjointnessError,
    ValidationError,
)
from poisson_pencils.diffring import MatDiffOp, parse_operator
from poisson_pencils.pencils import Chart, GaugeSpec, PencilInstance, so5_chart


def _instance(*rows: str, names=("u",)) -> PencilInstance:
    operator = MatDiffOp([[parse_operator(entry, list(names)) for entry in row.split(";")] for row in rows])
    return PencilInstance(name="test", operator=operator, variant="custom", field_names=list(names))


# Test Chart
def test_dual_chart_pairs_with_basis():
    """In the dual chart the coordinates of w are <w, e_l>."""
    alg = build_algebra("A", 1)
    chart = Chart.dual(alg)
    w = alg.vector({"X1": 2, "H1": -1, "Y1": 3})

    assert chart.coordinates(alg, w) == tuple(alg.pairing(w, alg.basis_vector(k)) for k in range(3))
    assert chart.point(chart.coordinates(alg, w)) == w


def test_affine_chart_round_trip():
    """point and coordinates are mutually inverse on an affine chart."""
    alg = build_algebra("B", 2)
    chart = so5_chart(alg)
    z = tuple(Fraction(k, 3) for k in range(alg.dim))

    assert chart.coordinates(alg, chart.point(z)) == z


def test_chart_needs_a_full_basis():
    """Charts need dim g independent vectors."""
    alg = build_algebra("A", 1)
    x = alg.vector({"X1": 1})

    with pytest.raises(ConstructionError):
        Chart.from_vectors(alg, [x, x])
    with pytest.raises(ConstructionError):
        Chart.from_vectors(alg, [x, x, alg.vector({"Y1": 1})])


# Test GaugeSpec
def test_gauge_partition():
    """A gauge splits the fields into retained and fixed ones."""
    gauge = GaugeSpec.create([0], {2: 1, 1: 0})

    assert gauge.validate(3) is gauge
    assert gauge.eliminated == (1, 2)
    assert gauge.fixed[2] == Fraction(1)


@pytest.mark.parametrize(
    "retained,fixed",
    [([0, 0], {1: 0}), ([0, 1], {1: 0}), ([0], {}), ([0], {1: 0, 3: 0})],
)
def test_gauge_validation_errors(retained, fixed):
    """Duplicates, overlaps, gaps and out-of-range indices are rejected."""
    with pytest.raises(ValidationError):
        GaugeSpec.create(retained, fixed).validate(2)


def test_identity_gauge():
    """The identity gauge retains every field."""
    assert GaugeSpec.identity(3).retained == (0, 1, 2)
    assert GaugeSpec.identity(3).eliminated == ()


# Test PencilInstance.validate
def test_valid_pencil():
    """2 (u - lam) D + u_x is a valid pencil."""
    instance = _instance("2*(u - lam)*D + u_x")

    assert instance.validate() is instance
    assert instance.size == 1


def test_non_skew_pencil():
    """u D alone is not skew-adjoint."""
    with pytest.raises(SkewAdjointnessError) as exc_info:
        _instance("u*D").validate()

    assert "(1, 1)" in exc_info.value.message


def test_ungraded_pencil():
    """eps^-2 terms leave the graded class."""
    with pytest.raises(GradingError):
        _instance("eps^-2*D").validate()


def test_quadratic_in_lam():
    """Pencils are linear in lam."""
    with pytest.raises(ValidationError):
        _instance("lam^2*D").validate()
