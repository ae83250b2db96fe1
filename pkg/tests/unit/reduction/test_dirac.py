"""
Unit tests for the Dirac reduction.
"""

from fractions import Fraction

import pytest

from poisson_pencils.core.exceptions import ValidationError
from poisson_pencils.diffring import EvolutionaryField, parse_diffpoly
from poisson_pencils.pencils import GaugeSpec, builtin
from poisson_pencils.reduction import adapted_blocks, dirac_reduce, project_liouville, reassembly_check
from poisson_pencils.services import references


@pytest.fixture(scope="module")
def kdv():
    """The sl(2) pencil reduced to its KdV slice."""
    pencil, gauge = builtin("kdv")
    return pencil, dirac_reduce(pencil, gauge)


# Test adapted_blocks
def test_blocks_follow_the_gauge(kdv):
    """Retained fields come first, eliminated fields last."""
    pencil, reduced = kdv
    blocks = adapted_blocks(pencil, reduced.gauge)

    assert blocks.order == (0, 1, 2)
    assert blocks.a_block.shape == (1, 1)
    assert blocks.d_block.shape == (2, 2)
    assert blocks.b_block.shape == (1, 2)
    assert blocks.reassemble() == blocks.substituted


def test_blocks_reject_gauge_of_wrong_size():
    """A gauge that does not partition the fields is a validation error."""
    pencil, _ = builtin("kdv")

    with pytest.raises(ValidationError) as exc_info:
        adapted_blocks(pencil, GaugeSpec.create([0], {1: 0}))

    assert exc_info.value.message.startswith("gauge does not fit kdv")


# Test dirac_reduce
def test_kdv_reduction_matches_printed_pencil(kdv):
    """P1 = -2 D and P2 = -u_x - 2 u D + eps^2/2 D^3."""
    _, reduced = kdv

    assert reduced.operator == references.KDV.operator()
    assert reduced.size == 1
    assert reduced.field_names == ("w1",)


def test_kdv_reduction_reassembles(kdv):
    """The block factorization recovers the substituted pencil."""
    assert reassembly_check(kdv[1])


def test_kdv_liouville_field_projects(kdv):
    """Z = A is tangent to the KdV slice and restricts to Z' = 1."""
    _, reduced = kdv

    assert reduced.liouville is not None
    assert reduced.liouville.characteristic == (parse_diffpoly("1", ["u"]),)


def test_camassa_holm_reduction():
    """P1 = -u_x - 2 u D and P2 = -2 D + eps^2/2 D^3."""
    pencil, gauge = builtin("camassa-holm")

    reduced = dirac_reduce(pencil, gauge)

    assert reduced.operator == references.CAMASSA_HOLM.operator()
    assert reduced.liouville is None
    assert reassembly_check(reduced)


def test_identity_gauge_keeps_the_pencil():
    """Without eliminated fields the reduction is the pencil itself."""
    pencil, gauge = builtin("scalar")

    reduced = dirac_reduce(pencil, gauge)

    assert reduced.operator == pencil.operator
    assert reduced.d_inverse_order == 0
    assert reassembly_check(reduced)


def test_reduced_pencil_as_instance(kdv):
    """A reduced pencil is a pencil without an algebra."""
    instance = kdv[1].as_instance()

    assert instance.name == "kdv/Q"
    assert instance.algebra is None
    assert instance.validate() is instance


@pytest.mark.slow
def test_so5_reduction_matches_printed_pencil():
    """The so(5) slice gives the printed 2x2 pencil in the opposite convention."""
    pencil, gauge = builtin("so5")

    reduced = dirac_reduce(pencil, gauge)

    assert reduced.operator.opposite() == references.SO5.operator()
    assert reassembly_check(reduced)


@pytest.mark.slow
def test_sl3_fractional_reduction_matches_printed_pencil():
    """The sl(3) fractional slice gives the printed 4x4 pencil."""
    pencil, gauge = builtin("sl3-frac")

    reduced = dirac_reduce(pencil, gauge)

    assert reduced.operator.opposite() == references.SL3_FRACTIONAL.operator()


# Test project_liouville
def test_project_liouville():
    """Only constant fields with vanishing eliminated components project."""
    gauge = GaugeSpec.create([0], {1: 0})

    assert project_liouville(EvolutionaryField.constant([2, 0]), gauge).characteristic[0] == 2
    assert project_liouville(EvolutionaryField.constant([2, 1]), gauge) is None
    assert project_liouville(EvolutionaryField.identity(2), gauge) is None
    assert project_liouville(None, gauge) is None


def test_gauge_constants_are_kept():
    """Fixed values of the gauge are stored as fractions."""
    _, gauge = builtin("kdv")

    assert gauge.fixed[2] == Fraction(1)
