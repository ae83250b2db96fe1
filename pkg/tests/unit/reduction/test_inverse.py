"""
Unit tests for the inversion of the D-block.
"""

import pytest

from poisson_pencils.core.exceptions import ReductionError
from poisson_pencils.diffring import MatDiffOp, parse_operator
from poisson_pencils.reduction import invert_d

NAMES = ["u"]


def _matrix(*rows):
    return MatDiffOp([[parse_operator(entry, NAMES) for entry in row] for row in rows])


# Test invert_d
def test_nilpotent_neumann_series_terminates():
    """[[2/eps, D], [0, 2/eps]] inverts after one Neumann step."""
    d = _matrix(["2*eps^-1", "D"], ["0", "2*eps^-1"])

    inverse = invert_d(d)

    assert inverse.order == 1
    assert inverse.leading_eps == -1
    assert d @ inverse.operator == MatDiffOp.identity(2)
    assert inverse.operator[0, 1] == parse_operator("-1/4*eps^2*D", NAMES)


def test_constant_block():
    """A constant block inverts without a series."""
    d = _matrix(["0", "eps^-1"], ["-eps^-1", "0"])

    inverse = invert_d(d)

    assert inverse.order == 0
    assert inverse.operator == _matrix(["0", "-eps"], ["eps", "0"])


def test_empty_block():
    """Nothing to invert for an empty block."""
    assert invert_d(MatDiffOp.zeros(0, 0)).operator.shape == (0, 0)


def test_singular_leading_part():
    """A pure derivation has a vanishing leading part."""
    with pytest.raises(ReductionError):
        invert_d(_matrix(["D"]))


def test_zero_block():
    """The zero block has no inverse."""
    with pytest.raises(ReductionError):
        invert_d(MatDiffOp.zeros(1, 1))


def test_field_dependent_determinant():
    """A leading part with non-constant determinant has no polynomial inverse."""
    with pytest.raises(ReductionError):
        invert_d(_matrix(["eps^-1*u"]))


def test_non_terminating_series():
    """2/eps + D needs an infinite series."""
    with pytest.raises(ReductionError):
        invert_d(_matrix(["2*eps^-1 + D"]), max_order=5)
