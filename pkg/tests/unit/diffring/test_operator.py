"""
Unit tests for scalar and matrix differential operators.
"""

from fractions import Fraction

import pytest

from poisson_pencils.diffring import (
    DiffOp,
    DiffPoly,
    MatDiffOp,
    adjoint,
    compose,
    constant_matrix,
    parse_operator,
    pencil,
)

NAMES = ["u"]


def _op(text: str) -> DiffOp:
    return parse_operator(text, NAMES)


# Test compose
def test_compose_moves_derivation_right():
    """D o u = u D + u_x."""
    assert compose(DiffOp.derivation(), DiffOp.multiplication(DiffPoly.field(0))) == _op("u*D + u_x")


def test_compose_of_second_order():
    """D^2 o u = u D^2 + 2 u_x D + u_xx."""
    assert _op("D^2") @ _op("u") == _op("u*D^2 + 2*u_x*D + u_xx")


def test_compose_with_zero():
    """Composition with zero is zero."""
    assert compose(_op("D"), DiffOp.zero()).is_zero


# Test adjoint
def test_adjoint_of_first_order_operator():
    """(u D)^dagger = -u D - u_x."""
    assert adjoint(_op("u*D")) == _op("-u*D - u_x")


def test_adjoint_is_involutive():
    """The adjoint of the adjoint is the operator."""
    operator = _op("eps^2*u*D^3 + u_x*D^2 + 3*D")

    assert adjoint(adjoint(operator)) == operator


def test_hydrodynamic_operator_is_skew():
    """2 u D + u_x is skew-adjoint."""
    operator = MatDiffOp.scalar(_op("2*u*D + u_x"))

    assert operator.is_skew_adjoint()
    assert MatDiffOp.scalar(_op("u*D")).skew_defects() == [(0, 0)]


def test_negative_derivative_order_raises():
    """Negative powers of D are rejected."""
    with pytest.raises(ValueError):
        DiffOp({-1: 1})


# Test MatDiffOp
def test_matrix_product_and_identity():
    """Identity is neutral for composition."""
    operator = MatDiffOp([[_op("D"), _op("u")], [_op("-u"), _op("0")]])

    assert MatDiffOp.identity(2) @ operator == operator
    assert operator @ MatDiffOp.identity(2) == operator


def test_matrix_shape_mismatch():
    """Composing incompatible shapes raises."""
    with pytest.raises(ValueError):
        MatDiffOp.identity(2) @ MatDiffOp.identity(3)


def test_pencil_pair():
    """pair splits P2 - lam P1 into (P1, P2)."""
    p1 = MatDiffOp.scalar(_op("2*D"))
    p2 = MatDiffOp.scalar(_op("2*u*D + u_x"))

    assert pencil(p2, p1).pair() == (p1, p2)
    assert pencil(p2, p1).lam_degree() == 1


def test_block_and_submatrix():
    """block assembles blocks that submatrix takes apart."""
    a = constant_matrix([[1, 2], [3, 4]])
    whole = MatDiffOp.block([[a, MatDiffOp.zeros(2, 1)], [MatDiffOp.zeros(1, 2), MatDiffOp.identity(1)]])

    assert whole.shape == (3, 3)
    assert whole.submatrix([0, 1], [0, 1]) == a
    assert whole[2, 2] == DiffOp.multiplication(1)


def test_truncate_eps_reports_dropped_terms():
    """truncate_eps flags removed terms."""
    operator = MatDiffOp.scalar(_op("D + eps^3*D^4"))

    kept, dropped = operator.truncate_eps(2)

    assert kept == MatDiffOp.scalar(_op("D"))
    assert dropped


def test_substitute_constants_on_matrix():
    """Gauge constants enter every coefficient."""
    operator = MatDiffOp.scalar(_op("u*D + u_x"))

    assert operator.substitute_constants({0: Fraction(2)}) == MatDiffOp.scalar(_op("2*D"))
