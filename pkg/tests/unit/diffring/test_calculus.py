"""
Unit tests for jet-space calculus.
"""

from poisson_pencils.diffring import (
    DiffPoly,
    EvolutionaryField,
    MatDiffOp,
    frechet,
    grading_check,
    lie_derivative,
    parse_diffpoly,
    parse_operator,
    prolong_apply,
    total_x_derivative,
)

NAMES = ["u"]


def _scalar(text: str) -> MatDiffOp:
    return MatDiffOp.scalar(parse_operator(text, NAMES))


# Test frechet
def test_frechet_derivative():
    """L* of u u_x is u_x + u D."""
    linearization = frechet([parse_diffpoly("u*u_x", NAMES)])

    assert linearization == _scalar("u*D + u_x")


# Test prolong_apply
def test_prolongation_of_constant_field():
    """A constant field acts by d/du on the undifferentiated variable only."""
    z = EvolutionaryField.constant([1])

    assert prolong_apply(z, parse_diffpoly("u^2 + u_x", NAMES)) == parse_diffpoly("2*u", NAMES)


def test_prolongation_of_euler_field():
    """The Euler field counts the degree of a homogeneous polynomial."""
    z = EvolutionaryField.identity(1)
    f = parse_diffpoly("u*u_xx", NAMES)

    assert prolong_apply(z, f) == f * 2


def test_total_x_derivative():
    """total_x_derivative matches DiffPoly.derivative."""
    f = parse_diffpoly("u^3", NAMES)

    assert total_x_derivative(f) == f.derivative()


# Test lie_derivative
def test_lie_derivative_along_constant_field():
    """L_Z (2 (u - lam) D + u_x) = 2 D for Z = 1."""
    z = EvolutionaryField.constant([1])

    assert lie_derivative(z, _scalar("2*u*D + u_x")) == _scalar("2*D")


def test_lie_derivative_along_euler_field():
    """The Euler field rescales a linear bracket by -1."""
    z = EvolutionaryField.identity(1)

    assert lie_derivative(z, _scalar("2*u*D + u_x")) == _scalar("-2*u*D - u_x")


# Test grading_check
def test_grading_accepts_graded_terms():
    """eps^-1 u, u D, u_x and eps^2 D^3 are all graded."""
    assert grading_check(_scalar("eps^-1*u + u*D + u_x + eps^2*D^3"))


def test_grading_rejects_ungraded_term():
    """u_xx at D^0 without eps breaks the grading."""
    verdict = grading_check(_scalar("u_xx"))

    assert not verdict.ok
    assert verdict.witness["degree"] == 2
    assert verdict.witness["eps"] == 0


def test_grading_respects_minimal_eps():
    """Terms below the minimal power of eps are rejected."""
    assert not grading_check(_scalar("eps^-2*D^0*u_x"), min_eps=-1)
    assert grading_check(_scalar("eps^-1*u"), min_eps=-1)
    assert not grading_check(_scalar("eps^-1*u"), min_eps=0)


def test_evolutionary_field_helpers():
    """Constant fields scale and report constancy."""
    z = EvolutionaryField.constant([1, 2]).scale(3)

    assert z.is_constant
    assert z.characteristic == (DiffPoly.constant(3), DiffPoly.constant(6))
    assert not EvolutionaryField.identity(2).is_constant
