"""
Unit tests for differential polynomials.
"""

from fractions import Fraction

import pytest

from poisson_pencils.diffring import DiffPoly, parse_diffpoly

u = DiffPoly.field(0)
u_x = DiffPoly.field(0, 1)


def _poly(text: str) -> DiffPoly:
    return parse_diffpoly(text, ["u", "v"])


# Test arithmetic
def test_zero_coefficients_are_dropped():
    """Cancelling terms leave the zero polynomial."""
    assert (u - u).is_zero
    assert DiffPoly({((), 0, 0): 0}).is_zero


def test_power_and_product():
    """Powers multiply exponents of jet variables."""
    assert u**3 == u * u * u
    assert (u + 1) ** 2 == u * u + u * 2 + 1


def test_negative_power_raises():
    """Negative powers are not differential polynomials."""
    with pytest.raises(ValueError):
        u ** -1


# Test derivative
def test_total_derivative_uses_chain_rule():
    """d/dx u^2 = 2 u u_x."""
    assert (u * u).derivative() == u * u_x * 2


def test_derivatives_list():
    """derivatives returns the function and its successive derivatives."""
    assert _poly("u*v").derivatives(1) == [_poly("u*v"), _poly("u_x*v + u*v_x")]


def test_derivative_of_constant_vanishes():
    """Constants and parameters have zero derivative."""
    assert (DiffPoly.eps(2) * DiffPoly.lam()).derivative().is_zero


# Test partial
def test_partial_derivative():
    """partial differentiates with respect to one jet variable."""
    f = _poly("u^2*u_xx + 3*u_x")

    assert f.partial(0, 0) == _poly("2*u*u_xx")
    assert f.partial(0, 2) == _poly("u^2")
    assert f.partial(0, 1) == 3


# Test projections
def test_eps_and_lam_coefficients():
    """eps_coefficient and lam_coefficient strip the parameter."""
    f = _poly("eps^2*u_xx + lam*u - eps^-1*v")

    assert f.eps_coefficient(2) == _poly("u_xx")
    assert f.eps_coefficient(-1) == _poly("-v")
    assert f.lam_coefficient(1) == _poly("u")
    assert f.eps_exponents() == {-1, 0, 2}
    assert f.lam_degree() == 1


def test_linear_coefficient():
    """linear_coefficient reads Gamma-type coefficients of w_x."""
    f = _poly("2*u*v_x + u_x*v_x")

    assert f.linear_coefficient(1, 1) == _poly("2*u")


# Test substitutions
def test_substitute_differentiates_images():
    """Substituting u -> u + eps*u_x replaces u_x by its derivative."""
    images = {0: _poly("u + eps*u_x")}

    assert _poly("u_x").substitute(images) == _poly("u_x + eps*u_xx")


def test_substitute_constants_kills_derivatives():
    """Pinned fields become constants with vanishing derivatives."""
    f = _poly("u*v + v_x + 2")

    assert f.substitute_constants({1: Fraction(3)}) == _poly("3*u + 2")


def test_evaluate_and_rename():
    """evaluate at a point; rename permutes the fields."""
    f = _poly("u^2 - lam*v")

    assert f.evaluate([Fraction(2), Fraction(1)], lam=5) == -1
    assert f.rename({0: 1, 1: 0}) == _poly("v^2 - lam*u")


def test_evaluate_refuses_derivatives():
    """Jet variables of positive order have no point value."""
    with pytest.raises(ValueError):
        _poly("u_x").evaluate([Fraction(1), Fraction(1)])
