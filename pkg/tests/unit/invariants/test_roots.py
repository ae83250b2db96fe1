"""
Unit tests for the expansion of lam-roots.
"""

from fractions import Fraction

import mpmath
import pytest
from sympy import expand

from poisson_pencils.core.exceptions import SemisimplicityError, ValidationError
from poisson_pencils.diffring import LAM
from poisson_pencils.invariants import P, CharPoly, char_poly, lambda_roots, symbol
from poisson_pencils.services import references


@pytest.fixture
def kdv_char_poly():
    """Characteristic polynomial of the reduced KdV pencil."""
    return char_poly(symbol(references.KDV.operator()))


# Test lambda_roots
def test_kdv_root_is_exact(kdv_char_poly):
    """lam(p) = u - p^2/4 with exact coefficients."""
    expansion = lambda_roots(kdv_char_poly, [Fraction(3)], order=4)

    (root,) = expansion.roots
    assert root.exact
    assert root.coefficients == (3, 0, Fraction(-1, 4), 0, 0)
    assert root.lambda2 == Fraction(-1, 4)
    assert expansion.p_power == 1
    assert expansion.odd_max == 0


def test_points_may_be_mappings(kdv_char_poly):
    """Points are given as sequences or index maps."""
    expansion = lambda_roots(kdv_char_poly, {0: "1/2"}, order=2)

    assert expansion.roots[0].u == Fraction(1, 2)
    assert expansion.base_point == (Fraction(1, 2),)


def test_irrational_roots_use_mpmath():
    """Non-rational roots are expanded at high precision."""
    cp = CharPoly(poly=expand(P * (LAM**2 - 2) + P**3), lambda_degree=2, size=2)

    expansion = lambda_roots(cp, {}, order=2, precision=30)

    assert len(expansion.roots) == 2
    with mpmath.workdps(30):
        for root in expansion.roots:
            assert not root.exact
            assert abs(root.u**2 - 2) < mpmath.mpf(10) ** -25
            assert abs(root.lambda2 + 1 / (2 * root.u)) < mpmath.mpf(10) ** -20


@pytest.mark.parametrize("order", [1, 3, 0])
def test_order_must_be_even(kdv_char_poly, order):
    """Expansion orders are even and at least 2."""
    with pytest.raises(ValidationError):
        lambda_roots(kdv_char_poly, [Fraction(1)], order=order)


def test_missing_field_values(kdv_char_poly):
    """Every field must be fixed by the point."""
    with pytest.raises(ValidationError):
        lambda_roots(kdv_char_poly, {}, order=2)


def test_repeated_roots():
    """Colliding canonical coordinates are not semisimple."""
    cp = CharPoly(poly=expand(P * (LAM - 1) ** 2 + P**3), lambda_degree=2, size=2)

    with pytest.raises(SemisimplicityError):
        lambda_roots(cp, {}, order=2)


def test_vanishing_polynomial():
    """A vanishing characteristic polynomial has no roots."""
    with pytest.raises(SemisimplicityError):
        lambda_roots(CharPoly(poly=expand(P * 0), lambda_degree=0, size=1), {}, order=2)
