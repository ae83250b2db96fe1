"""
Unit tests for the sympy bridge.
"""

import pytest
from sympy import Rational, Symbol

from poisson_pencils.diffring import EPS, LAM, DiffPoly, from_sympy, jet_symbol, parse_diffpoly, to_sympy


# Test to_sympy
def test_to_sympy_uses_jet_symbols():
    """w{i}_{s} names the s-th derivative of field i."""
    poly = parse_diffpoly("1/2*u*v_x - lam", ["u", "v"])

    assert to_sympy(poly) == Rational(1, 2) * jet_symbol(0) * jet_symbol(1, 1) - LAM


def test_to_sympy_can_drop_eps():
    """eps=None sets the deformation parameter to 1."""
    poly = DiffPoly.eps(2) * DiffPoly.field(0, 2)

    assert to_sympy(poly) == EPS**2 * jet_symbol(0, 2)
    assert to_sympy(poly, eps=None) == jet_symbol(0, 2)


# Test from_sympy
def test_from_sympy_inverts_to_sympy():
    """from_sympy reads back what to_sympy writes."""
    poly = parse_diffpoly("eps^-1*u^2 + 3*lam*u_xx", ["u"])
    symbols = {jet_symbol(0, s): (0, s) for s in range(3)}

    assert from_sympy(to_sympy(poly), symbols) == poly


@pytest.mark.parametrize("expr", [Symbol("q"), 1 / jet_symbol(0), jet_symbol(0) ** Rational(1, 2)])
def test_from_sympy_rejects_non_polynomials(expr):
    """Unknown symbols and non-polynomial powers raise ValueError."""
    with pytest.raises(ValueError):
        from_sympy(expr, {jet_symbol(0): (0, 0)})
