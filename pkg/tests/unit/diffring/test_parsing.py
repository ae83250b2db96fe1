"""
Unit tests for parsing and printing.
"""

from fractions import Fraction

import pytest

from poisson_pencils.core.exceptions import ValidationError
from poisson_pencils.diffring import (
    DiffPoly,
    MatDiffOp,
    default_names,
    format_diffop,
    format_diffpoly,
    format_matrix,
    parse_diffpoly,
    parse_matrix,
    parse_operator,
)


# Test parse_diffpoly
def test_parse_jet_variables():
    """u_x, u_xx, u_xxx and u_x4 are derivatives of increasing order."""
    poly = parse_diffpoly("u_x + u_xx + u_xxx + u_x4", ["u"])

    assert poly == sum((DiffPoly.field(0, s) for s in range(1, 5)), DiffPoly.zero())


def test_parse_parameters():
    """eps and lam map to the deformation and pencil parameters."""
    assert parse_diffpoly("eps^-1*lam", ["u"]) == DiffPoly.eps(-1) * DiffPoly.lam()


@pytest.mark.parametrize("text", ["u +", "v", "u*D", "1/u", "sqrt(u)"])
def test_parse_diffpoly_rejects_bad_input(text):
    """Syntax errors, unknown names, D and non-polynomials are rejected."""
    with pytest.raises(ValidationError):
        parse_diffpoly(text, ["u"])


def test_reserved_field_names():
    """Fields may not be called eps, lam or D."""
    with pytest.raises(ValidationError):
        parse_diffpoly("lam", ["lam"])


# Test parse_operator
def test_parse_operator_collects_orders():
    """Terms are grouped by the power of D."""
    operator = parse_operator("2*u*D + u_x - 1/2*eps^2*D^3", ["u"])

    assert operator.coefficient(1) == DiffPoly.field(0) * 2
    assert operator.coefficient(0) == DiffPoly.field(0, 1)
    assert operator.coefficient(3) == DiffPoly.eps(2) * Fraction(-1, 2)
    assert operator.order == 3


def test_parse_operator_mixed_orders():
    """A D-free term next to a first-order term lands at order zero."""
    operator = parse_operator("-u_x - 2*u*D + 1/2*eps^2*D^3", ["u"])

    assert operator.coefficient(0) == DiffPoly.field(0, 1) * -1
    assert operator.coefficient(1) == DiffPoly.field(0) * -2
    assert operator.coefficient(3) == DiffPoly.eps(2) * Fraction(1, 2)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("u_x", DiffPoly.field(0, 1)),
        ("eps^-1*(u - lam)", DiffPoly.eps(-1) * (DiffPoly.field(0) - DiffPoly.lam())),
        ("3", DiffPoly.constant(3)),
    ],
)
def test_parse_operator_function_entry(text, expected):
    """An entry without D is a multiplication operator."""
    operator = parse_operator(text, ["u"])

    assert operator.order == 0
    assert operator.coefficient(0) == expected


def test_parse_operator_zero_entry():
    """'0' parses to the zero operator."""
    assert parse_operator("0", ["u"]).is_zero


@pytest.mark.parametrize("text", ["D^-1", "u/D", "D^(1/2)"])
def test_parse_operator_rejects_bad_powers(text):
    """Only nonnegative integer powers of D are operators."""
    with pytest.raises(ValidationError):
        parse_operator(text, ["u"])


def test_parse_matrix_with_function_entries():
    """Matrices mix function and derivation entries."""
    matrix = parse_matrix([["0", "eps^-1*u"], ["-eps^-1*u", "D"]], ["u", "v"])

    assert matrix.entries[0][1].coefficient(0) == DiffPoly.eps(-1) * DiffPoly.field(0)
    assert matrix.entries[1][1].order == 1


def test_parse_matrix_requires_square_input():
    """parse_matrix rejects ragged rows."""
    with pytest.raises(ValidationError):
        parse_matrix([["D", "0"]], ["u"])


# Test printing
def test_format_diffpoly_text():
    """Text form writes coefficients, parameters and jet names."""
    poly = parse_diffpoly("u_xx*eps^2 - 1/2*u", ["u"])

    assert format_diffpoly(poly, ["u"]) == "-1/2*u + eps^2*u_xx"


def test_format_diffop_text():
    """Operators print in normal order, highest derivative first."""
    operator = parse_operator("2*u*D + u_x", ["u"])

    assert format_diffop(operator, ["u"]) == "2*u*D + u_x"


def test_printed_operator_parses_back():
    """The text form is accepted by the parser."""
    names = ["u", "v"]
    operator = parse_operator("eps^-1*(u - lam) + v*D - 1/3*eps^2*u_x*D^2", names)

    assert parse_operator(format_diffop(operator, names), names) == operator


def test_format_matrix_latex():
    """LaTeX output is a pmatrix with partial derivatives."""
    matrix = MatDiffOp.scalar(parse_operator("D^3", ["u"]))

    text = format_matrix(matrix, ["u"], latex=True)

    assert text.startswith("\\begin{pmatrix}")
    assert "\\partial_x^{3}" in text


def test_default_names_are_one_based():
    """Unnamed fields are w1, w2, ..."""
    assert default_names(3) == ["w1", "w2", "w3"]
