"""
Unit tests for symbols and characteristic polynomials.
"""

import pytest
from sympy import Matrix, Poly, Rational, expand

from poisson_pencils.algebra import algebra_from_descriptor, highest_root_data
from poisson_pencils.core.exceptions import GradingError, IntegrityError, ValidationError
from poisson_pencils.diffring import LAM, MatDiffOp, MiuraMap, jet_symbol, parse_diffpoly, parse_operator
from poisson_pencils.invariants import (
    P,
    char_poly,
    charpoly_ratio,
    exact_ratio,
    lambda_degree_check,
    leaf_char_poly,
    miura_symbol_check,
    polynomial_det,
    symbol,
)
from poisson_pencils.pencils import ds_pencil, scalar_deformation_pencil
from poisson_pencils.services import references

u = jet_symbol(0)


@pytest.fixture
def kdv_operator():
    """The reduced KdV pencil."""
    return references.KDV.operator()


# Test symbol
def test_kdv_symbol(kdv_operator):
    """eps^k D^(k+1) goes to p^(k+1); derivative terms drop out."""
    entries = symbol(kdv_operator).matrix()

    assert expand(entries[0, 0] - (2 * (LAM - u) * P + P**3 / 2)) == 0


def test_symbol_is_antisymmetric(kdv_operator):
    """Skew-adjoint operators have pi(-p)^T = -pi(p)."""
    assert symbol(kdv_operator).antisymmetry_defects() == []


def test_symbol_substitution(kdv_operator):
    """subs pins field values."""
    pinned = symbol(kdv_operator).subs({0: 3})

    assert expand(pinned.matrix()[0, 0] - (2 * (LAM - 3) * P + P**3 / 2)) == 0


def test_symbol_rejects_ungraded_terms():
    """A derivative-free coefficient at the wrong power of D has no symbol."""
    with pytest.raises(GradingError):
        symbol(MatDiffOp.scalar(parse_operator("u*D^2", ["u"])))


# Test char_poly
def test_kdv_char_poly(kdv_operator):
    """The characteristic polynomial of KdV has lam-degree 1."""
    cp = char_poly(symbol(kdv_operator))

    assert cp.lambda_degree == 1
    assert lambda_degree_check(cp, 1)
    assert expand(cp.poly - references.kdv_char_poly()) == 0


def test_char_poly_at_point(kdv_operator):
    """at substitutes field values into R."""
    cp = char_poly(symbol(kdv_operator)).at({0: 1})

    assert not cp.poly.has(u)


# Test leaf_char_poly
@pytest.mark.parametrize(
    "descriptor",
    ["A1", "A2", pytest.param("B2", marks=pytest.mark.slow)],
)
def test_ds_leaf_lambda_degree_equals_rank(descriptor):
    """On the leaf through I the DS characteristic polynomial has lam-degree n."""
    alg = algebra_from_descriptor(descriptor)
    cp = leaf_char_poly(ds_pencil(alg, highest_root_data(alg)[0]))

    assert cp.lambda_degree == alg.rank
    assert lambda_degree_check(cp, alg.rank)
    assert not any(str(s).startswith("w") for s in cp.poly.free_symbols)


def test_sl2_leaf_char_poly_is_cubic_in_p():
    """The sl2 leaf polynomial is odd in p with a p^3 term."""
    alg = algebra_from_descriptor("A1")
    poly = leaf_char_poly(ds_pencil(alg, highest_root_data(alg)[0])).poly

    assert Poly(poly, P).degree() == 3
    assert expand(poly + poly.xreplace({P: -P})) == 0


def test_leaf_char_poly_needs_an_algebra():
    """Pencils without an algebra have no leaf."""
    with pytest.raises(ValidationError):
        leaf_char_poly(scalar_deformation_pencil(parse_diffpoly("1", ["u"])))


def test_polynomial_det():
    """Determinants stay polynomial; the empty determinant is 1."""
    assert polynomial_det(Matrix([[P, LAM], [1, P]])) == P**2 - LAM
    assert polynomial_det(Matrix(0, 0, [])) == 1


# Test exact_ratio
def test_exact_ratio_both_directions():
    """Ratios are exact in either direction of divisibility."""
    assert exact_ratio(4 * P * LAM, P * LAM) == 4
    assert exact_ratio(P, 3 * P) == Rational(1, 3)


def test_exact_ratio_of_unrelated_polynomials():
    """Non-proportional polynomials raise IntegrityError."""
    with pytest.raises(IntegrityError):
        exact_ratio(P + 1, P + 2)


def test_charpoly_ratio_flags(kdv_operator):
    """A polynomial ratio with itself is the constant 1."""
    cp = char_poly(symbol(kdv_operator))

    ratio = charpoly_ratio(cp, cp)

    assert ratio.value == 1
    assert ratio.constant
    assert ratio.lambda_free


# Test miura_symbol_check
@pytest.mark.parametrize("text", ["u + eps*u_x", "u + eps^2*u_xx", "u + eps^2*(u_xx + u_x^2)"])
def test_symbol_transformation_rule(kdv_operator, text):
    """The symbol transforms as l(p) pi(p) l(-p)^T."""
    miura = MiuraMap([parse_diffpoly(text, ["u"])])

    report = miura_symbol_check(miura, kdv_operator, 6)

    assert report.ok, report.defect
    assert report.p_order == 7
