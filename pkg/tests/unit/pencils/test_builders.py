"""
Unit tests for the pencil builders and the builtin registry.
"""

from fractions import Fraction

import pytest

from poisson_pencils.algebra import build_algebra, highest_root_data
from poisson_pencils.core.exceptions import ConstructionError, NotFoundError, ValidationError
from poisson_pencils.diffring import DiffPoly, MatDiffOp, parse_diffpoly, parse_operator
from poisson_pencils.pencils import (
    Chart,
    builtin,
    builtin_names,
    ch_pencil,
    chart_operator,
    chart_pencil,
    ds_pencil,
    is_builtin,
    kdv_pencil,
    scalar_deformation_pencil,
)


# Test ds_pencil
def test_kdv_pencil_shape():
    """The sl(2) pencil acts on three fields and is valid."""
    pencil = kdv_pencil()

    assert pencil.size == 3
    assert pencil.variant == "ds"
    assert pencil.validate() is pencil
    assert pencil.operator.lam_degree() == 1


def test_ds_metric_part_is_the_form():
    """The D-coefficients are -<phi_a, phi_b>."""
    alg = build_algebra("A", 1)
    pencil = kdv_pencil()
    g_inverse_yx = pencil.operator[0, 2].coefficient(1)

    pairing = alg.pairing(Chart.dual(alg).duals[0], Chart.dual(alg).duals[2])
    assert g_inverse_yx == DiffPoly.constant(-pairing)


def test_ds_pencil_liouville_field_is_a():
    """The Liouville field of a DS pencil is the constant field A."""
    alg = build_algebra("A", 2)
    a = highest_root_data(alg)[0]

    pencil = ds_pencil(alg, a)

    assert pencil.liouville.is_constant
    assert pencil.name == "ds-A2"
    assert pencil.validate() is pencil


def test_zero_distinguished_element():
    """A must be nonzero."""
    alg = build_algebra("A", 1)

    with pytest.raises(ConstructionError):
        ds_pencil(alg, (Fraction(0),) * alg.dim)


def test_wrong_length_of_a():
    """A must have dim g coordinates."""
    with pytest.raises(ConstructionError):
        ds_pencil(build_algebra("A", 1), (1, 0))


def test_unknown_chart_variant():
    """Chart pencils come in the ds and swapped-ch variants."""
    alg = build_algebra("A", 1)

    with pytest.raises(ValidationError):
        chart_operator(alg, Chart.dual(alg), highest_root_data(alg)[0], variant="other")


def test_swapped_variant_puts_lam_on_the_fields():
    """For swapped-ch, lam multiplies the field-dependent part."""
    pencil = ch_pencil()
    p1, p2 = pencil.pair()

    assert pencil.variant == "swapped-ch"
    assert not p2.fields()
    assert p2.lam_degree() == 0
    assert p1.fields()


def test_chart_pencil_keeps_names():
    """Field names are kept in the given order."""
    alg = build_algebra("A", 1)
    pencil = chart_pencil(alg, Chart.dual(alg), highest_root_data(alg)[0], "named", ["y", "h", "x"])

    assert pencil.field_names == ["y", "h", "x"]


# Test scalar_deformation_pencil
def test_scalar_pencil_for_constant_c():
    """c = 1 gives 2 (u - lam) D + u_x + 2 eps^2 D^3."""
    pencil = scalar_deformation_pencil(DiffPoly.one())

    assert pencil.operator == MatDiffOp.scalar(parse_operator("2*(u - lam)*D + u_x + 2*eps^2*D^3", ["u"]))
    assert pencil.validate() is pencil


def test_scalar_pencil_for_linear_c():
    """c = u adds the derivatives of c."""
    pencil = scalar_deformation_pencil(parse_diffpoly("u", ["u"]))

    expected = "2*(u - lam)*D + u_x + eps^2*(2*u*D^3 + 3*u_x*D^2 + u_xx*D)"
    assert pencil.operator == MatDiffOp.scalar(parse_operator(expected, ["u"]))
    assert pencil.validate() is pencil


@pytest.mark.parametrize("c", ["u_x", "eps*u", "lam"])
def test_scalar_pencil_rejects_bad_c(c):
    """c depends on u alone."""
    with pytest.raises(ValidationError):
        scalar_deformation_pencil(parse_diffpoly(c, ["u"]))


# Test registry
def test_builtin_names():
    """Every builtin resolves to a pencil and a gauge that fits it."""
    for name in builtin_names():
        pencil, gauge = builtin(name)
        assert gauge.validate(pencil.size) is gauge
        assert is_builtin(name)


def test_builtin_gauges():
    """The KdV slice keeps w1 and fixes (w2, w3) = (0, 1)."""
    _, gauge = builtin("kdv")

    assert gauge.retained == (0,)
    assert gauge.fixed == {1: Fraction(0), 2: Fraction(1)}


def test_inline_scalar_family():
    """scalar:c=<expr> builds the scalar pencil for that c."""
    pencil, _ = builtin("scalar:c=u^2+1")

    assert pencil.name == "scalar:c=u^2+1"
    assert pencil.operator[0, 0].coefficient(3) == parse_diffpoly("2*eps^2*(u^2 + 1)", ["u"])


@pytest.mark.parametrize("name", ["scalar:x=1", "scalar:c=", "scalar:c=v"])
def test_inline_scalar_errors(name):
    """Malformed inline arguments are validation errors."""
    with pytest.raises(ValidationError):
        builtin(name)


@pytest.mark.parametrize("name", ["kdv2", "so7", "kdv:c=1"])
def test_unknown_builtin(name):
    """Unknown names raise NotFoundError."""
    with pytest.raises(NotFoundError):
        builtin(name)
