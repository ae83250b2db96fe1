"""
Unit tests for Miura-type transformations.
"""

import pytest

from poisson_pencils.core.exceptions import MiuraError
from poisson_pencils.diffring import MatDiffOp, MiuraMap, miura_apply, parse_diffpoly, parse_operator

NAMES = ["u"]


def _map(text: str) -> MiuraMap:
    return MiuraMap([parse_diffpoly(text, NAMES)])


# Test MiuraMap validation
@pytest.mark.parametrize(
    "text",
    [
        "eps*u_x",  # no invertible leading part
        "u + u_x",  # eps power differs from the differential degree
        "u^2",  # leading part not affine
        "u + lam",  # depends on lam
    ],
)
def test_invalid_maps_are_rejected(text):
    """Non-invertible, inhomogeneous, nonlinear or lam-dependent maps raise."""
    with pytest.raises(MiuraError):
        _map(text)


def test_identity_map():
    """u -> u is recognised as the identity."""
    assert _map("u").is_identity
    assert not _map("u + eps*u_x").is_identity


# Test inverse_images
def test_inverse_series():
    """u = v - eps v_x + eps^2 v_xx + ... for v = u + eps u_x."""
    images = _map("u + eps*u_x").inverse_images(2)

    assert images[0] == parse_diffpoly("u - eps*u_x + eps^2*u_xx", NAMES)


def test_inverse_of_affine_map():
    """Affine maps invert exactly."""
    images = _map("2*u + 3").inverse_images(4)

    assert images[0] == parse_diffpoly("1/2*u - 3/2", NAMES)


# Test apply
def test_first_operator_picks_up_dispersion():
    """-2 D becomes -2 D + 2 eps^2 D^3 under u -> u + eps u_x."""
    operator = MatDiffOp.scalar(parse_operator("-2*D", NAMES))

    result = miura_apply([parse_diffpoly("u + eps*u_x", NAMES)], operator, 8)

    assert result.operator == MatDiffOp.scalar(parse_operator("-2*D + 2*eps^2*D^3", NAMES))
    assert not result.truncated


def test_size_mismatch():
    """The operator must act on as many fields as the map has components."""
    with pytest.raises(MiuraError):
        _map("u").apply(MatDiffOp.identity(2), 2)
