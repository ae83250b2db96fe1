"""
Unit tests for the eigenvalue scaling of ad(I - lam E_theta).
"""

from fractions import Fraction

import pytest

from poisson_pencils.algebra import build_algebra
from poisson_pencils.invariants import cyclic_element, eigen_scaling_check, hausdorff


# Test cyclic_element
def test_cyclic_element_of_sl2():
    """Lambda_lam = Y - lam X."""
    alg = build_algebra("A", 1)

    assert cyclic_element(alg, Fraction(2)) == alg.vector({"Y1": 1, "X1": -2})


# Test hausdorff
@pytest.mark.parametrize(
    "left,right,expected",
    [([1, 2], [2, 1], 0.0), ([], [], 0.0), ([0], [3], 3.0), ([1], [], float("inf"))],
)
def test_hausdorff(left, right, expected):
    """Hausdorff distance between finite sets of numbers."""
    assert hausdorff(left, right) == expected


# Test eigen_scaling_check
@pytest.mark.parametrize("descriptor,lambdas", [("A1", (4,)), ("A2", (2, 3)), ("B2", (2, 3))])
def test_eigenvalues_scale_with_the_coxeter_root(descriptor, lambdas):
    """Eigenvalues of ad Lambda_lam are lam^(1/h) times those of ad Lambda_1; rank zero modes."""
    alg = build_algebra(descriptor[0], int(descriptor[1:]))

    report = eigen_scaling_check(alg, lambdas)

    assert report.ok
    assert report.reference_zero_modes == alg.rank
    assert [s.zero_modes for s in report.samples] == [alg.rank] * len(lambdas)
