"""
Unit tests for the Schur factorization and kernel-intersection checks.
"""

import pytest
from sympy import Rational

from poisson_pencils.core.exceptions import ValidationError
from poisson_pencils.pencils import builtin
from poisson_pencils.reduction import adjoint_determinant, kernel_intersection_check, schur_check


# Test schur_check
def test_kdv_schur_factorization():
    """det pi = det delta det pi' with a lam-free delta and F_Q = 1/4."""
    pencil, gauge = builtin("kdv")

    report = schur_check(pencil, gauge)

    assert report.identity_holds
    assert report.det_delta_lambda_free
    assert report.f_q.value == Rational(1, 4)
    assert report.f_q.constant
    assert report.ok


def test_camassa_holm_quarter():
    """R_Q = R_M / 4 on the Camassa-Holm slice."""
    pencil, gauge = builtin("camassa-holm")

    report = schur_check(pencil, gauge)

    assert report.ok
    assert report.f_q.value == Rational(1, 4)


def test_adjoint_determinant_needs_an_algebra():
    """Pencils without a chart have no adjoint determinant."""
    pencil, gauge = builtin("scalar")

    assert adjoint_determinant(pencil, gauge) is None


@pytest.mark.slow
def test_sl3_fractional_adjoint_ratio():
    """R_Q = -1/3 det(-p - ad Xi) on the fractional sl(3) slice."""
    pencil, gauge = builtin("sl3-frac")

    report = schur_check(pencil, gauge)

    assert report.ok
    assert report.f_adjoint == Rational(-1, 3)


# Test kernel_intersection_check
def test_kdv_kernel_intersection_is_trivial():
    """ker pi1 and ker pi2 meet trivially on the leaf; w = A is degenerate."""
    pencil, _ = builtin("kdv")

    report = kernel_intersection_check(pencil, samples=3, seed=5)

    assert report.ok
    assert len(report.samples) == 3
    assert report.negative_control > 0
    assert all(sample.p_values[0] == 0 for sample in report.samples)


def test_kernel_intersection_is_reproducible():
    """The same seed gives the same sample points."""
    pencil, _ = builtin("kdv")

    first = kernel_intersection_check(pencil, samples=2, seed=9)
    second = kernel_intersection_check(pencil, samples=2, seed=9)

    assert [p.point for p in first.samples] == [p.point for p in second.samples]


def test_kernel_intersection_needs_an_algebra():
    """Scalar pencils are not loop-algebra pencils."""
    with pytest.raises(ValidationError):
        kernel_intersection_check(builtin("scalar")[0])
