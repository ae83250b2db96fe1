"""
Eigenvalues of ad(I - lam E_theta) scale as lam^(1/h) times those of ad(I - E_theta).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath

from ..algebra import LieAlg, highest_root_data, principal_nilpotent
from ..core.config import settings
from ..core.logging import get_logger
from ..core.utils import to_fraction

logger = get_logger(__name__)


@dataclass(frozen=True)
class ScalingSample:
    lam: Fraction
    distance: float
    zero_modes: int


@dataclass(frozen=True)
class EigenScalingReport:
    algebra: str
    coxeter: int
    rank: int
    reference_zero_modes: int
    samples: Tuple[ScalingSample, ...]
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.reference_zero_modes == self.rank and all(
            s.distance < self.tolerance and s.zero_modes == self.rank for s in self.samples
        )


def cyclic_element(alg: LieAlg, lam: Fraction) -> Tuple[Fraction, ...]:
    """Lambda_lam = I - lam E_theta."""
    e_theta, _ = highest_root_data(alg)
    return tuple(i - lam * e for i, e in zip(principal_nilpotent(alg), e_theta))


def ad_spectrum(alg: LieAlg, x: Sequence[Fraction]) -> List:
    matrix = mpmath.matrix([[mpmath.mpf(v.numerator) / v.denominator for v in row] for row in alg.ad_matrix(x)])
    eigenvalues, _ = mpmath.eig(matrix)
    return list(eigenvalues)


def hausdorff(left: Sequence, right: Sequence) -> float:
    if not left or not right:
        return 0.0 if len(left) == len(right) else float("inf")
    forward = max(min(abs(a - b) for b in right) for a in left)
    backward = max(min(abs(a - b) for a in left) for b in right)
    return float(max(forward, backward))


def _zero_modes(spectrum: Sequence, tol: float) -> int:
    return sum(1 for e in spectrum if abs(e) < tol)


def eigen_scaling_check(
    alg: LieAlg,
    lambda_samples: Sequence = (2, 3),
    tol: Optional[float] = None,
    precision: Optional[int] = None,
) -> EigenScalingReport:
    tol = settings.numeric.eigen_tol if tol is None else tol
    precision = settings.numeric.precision if precision is None else precision
    h = alg.coxeter
    with mpmath.workdps(precision):
        reference = ad_spectrum(alg, cyclic_element(alg, Fraction(1)))
        samples = []
        for value in lambda_samples:
            lam = to_fraction(value)
            factor = mpmath.root(mpmath.mpf(lam.numerator) / lam.denominator, h)
            spectrum = ad_spectrum(alg, cyclic_element(alg, lam))
            samples.append(
                ScalingSample(
                    lam=lam,
                    distance=hausdorff(spectrum, [factor * e for e in reference]),
                    zero_modes=_zero_modes(spectrum, tol),
                )
            )
        reference_zero_modes = _zero_modes(reference, tol)
    report = EigenScalingReport(
        algebra=alg.name,
        coxeter=h,
        rank=alg.rank,
        reference_zero_modes=reference_zero_modes,
        samples=tuple(samples),
        tolerance=tol,
    )
    logger.info("eigen scaling on %s: ok %s", alg.name, report.ok)
    return report
