from dataclasses import dataclass
from typing import Optional

from ..core.exceptions import ValidationError
from ..core.logging import get_logger
from ..diffring import EvolutionaryField, MatDiffOp, lie_derivative
from .instance import PencilInstance

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExactnessReport:
    """Residuals of L_Z P1 = 0 and L_Z P2 = P1."""

    pencil: str
    liouville: EvolutionaryField
    residual_p1: MatDiffOp
    residual_p2: MatDiffOp

    @property
    def p1_ok(self) -> bool:
        return self.residual_p1.is_zero

    @property
    def p2_ok(self) -> bool:
        return self.residual_p2.is_zero

    @property
    def ok(self) -> bool:
        return self.p1_ok and self.p2_ok


def check_exact(
    pencil: PencilInstance, liouville: Optional[EvolutionaryField] = None
) -> ExactnessReport:
    z = liouville or pencil.liouville
    if z is None:
        raise ValidationError(f"{pencil.name} carries no Liouville field")
    if len(z) != pencil.size:
        raise ValidationError(
            f"Liouville field has {len(z)} components, pencil has {pencil.size} fields"
        )
    p1, p2 = pencil.pair()
    residual_p1 = lie_derivative(z, p1)
    residual_p2 = lie_derivative(z, p2) - p1
    report = ExactnessReport(pencil.name, z, residual_p1, residual_p2)
    logger.info("exactness of %s: L_Z P1 = 0 %s, L_Z P2 = P1 %s", pencil.name, report.p1_ok, report.p2_ok)
    return report
