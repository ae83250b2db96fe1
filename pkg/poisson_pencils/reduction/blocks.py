from dataclasses import dataclass
from typing import Tuple

from ..core.exceptions import ValidationError
from ..diffring import MatDiffOp
from ..pencils import GaugeSpec, PencilInstance


@dataclass(frozen=True)
class BlockDecomposition:
    """
    The pencil on Q in adapted coordinates (retained | eliminated), split as
    [[a, b], [c, d]].
    """

    a_block: MatDiffOp
    b_block: MatDiffOp
    c_block: MatDiffOp
    d_block: MatDiffOp
    gauge: GaugeSpec
    substituted: MatDiffOp

    @property
    def order(self) -> Tuple[int, ...]:
        return tuple(self.gauge.retained) + self.gauge.eliminated

    def reassemble(self) -> MatDiffOp:
        return MatDiffOp.block([[self.a_block, self.b_block], [self.c_block, self.d_block]])


def adapted_blocks(pencil: PencilInstance, gauge: GaugeSpec) -> BlockDecomposition:
    """Substitutes the gauge constants and permutes rows and columns to (retained | eliminated)."""
    try:
        gauge.validate(pencil.size)
    except ValidationError as exc:
        raise ValidationError(f"gauge does not fit {pencil.name}: {exc.message}", exc.details) from exc
    retained, eliminated = list(gauge.retained), list(gauge.eliminated)
    # retained fields are renumbered 0..r-1 in the order of the gauge
    substituted = pencil.operator.substitute_constants(gauge.fixed).rename(
        {old: new for new, old in enumerate(retained)}
    )
    order = retained + eliminated
    return BlockDecomposition(
        a_block=substituted.submatrix(retained, retained),
        b_block=substituted.submatrix(retained, eliminated),
        c_block=substituted.submatrix(eliminated, retained),
        d_block=substituted.submatrix(eliminated, eliminated),
        gauge=gauge,
        substituted=substituted.submatrix(order, order),
    )
