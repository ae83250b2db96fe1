from dataclasses import dataclass
from typing import Optional

from ..core.exceptions import SkewAdjointnessError
from ..core.logging import get_logger
from ..diffring import EvolutionaryField, MatDiffOp
from ..pencils import GaugeSpec, PencilInstance
from .blocks import BlockDecomposition, adapted_blocks
from .inverse import DInverse, invert_d

logger = get_logger(__name__)


@dataclass(frozen=True)
class ReducedPencil:
    operator: MatDiffOp
    source: str
    gauge: GaugeSpec
    d_inverse_order: int
    field_names: tuple
    variant: str
    liouville: Optional[EvolutionaryField]
    blocks: BlockDecomposition
    d_inverse: DInverse

    @property
    def size(self) -> int:
        return self.operator.size

    def pair(self):
        return self.operator.pair()

    def as_instance(self) -> PencilInstance:
        """The reduced pencil as a pencil in its own right, without an algebra."""
        return PencilInstance(
            name=f"{self.source}/Q",
            operator=self.operator,
            variant=self.variant,
            field_names=list(self.field_names),
            liouville=self.liouville,
        )


def project_liouville(
    z: Optional[EvolutionaryField], gauge: GaugeSpec
) -> Optional[EvolutionaryField]:
    """Restriction of a constant field tangent to Q; None when there is none."""
    if z is None or not z.is_constant:
        return None
    if any(z.characteristic[k] for k in gauge.eliminated):
        return None
    return EvolutionaryField(tuple(z.characteristic[k] for k in gauge.retained))


def dirac_reduce(
    pencil: PencilInstance, gauge: GaugeSpec, max_order: Optional[int] = None
) -> ReducedPencil:
    """The reduced pencil a - b d^-1 c on the gauge slice Q."""
    blocks = adapted_blocks(pencil, gauge)
    d_inverse = invert_d(blocks.d_block, max_order)
    if blocks.d_block.size:
        operator = blocks.a_block - blocks.b_block @ d_inverse.operator @ blocks.c_block
    else:
        operator = blocks.a_block
    defects = operator.skew_defects()
    if defects:
        raise SkewAdjointnessError(
            f"reduced {pencil.name} is not skew-adjoint", details=[list(d) for d in defects]
        )
    logger.debug(
        "reduced %s from %d to %d fields", pencil.name, pencil.size, len(gauge.retained)
    )
    return ReducedPencil(
        operator=operator,
        source=pencil.name,
        gauge=gauge,
        d_inverse_order=d_inverse.order,
        field_names=tuple(pencil.field_names[k] for k in gauge.retained),
        variant=pencil.variant,
        liouville=project_liouville(pencil.liouville, gauge),
        blocks=blocks,
        d_inverse=d_inverse,
    )


def reassembly_check(reduced: ReducedPencil) -> bool:
    """
    [[Id, B D^-1], [0, Id]] [[P', 0], [0, D]] [[Id, 0], [D^-1 C, Id]] equals the
    substituted pencil in adapted coordinates.
    """
    blocks = reduced.blocks
    r, s = reduced.size, blocks.d_block.size
    if not s:
        return reduced.operator == blocks.substituted
    d_inv = reduced.d_inverse.operator
    identity_r, identity_s = MatDiffOp.identity(r), MatDiffOp.identity(s)
    left = MatDiffOp.block(
        [[identity_r, blocks.b_block @ d_inv], [MatDiffOp.zeros(s, r), identity_s]]
    )
    middle = MatDiffOp.block(
        [[reduced.operator, MatDiffOp.zeros(r, s)], [MatDiffOp.zeros(s, r), blocks.d_block]]
    )
    right = MatDiffOp.block(
        [[identity_r, MatDiffOp.zeros(r, s)], [d_inv @ blocks.c_block, identity_s]]
    )
    return left @ middle @ right == blocks.substituted
