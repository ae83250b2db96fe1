from .blocks import BlockDecomposition, adapted_blocks
from .checks import (
    KernelIntersectionReport,
    KernelPoint,
    SchurReport,
    adjoint_determinant,
    kernel_intersection_check,
    schur_check,
)
from .dirac import ReducedPencil, dirac_reduce, project_liouville, reassembly_check
from .inverse import DInverse, invert_d

__all__ = [
    "BlockDecomposition",
    "adapted_blocks",
    "KernelIntersectionReport",
    "KernelPoint",
    "SchurReport",
    "adjoint_determinant",
    "kernel_intersection_check",
    "schur_check",
    "ReducedPencil",
    "dirac_reduce",
    "project_liouville",
    "reassembly_check",
    "DInverse",
    "invert_d",
]
