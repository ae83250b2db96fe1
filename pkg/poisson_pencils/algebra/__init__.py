from .lie import (
    LieAlg,
    algebra_from_descriptor,
    build_algebra,
    highest_root_data,
    invariance_defects,
    jacobi_defects,
    parse_descriptor,
    principal_nilpotent,
)
from .subspace import Subspace, eigenspace_dimensions, full_space, kernel_ad, orth_complement
from .table import Table1Row, classical_rows, exceptional_rows, expected_row, table1_report

__all__ = [
    "LieAlg",
    "algebra_from_descriptor",
    "build_algebra",
    "highest_root_data",
    "invariance_defects",
    "jacobi_defects",
    "parse_descriptor",
    "principal_nilpotent",
    "Subspace",
    "eigenspace_dimensions",
    "full_space",
    "kernel_ad",
    "orth_complement",
    "Table1Row",
    "classical_rows",
    "exceptional_rows",
    "expected_row",
    "table1_report",
]
