from .common import Document, InputDocument, RationalStr, format_expr, format_number
from .operator import OperatorDocument, Term, entry_terms, operator_document, read_entry
from .pencil import GaugeDocument, PencilFile
from .reports import (
    AlgebraDocument,
    CheckEntry,
    ExactnessSummary,
    InvariantsDocument,
    KernelSummary,
    PencilDocument,
    ReduceDocument,
    SchurSummary,
    SuiteEntry,
    Table1Entry,
    VerifyDocument,
)

__all__ = [
    "Document",
    "InputDocument",
    "RationalStr",
    "format_expr",
    "format_number",
    "OperatorDocument",
    "Term",
    "entry_terms",
    "operator_document",
    "read_entry",
    "GaugeDocument",
    "PencilFile",
    "AlgebraDocument",
    "CheckEntry",
    "ExactnessSummary",
    "InvariantsDocument",
    "KernelSummary",
    "PencilDocument",
    "ReduceDocument",
    "SchurSummary",
    "SuiteEntry",
    "Table1Entry",
    "VerifyDocument",
]
