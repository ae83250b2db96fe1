from typing import List, Optional, Sequence, Tuple, Union

from pydantic import ConfigDict, Field

from ..core.base import BaseModel
from ..core.utils import format_rational, to_fraction
from ..diffring import DiffOp, DiffPoly, MatDiffOp, format_diffop, parse_operator
from .common import Document, RationalStr


class Term(BaseModel):
    """coefficient * eps^eps * lam^lam * prod (w^f_(s))^e * D^d"""

    model_config = ConfigDict(extra="forbid")

    coefficient: RationalStr
    variables: List[Tuple[int, int, int]] = Field(default_factory=list)
    eps: int = 0
    lam: int = Field(default=0, ge=0)
    d: int = Field(default=0, ge=0)


Entry = Union[str, List[Term]]


class OperatorDocument(Document):
    size: int
    fields: List[str]
    entries: List[List[List[Term]]]
    text: Optional[List[List[str]]] = None


def entry_terms(entry: DiffOp) -> List[Term]:
    terms = []
    for order, coefficient in sorted(entry.coeffs.items()):
        for (variables, eps, lam), value in coefficient:
            terms.append(
                Term(
                    coefficient=format_rational(value),
                    variables=[tuple(v) for v in variables],
                    eps=eps,
                    lam=lam,
                    d=order,
                )
            )
    return terms


def terms_entry(terms: Sequence[Term]) -> DiffOp:
    coeffs = {}
    for term in terms:
        poly = DiffPoly.constant(to_fraction(term.coefficient)) * DiffPoly.eps(term.eps) * DiffPoly.lam(term.lam)
        for field, order, exponent in term.variables:
            poly = poly * DiffPoly.field(field, order, exponent)
        coeffs[term.d] = coeffs[term.d] + poly if term.d in coeffs else poly
    return DiffOp(coeffs)


def read_entry(entry: Entry, names: Sequence[str]) -> DiffOp:
    """An entry is either normal-ordered text or a list of terms."""
    if isinstance(entry, str):
        return parse_operator(entry, names)
    return terms_entry(entry)


def operator_document(operator: MatDiffOp, names: Sequence[str], text: bool = True) -> OperatorDocument:
    return OperatorDocument(
        size=operator.size,
        fields=list(names),
        entries=[[entry_terms(entry) for entry in row] for row in operator.entries],
        text=[[format_diffop(entry, names) for entry in row] for row in operator.entries] if text else None,
    )
