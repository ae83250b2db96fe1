from typing import Dict, List, Optional, Sequence

from pydantic import Field

from ..algebra import LieAlg, Table1Row
from ..core.base import BaseModel
from ..core.utils import format_rational
from ..invariants import CentralInvariantReport
from ..pencils import ExactnessReport
from ..reduction import KernelIntersectionReport, ReducedPencil, SchurReport
from ..diffring import format_diffpoly
from .common import Document, format_expr, format_number, rational_map, rationals
from .operator import OperatorDocument, operator_document


class BracketTerm(BaseModel):
    """[e_i, e_j] contains value * e_k."""

    i: int
    j: int
    k: int
    value: str


class Table1Entry(BaseModel):
    name: str
    h: int
    h_vee: int
    dim_leaf: int
    dim_g1: Optional[int] = None
    theta_grading: Optional[Dict[int, int]] = None
    reference: bool = False

    @classmethod
    def from_row(cls, row: Table1Row) -> "Table1Entry":
        return cls(
            name=row.name,
            h=row.h,
            h_vee=row.h_vee,
            dim_leaf=row.dim_leaf,
            dim_g1=row.dim_g1,
            theta_grading=dict(row.theta_grading) or None,
            reference=row.reference,
        )


class AlgebraDocument(Document):
    name: str
    series: str
    rank: int
    dim: int
    basis: List[str]
    form: List[List[str]]
    structure_constants: List[BracketTerm]
    coxeter: int
    dual_coxeter: int
    principal_degree: List[int]
    theta_degree: List[int]
    theta_index: int
    theta_vee: List[str]
    table1: Table1Entry

    @classmethod
    def from_algebra(cls, alg: LieAlg, row: Table1Row) -> "AlgebraDocument":
        brackets = [
            BracketTerm(i=i, j=j, k=k, value=format_rational(value))
            for (i, j), images in sorted(alg.structure_constants.items())
            for k, value in sorted(images.items())
            if value
        ]
        return cls(
            name=alg.name,
            series=alg.series,
            rank=alg.rank,
            dim=alg.dim,
            basis=list(alg.basis_labels),
            form=[rationals(row_) for row_ in alg.bilinear_form],
            structure_constants=brackets,
            coxeter=alg.coxeter,
            dual_coxeter=alg.dual_coxeter,
            principal_degree=list(alg.principal_degree),
            theta_degree=list(alg.theta_degree),
            theta_index=alg.theta_index,
            theta_vee=rationals(alg.theta_vee),
            table1=Table1Entry.from_row(row),
        )


class ExactnessSummary(BaseModel):
    ok: bool
    p1_ok: bool
    p2_ok: bool
    liouville: Optional[List[str]] = None

    @classmethod
    def from_report(cls, report: ExactnessReport, names: Sequence[str]) -> "ExactnessSummary":
        liouville = (
            [format_diffpoly(z, names) for z in report.liouville.characteristic]
            if report.liouville is not None
            else None
        )
        return cls(ok=report.ok, p1_ok=report.p1_ok, p2_ok=report.p2_ok, liouville=liouville)


class KernelSample(BaseModel):
    point: List[str]
    p_values: List[str]
    nullities: List[int]


class KernelSummary(BaseModel):
    ok: bool
    seed: int
    negative_control: int
    samples: List[KernelSample]

    @classmethod
    def from_report(cls, report: KernelIntersectionReport) -> "KernelSummary":
        return cls(
            ok=report.ok,
            seed=report.seed,
            negative_control=report.negative_control,
            samples=[
                KernelSample(
                    point=rationals(s.point), p_values=rationals(s.p_values), nullities=list(s.nullities)
                )
                for s in report.samples
            ],
        )


class PencilDocument(Document):
    name: str
    variant: str
    fields: List[str]
    operator: OperatorDocument
    exactness: Optional[ExactnessSummary] = None
    kernel_intersection: Optional[KernelSummary] = None


class SchurSummary(BaseModel):
    ok: bool
    identity_holds: bool
    det_pi: str
    det_delta: str
    det_reduced: str
    det_delta_lambda_free: bool
    det_delta_constant: bool
    f_q: str
    f_q_lambda_free: bool
    f_q_constant: bool
    f_adjoint: Optional[str] = None

    @classmethod
    def from_report(cls, report: SchurReport, names: Sequence[str]) -> "SchurSummary":
        return cls(
            ok=report.ok,
            identity_holds=report.identity_holds,
            det_pi=format_expr(report.det_pi),
            det_delta=format_expr(report.det_delta),
            det_reduced=format_expr(report.det_reduced, names),
            det_delta_lambda_free=report.det_delta_lambda_free,
            det_delta_constant=report.det_delta_constant,
            f_q=format_expr(report.f_q.value, names),
            f_q_lambda_free=report.f_q.lambda_free,
            f_q_constant=report.f_q.constant,
            f_adjoint=format_expr(report.f_adjoint, names) if report.f_adjoint is not None else None,
        )


class GaugeSummary(BaseModel):
    retained: List[int]
    fixed: Dict[int, str]


class ReduceDocument(Document):
    pencil: str
    fields: List[str]
    gauge: GaugeSummary
    d_inverse_order: int
    operator: OperatorDocument
    reassembly: bool
    liouville: Optional[List[str]] = None
    schur: Optional[SchurSummary] = None

    @classmethod
    def from_reduced(
        cls, reduced: ReducedPencil, reassembly: bool, schur: Optional[SchurReport] = None
    ) -> "ReduceDocument":
        names = list(reduced.field_names)
        liouville = (
            [format_diffpoly(z, names) for z in reduced.liouville.characteristic]
            if reduced.liouville is not None
            else None
        )
        return cls(
            pencil=reduced.source,
            fields=names,
            gauge=GaugeSummary(
                retained=list(reduced.gauge.retained), fixed=rational_map(reduced.gauge.fixed)
            ),
            d_inverse_order=reduced.d_inverse_order,
            operator=operator_document(reduced.operator, names),
            reassembly=reassembly,
            liouville=liouville,
            schur=SchurSummary.from_report(schur, names) if schur is not None else None,
        )


class RootEntry(BaseModel):
    u: str
    lambda2: str
    f: str
    c: str


class PointEntry(BaseModel):
    point: List[str]
    roots: List[RootEntry]
    odd_max: float
    diagonal_residual: float


class InvariantsDocument(Document):
    pencil: str
    char_poly: str
    lambda_degree: int
    roots: List[RootEntry]
    points: List[PointEntry]
    constant: bool
    spreads: List[float]
    tolerance: float
    order: int
    seed: Optional[int] = None
    rejected: int = 0
    predicted: Optional[List[str]] = None
    matches_prediction: Optional[bool] = None

    @classmethod
    def from_report(
        cls, pencil: str, names: Sequence[str], report: CentralInvariantReport
    ) -> "InvariantsDocument":
        points = [
            PointEntry(
                point=rationals(p.point),
                roots=[
                    RootEntry(
                        u=format_number(r.u),
                        lambda2=format_number(r.lambda2),
                        f=format_number(r.f),
                        c=format_number(r.c),
                    )
                    for r in p.records
                ],
                odd_max=p.odd_max,
                diagonal_residual=p.diagonal_residual,
            )
            for p in report.points
        ]
        return cls(
            pencil=pencil,
            char_poly=format_expr(report.char_poly.poly, names),
            lambda_degree=report.lambda_degree,
            roots=points[0].roots if points else [],
            points=points,
            constant=report.constant,
            spreads=list(report.spreads),
            tolerance=report.tolerance,
            order=report.order,
            seed=report.seed,
            rejected=report.rejected,
            predicted=rationals(report.predicted) if report.predicted is not None else None,
            matches_prediction=report.matches_prediction,
        )


class CheckEntry(BaseModel):
    name: str
    ok: bool
    detail: Optional[str] = None


class SuiteEntry(BaseModel):
    name: str
    ok: bool
    checks: List[CheckEntry] = Field(default_factory=list)


class VerifyDocument(Document):
    ok: bool
    suites: List[SuiteEntry]
