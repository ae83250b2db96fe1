"""
The ``run`` entry point shared by the CLI commands.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional

from pydantic import ConfigDict, Field, field_validator

from ..algebra import algebra_from_descriptor, table1_report
from ..core.base import BaseModel
from ..core.config import settings
from ..core.exceptions import AppException, NotFoundError, ValidationError
from ..core.logging import get_logger
from ..invariants import central_invariants
from ..pencils import GaugeSpec, check_exact
from ..reduction import dirac_reduce, kernel_intersection_check, reassembly_check, schur_check
from ..schemas import (
    AlgebraDocument,
    Document,
    ExactnessSummary,
    GaugeDocument,
    InvariantsDocument,
    KernelSummary,
    PencilDocument,
    ReduceDocument,
    VerifyDocument,
    format_expr,
    format_number,
    operator_document,
)
from .loader import json_pointer, resolve_target
from .render import ReportRenderer
from .suites import VerificationService

logger = get_logger(__name__)


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: Literal["algebra", "pencil", "reduce", "invariants", "verify"]
    target: str = Field(min_length=1)
    emit: Literal["json", "latex", "text"] = "json"
    gauge: Optional[str] = None
    order: int = Field(default_factory=lambda: settings.numeric.order, ge=2, le=12)
    samples: int = Field(default_factory=lambda: settings.numeric.samples, ge=1, le=100)
    seed: int = Field(default_factory=lambda: settings.numeric.seed)
    tol: float = Field(default_factory=lambda: settings.numeric.constancy_tol, gt=0, lt=1)
    max_order: int = Field(default_factory=lambda: settings.numeric.max_order, ge=1, le=256)
    ranks: int = Field(default=6, ge=1, le=12)

    @field_validator("order")
    @classmethod
    def even_order(cls, value: int) -> int:
        if value % 2:
            raise ValueError("root expansion order must be even")
        return value


@dataclass(frozen=True)
class RunResult:
    exit_code: int
    output: str = ""
    error: Optional[str] = None
    document: Optional[Document] = None


def load_gauge(path: str, size: int) -> GaugeSpec:
    source = Path(path)
    if not source.is_file():
        raise NotFoundError(f"gauge file {path!r} does not exist")
    try:
        document = GaugeDocument.model_validate_json(source.read_text(encoding="utf-8"))
    except ValueError as exc:
        errors = getattr(exc, "errors", lambda: [])()
        pointer = json_pointer(errors[0]["loc"]) if errors else ""
        raise ValidationError(f"invalid gauge file at {pointer or '/'}: {exc}") from exc
    return GaugeSpec.create(document.retained, document.fixed).validate(size)


class Runner:
    def __init__(self, config: RunConfig, renderer: Optional[ReportRenderer] = None):
        self.config = config
        self.renderer = renderer or ReportRenderer()

    def execute(self) -> RunResult:
        handler = getattr(self, f"_{self.config.command}")
        return handler()

    def _algebra(self) -> RunResult:
        alg = algebra_from_descriptor(self.config.target)
        row = table1_report(alg)
        document = AlgebraDocument.from_algebra(alg, row)
        if self.config.emit == "json":
            return RunResult(0, document.to_canonical_json())
        facts = [
            ("dim", str(alg.dim)),
            ("h", str(row.h)),
            ("h_vee", str(row.h_vee)),
            ("dim leaf", str(row.dim_leaf)),
            ("dim g^1", str(row.dim_g1)),
            ("theta grading", json.dumps(row.theta_grading, sort_keys=True)),
        ]
        return RunResult(0, self.renderer.render(self.config.emit, alg.name, [], [], facts))

    def _pencil(self) -> RunResult:
        pencil, _ = resolve_target(self.config.target)
        names = pencil.field_names
        exactness = kernel = None
        if pencil.liouville is not None:
            exactness = ExactnessSummary.from_report(check_exact(pencil), names)
        if pencil.algebra is not None and pencil.variant == "ds":
            kernel = KernelSummary.from_report(
                kernel_intersection_check(pencil, self.config.samples, self.config.seed)
            )
        document = PencilDocument(
            name=pencil.name,
            variant=pencil.variant,
            fields=list(names),
            operator=operator_document(pencil.operator, names),
            exactness=exactness,
            kernel_intersection=kernel,
        )
        if self.config.emit == "json":
            return RunResult(0, document.to_canonical_json())
        p1, p2 = pencil.pair()
        facts = []
        if exactness is not None:
            facts.append(("exact", str(exactness.ok)))
        if kernel is not None:
            facts.append(("kernel intersection trivial", str(kernel.ok)))
        return RunResult(
            0,
            self.renderer.render(self.config.emit, pencil.name, [("P_1", p1), ("P_2", p2)], names, facts),
        )

    def _reduce(self) -> RunResult:
        pencil, gauge = resolve_target(self.config.target)
        if self.config.gauge:
            gauge = load_gauge(self.config.gauge, pencil.size)
        reduced = dirac_reduce(pencil, gauge, self.config.max_order)
        schur = schur_check(pencil, gauge, reduced, self.config.max_order)
        document = ReduceDocument.from_reduced(reduced, reassembly_check(reduced), schur)
        if self.config.emit == "json":
            return RunResult(0, document.to_canonical_json())
        names = list(reduced.field_names)
        p1, p2 = reduced.pair()
        facts = [
            ("D-block Neumann order", str(reduced.d_inverse_order)),
            ("R_Q", format_expr(schur.det_reduced, names)),
            ("F_Q", format_expr(schur.f_q.value, names)),
        ]
        return RunResult(
            0,
            self.renderer.render(
                self.config.emit, f"{pencil.name} on Q", [("P_1'", p1), ("P_2'", p2)], names, facts
            ),
        )

    def _invariants(self) -> RunResult:
        pencil, gauge = resolve_target(self.config.target)
        target, names = pencil, list(pencil.field_names)
        if gauge.eliminated:
            target = dirac_reduce(pencil, gauge, self.config.max_order)
            names = list(target.field_names)
        report = central_invariants(
            target,
            order=self.config.order,
            samples=self.config.samples,
            seed=self.config.seed,
            tol=self.config.tol,
            algebra=pencil.algebra if pencil.variant == "ds" else None,
        )
        document = InvariantsDocument.from_report(pencil.name, names, report)
        if self.config.emit == "json":
            return RunResult(0, document.to_canonical_json())
        facts = [("R", document.char_poly), ("constant", str(report.constant))]
        for point in report.points:
            values = ", ".join(format_number(r.c, 12) for r in point.records)
            facts.append((f"c at {', '.join(str(x) for x in point.point)}", values))
        return RunResult(0, self.renderer.render(self.config.emit, pencil.name, [], names, facts))

    def _verify(self) -> RunResult:
        service = VerificationService(
            ranks=self.config.ranks,
            samples=self.config.samples,
            seed=self.config.seed,
            tol=self.config.tol,
        )
        suites = service.run(self.config.target)
        document = VerifyDocument(ok=all(s.ok for s in suites), suites=suites)
        return RunResult(0 if document.ok else 1, document.to_canonical_json(), document=document)


def run(config: RunConfig) -> RunResult:
    """Exit 0 on success, 1 on verification failure or a mathematical error, 2 on usage errors."""
    try:
        result = Runner(config).execute()
    except AppException as exc:
        logger.debug("%s failed: %s", config.command, exc.message)
        return RunResult(exc.exit_code, error=f"{exc.code}: {exc.message}")
    logger.debug("%s finished with exit code %d", config.command, result.exit_code)
    return result
