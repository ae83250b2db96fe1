"""
Resolution of ``--pencil`` targets: builtin names or pencil files.
"""

import json
from pathlib import Path
from typing import Tuple

from pydantic import ValidationError as SchemaError

from ..algebra import algebra_from_descriptor, principal_nilpotent
from ..core.exceptions import NotFoundError, ValidationError
from ..core.logging import get_logger
from ..core.utils import to_fraction
from ..diffring import EvolutionaryField, MatDiffOp, parse_diffpoly
from ..pencils import Chart, GaugeSpec, PencilInstance, builtin, chart_pencil, is_builtin
from ..schemas import PencilFile, read_entry

logger = get_logger(__name__)

Target = Tuple[PencilInstance, GaugeSpec]


def json_pointer(location) -> str:
    return "/" + "/".join(str(part).replace("~", "~0").replace("/", "~1") for part in location)


def parse_pencil_document(payload: object) -> PencilFile:
    try:
        return PencilFile.model_validate(payload)
    except SchemaError as exc:
        errors = [
            {"pointer": json_pointer(error["loc"]), "message": error["msg"]}
            for error in exc.errors()
        ]
        first = errors[0]
        raise ValidationError(
            f"invalid pencil file at {first['pointer']}: {first['message']}", details=errors
        ) from exc


def _algebra_pencil(document: PencilFile) -> PencilInstance:
    alg = algebra_from_descriptor(document.algebra)
    if document.fields is not None and len(document.fields) != alg.dim:
        raise ValidationError(f"{alg.name} has {alg.dim} fields, the file names {len(document.fields)}")
    i_vector = document.i_vector
    if i_vector is None and document.variant == "ds":
        i_vector = principal_nilpotent(alg)
    return chart_pencil(
        alg,
        Chart.dual(alg),
        [to_fraction(x) for x in document.a_vector],
        name=document.name,
        field_names=document.fields,
        variant=document.variant,
        i_vector=[to_fraction(x) for x in i_vector] if i_vector is not None else None,
    )


def _operator_pencil(document: PencilFile) -> PencilInstance:
    names = list(document.fields)
    size = len(names)
    operator = MatDiffOp(
        [[read_entry(entry, names) for entry in row] for row in document.operator], (size, size)
    )
    out_of_range = sorted(f for f in operator.fields() if f >= size)
    if out_of_range:
        raise ValidationError(
            f"operator refers to fields {out_of_range} beyond the {size} declared"
        )
    liouville = None
    if document.liouville is not None:
        liouville = EvolutionaryField(tuple(parse_diffpoly(z, names) for z in document.liouville))
    return PencilInstance(
        name=document.name,
        operator=operator,
        variant=document.variant,
        field_names=names,
        liouville=liouville,
        metadata=dict(document.metadata),
    )


def build_pencil(document: PencilFile) -> Target:
    if document.algebra is not None:
        pencil = _algebra_pencil(document)
    else:
        pencil = _operator_pencil(document)
    pencil.validate()
    if document.gauge is None:
        gauge = GaugeSpec.identity(pencil.size)
    else:
        gauge = GaugeSpec.create(document.gauge.retained, document.gauge.fixed).validate(pencil.size)
    return pencil, gauge


def load_pencil_file(path: str | Path) -> Target:
    """A validated pencil and its gauge from a JSON pencil file."""
    path = Path(path)
    if not path.is_file():
        raise NotFoundError(f"pencil file {str(path)!r} does not exist")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"{path.name} is not valid JSON (line {exc.lineno}, column {exc.colno})",
            details=[{"pointer": "", "message": exc.msg}],
        ) from exc
    logger.debug("loading pencil file %s", path)
    return build_pencil(parse_pencil_document(payload))


def resolve_target(target: str) -> Target:
    if is_builtin(target):
        return builtin(target)
    if target.endswith(".json") or Path(target).exists():
        return load_pencil_file(target)
    return builtin(target)
