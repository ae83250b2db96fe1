from fractions import Fraction
from typing import Annotated, Any, List, Mapping, Optional, Sequence

import mpmath
from pydantic import AfterValidator, BeforeValidator, ConfigDict, Field, field_validator
from sympy import Expr, Symbol

from ..core.base import BaseModel
from ..core.config import settings
from ..core.utils import format_rational, to_fraction
from ..diffring import jet_symbol


def _integers_as_text(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return value


def _check_rational(value: str) -> str:
    try:
        return format_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"expected a rational 'p/q', got {value!r}") from exc


# integers are accepted and written back as text
RationalStr = Annotated[str, BeforeValidator(_integers_as_text), AfterValidator(_check_rational)]


def format_number(value: Any, digits: int = 20) -> str:
    """Exact values as "p/q", high-precision ones with a fixed number of digits."""
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(value, digits)
    return format_rational(value)


def format_expr(expr: Expr, names: Optional[Sequence[str]] = None) -> str:
    """Sympy expression with the jet symbols w{i}_0 renamed to display names."""
    if names:
        expr = expr.xreplace({jet_symbol(i, 0): Symbol(name) for i, name in enumerate(names)})
    return str(expr)


def rationals(values: Sequence) -> List[str]:
    return [format_rational(v) for v in values]


def parse_rationals(values: Sequence[str]) -> List[Fraction]:
    return [to_fraction(v) for v in values]


def rational_map(values: Mapping[int, Any]) -> dict:
    return {int(k): format_rational(v) for k, v in sorted(values.items())}


class Document(BaseModel):
    """A JSON document tagged with the wire schema version."""

    schema_tag: str = Field(default_factory=lambda: settings.app.schema_tag, alias="schema")


class InputDocument(Document):
    model_config = ConfigDict(extra="forbid")

    @field_validator("schema_tag")
    @classmethod
    def known_schema(cls, value: str) -> str:
        if value != settings.app.schema_tag:
            raise ValueError(f"unsupported schema {value!r}, expected {settings.app.schema_tag!r}")
        return value
