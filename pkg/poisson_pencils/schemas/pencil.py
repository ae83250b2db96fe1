from typing import Dict, List, Literal, Optional

from pydantic import ConfigDict, Field, model_validator

from ..core.base import BaseModel
from .common import InputDocument, RationalStr
from .operator import Entry


class GaugeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    retained: List[int]
    fixed: Dict[int, RationalStr] = Field(default_factory=dict)


class PencilFile(InputDocument):
    """
    A pencil P2 - lam P1, given either entry by entry (``operator``, in text form or
    as term lists) or by an algebra descriptor with the distinguished element ``A``.

    ``liouville`` holds one differential polynomial per field.
    """

    name: str = Field(min_length=1)
    fields: Optional[List[str]] = Field(default=None, min_length=1)
    operator: Optional[List[List[Entry]]] = None
    algebra: Optional[str] = None
    a_vector: Optional[List[RationalStr]] = Field(default=None, alias="A")
    i_vector: Optional[List[RationalStr]] = Field(default=None, alias="I")
    variant: Literal["custom", "ds", "swapped-ch", "scalar"] = "custom"
    liouville: Optional[List[str]] = None
    gauge: Optional[GaugeDocument] = None
    metadata: Dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def one_source(self) -> "PencilFile":
        if (self.operator is None) == (self.algebra is None):
            raise ValueError("give either an operator or an algebra with its element A")
        if self.algebra is not None:
            return self._check_algebra_source()
        if self.fields is None:
            raise ValueError("an operator needs its field names")
        size = len(self.fields)
        if len(self.operator) != size or any(len(row) != size for row in self.operator):
            raise ValueError(f"operator must be a {size}x{size} matrix, one row per field")
        if self.liouville is not None and len(self.liouville) != size:
            raise ValueError(f"liouville needs {size} components")
        return self

    def _check_algebra_source(self) -> "PencilFile":
        if self.a_vector is None:
            raise ValueError("an algebra pencil needs the element A")
        if self.variant == "custom":
            self.variant = "ds"
        if self.variant not in ("ds", "swapped-ch"):
            raise ValueError("algebra pencils are of variant ds or swapped-ch")
        if self.liouville is not None:
            raise ValueError("algebra pencils carry Z = A; liouville is not read")
        return self
