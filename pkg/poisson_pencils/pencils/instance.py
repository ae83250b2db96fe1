"""
Pencil instances, the affine charts they are written in, and gauge slices.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..algebra import LieAlg
from ..core.exceptions import (
    ConstructionError,
    GradingError,
    SkewAdjointnessError,
    ValidationError,
)
from ..core.utils import inverse, transpose
from ..diffring import EvolutionaryField, MatDiffOp, grading_check

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Chart:
    """
    Affine coordinates z on the algebra: w = base + sum_a z^a v_a.

    ``duals`` holds the form-dual basis, <duals[a], vectors[c]> = delta_ac, so
    that z^a = <w - base, duals[a]>.
    """

    base: Vector
    vectors: Tuple[Vector, ...]
    duals: Tuple[Vector, ...]

    @classmethod
    def from_vectors(
        cls, alg: LieAlg, vectors: Sequence[Sequence[Fraction]], base: Optional[Sequence] = None
    ) -> "Chart":
        if len(vectors) != alg.dim:
            raise ConstructionError(
                f"a chart of {alg.name} needs {alg.dim} vectors, got {len(vectors)}"
            )
        vectors = tuple(tuple(Fraction(x) for x in v) for v in vectors)
        # Phi = G^-1 V^-T, as columns
        try:
            v_inverse_t = transpose(inverse(transpose(list(vectors))))
        except ZeroDivisionError as exc:
            raise ConstructionError("chart vectors are linearly dependent") from exc
        g_inverse = inverse([list(row) for row in alg.bilinear_form])
        columns = [
            [sum((g_inverse[i][k] * v_inverse_t[k][a] for k in range(alg.dim)), Fraction(0))
             for i in range(alg.dim)]
            for a in range(alg.dim)
        ]
        base = tuple(Fraction(x) for x in base) if base is not None else (Fraction(0),) * alg.dim
        return cls(base=base, vectors=vectors, duals=tuple(tuple(c) for c in columns))

    @classmethod
    def dual(cls, alg: LieAlg) -> "Chart":
        """Fields w^l = <w, e_l>."""
        g_inverse = inverse([list(row) for row in alg.bilinear_form])
        vectors = tuple(tuple(row[c] for row in g_inverse) for c in range(alg.dim))
        return cls(
            base=(Fraction(0),) * alg.dim,
            vectors=vectors,
            duals=tuple(alg.basis_vector(k) for k in range(alg.dim)),
        )

    @property
    def size(self) -> int:
        return len(self.vectors)

    def point(self, z: Sequence[Fraction]) -> Vector:
        """The algebra element with chart coordinates z."""
        result = list(self.base)
        for zc, vc in zip(z, self.vectors):
            if zc:
                for k, x in enumerate(vc):
                    result[k] += zc * x
        return tuple(result)

    def coordinates(self, alg: LieAlg, w: Sequence[Fraction]) -> Vector:
        shifted = [Fraction(x) - b for x, b in zip(w, self.base)]
        return tuple(alg.pairing(shifted, phi) for phi in self.duals)


@dataclass(frozen=True)
class GaugeSpec:
    retained: Tuple[int, ...]
    fixed: Mapping[int, Fraction] = field(default_factory=dict)

    @classmethod
    def create(cls, retained: Sequence[int], fixed: Optional[Mapping] = None) -> "GaugeSpec":
        fixed = {int(k): Fraction(v) for k, v in (fixed or {}).items()}
        return cls(retained=tuple(int(i) for i in retained), fixed=fixed)

    @classmethod
    def identity(cls, size: int) -> "GaugeSpec":
        return cls(retained=tuple(range(size)), fixed={})

    @property
    def eliminated(self) -> Tuple[int, ...]:
        return tuple(sorted(self.fixed))

    def validate(self, size: int) -> "GaugeSpec":
        indices = list(self.retained) + list(self.fixed)
        if len(set(self.retained)) != len(self.retained):
            raise ValidationError("gauge retains a field twice", details=list(self.retained))
        overlap = set(self.retained) & set(self.fixed)
        if overlap:
            raise ValidationError(
                f"fields {sorted(overlap)} are both retained and fixed", details=sorted(overlap)
            )
        if sorted(indices) != list(range(size)):
            missing = sorted(set(range(size)) - set(indices))
            extra = sorted(set(indices) - set(range(size)))
            raise ValidationError(
                f"gauge does not partition the {size} fields",
                details={"missing": missing, "out_of_range": extra},
            )
        return self


@dataclass
class PencilInstance:
    name: str
    operator: MatDiffOp
    variant: str
    field_names: List[str]
    algebra: Optional[LieAlg] = None
    a_vector: Optional[Vector] = None
    i_vector: Optional[Vector] = None
    liouville: Optional[EvolutionaryField] = None
    chart: Optional[Chart] = None
    metadata: Dict[str, str] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return self.operator.size

    def pair(self) -> Tuple[MatDiffOp, MatDiffOp]:
        return self.operator.pair()

    def validate(self, min_eps: int = -1) -> "PencilInstance":
        defects = self.operator.skew_defects()
        if defects:
            i, j = defects[0]
            raise SkewAdjointnessError(
                f"{self.name}: entries ({i + 1}, {j + 1}) and ({j + 1}, {i + 1}) are not skew-adjoint",
                details=[list(d) for d in defects],
            )
        verdict = grading_check(self.operator, min_eps=min_eps)
        if not verdict:
            raise GradingError(f"{self.name}: operator violates the grading", details=verdict.witness)
        if self.operator.lam_degree() > 1:
            raise ValidationError(f"{self.name}: pencil is not linear in lam")
        return self
