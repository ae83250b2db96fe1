from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..core.exceptions import ValidationError
from ..core.utils import nullspace, rank
from .lie import LieAlg, Vector


@dataclass(frozen=True, eq=False)
class Subspace:
    ambient: LieAlg
    basis_vectors: Tuple[Vector, ...]

    def __post_init__(self):
        if self.basis_vectors and rank(self.basis_vectors, self.ambient.dim) != len(
            self.basis_vectors
        ):
            raise ValidationError("subspace basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis_vectors)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        rows = list(self.basis_vectors) + [tuple(vector)]
        return rank(rows, self.ambient.dim) == self.dim

    def combination(self, coefficients: Sequence[Fraction]) -> Vector:
        coords = [Fraction(0)] * self.ambient.dim
        for coefficient, vector in zip(coefficients, self.basis_vectors):
            for k, value in enumerate(vector):
                coords[k] += coefficient * value
        return tuple(coords)


def full_space(alg: LieAlg) -> Subspace:
    return Subspace(alg, tuple(alg.basis_vector(k) for k in range(alg.dim)))


def kernel_ad(alg: LieAlg, a: Sequence[Fraction]) -> Subspace:
    """The centralizer {x : [a, x] = 0} as an exact rational subspace."""
    if not any(a):
        raise ValidationError("kernel_ad needs a nonzero element")
    return Subspace(alg, tuple(nullspace(alg.ad_matrix(a), alg.dim)))


def orth_complement(alg: LieAlg, s: Subspace) -> Subspace:
    """The annihilator of s under the invariant form."""
    rows = [alg.lower(vector) for vector in s.basis_vectors]
    return Subspace(alg, tuple(nullspace(rows, alg.dim)))


def eigenspace_dimensions(alg: LieAlg, degrees: Sequence[int]) -> dict[int, int]:
    """Dimensions of the graded pieces of a grading given degree by degree."""
    dims: dict[int, int] = {}
    for degree in degrees:
        dims[degree] = dims.get(degree, 0) + 1
    return dict(sorted(dims.items()))
