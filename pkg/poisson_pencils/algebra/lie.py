"""
Classical simple Lie algebras in a Chevalley-adapted basis.

The basis is ordered by principal degree: negative root vectors from the
lowest degree up, then the Cartan elements H_1..H_n, then positive root vectors.
Structure constants are read off exactly from the defining representation and
the invariant form is the Killing form normalized by twice the dual Coxeter
number.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple

from ..core.constants import Constants
from ..core.exceptions import ConstructionError, ValidationError
from ..core.logging import get_logger
from ..core.utils import inverse, mat_vec, pivot_columns
from . import matrices
from .matrices import ClassicalRealization, SparseMatrix

logger = get_logger(__name__)

Vector = Tuple[Fraction, ...]
StructureConstants = Dict[Tuple[int, int], Dict[int, Fraction]]


@dataclass(frozen=True, eq=False)
class LieAlg:
    name: str
    series: str
    rank: int
    basis_labels: Tuple[str, ...]
    structure_constants: StructureConstants
    bilinear_form: Tuple[Tuple[Fraction, ...], ...]
    chevalley: Mapping[str, Tuple[int, ...]]
    coxeter: int
    dual_coxeter: int
    principal_degree: Tuple[int, ...]
    theta_degree: Tuple[int, ...]
    theta_index: int
    theta_vee: Vector
    matrices: Tuple[SparseMatrix, ...] = field(repr=False)
    matrix_size: int = field(repr=False, default=0)
    _pivots: Tuple[Tuple[int, int], ...] = field(repr=False, default=())
    _pivot_inverse: Tuple[Dict[int, Fraction], ...] = field(repr=False, default=())

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError as exc:
            raise ValidationError(
                f"{self.name} has no basis element {label!r}",
                details={"basis": list(self.basis_labels)},
            ) from exc

    def basis_vector(self, index: int) -> Vector:
        return tuple(Fraction(int(k == index)) for k in range(self.dim))

    def vector(self, combination: Mapping[str, int | Fraction]) -> Vector:
        """Coordinates of sum(coefficient * basis element) given by label."""
        coords = [Fraction(0)] * self.dim
        for label, coefficient in combination.items():
            coords[self.index(label)] += Fraction(coefficient)
        return tuple(coords)

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        result = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for l, c in self.structure_constants.get((i, j), {}).items():
                    result[l] += xi * yj * c
        return tuple(result)

    def pairing(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return sum(
            (
                xi * gij * yj
                for xi, row in zip(x, self.bilinear_form)
                if xi
                for gij, yj in zip(row, y)
                if gij and yj
            ),
            Fraction(0),
        )

    def lower(self, x: Sequence[Fraction]) -> Vector:
        """The covector k -> <x, e_k>."""
        return mat_vec(self.bilinear_form, x)

    def ad_matrix(self, x: Sequence[Fraction]) -> List[List[Fraction]]:
        """Matrix of ad x acting on coordinate columns: column k is [x, e_k]."""
        columns = [self.bracket(x, self.basis_vector(k)) for k in range(self.dim)]
        return [[columns[k][l] for k in range(self.dim)] for l in range(self.dim)]

    def matrix_of(self, x: Sequence[Fraction]) -> SparseMatrix:
        return matrices.linear_combination(x, self.matrices)

    def coordinates(self, matrix: SparseMatrix) -> Vector:
        """Coordinates of a defining-representation matrix in the basis."""
        coords = _solve(matrix, self._pivots, self._pivot_inverse, self.dim)
        if matrices.add(self.matrix_of(coords), matrix, Fraction(-1)):
            raise ValidationError(f"matrix does not belong to {self.name}")
        return coords

    @property
    def cartan_indices(self) -> Tuple[int, ...]:
        return self.chevalley["H"]


def parse_descriptor(descriptor: str) -> Tuple[str, int]:
    """Splits "B2" into ("B", 2)."""
    match = re.match(Constants.ALGEBRA_DESCRIPTOR_REGEX, descriptor.strip())
    if not match:
        raise ValidationError(
            f"invalid algebra descriptor {descriptor!r}; expected a series letter A-D and a rank, e.g. B2"
        )
    return match.group("series").upper(), int(match.group("rank"))


def algebra_from_descriptor(descriptor: str) -> LieAlg:
    return build_algebra(*parse_descriptor(descriptor))


@lru_cache(maxsize=None)
def build_algebra(series: str, rank: int) -> LieAlg:
    """
    Builds the classical simple Lie algebra of the given series and rank.

    :param series: one of "A", "B", "C", "D".
    :param rank: the rank n; A needs n >= 1, B and C n >= 2, D n >= 3.
    :return: the algebra with structure constants, normalized form and gradings.
    """
    series = series.upper()
    if series not in Constants.SERIES_MIN_RANK:
        raise ConstructionError(f"unknown series {series!r}; expected one of A, B, C, D")
    minimum = Constants.SERIES_MIN_RANK[series]
    if rank < minimum:
        raise ConstructionError(
            f"series {series} requires rank n >= {minimum}, got {rank}",
            details={"series": series, "rank": rank, "minimum": minimum},
        )

    logger.debug("building %s%d", series, rank)
    return _ChevalleyBuilder(ClassicalRealization(series, rank)).build()


class _ChevalleyBuilder:
    def __init__(self, realization: ClassicalRealization):
        self.realization = realization
        self.rank = realization.rank
        self.roots = realization.root_vectors()

    def _positive_roots(self) -> List[Tuple[int, ...]]:
        return [
            root
            for root, (leading, _) in self.roots.items()
            if self.realization.is_positive(leading)
        ]

    def _simple_roots(self, positive: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
        decomposable = {
            tuple(a + b for a, b in zip(r1, r2))
            for r1 in positive
            for r2 in positive
        }
        simple = [root for root in positive if root not in decomposable]
        if len(simple) != self.rank:
            raise ConstructionError(
                f"found {len(simple)} simple roots for rank {self.rank}"
            )

        def order(root):
            row, col = self.roots[root][0]
            return min(row, col), max(row, col)

        return sorted(simple, key=order)

    @staticmethod
    def _proportionality(multiple: SparseMatrix, base: SparseMatrix) -> Fraction:
        position, value = next(iter(base.items()))
        ratio = multiple.get(position, Fraction(0)) / value
        if matrices.add(multiple, base, -ratio):
            raise ConstructionError("expected proportional matrices")
        return ratio

    def build(self) -> LieAlg:
        realization = self.realization
        positive = self._positive_roots()
        simple = self._simple_roots(positive)
        positive_set = set(positive)

        raising: Dict[Tuple[int, ...], SparseMatrix] = {}
        lowering: Dict[Tuple[int, ...], SparseMatrix] = {}
        height: Dict[Tuple[int, ...], int] = {}
        order: List[Tuple[int, ...]] = []
        cartan: List[SparseMatrix] = []

        for root in simple:
            x = self.roots[root][1]
            f = self.roots[tuple(-a for a in root)][1]
            kappa = self._proportionality(
                matrices.commutator(matrices.commutator(x, f), x), x
            )
            y = matrices.scale(f, Fraction(2) / kappa)
            raising[root], lowering[root] = x, y
            height[root] = 1
            order.append(root)
            cartan.append(matrices.commutator(x, y))

        frontier = list(simple)
        while frontier:
            next_frontier = []
            for beta in frontier:
                for alpha, x_i in zip(simple, (raising[r] for r in simple)):
                    gamma = tuple(a + b for a, b in zip(beta, alpha))
                    if gamma not in positive_set or gamma in raising:
                        continue
                    raising[gamma] = matrices.commutator(raising[beta], x_i)
                    lowering[gamma] = matrices.commutator(lowering[beta], lowering[alpha])
                    height[gamma] = height[beta] + 1
                    order.append(gamma)
                    next_frontier.append(gamma)
            frontier = next_frontier

        if len(order) != len(positive):
            raise ConstructionError("positive roots were not all reached from the simple ones")

        numbered = {root: k + 1 for k, root in enumerate(order)}
        by_height = sorted(order, key=lambda r: (height[r], numbered[r]))
        negative_first = sorted(order, key=lambda r: (-height[r], numbered[r]))

        labels: List[str] = []
        basis: List[SparseMatrix] = []
        degrees: List[int] = []
        for root in negative_first:
            labels.append(f"Y{numbered[root]}")
            basis.append(lowering[root])
            degrees.append(-height[root])
        for i, h in enumerate(cartan, start=1):
            labels.append(f"H{i}")
            basis.append(h)
            degrees.append(0)
        for root in by_height:
            labels.append(f"X{numbered[root]}")
            basis.append(raising[root])
            degrees.append(height[root])

        dim = len(basis)
        pivots, pivot_inverse = self._coordinate_system(basis)

        def coords(matrix: SparseMatrix) -> Vector:
            return _solve(matrix, pivots, pivot_inverse, dim)

        structure: StructureConstants = {}
        for i in range(dim):
            for j in range(i + 1, dim):
                bracket = coords(matrices.commutator(basis[i], basis[j]))
                entries = {l: c for l, c in enumerate(bracket) if c}
                if entries:
                    structure[(i, j)] = entries
                    structure[(j, i)] = {l: -c for l, c in entries.items()}

        killing = self._killing(structure, dim)

        theta_root = max(order, key=lambda r: (height[r], numbered[r]))
        theta_index = labels.index(f"X{numbered[theta_root]}")
        e_theta, f_theta = raising[theta_root], lowering[theta_root]
        kappa = self._proportionality(
            matrices.commutator(matrices.commutator(e_theta, f_theta), e_theta), e_theta
        )
        theta_vee = coords(
            matrices.scale(matrices.commutator(e_theta, f_theta), Fraction(2) / kappa)
        )
        theta_norm = sum(
            (theta_vee[i] * killing[i][j] * theta_vee[j] for i in range(dim) for j in range(dim)),
            Fraction(0),
        )
        dual_coxeter = theta_norm / 4
        if dual_coxeter.denominator != 1:
            raise ConstructionError(f"non-integral dual Coxeter number {dual_coxeter}")
        coxeter = Fraction(dim, self.rank) - 1
        form = tuple(
            tuple(value / (2 * dual_coxeter) for value in row) for row in killing
        )

        theta_vee_matrix = matrices.linear_combination(theta_vee, basis)
        theta_degree = [
            int(coords(matrices.commutator(theta_vee_matrix, basis[k]))[k]) for k in range(dim)
        ]

        rank = self.rank
        negatives = len(order)
        chevalley = {
            "Y": tuple(labels.index(f"Y{k}") for k in range(1, rank + 1)),
            "H": tuple(negatives + i for i in range(rank)),
            "X": tuple(labels.index(f"X{k}") for k in range(1, rank + 1)),
        }

        name = f"{realization.series}{rank}"
        logger.debug("%s: dim %d, h %s, h_vee %s", name, dim, coxeter, dual_coxeter)
        return LieAlg(
            name=name,
            series=realization.series,
            rank=rank,
            basis_labels=tuple(labels),
            structure_constants=structure,
            bilinear_form=form,
            chevalley=chevalley,
            coxeter=int(coxeter),
            dual_coxeter=int(dual_coxeter),
            principal_degree=tuple(degrees),
            theta_degree=tuple(theta_degree),
            theta_index=theta_index,
            theta_vee=theta_vee,
            matrices=tuple(basis),
            matrix_size=realization.size,
            _pivots=pivots,
            _pivot_inverse=pivot_inverse,
        )

    def _coordinate_system(self, basis: List[SparseMatrix]):
        size = self.realization.size
        positions = [(r, c) for r in range(size) for c in range(size)]
        rows = [[b.get(p, Fraction(0)) for p in positions] for b in basis]
        pivots = tuple(positions[c] for c in pivot_columns(rows, len(positions)))
        if len(pivots) != len(basis):
            raise ConstructionError("basis matrices are linearly dependent")
        square = [[b.get(p, Fraction(0)) for p in pivots] for b in basis]
        # coordinates c satisfy c * square = (entries at the pivots)
        sparse_rows = tuple(
            {k: value for k, value in enumerate(row) if value} for row in inverse(square)
        )
        return pivots, sparse_rows

    @staticmethod
    def _killing(structure: StructureConstants, dim: int) -> List[List[Fraction]]:
        killing = [[Fraction(0)] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(i, dim):
                total = Fraction(0)
                for k in range(dim):
                    for l, c in structure.get((i, k), {}).items():
                        other = structure.get((j, l), {}).get(k)
                        if other:
                            total += c * other
                killing[i][j] = killing[j][i] = total
        return killing


def highest_root_data(alg: LieAlg) -> Tuple[Vector, Vector]:
    """Returns (E_theta, theta_vee) as coordinate vectors."""
    return alg.basis_vector(alg.theta_index), alg.theta_vee


def principal_nilpotent(alg: LieAlg) -> Vector:
    """The sum of the negative Chevalley generators Y_1 + ... + Y_n."""
    coords = [Fraction(0)] * alg.dim
    for index in alg.chevalley["Y"]:
        coords[index] = Fraction(1)
    return tuple(coords)


def jacobi_defects(alg: LieAlg) -> List[Tuple[int, int, int]]:
    """Basis triples violating the Jacobi identity; empty for a valid algebra."""
    defects = []
    basis = [alg.basis_vector(k) for k in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            for k in range(j + 1, alg.dim):
                a = alg.bracket(basis[i], alg.bracket(basis[j], basis[k]))
                b = alg.bracket(basis[j], alg.bracket(basis[k], basis[i]))
                c = alg.bracket(basis[k], alg.bracket(basis[i], basis[j]))
                if any(x + y + z for x, y, z in zip(a, b, c)):
                    defects.append((i, j, k))
    return defects


def invariance_defects(alg: LieAlg) -> List[Tuple[int, int, int]]:
    """Basis triples with <[x,y],z> + <y,[x,z]> != 0."""
    defects = []
    basis = [alg.basis_vector(k) for k in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(j, alg.dim):
                left = alg.pairing(alg.bracket(basis[i], basis[j]), basis[k])
                right = alg.pairing(basis[j], alg.bracket(basis[i], basis[k]))
                if left + right:
                    defects.append((i, j, k))
    return defects


def _solve(
    matrix: SparseMatrix,
    pivots: Sequence[Tuple[int, int]],
    pivot_inverse: Sequence[Dict[int, Fraction]],
    dim: int,
) -> Vector:
    coords = [Fraction(0)] * dim
    for p, position in enumerate(pivots):
        value = matrix.get(position)
        if not value:
            continue
        for k, weight in pivot_inverse[p].items():
            coords[k] += value * weight
    return tuple(coords)
