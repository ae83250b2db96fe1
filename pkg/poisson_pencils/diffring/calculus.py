"""
Jet-space calculus: total derivatives, Frechet derivatives, prolongations of
evolutionary vector fields and Lie derivatives of matrix operators.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .operator import DiffOp, MatDiffOp, adjoint, compose
from .poly import DiffPoly, Scalar, differential_degree


@dataclass(frozen=True, eq=False)
class EvolutionaryField:
    characteristic: Tuple[DiffPoly, ...]

    @classmethod
    def constant(cls, values: Sequence[Scalar]) -> "EvolutionaryField":
        return cls(tuple(DiffPoly.constant(v) for v in values))

    @classmethod
    def identity(cls, size: int) -> "EvolutionaryField":
        """The Euler field with characteristic Z^i = w^i."""
        return cls(tuple(DiffPoly.field(i) for i in range(size)))

    def __len__(self) -> int:
        return len(self.characteristic)

    @property
    def is_constant(self) -> bool:
        return all(z.is_constant for z in self.characteristic)

    def scale(self, factor: Scalar) -> "EvolutionaryField":
        return EvolutionaryField(tuple(z * factor for z in self.characteristic))


def total_x_derivative(f: DiffPoly) -> DiffPoly:
    return f.derivative()


def op_compose(p: DiffOp, q: DiffOp) -> DiffOp:
    return compose(p, q)


def op_adjoint(p: DiffOp) -> DiffOp:
    return adjoint(p)


def frechet(functions: Sequence[DiffPoly], size: Optional[int] = None) -> MatDiffOp:
    """
    Frechet derivative L* with entries sum_s dF^i/dw^k_(s) d^s.

    The companion L of the transformation rule is ``frechet(F).adjoint()``.
    """
    if size is None:
        size = max(
            (max(f.fields(), default=-1) for f in functions), default=-1
        ) + 1
        size = max(size, len(functions))
    rows = []
    for f in functions:
        row = []
        for k in range(size):
            top = max(
                (
                    order
                    for (variables, _, _) in f.terms
                    for field, order, _ in variables
                    if field == k
                ),
                default=-1,
            )
            row.append(DiffOp({s: f.partial(k, s) for s in range(top + 1)}))
        rows.append(row)
    return MatDiffOp(rows, (len(functions), size))


def prolong_apply(z: EvolutionaryField, f: DiffPoly) -> DiffPoly:
    """Applies sum_{i,s} (d^s Z^i) d/dw^i_(s) to f."""
    result = DiffPoly.zero()
    derivatives: Dict[int, List[DiffPoly]] = {}
    for field in sorted(f.fields()):
        if field >= len(z.characteristic):
            continue
        characteristic = z.characteristic[field]
        if not characteristic:
            continue
        top = max(
            order
            for (variables, _, _) in f.terms
            for i, order, _ in variables
            if i == field
        )
        derivatives[field] = characteristic.derivatives(top)
        for order in range(top + 1):
            partial = f.partial(field, order)
            if partial:
                result = result + derivatives[field][order] * partial
    return result


def lie_derivative(z: EvolutionaryField, p: MatDiffOp) -> MatDiffOp:
    """
    (L_Z P)^ij = pr_Z(P^ij) - sum_k [ (L*_Z)^i_k o P^kj + P^ik o ((L*_Z)^j_k)^dagger ].
    """
    size = p.size
    prolonged = p.map_coefficients(lambda a: prolong_apply(z, a))
    if z.is_constant:
        return prolonged
    linearization = frechet(z.characteristic, size)
    return prolonged - linearization @ p - p @ linearization.adjoint()


@dataclass(frozen=True)
class GradingVerdict:
    ok: bool
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.ok


def grading_check(p: MatDiffOp, min_eps: int = -1) -> GradingVerdict:
    """
    Checks that every term eps^k a d^m satisfies k >= min_eps and
    deg a = k + 1 - m with 0 <= deg a <= k + 1.
    """
    rows, cols = p.shape
    for i in range(rows):
        for j in range(cols):
            for m, coefficient in p.entries[i][j].items():
                for monomial, value in coefficient:
                    eps = monomial[1]
                    degree = differential_degree(monomial)
                    if eps < min_eps or degree != eps + 1 - m:
                        return GradingVerdict(
                            ok=False,
                            witness={
                                "entry": [i, j],
                                "order": m,
                                "eps": eps,
                                "degree": degree,
                                "coefficient": str(value),
                            },
                        )
    return GradingVerdict(ok=True)
