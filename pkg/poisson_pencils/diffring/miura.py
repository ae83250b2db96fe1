"""
Miura-type transformations w~ = F(w, w_x, ...; eps) and their action on
matrix differential operators.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..core.exceptions import MiuraError
from ..core.logging import get_logger
from ..core.utils import inverse
from .calculus import frechet
from .operator import MatDiffOp
from .poly import DiffPoly, differential_degree

logger = get_logger(__name__)


@dataclass(frozen=True)
class MiuraResult:
    operator: MatDiffOp
    order: int
    truncated: bool


class MiuraMap:
    """
    Components F^i = F0^i(w) + sum_{k>=1} eps^k F_k^i with deg F_k = k, F0 affine
    and with an invertible constant Jacobian.
    """

    def __init__(self, functions: Sequence[DiffPoly]):
        self.functions: Tuple[DiffPoly, ...] = tuple(DiffPoly.coerce(f) for f in functions)
        self.size = len(self.functions)
        self._validate()
        self.jacobian, self.shift = self._affine_part()
        try:
            self.jacobian_inverse = inverse(self.jacobian)
        except ZeroDivisionError as exc:
            raise MiuraError("leading part of the transformation is not invertible") from exc

    def _validate(self) -> None:
        for i, f in enumerate(self.functions):
            if any(field >= self.size for field in f.fields()):
                raise MiuraError(f"component {i} depends on an unknown field")
            for monomial, _ in f:
                variables, eps, lam = monomial
                if lam:
                    raise MiuraError(f"component {i} depends on lam")
                if eps != differential_degree(monomial):
                    raise MiuraError(
                        f"component {i} is not homogeneous: eps^{eps} with degree "
                        f"{differential_degree(monomial)}"
                    )
                if eps == 0 and sum(e for _, _, e in variables) > 1:
                    raise MiuraError(f"leading part of component {i} is not affine")

    def _affine_part(self) -> Tuple[List[List[Fraction]], List[Fraction]]:
        jacobian = [[Fraction(0)] * self.size for _ in range(self.size)]
        shift = [Fraction(0)] * self.size
        for i, f in enumerate(self.functions):
            for (variables, eps, _), value in f:
                if eps:
                    continue
                if not variables:
                    shift[i] = value
                else:
                    ((field, _, _),) = variables
                    jacobian[i][field] = value
        return jacobian, shift

    @property
    def is_identity(self) -> bool:
        return all(f == DiffPoly.field(i) for i, f in enumerate(self.functions))

    def inverse_images(self, order: int) -> Dict[int, DiffPoly]:
        """w as a series in the new variables, truncated at eps^order."""
        corrections = [f.select(lambda m: m[1] > 0) for f in self.functions]
        rhs = [DiffPoly.field(i) - self.shift[i] for i in range(self.size)]

        def solve(residual: List[DiffPoly]) -> Dict[int, DiffPoly]:
            images = {}
            for a in range(self.size):
                total = DiffPoly.zero()
                for b in range(self.size):
                    if self.jacobian_inverse[a][b]:
                        total = total + residual[b] * self.jacobian_inverse[a][b]
                images[a] = total.truncate_eps(order)[0]
            return images

        images = solve(rhs)
        if not any(corrections):
            return images
        for _ in range(order):
            residual = [rhs[i] - corrections[i].substitute(images) for i in range(self.size)]
            images = solve(residual)
        return images

    def apply(self, operator: MatDiffOp, order: int) -> MiuraResult:
        """
        The transformed operator L* P L*^dagger written in the new variables and
        truncated at eps^order.
        """
        if operator.size != self.size:
            raise MiuraError(
                f"transformation has {self.size} components, operator acts on {operator.size}"
            )
        linearization = frechet(self.functions, self.size)
        transformed = linearization @ operator @ linearization.adjoint()
        transformed, dropped = transformed.truncate_eps(order)
        if not self.is_identity:
            images = self.inverse_images(order)
            transformed = transformed.map_coefficients(lambda a: a.substitute(images))
            transformed, lost = transformed.truncate_eps(order)
            dropped = dropped or lost
        logger.debug("Applied Miura map of size %d up to eps^%d", self.size, order)
        return MiuraResult(operator=transformed, order=order, truncated=dropped)


def miura_apply(functions: Sequence[DiffPoly], operator: MatDiffOp, order: int) -> MiuraResult:
    return MiuraMap(functions).apply(operator, order)
