"""
Symbol-level checks of a reduction: the Schur determinant factorization and
the triviality of the kernel intersection on the leaf.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from sympy import Expr, Matrix, eye, expand

from ..algebra import kernel_ad, orth_complement
from ..core.config import settings
from ..core.exceptions import ValidationError
from ..core.logging import get_logger
from ..core.utils import RationalSampler, rank, to_fraction, to_sympy_rational
from ..diffring import LAM, jet_symbol
from ..invariants.symbols import (
    P,
    CharPolyRatio,
    char_poly,
    charpoly_ratio,
    exact_ratio,
    polynomial_det,
    symbol,
)
from ..pencils import GaugeSpec, PencilInstance
from .dirac import ReducedPencil, dirac_reduce

logger = get_logger(__name__)


@dataclass(frozen=True)
class SchurReport:
    det_pi: Expr
    det_delta: Expr
    det_reduced: Expr
    identity_holds: bool
    det_delta_lambda_free: bool
    det_delta_constant: bool
    f_q: CharPolyRatio
    f_adjoint: Optional[Expr] = None

    @property
    def ok(self) -> bool:
        return self.identity_holds and self.det_delta_lambda_free


def adjoint_determinant(pencil: PencilInstance, gauge: GaugeSpec) -> Optional[Expr]:
    """det(-p Id - ad Xi) on Q, Xi = W - lam A (ds) or A - lam W (swapped-ch)."""
    alg, chart, a = pencil.algebra, pencil.chart, pencil.a_vector
    if alg is None or chart is None or a is None:
        return None
    retained = {old: new for new, old in enumerate(gauge.retained)}
    coordinates = [
        to_sympy_rational(gauge.fixed[c]) if c in gauge.fixed else jet_symbol(retained[c], 0)
        for c in range(chart.size)
    ]
    w = [to_sympy_rational(x) for x in chart.base]
    for z, v in zip(coordinates, chart.vectors):
        for k, x in enumerate(v):
            if x:
                w[k] += z * to_sympy_rational(x)
    a_sym = [to_sympy_rational(x) for x in a]
    if pencil.variant == "swapped-ch":
        xi = [ak - LAM * wk for ak, wk in zip(a_sym, w)]
    else:
        xi = [wk - LAM * ak for wk, ak in zip(w, a_sym)]
    ad = -P * eye(alg.dim)
    for k, coefficient in enumerate(xi):
        if coefficient == 0:
            continue
        ad -= coefficient * Matrix(alg.ad_matrix(alg.basis_vector(k))).applyfunc(to_sympy_rational)
    return polynomial_det(ad.applyfunc(expand))


def schur_check(
    pencil: PencilInstance,
    gauge: GaugeSpec,
    reduced: Optional[ReducedPencil] = None,
    max_order: Optional[int] = None,
) -> SchurReport:
    """det pi = det delta * det pi' at the symbol level, with det delta lam-free."""
    reduced = reduced or dirac_reduce(pencil, gauge, max_order)
    blocks = reduced.blocks
    rm = char_poly(symbol(blocks.substituted))
    delta = char_poly(symbol(blocks.d_block))
    rq = char_poly(symbol(reduced.operator))
    identity_holds = expand(rm.poly - delta.poly * rq.poly) == 0
    f_q = charpoly_ratio(rm, rq)
    adjoint = adjoint_determinant(pencil, gauge)
    f_adjoint = exact_ratio(rq.poly, adjoint) if adjoint is not None else None
    report = SchurReport(
        det_pi=rm.poly,
        det_delta=delta.poly,
        det_reduced=rq.poly,
        identity_holds=identity_holds,
        det_delta_lambda_free=not delta.poly.has(LAM),
        det_delta_constant=delta.poly.is_number,
        f_q=f_q,
        f_adjoint=f_adjoint,
    )
    logger.info(
        "schur check for %s: identity %s, F_Q = %s, F_adjoint = %s",
        pencil.name,
        identity_holds,
        f_q.value,
        f_adjoint,
    )
    return report


@dataclass(frozen=True)
class KernelPoint:
    point: Tuple[Fraction, ...]
    p_values: Tuple[Fraction, ...]
    nullities: Tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return not any(self.nullities)


@dataclass(frozen=True)
class KernelIntersectionReport:
    pencil: str
    seed: int
    samples: List[KernelPoint] = field(default_factory=list)
    negative_control: int = 0

    @property
    def ok(self) -> bool:
        return all(sample.trivial for sample in self.samples) and self.negative_control > 0


def _nullity(first: Matrix, second: Matrix) -> int:
    rows = [[to_fraction(x) for x in first.row(i)] for i in range(first.rows)]
    rows += [[to_fraction(x) for x in second.row(i)] for i in range(second.rows)]
    return first.cols - rank(rows, first.cols)


def kernel_intersection_check(
    pencil: PencilInstance,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    p_samples: int = 2,
) -> KernelIntersectionReport:
    """
    Nullity of [pi_1; pi_2(p)] at random points I + x of the leaf, x in ker(ad A)^perp,
    for p = 0 and random rational p. The point w = A is the negative control.
    """
    alg, chart, a = pencil.algebra, pencil.chart, pencil.a_vector
    if alg is None or chart is None or a is None:
        raise ValidationError(f"{pencil.name} is not a loop-algebra pencil")
    samples = settings.numeric.samples if samples is None else samples
    seed = settings.numeric.seed if seed is None else seed
    sampler = RationalSampler(seed)
    leaf = orth_complement(alg, kernel_ad(alg, a))
    base = pencil.i_vector or chart.base
    p1, p2 = pencil.pair()
    s1, s2 = symbol(p1), symbol(p2)

    def nullities(z, ps) -> Tuple[int, ...]:
        values = dict(enumerate(z))
        m1, m2 = s1.subs(values).matrix(), s2.subs(values).matrix()
        return tuple(
            _nullity(m1.xreplace({P: to_sympy_rational(p)}), m2.xreplace({P: to_sympy_rational(p)}))
            for p in ps
        )

    results = []
    for _ in range(samples):
        x = leaf.combination(sampler.point(leaf.dim))
        w = tuple(b + xk for b, xk in zip(base, x))
        z = chart.coordinates(alg, w)
        ps = (Fraction(0),) + tuple(sampler.draw_nonzero() for _ in range(p_samples))
        results.append(KernelPoint(point=z, p_values=ps, nullities=nullities(z, ps)))

    control = nullities(chart.coordinates(alg, a), (Fraction(0),))[0]
    report = KernelIntersectionReport(
        pencil=pencil.name, seed=seed, samples=results, negative_control=control
    )
    logger.info("kernel intersection for %s: trivial %s", pencil.name, report.ok)
    return report
