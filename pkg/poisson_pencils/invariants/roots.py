"""
Expansion of the lam-roots of a characteristic polynomial in powers of p.

With R = p^n Q(p, lam) and B(lam) = Q(0, lam) squarefree, every simple root u
of B extends to lam(p) = u + a_1 p + a_2 p^2 + ... with
a_k = -[p^k] Q(p, lam_<k(p)) / B'(u). Rational roots are expanded exactly,
the others in mpmath at the configured precision.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import mpmath
from sympy import Integer, Poly, factor_list, gcd

from ..core.config import settings
from ..core.exceptions import IntegrityError, SemisimplicityError, ValidationError
from ..core.logging import get_logger
from ..core.utils import to_fraction, to_sympy_rational
from ..diffring import LAM
from .symbols import P, CharPoly

logger = get_logger(__name__)

Number = Union[Fraction, mpmath.mpf, mpmath.mpc]


@dataclass(frozen=True)
class RootSeries:
    coefficients: Tuple[Number, ...]
    exact: bool

    @property
    def u(self) -> Number:
        return self.coefficients[0]

    @property
    def lambda2(self) -> Number:
        return self.coefficients[2]

    @property
    def odd_max(self) -> float:
        odd = [abs(c) for k, c in enumerate(self.coefficients) if k % 2]
        return float(max(odd, default=0))


@dataclass(frozen=True)
class RootExpansion:
    base_point: Tuple[Fraction, ...]
    roots: Tuple[RootSeries, ...]
    order: int
    p_power: int
    numeric_tolerance: float
    precision: int = field(default=50)

    @property
    def odd_max(self) -> float:
        return max((root.odd_max for root in self.roots), default=0.0)


def _split_p_power(poly: Poly) -> Tuple[int, Dict[Tuple[int, int], Fraction]]:
    """Lowest power n of p and the coefficients {(i, j): c} of p^i lam^j in R / p^n."""
    terms = {(i, j): to_fraction(c) for (i, j), c in poly.terms()}
    n = min(i for i, _ in terms)
    return n, {(i - n, j): c for (i, j), c in terms.items()}


def leading_roots(base: Poly, precision: int) -> List[Tuple[Number, bool]]:
    """Roots of B(lam): exact for linear rational factors, mpmath otherwise."""
    roots: List[Tuple[Number, bool]] = []
    _, factors = factor_list(base.as_expr(), LAM)
    for factor, multiplicity in factors:
        if multiplicity > 1:
            raise SemisimplicityError("canonical coordinates are not pairwise distinct")
        f = Poly(factor, LAM)
        if f.degree() == 1:
            a, b = f.all_coeffs()
            roots.append((-to_fraction(b) / to_fraction(a), True))
        elif f.degree() > 1:
            coefficients = [_to_mp(to_fraction(c)) for c in f.all_coeffs()]
            with mpmath.workdps(precision):
                found = mpmath.polyroots(coefficients, maxsteps=200, extraprec=2 * precision)
            roots.extend((_clean(r), False) for r in found)
    return roots


def _to_mp(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


def _clean(value) -> Number:
    if isinstance(value, mpmath.mpc) and abs(value.imag) <= mpmath.mpf(10) ** (-mpmath.mp.dps // 2):
        return mpmath.mpf(value.real)
    return value


def _series_mul(a: Sequence, b: Sequence, size: int, zero) -> List:
    result = [zero] * size
    for i, x in enumerate(a[:size]):
        if not x:
            continue
        for j, y in enumerate(b[: size - i]):
            result[i + j] += x * y
    return result


def _composed_coefficient(
    terms: Mapping[Tuple[int, int], Number], series: Sequence, k: int, zero
) -> Number:
    """[p^k] of sum c_ij p^i lam(p)^j."""
    max_j = max(j for _, j in terms)
    powers = [[zero] * (k + 1) for _ in range(max_j + 1)]
    powers[0][0] = zero + 1
    for j in range(1, max_j + 1):
        powers[j] = _series_mul(powers[j - 1], series, k + 1, zero)
    total = zero
    for (i, j), c in terms.items():
        if i <= k:
            total += c * powers[j][k - i]
    return total


def _expand(
    terms: Mapping[Tuple[int, int], Fraction], u: Number, exact: bool, order: int
) -> Tuple[Number, ...]:
    zero = Fraction(0) if exact else mpmath.mpf(0)
    coeffs = terms if exact else {key: _to_mp(c) for key, c in terms.items()}
    derivative = sum(
        (c * j * u ** (j - 1) for (i, j), c in coeffs.items() if i == 0 and j > 0), zero
    )
    if not derivative:
        raise SemisimplicityError("root of the leading lam-polynomial is not simple")
    series = [u] + [zero] * order
    for k in range(1, order + 1):
        series[k] = -_composed_coefficient(coeffs, series, k, zero) / derivative
    return tuple(series)


def lambda_roots(
    c: CharPoly,
    w0: Union[Sequence, Mapping[int, Fraction]],
    order: Optional[int] = None,
    precision: Optional[int] = None,
    odd_tol: Optional[float] = None,
) -> RootExpansion:
    """
    Root series lam^i(p) = u^i + lam^i_2 p^2 + ... up to p^order at the point w0.
    """
    order = settings.numeric.order if order is None else order
    precision = settings.numeric.precision if precision is None else precision
    odd_tol = settings.numeric.odd_tol if odd_tol is None else odd_tol
    if order < 2 or order % 2:
        raise ValidationError(f"root expansion order must be even and >= 2, got {order}")
    values = dict(w0) if isinstance(w0, Mapping) else dict(enumerate(w0))
    at_point = c.at({k: to_fraction(v) for k, v in values.items()}).poly
    leftover = at_point.free_symbols - {P, LAM}
    if leftover:
        raise ValidationError(f"point does not fix the fields {sorted(map(str, leftover))}")
    poly = Poly(at_point, P, LAM)
    if poly.is_zero:
        raise SemisimplicityError("characteristic polynomial vanishes at the point")
    n, terms = _split_p_power(poly)
    base = Poly(
        sum((to_sympy_rational(c) * LAM**j for (i, j), c in terms.items() if i == 0), Integer(0)),
        LAM,
    )
    if base.degree() < 1:
        raise SemisimplicityError("leading lam-polynomial has no roots")
    if gcd(base, base.diff(LAM)).degree() > 0:
        raise SemisimplicityError("leading lam-polynomial has repeated roots")

    with mpmath.workdps(precision):
        roots = tuple(
            RootSeries(_expand(terms, u, exact, order), exact)
            for u, exact in leading_roots(base, precision)
        )
        for root in roots:
            if root.exact and root.odd_max:
                raise IntegrityError("odd coefficient in an exact root expansion")
            if root.odd_max > odd_tol:
                raise IntegrityError(
                    f"odd coefficient {root.odd_max:.3e} exceeds the tolerance {odd_tol:.1e}"
                )

    logger.debug("expanded %d roots to order %d", len(roots), order)
    return RootExpansion(
        base_point=tuple(to_fraction(values[k]) for k in sorted(values)),
        roots=roots,
        order=order,
        p_power=n,
        numeric_tolerance=odd_tol,
        precision=precision,
    )
