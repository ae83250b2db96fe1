"""
Differential polynomials over the rationals.

A monomial is a triple (variables, eps, lam): ``variables`` is a sorted tuple of
(field, order, exponent) standing for a product of powers of w^field_(order),
``eps`` an integer (possibly negative) power of the deformation parameter and
``lam`` a nonnegative power of the pencil parameter.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

Variables = Tuple[Tuple[int, int, int], ...]
Monomial = Tuple[Variables, int, int]
Scalar = Union[int, Fraction]

ONE: Monomial = ((), 0, 0)


def _merge(left: Variables, right: Variables) -> Variables:
    if not left:
        return right
    if not right:
        return left
    powers: Dict[Tuple[int, int], int] = {}
    for field, order, exponent in left:
        powers[(field, order)] = exponent
    for field, order, exponent in right:
        powers[(field, order)] = powers.get((field, order), 0) + exponent
    return tuple((f, s, e) for (f, s), e in sorted(powers.items()))


def _without(variables: Variables, position: int) -> Variables:
    field, order, exponent = variables[position]
    if exponent == 1:
        return variables[:position] + variables[position + 1 :]
    return variables[:position] + ((field, order, exponent - 1),) + variables[position + 1 :]


def monomial_sort_key(monomial: Monomial):
    variables, eps, lam = monomial
    degree = sum(order * exponent for _, order, exponent in variables)
    return (
        degree,
        tuple((field, order, -exponent) for field, order, exponent in variables),
        eps,
        lam,
    )


class DiffPoly:
    """Sparse map from monomials to nonzero rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.terms: Dict[Monomial, Fraction] = {}
        if terms:
            for monomial, coefficient in terms.items():
                if coefficient:
                    self.terms[monomial] = Fraction(coefficient)

    # construction

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "DiffPoly":
        poly = cls.__new__(cls)
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls) -> "DiffPoly":
        return cls._raw({})

    @classmethod
    def constant(cls, value: Scalar) -> "DiffPoly":
        value = Fraction(value)
        return cls._raw({ONE: value} if value else {})

    @classmethod
    def one(cls) -> "DiffPoly":
        return cls.constant(1)

    @classmethod
    def field(cls, index: int, order: int = 0, exponent: int = 1) -> "DiffPoly":
        return cls._raw({(((index, order, exponent),), 0, 0): Fraction(1)})

    @classmethod
    def eps(cls, power: int = 1) -> "DiffPoly":
        return cls._raw({((), power, 0): Fraction(1)})

    @classmethod
    def lam(cls, power: int = 1) -> "DiffPoly":
        return cls._raw({((), 0, power): Fraction(1)})

    @classmethod
    def coerce(cls, value: Union["DiffPoly", Scalar]) -> "DiffPoly":
        if isinstance(value, DiffPoly):
            return value
        return cls.constant(value)

    # arithmetic

    def __add__(self, other) -> "DiffPoly":
        other = DiffPoly.coerce(other)
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            total = terms.get(monomial, 0) + coefficient
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return DiffPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "DiffPoly":
        return DiffPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "DiffPoly":
        return self + (-DiffPoly.coerce(other))

    def __rsub__(self, other) -> "DiffPoly":
        return DiffPoly.coerce(other) - self

    def __mul__(self, other) -> "DiffPoly":
        if not isinstance(other, DiffPoly):
            factor = Fraction(other)
            if not factor:
                return DiffPoly.zero()
            return DiffPoly._raw({m: c * factor for m, c in self.terms.items()})

        terms: Dict[Monomial, Fraction] = {}
        for (v1, e1, l1), c1 in self.terms.items():
            for (v2, e2, l2), c2 in other.terms.items():
                monomial = (_merge(v1, v2), e1 + e2, l1 + l2)
                total = terms.get(monomial, 0) + c1 * c2
                if total:
                    terms[monomial] = total
                else:
                    terms.pop(monomial, None)
        return DiffPoly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "DiffPoly":
        if exponent < 0:
            raise ValueError("negative powers of differential polynomials are not defined")
        result = DiffPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffPoly):
            try:
                other = DiffPoly.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda item: monomial_sort_key(item[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        from .printing import format_diffpoly

        return f"DiffPoly({format_diffpoly(self)})"

    # queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(monomial == ONE for monomial in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("polynomial is not a rational constant")
        return self.terms.get(ONE, Fraction(0))

    def fields(self) -> set[int]:
        return {field for (variables, _, _) in self.terms for field, _, _ in variables}

    def max_order(self) -> int:
        return max(
            (order for (variables, _, _) in self.terms for _, order, _ in variables),
            default=-1,
        )

    def eps_exponents(self) -> set[int]:
        return {eps for (_, eps, _) in self.terms}

    def lam_degree(self) -> int:
        return max((lam for (_, _, lam) in self.terms), default=0)

    @property
    def is_derivative_free(self) -> bool:
        return all(
            order == 0 for (variables, _, _) in self.terms for _, order, _ in variables
        )

    # projections

    def select(self, predicate: Callable[[Monomial], bool]) -> "DiffPoly":
        return DiffPoly._raw({m: c for m, c in self.terms.items() if predicate(m)})

    def eps_coefficient(self, power: int) -> "DiffPoly":
        """Coefficient of eps^power, with eps removed."""
        return DiffPoly._raw(
            {(v, 0, l): c for (v, e, l), c in self.terms.items() if e == power}
        )

    def lam_coefficient(self, power: int) -> "DiffPoly":
        """Coefficient of lam^power, with lam removed."""
        return DiffPoly._raw(
            {(v, e, 0): c for (v, e, l), c in self.terms.items() if l == power}
        )

    def derivative_free_part(self) -> "DiffPoly":
        return self.select(
            lambda monomial: all(order == 0 for _, order, _ in monomial[0])
        )

    def linear_coefficient(self, field: int, order: int) -> "DiffPoly":
        """
        Coefficient of w^field_(order) in the part of self that is linear in it and
        otherwise derivative-free.
        """
        terms: Dict[Monomial, Fraction] = {}
        for (variables, eps, lam), coefficient in self.terms.items():
            rest = []
            hit = False
            valid = True
            for f, s, e in variables:
                if (f, s) == (field, order) and e == 1:
                    hit = True
                elif s > 0:
                    valid = False
                else:
                    rest.append((f, s, e))
            if hit and valid:
                terms[(tuple(rest), eps, lam)] = coefficient
        return DiffPoly._raw(terms)

    def shift_eps(self, power: int) -> "DiffPoly":
        if not power:
            return self
        return DiffPoly._raw({(v, e + power, l): c for (v, e, l), c in self.terms.items()})

    def set_eps(self, value: Scalar = 1) -> "DiffPoly":
        value = Fraction(value)
        result = DiffPoly.zero()
        for (variables, eps, lam), coefficient in self.terms.items():
            result = result + DiffPoly._raw({(variables, 0, lam): coefficient * value**eps})
        return result

    def truncate_eps(self, max_power: int) -> Tuple["DiffPoly", bool]:
        kept = {m: c for m, c in self.terms.items() if m[1] <= max_power}
        return DiffPoly._raw(kept), len(kept) != len(self.terms)

    # calculus

    def derivative(self) -> "DiffPoly":
        """Total x-derivative: w^i_(s) -> w^i_(s+1) by the chain rule."""
        terms: Dict[Monomial, Fraction] = {}
        for (variables, eps, lam), coefficient in self.terms.items():
            for position, (field, order, exponent) in enumerate(variables):
                reduced = _without(variables, position)
                monomial = (_merge(reduced, ((field, order + 1, 1),)), eps, lam)
                total = terms.get(monomial, 0) + coefficient * exponent
                if total:
                    terms[monomial] = total
                else:
                    terms.pop(monomial, None)
        return DiffPoly._raw(terms)

    def derivatives(self, count: int) -> list["DiffPoly"]:
        """[self, self_x, ..., self_(count)]."""
        result = [self]
        for _ in range(count):
            result.append(result[-1].derivative())
        return result

    def partial(self, field: int, order: int = 0) -> "DiffPoly":
        """Partial derivative with respect to the jet variable w^field_(order)."""
        terms: Dict[Monomial, Fraction] = {}
        for (variables, eps, lam), coefficient in self.terms.items():
            for position, (f, s, exponent) in enumerate(variables):
                if (f, s) != (field, order):
                    continue
                monomial = (_without(variables, position), eps, lam)
                terms[monomial] = terms.get(monomial, 0) + coefficient * exponent
        return DiffPoly._raw({m: c for m, c in terms.items() if c})

    def partial_lam(self) -> "DiffPoly":
        terms: Dict[Monomial, Fraction] = {}
        for (variables, eps, lam), coefficient in self.terms.items():
            if lam:
                terms[(variables, eps, lam - 1)] = coefficient * lam
        return DiffPoly._raw(terms)

    # substitutions

    def substitute(self, images: Mapping[int, "DiffPoly"]) -> "DiffPoly":
        """
        Replaces every jet variable w^i_(s) with i in ``images`` by the s-th total
        derivative of images[i]; other fields are kept.
        """
        cache: Dict[Tuple[int, int], DiffPoly] = {}

        def image(field: int, order: int) -> DiffPoly:
            key = (field, order)
            if key not in cache:
                cache[key] = (
                    images[field] if order == 0 else image(field, order - 1).derivative()
                )
            return cache[key]

        result = DiffPoly.zero()
        for (variables, eps, lam), coefficient in self.terms.items():
            kept = []
            term = DiffPoly._raw({((), eps, lam): coefficient})
            for field, order, exponent in variables:
                if field in images:
                    term = term * image(field, order) ** exponent
                else:
                    kept.append((field, order, exponent))
            if kept:
                term = term * DiffPoly._raw({(tuple(kept), 0, 0): Fraction(1)})
            result = result + term
        return result

    def substitute_constants(self, values: Mapping[int, Scalar]) -> "DiffPoly":
        """Pins fields to rational constants; their x-derivatives become zero."""
        terms: Dict[Monomial, Fraction] = {}
        for (variables, eps, lam), coefficient in self.terms.items():
            kept = []
            factor = Fraction(coefficient)
            for field, order, exponent in variables:
                if field in values:
                    factor *= Fraction(values[field]) ** exponent if order == 0 else 0
                else:
                    kept.append((field, order, exponent))
                if not factor:
                    break
            if factor:
                monomial = (tuple(kept), eps, lam)
                total = terms.get(monomial, 0) + factor
                if total:
                    terms[monomial] = total
                else:
                    terms.pop(monomial, None)
        return DiffPoly._raw(terms)

    def substitute_lam(self, value: Scalar) -> "DiffPoly":
        value = Fraction(value)
        result = DiffPoly.zero()
        for (variables, eps, lam), coefficient in self.terms.items():
            result = result + DiffPoly._raw({(variables, eps, 0): coefficient * value**lam})
        return result

    def rename(self, mapping: Mapping[int, int]) -> "DiffPoly":
        terms: Dict[Monomial, Fraction] = {}
        for (variables, eps, lam), coefficient in self.terms.items():
            renamed = tuple(
                sorted((mapping[field], order, exponent) for field, order, exponent in variables)
            )
            monomial = (renamed, eps, lam)
            terms[monomial] = terms.get(monomial, 0) + coefficient
        return DiffPoly._raw({m: c for m, c in terms.items() if c})

    def evaluate(
        self,
        values: Mapping[int, Scalar] | Iterable[Scalar],
        lam: Optional[Scalar] = None,
        eps: Scalar = 1,
    ) -> Fraction:
        """Value at a point of a derivative-free polynomial."""
        if not isinstance(values, Mapping):
            values = dict(enumerate(values))
        total = Fraction(0)
        for (variables, e, l), coefficient in self.terms.items():
            term = Fraction(coefficient) * Fraction(eps) ** e
            if l:
                if lam is None:
                    raise ValueError("polynomial depends on lam; supply a value")
                term *= Fraction(lam) ** l
            for field, order, exponent in variables:
                if order:
                    raise ValueError("cannot evaluate jet variables of positive order")
                term *= Fraction(values[field]) ** exponent
            total += term
        return total

    def differential_degrees(self) -> set[int]:
        return {
            sum(order * exponent for _, order, exponent in variables)
            for (variables, _, _) in self.terms
        }


def differential_degree(monomial: Monomial) -> int:
    return sum(order * exponent for _, order, exponent in monomial[0])
