from fractions import Fraction
from numbers import Rational
from typing import Any

from sympy import Rational as SympyRational, Integer as SympyInteger


def to_fraction(value: Any) -> Fraction:
    """
    Converts ints, "p/q" strings, sympy rationals and domain elements to a Fraction.

    Floats are refused: every coefficient of the package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (SympyRational, SympyInteger)):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        # gmpy2 mpq and the pure-python QQ elements
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Any) -> str:
    """Formats a rational as "p/q" (or "p" for integers)."""
    return str(to_fraction(value))


def to_sympy_rational(value: Any) -> SympyRational:
    fraction = to_fraction(value)
    return SympyRational(fraction.numerator, fraction.denominator)
