"""
Published forms of the reduced pencils, in normal-ordered text.

Each entry lists the field names the text uses, the upper triangle of the
pencil P2 - lam P1 (or the pair P1, P2), and whether the display follows the
opposite bracket-ordering convention.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from sympy import Expr, Rational, expand

from ..diffring import LAM, DiffOp, DiffPoly, MatDiffOp, jet_symbol, parse_matrix, parse_operator
from ..invariants import P


@dataclass(frozen=True)
class PrintedPencil:
    names: Tuple[str, ...]
    p1: Optional[Tuple[Tuple[str, ...], ...]] = None
    p2: Optional[Tuple[Tuple[str, ...], ...]] = None
    upper: Optional[Tuple[Tuple[str, ...], ...]] = None
    opposite: bool = False

    def operator(self) -> MatDiffOp:
        if self.upper is not None:
            return _from_upper(self.upper, self.names)
        p1 = parse_matrix(self.p1, self.names)
        p2 = parse_matrix(self.p2, self.names)
        return p2 - p1.scale(DiffPoly.lam())


def _from_upper(upper: Sequence[Sequence[str]], names: Sequence[str]) -> MatDiffOp:
    size = len(upper)
    rows = [[DiffOp.zero()] * size for _ in range(size)]
    for i, row in enumerate(upper):
        for offset, text in enumerate(row):
            j = i + offset
            entry = parse_operator(text, names)
            rows[i][j] = entry
            if i != j:
                rows[j][i] = -entry.adjoint()
    return MatDiffOp(rows, (size, size))


KDV = PrintedPencil(
    names=("u",),
    p1=(("-2*D",),),
    p2=(("-u_x - 2*u*D + 1/2*eps^2*D^3",),),
)

CAMASSA_HOLM = PrintedPencil(
    names=("u",),
    p1=(("-u_x - 2*u*D",),),
    p2=(("-2*D + 1/2*eps^2*D^3",),),
)

SO5 = PrintedPencil(
    names=("w1", "w2"),
    p1=(
        ("1/2*eps^2*D^3 - 2*w2*D - w2_x", "2*D"),
        ("2*D", "0"),
    ),
    p2=(
        (
            "-1/16*eps^6*D^7 + 1/2*eps^4*w2*D^5 + 5/4*eps^4*w2_x*D^4"
            " + eps^2*(1/2*w1 - w2^2 + 2*eps^2*w2_xx)*D^3"
            " + eps^2*(3/4*w1_x - 3*w2*w2_x + 7/4*eps^2*w2_xxx)*D^2"
            " + (-2*w1*w2 + eps^2*(-3/4*w2_x^2 + 3/4*w1_xx - 2*w2*w2_xx) + 3/4*eps^4*w2_x4)*D"
            " - w1_x*w2 - w1*w2_x + eps^2*(-1/4*w2_x*w2_xx + 1/4*w1_xxx - 1/2*w2*w2_xxx)"
            " + 1/8*eps^4*w2_x5",
            "-1/4*eps^4*D^5 + eps^2*w2*D^3 + 1/2*eps^2*w2_x*D^2 + 2*w1*D + 1/2*w1_x",
        ),
        (
            "-1/4*eps^4*D^5 + eps^2*w2*D^3 + 5/2*eps^2*w2_x*D^2 + (2*w1 + 2*eps^2*w2_xx)*D"
            " + 3/2*w1_x + 1/2*eps^2*w2_xxx",
            "-5/4*eps^2*D^3 + w2*D + 1/2*w2_x",
        ),
    ),
    opposite=True,
)

SL3_FRACTIONAL = PrintedPencil(
    names=("u0", "u1", "u2", "u3"),
    upper=(
        (
            "2/3*D",
            "eps^-1*(u1 - lam)",
            "eps^-1*(-u2 + lam)",
            "-1/3*(eps*D^2 + u0*D + u0_x)",
        ),
        (
            "0",
            "eps*D^2 + 3*u0*D + 2*u0_x + eps^-1*(2*u0^2 - u3)",
            "2*(u1 - lam)*D + u1_x + 2*eps^-1*u0*(u1 - lam)",
        ),
        (
            "0",
            "(u2 - lam)*D + u2_x - 2*eps^-1*u0*(u2 - lam)",
        ),
        (
            "-2/3*eps^2*D^3 - 4/3*eps*u0_x*D + 2*(u3 + 1/3*u0^2)*D"
            " - 2/3*eps*u0_xx + 2/3*u0*u0_x + u3_x",
        ),
    ),
    opposite=True,
)


def kdv_char_poly() -> Expr:
    u = jet_symbol(0, 0)
    return expand(-2 * u * P + Rational(1, 2) * P**3 + 2 * LAM * P)


def so5_char_poly_identity() -> Expr:
    """4 p^2 (...)(...), equal to 256 R_Q for the reduced so(5) pencil."""
    w1, w2 = jet_symbol(0, 0), jet_symbol(1, 0)
    return expand(
        4
        * P**2
        * (-32 * LAM + P**4 - 8 * P**2 * w2 + 32 * w1 + 16 * w2**2)
        * (8 * LAM + P**4 - 4 * P**2 * w2 - 8 * w1)
    )
