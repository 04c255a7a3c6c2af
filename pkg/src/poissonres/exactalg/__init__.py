"""Exact arithmetic: rationals, sparse polynomials, dense rational matrices."""
from fractions import Fraction as Rational

from .linalg import (
    QMatrix,
    SingularMatrixError,
    det,
    inverse,
    is_negative_definite,
    solve_linear,
)
from .parser import (
    PolynomialSyntaxError,
    UnknownVariableError,
    format_poly,
    format_rational,
    parse_poly,
    parse_rational,
)
from .polynomial import Polynomial, diff_poly, subst_poly
from .ratfunc import RationalFunction

__all__ = [
    "Rational",
    "Polynomial",
    "QMatrix",
    "RationalFunction",
    "SingularMatrixError",
    "PolynomialSyntaxError",
    "UnknownVariableError",
    "det",
    "diff_poly",
    "format_poly",
    "format_rational",
    "inverse",
    "is_negative_definite",
    "parse_rational",
    "parse_poly",
    "solve_linear",
    "subst_poly",
]

