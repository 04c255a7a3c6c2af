"""Rational functions ``num / den`` in lowest terms.

Multivariate gcd cancellation is delegated to sympy's sparse polynomial
rings; everything else stays on :class:`Polynomial`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.rings import ring

from .polynomial import Polynomial


@lru_cache(maxsize=None)
def _ring(nvars: int):
    R, *_ = ring(",".join(f"x{i}" for i in range(1, nvars + 1)), QQ)
    return R


def _to_sympy(p: Polynomial):
    R = _ring(p.nvars)
    return R.from_dict({m: QQ(c.numerator, c.denominator) for m, c in p.terms.items()})


def _from_sympy(f, nvars: int) -> Polynomial:
    return Polynomial(nvars, {tuple(m): Fraction(int(c.numerator), int(c.denominator))
                              for m, c in f.items()})


def _cancel(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if num.is_zero():
        return num, Polynomial.one(num.nvars)
    if den.is_constant():
        return num, den
    n, d = _to_sympy(num).cancel(_to_sympy(den))
    return _from_sympy(n, num.nvars), _from_sympy(d, num.nvars)


class RationalFunction:
    """Quotient of polynomials, kept with a monic (grlex-leading) denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, *, reduce: bool = True):
        if den is None:
            den = Polynomial.one(num.nvars)
        if den.nvars != num.nvars:
            raise ValueError("numerator and denominator live in different rings")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            num, den = _cancel(num, den)
        lead = next(den.items())[1]
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        self.num = num
        self.den = den

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def _coerce(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other, reduce=False)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Polynomial.constant(self.nvars, other), reduce=False)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.den, self.den * other.num)

    def diff(self, var: int) -> RationalFunction:
        """Quotient rule."""
        n, d = self.num, self.den
        return RationalFunction(n.diff(var) * d - n * d.diff(var), d * d)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        n = str(self.num) if len(self.num) == 1 else f"({self.num})"
        return f"{n}/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"
