"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients. Instances are immutable and hashable.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, ...]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


def grlex_key(m: Monomial) -> tuple:
    return (sum(m), m)


class Polynomial:
    """Polynomial in ``nvars`` variables ``x1 .. x{nvars}`` over the rationals."""

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"exponent vector {mono} has length != {nvars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = _as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self._nvars = nvars
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls.constant(nvars, 1)

    @classmethod
    def var(cls, nvars: int, i: int) -> Polynomial:
        """The coordinate function ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        mono = [0] * nvars
        mono[i - 1] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> Polynomial:
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> Polynomial:
        p = cls.__new__(cls)
        p._nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # accessors

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order."""
        for m in sorted(self._terms, key=grlex_key, reverse=True):
            yield m, self._terms[m]

    def coeff(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._nvars, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i - 1] for m in self._terms), default=-1)

    def min_degree_in(self, i: int) -> int:
        """Largest ``e`` with ``x_i^e`` dividing every term; 0 for the zero polynomial."""
        return min((m[i - 1] for m in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other._nvars != self._nvars:
                raise ValueError(f"variable-count mismatch: {self._nvars} vs {other._nvars}")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Polynomial.constant(self._nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self._nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self._nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = Polynomial.one(self._nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw(self._nvars, {m: c * v for m, v in self._terms.items()})

    def shift(self, i: int, e: int) -> Polynomial:
        """Multiply by ``x_i^e``; negative ``e`` divides and requires exact divisibility."""
        if e < 0 and self.min_degree_in(i) < -e and self._terms:
            raise ValueError(f"x{i}^{-e} does not divide the polynomial")
        out = {}
        for m, c in self._terms.items():
            m = list(m)
            m[i - 1] += e
            out[tuple(m)] = c
        return Polynomial._raw(self._nvars, out)

    # comparisons

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self._nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    # calculus and substitution

    def diff(self, var: int) -> Polynomial:
        return diff_poly(self, var)

    def subst(self, images: Sequence[Polynomial]) -> Polynomial:
        return subst_poly(self, images)

    def restrict_zero(self, indices: Iterable[int]) -> Polynomial:
        """Set the listed variables (1-based) to zero."""
        idx = [i - 1 for i in indices]
        return Polynomial._raw(
            self._nvars,
            {m: c for m, c in self._terms.items() if all(m[i] == 0 for i in idx)},
        )

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self._nvars:
            raise ValueError("point has wrong dimension")
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in zip(pt, m):
                if e:
                    t *= v**e
            total += t
        return total

    # printing

    def __str__(self) -> str:
        from .parser import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({self._nvars}, {str(self)!r})"


def diff_poly(p: Polynomial, var: int) -> Polynomial:
    """Formal partial derivative with respect to ``x_var`` (1-based)."""
    if not 1 <= var <= p.nvars:
        raise IndexError(f"variable index {var} out of range 1..{p.nvars}")
    i = var - 1
    out = {}
    for m, c in p._terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Polynomial._raw(p.nvars, out)


def subst_poly(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Substitute ``x_i -> images[i-1]``; all images share one target ring."""
    if len(images) != p.nvars:
        raise ValueError(f"expected {p.nvars} images, got {len(images)}")
    if not images:
        return p
    target = images[0].nvars
    if any(q.nvars != target for q in images):
        raise ValueError("substitution images live in different rings")
    cache: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in cache:
            cache[key] = images[i] ** e
        return cache[key]

    result = Polynomial.zero(target)
    for m, c in p._terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result
