"""Polynomial bivectors on an affine chart.

Conventions: a bivector ``theta = sum_{s<t} g_st d_s ^ d_t`` is extended to a
full antisymmetric matrix ``g``; the bracket is

    {f, h} = sum_{s,t} g_st * d_s f * d_t h,

and the anchor sends a one-form ``alpha`` to the field with components
``B(alpha)_t = sum_s alpha_s g_st``, so that ``<B(alpha), beta> = theta(alpha ^ beta)``.

Jacobi is checked two ways. :func:`jacobiator` cycles the bracket over
coordinate triples; since the bracket is a biderivation, vanishing on
coordinate functions forces vanishing on all polynomials. :func:`schouten_square`
evaluates ``[theta, theta]`` from the coefficient formula directly. With the
conventions above ``schouten_square == SCHOUTEN_JACOBI_RATIO * jacobiator``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .exactalg import Polynomial, RationalFunction, parse_poly

SCHOUTEN_JACOBI_RATIO = -2


class DegenerateBivectorError(ValueError):
    pass


def _perm_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, tuple(sorted(idx))
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


@dataclass(frozen=True)
class Bivector:
    nvars: int
    coeffs: Mapping[tuple[int, int], Polynomial] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (s, t), p in dict(self.coeffs).items():
            if not (1 <= s <= self.nvars and 1 <= t <= self.nvars) or s == t:
                raise ValueError(f"bad index pair ({s}, {t}) for {self.nvars} variables")
            if p.nvars != self.nvars:
                raise ValueError(f"coefficient g_{s}{t} lives in {p.nvars} variables")
            if s > t:
                s, t, p = t, s, -p
            q = clean.get((s, t), Polynomial.zero(self.nvars)) + p
            if q.is_zero():
                clean.pop((s, t), None)
            else:
                clean[(s, t)] = q
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def g(self, s: int, t: int) -> Polynomial:
        if s == t:
            return Polynomial.zero(self.nvars)
        if s < t:
            return self.coeffs.get((s, t), Polynomial.zero(self.nvars))
        return -self.coeffs.get((t, s), Polynomial.zero(self.nvars))

    def matrix(self) -> list[list[Polynomial]]:
        n = self.nvars
        return [[self.g(s, t) for t in range(1, n + 1)] for s in range(1, n + 1)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, Bivector) and self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(self.coeffs.items())))

    def __add__(self, other: Bivector) -> Bivector:
        if other.nvars != self.nvars:
            raise ValueError("variable-count mismatch")
        out = dict(self.coeffs)
        for k, p in other.coeffs.items():
            out[k] = out.get(k, Polynomial.zero(self.nvars)) + p
        return Bivector(self.nvars, out)

    def scale(self, c) -> Bivector:
        return Bivector(self.nvars, {k: p.scale(c) for k, p in self.coeffs.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({p}) d{s}^d{t}" for (s, t), p in self.coeffs.items())

    @classmethod
    def from_strings(cls, nvars: int, coeffs: Mapping[tuple[int, int], str]) -> Bivector:
        return cls(nvars, {k: parse_poly(v, nvars) for k, v in coeffs.items()})

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "coeffs": [{"s": s, "t": t, "poly": str(p)} for (s, t), p in self.coeffs.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> Bivector:
        n = int(data["nvars"])
        coeffs = {}
        for entry in data.get("coeffs", []):
            s, t = int(entry["s"]), int(entry["t"])
            if s >= t:
                raise ValueError(f"bivector entries need s < t, got ({s}, {t})")
            if (s, t) in coeffs:
                raise ValueError(f"duplicate entry ({s}, {t})")
            coeffs[(s, t)] = parse_poly(entry["poly"], n)
        return cls(n, coeffs)


@dataclass(frozen=True)
class TriVector:
    nvars: int
    coeffs: Mapping[tuple[int, int, int], Polynomial] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for idx, p in dict(self.coeffs).items():
            sign, key = _perm_sign(idx)
            if sign == 0 or p.is_zero():
                continue
            q = clean.get(key, Polynomial.zero(self.nvars)) + (p if sign > 0 else -p)
            if q.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = q
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, idx: tuple[int, int, int]) -> Polynomial:
        sign, key = _perm_sign(idx)
        p = self.coeffs.get(key, Polynomial.zero(self.nvars))
        return p if sign > 0 else (-p if sign < 0 else Polynomial.zero(self.nvars))

    def is_zero(self) -> bool:
        return not self.coeffs

    def scale(self, c) -> TriVector:
        return TriVector(self.nvars, {k: p.scale(c) for k, p in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TriVector) and self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(self.coeffs.items())))

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "coeffs": [{"i": i, "j": j, "k": k, "poly": str(p)} for (i, j, k), p in self.coeffs.items()],
        }


@dataclass(frozen=True)
class TwoForm:
    nvars: int
    coeffs: Mapping[tuple[int, int], RationalFunction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (s, t), r in dict(self.coeffs).items():
            if isinstance(r, Polynomial):
                r = RationalFunction(r)
            if s == t or r.is_zero():
                continue
            if s > t:
                s, t, r = t, s, -r
            clean[(s, t)] = r
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def w(self, s: int, t: int) -> RationalFunction:
        zero = RationalFunction(Polynomial.zero(self.nvars))
        if s == t:
            return zero
        if s < t:
            return self.coeffs.get((s, t), zero)
        return -self.coeffs.get((t, s), zero)

    def matrix(self) -> list[list[RationalFunction]]:
        n = self.nvars
        return [[self.w(s, t) for t in range(1, n + 1)] for s in range(1, n + 1)]

    def contract(self, u: Sequence[Polynomial]) -> list[RationalFunction]:
        """The one-form ``v -> omega(v ^ u)``."""
        n = self.nvars
        return [
            sum((self.w(s, t) * u[t - 1] for t in range(1, n + 1)),
                RationalFunction(Polynomial.zero(n)))
            for s in range(1, n + 1)
        ]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoForm) and self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({r}) dx{s}^dx{t}" for (s, t), r in self.coeffs.items())


def _check_same(theta: Bivector, *polys: Polynomial) -> None:
    for p in polys:
        if p.nvars != theta.nvars:
            raise ValueError(f"variable-count mismatch: bivector has {theta.nvars}, polynomial {p.nvars}")


def bracket(theta: Bivector, f: Polynomial, h: Polynomial) -> Polynomial:
    _check_same(theta, f, h)
    n = theta.nvars
    df = [f.diff(s) for s in range(1, n + 1)]
    dh = [h.diff(s) for s in range(1, n + 1)]
    out = Polynomial.zero(n)
    for (s, t), g in theta.coeffs.items():
        out = out + g * (df[s - 1] * dh[t - 1] - df[t - 1] * dh[s - 1])
    return out


def jacobiator(theta: Bivector) -> TriVector:
    """Cyclic sum ``{x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}`` on coordinates."""
    n = theta.nvars
    x = [Polynomial.var(n, i) for i in range(1, n + 1)]
    out = {}
    for i, j, k in combinations(range(1, n + 1), 3):
        a, b, c = x[i - 1], x[j - 1], x[k - 1]
        out[(i, j, k)] = (
            bracket(theta, a, bracket(theta, b, c))
            + bracket(theta, b, bracket(theta, c, a))
            + bracket(theta, c, bracket(theta, a, b))
        )
    return TriVector(n, out)


def schouten_square(theta: Bivector) -> TriVector:
    """``[theta, theta]`` straight from the coefficient formula."""
    n = theta.nvars
    rng = range(1, n + 1)
    grad = {key: [p.diff(l) for l in rng] for key, p in theta.coeffs.items()}

    def dg(l: int, a: int, b: int) -> Polynomial:
        if a == b:
            return Polynomial.zero(n)
        if a < b:
            d = grad.get((a, b))
            return d[l - 1] if d else Polynomial.zero(n)
        d = grad.get((b, a))
        return -d[l - 1] if d else Polynomial.zero(n)

    out = {}
    for i, j, k in combinations(rng, 3):
        acc = Polynomial.zero(n)
        for l in rng:
            acc = (acc + theta.g(l, k) * dg(l, i, j) + theta.g(l, i) * dg(l, j, k)
                   + theta.g(l, j) * dg(l, k, i))
        out[(i, j, k)] = acc.scale(2)
    return TriVector(n, out)


def is_poisson(theta: Bivector) -> bool:
    return jacobiator(theta).is_zero()


def anchor(theta: Bivector, alpha: Sequence[Polynomial]) -> list[Polynomial]:
    """Vector field ``B(alpha)``; for ``alpha = df`` this is the Hamiltonian field of ``f``."""
    n = theta.nvars
    if len(alpha) != n:
        raise ValueError(f"one-form needs {n} components, got {len(alpha)}")
    _check_same(theta, *alpha)
    return [
        sum((alpha[s - 1] * theta.g(s, t) for s in range(1, n + 1)), Polynomial.zero(n))
        for t in range(1, n + 1)
    ]


def hamiltonian(theta: Bivector, f: Polynomial) -> list[Polynomial]:
    return anchor(theta, [f.diff(s) for s in range(1, theta.nvars + 1)])


def pairing(field_: Sequence, beta: Sequence):
    """``<v, beta>`` for a vector field and one-form given by components."""
    terms = [v * b for v, b in zip(field_, beta)]
    if len(terms) != len(field_) or len(beta) != len(field_):
        raise ValueError("arity mismatch")
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


def poly_det(mat: Sequence[Sequence]):
    """Determinant over a commutative ring by cofactor expansion with memoised column sets."""
    n = len(mat)
    if n == 0:
        raise ValueError("empty matrix")
    memo: dict[tuple[int, frozenset], object] = {}

    def rec(row: int, cols: frozenset):
        if row == n:
            return None
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = None
        ordered = sorted(cols)
        for pos, c in enumerate(ordered):
            entry = mat[row][c]
            if entry.is_zero():
                continue
            sub = rec(row + 1, cols - {c})
            term = entry if sub is None else entry * sub
            if pos % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = mat[0][0] * 0
        memo[key] = acc
        return acc

    return rec(0, frozenset(range(n)))


def is_nondegenerate(theta: Bivector) -> bool:
    n = theta.nvars
    if n % 2:
        return False
    return not poly_det(theta.matrix()).is_zero()


def _adjugate_inverse(mat, n):
    """Inverse of a square matrix over polynomials/rational functions as rational functions."""
    rf = [[e if isinstance(e, RationalFunction) else RationalFunction(e, reduce=False) for e in row]
          for row in mat]
    d = poly_det(rf)
    if d.is_zero():
        raise DegenerateBivectorError("matrix is degenerate")
    inv = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[rf[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = poly_det(sub) if sub else RationalFunction(Polynomial.one(rf[0][0].nvars))
            if (i + j) % 2:
                cof = -cof
            inv[j][i] = cof / d
    return inv


def invert_to_form(theta: Bivector) -> TwoForm:
    """Two-form whose matrix is the transpose of the inverse of ``g``.

    With this sign, ``anchor(theta, omega.contract(u)) == u``.
    """
    n = theta.nvars
    if not is_nondegenerate(theta):
        raise DegenerateBivectorError("bivector is degenerate; no inverse two-form")
    inv = _adjugate_inverse(theta.matrix(), n)
    return TwoForm(n, {(s, t): inv[t - 1][s - 1] for s in range(1, n + 1) for t in range(s + 1, n + 1)})


def invert_to_bivector(omega: TwoForm) -> Bivector:
    """Inverse of :func:`invert_to_form`; fails when the result is not polynomial."""
    n = omega.nvars
    if n % 2:
        raise DegenerateBivectorError("odd dimension")
    inv = _adjugate_inverse(omega.matrix(), n)
    coeffs = {}
    for s in range(1, n + 1):
        for t in range(s + 1, n + 1):
            r = inv[t - 1][s - 1]
            if not r.is_polynomial():
                raise ValueError(f"inverse coefficient ({s},{t}) = {r} is not polynomial")
            coeffs[(s, t)] = r.num.scale(1 / r.den.constant_term())
    return Bivector(n, coeffs)


def exterior_derivative(omega: TwoForm) -> dict[tuple[int, int, int], RationalFunction]:
    """Components ``d_i w_jk - d_j w_ik + d_k w_ij`` for ``i < j < k``."""
    n = omega.nvars
    out = {}
    for i, j, k in combinations(range(1, n + 1), 3):
        out[(i, j, k)] = (omega.w(j, k).diff(i) - omega.w(i, k).diff(j) + omega.w(i, j).diff(k))
    return out


def is_closed(omega: TwoForm) -> bool:
    return all(r.is_zero() for r in exterior_derivative(omega).values())
