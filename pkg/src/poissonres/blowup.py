"""Bivectors under the blowup of a coordinate subspace.

The center is ``Y = {x_{k+1} = ... = x_n = 0}``. Chart ``j`` (``k < j <= n``)
has coordinates ``z_i = x_i`` for ``i <= k`` and ``i = j``, and
``z_l = x_l / x_j`` for the remaining normal indices ``l``. Chart coordinates
reuse the names ``x1 .. xn`` when printed.

Liftability is decided two ways:

* :func:`lift_criterion` tests vanishing conditions on the coefficients
  ``g_st`` along ``Y``;
* :func:`holomorphy_oracle` pushes ``theta`` into each chart and checks
  that ``z_j`` divides every numerator the required number of times.

Order-0 condition: every ``g_st`` with a normal index vanishes on ``Y``.
Order-1 condition (codimension >= 3): writing
``lam_ab = sum_{s normal} x_s * (d_s g_ab)|_Y`` for normal ``a, b``, every
normal triple ``a < b < c`` satisfies

    x_a * lam_bc - x_b * lam_ac + x_c * lam_ab == 0.

This is exactly the vanishing of the ``z_j``-linear part of the ``1/z_j^2``
block in every chart. It is implied by, but weaker than, requiring all
normal derivatives ``(d_s g_ab)|_Y`` to vanish (see
:func:`normal_derivative_violations`): ``d1 ^ (x1 d1 + x2 d2 + x3 d3)``
lifts through the blowup of the origin of C^3 although ``d2 g_12 = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .exactalg import Polynomial
from .poisson import Bivector


class LiftError(ValueError):
    """Raised when asked to clear denominators of a bivector that does not lift."""


class CriterionOracleMismatch(RuntimeError):
    """The coefficient criterion and the chart oracle disagree (an implementation bug)."""


@dataclass(frozen=True)
class Center:
    nvars: int
    k: int

    def __post_init__(self):
        if self.nvars < 2:
            raise ValueError("need at least two variables")
        if not 0 <= self.k <= self.nvars - 2:
            raise ValueError(f"k={self.k} gives codimension < 2 in {self.nvars} variables")

    @property
    def codim(self) -> int:
        return self.nvars - self.k

    @property
    def along(self) -> list[int]:
        """Indices of coordinates along the center."""
        return list(range(1, self.k + 1))

    @property
    def normal(self) -> list[int]:
        return list(range(self.k + 1, self.nvars + 1))

    @property
    def charts(self) -> list[int]:
        return self.normal

    def others(self, j: int) -> list[int]:
        return [l for l in self.normal if l != j]

    def to_dict(self) -> dict:
        return {"nvars": self.nvars, "k": self.k}

    @classmethod
    def from_dict(cls, data) -> Center:
        return cls(int(data["nvars"]), int(data["k"]))


@dataclass(frozen=True)
class ChartBivector:
    """Coefficients ``numerator / z_j^pow`` on ``dz_s ^ dz_t`` in chart ``j``."""

    nvars: int
    j: int
    coeffs: dict[tuple[int, int], tuple[Polynomial, int]] = field(default_factory=dict)

    def normalize(self) -> ChartBivector:
        out = {}
        for key, (num, pw) in self.coeffs.items():
            if num.is_zero():
                continue
            e = min(pw, num.min_degree_in(self.j))
            out[key] = (num.shift(self.j, -e), pw - e)
        return ChartBivector(self.nvars, self.j, out)

    def is_zero(self) -> bool:
        return all(num.is_zero() for num, _ in self.coeffs.values())

    def max_pole(self) -> int:
        return max((pw for num, pw in self.normalize().coeffs.values()), default=0)

    def to_bivector(self) -> Bivector:
        nb = self.normalize()
        if nb.max_pole():
            raise LiftError(f"chart {self.j} bivector still has a pole along z{self.j}")
        return Bivector(self.nvars, {key: num for key, (num, _) in nb.coeffs.items()})

    def __str__(self) -> str:
        parts = []
        for (s, t), (num, pw) in sorted(self.normalize().coeffs.items()):
            den = "" if pw == 0 else f"/x{self.j}" + (f"^{pw}" if pw > 1 else "")
            parts.append(f"({num}){den} d{s}^d{t}")
        return " + ".join(parts) or "0"


def chart_substitution(center: Center, j: int) -> list[Polynomial]:
    """Images of ``x_1 .. x_n`` in chart ``j`` coordinates."""
    if j not in center.charts:
        raise ValueError(f"chart index {j} outside {center.charts}")
    n = center.nvars
    z = [Polynomial.var(n, i) for i in range(1, n + 1)]
    return [z[i - 1] * z[j - 1] if i in center.others(j) else z[i - 1] for i in range(1, n + 1)]


def _scaled_frame(center: Center, j: int) -> list[list[Polynomial]]:
    """Components of ``z_j * d/dx_s`` in the chart frame ``d/dz_1 .. d/dz_n``."""
    n = center.nvars
    zero = Polynomial.zero(n)
    zj = Polynomial.var(n, j)
    others = center.others(j)
    frame = []
    for s in range(1, n + 1):
        vec = [zero] * n
        if s == j:
            vec[j - 1] = zj
            for l in others:
                vec[l - 1] = -Polynomial.var(n, l)
        elif s in others:
            vec[s - 1] = Polynomial.one(n)
        else:
            vec[s - 1] = zj
        frame.append(vec)
    return frame


def chart_transform(theta: Bivector, center: Center, j: int) -> ChartBivector:
    """Exact push-forward of ``theta`` into chart ``j`` with denominators ``z_j^2``."""
    if theta.nvars != center.nvars:
        raise ValueError("bivector and center have different variable counts")
    images = chart_substitution(center, j)
    frame = _scaled_frame(center, j)
    n = center.nvars
    acc: dict[tuple[int, int], Polynomial] = {}
    for (s, t), g in theta.coeffs.items():
        gt = g.subst(images)
        vs, vt = frame[s - 1], frame[t - 1]
        for u in range(n):
            if vs[u].is_zero() and vt[u].is_zero():
                continue
            for v in range(u + 1, n):
                w = vs[u] * vt[v] - vs[v] * vt[u]
                if not w.is_zero():
                    key = (u + 1, v + 1)
                    acc[key] = acc.get(key, Polynomial.zero(n)) + gt * w
    return ChartBivector(n, j, {key: (p, 2) for key, p in acc.items() if not p.is_zero()})


def holomorphy_oracle(cb: ChartBivector) -> bool:
    return cb.max_pole() == 0


@dataclass(frozen=True)
class Violation:
    kind: str  # "order0" | "order1"
    indices: tuple[int, ...]
    witness: Polynomial

    def to_dict(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices), "witness": str(self.witness)}

    def describe(self) -> str:
        idx = "".join(str(i) for i in self.indices)
        if self.kind == "order0":
            return f"order0 g_{idx}|Y = {self.witness}"
        return f"order1 triple ({', '.join(map(str, self.indices))}) obstruction {self.witness}"


@dataclass
class LiftReport:
    verdict: bool
    charts: list[tuple[int, bool]] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "charts": [{"j": j, "holomorphic": h} for j, h in self.charts],
            "violations": [v.to_dict() for v in self.violations],
        }


def order0_violations(theta: Bivector, center: Center) -> Iterator[Violation]:
    normal = center.normal
    for (s, t), g in theta.coeffs.items():
        if t > center.k:
            r = g.restrict_zero(normal)
            if not r.is_zero():
                yield Violation("order0", (s, t), r)


def _linearized_normal(theta: Bivector, center: Center) -> dict[tuple[int, int], Polynomial]:
    n, normal = theta.nvars, center.normal
    lam = {}
    for a, b in combinations(normal, 2):
        g = theta.g(a, b)
        acc = Polynomial.zero(n)
        for s in normal:
            acc = acc + Polynomial.var(n, s) * g.diff(s).restrict_zero(normal)
        lam[(a, b)] = acc
    return lam


def order1_violations(theta: Bivector, center: Center) -> Iterator[Violation]:
    if center.codim < 3:
        return
    n = theta.nvars
    lam = _linearized_normal(theta, center)
    x = {i: Polynomial.var(n, i) for i in center.normal}
    for a, b, c in combinations(center.normal, 3):
        obstruction = x[a] * lam[(b, c)] - x[b] * lam[(a, c)] + x[c] * lam[(a, b)]
        if not obstruction.is_zero():
            yield Violation("order1", (a, b, c), obstruction)


def normal_derivative_violations(theta: Bivector, center: Center) -> Iterator[Violation]:
    """Nonzero ``(d_s g_lm)|_Y`` over normal ``l < m`` and normal ``s``.

    Their absence is sufficient for the order-1 condition but not necessary.
    """
    normal = center.normal
    for l, m in combinations(normal, 2):
        g = theta.g(l, m)
        for s in normal:
            d = g.diff(s).restrict_zero(normal)
            if not d.is_zero():
                yield Violation("order1", (l, m, s), d)


def lift_criterion(theta: Bivector, center: Center, *, with_oracle: bool = True) -> LiftReport:
    """Decide whether ``theta`` extends holomorphically to the blowup along ``center``.

    With ``with_oracle`` the per-chart holomorphy flags are attached and must
    agree with the coefficient test.
    """
    if theta.nvars != center.nvars:
        raise ValueError("bivector and center have different variable counts")
    violations = list(order0_violations(theta, center))
    violations += order1_violations(theta, center)
    verdict = not violations
    charts = []
    if with_oracle:
        charts = [(j, holomorphy_oracle(chart_transform(theta, center, j))) for j in center.charts]
        if all(h for _, h in charts) != verdict:
            raise CriterionOracleMismatch(
                f"criterion says {verdict}, charts say {charts} for {theta} along k={center.k}"
            )
    return LiftReport(verdict, charts, violations)


def lift_bivector(theta: Bivector, center: Center) -> list[Bivector]:
    """Lifted bivector in every chart, in chart order."""
    report = lift_criterion(theta, center, with_oracle=False)
    if not report.verdict:
        raise LiftError("bivector does not lift: " + "; ".join(v.describe() for v in report.violations))
    return [chart_transform(theta, center, j).to_bivector() for j in center.charts]
