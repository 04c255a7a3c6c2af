"""Random inputs and the criterion-versus-oracle differential run."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .blowup import Center, chart_transform, holomorphy_oracle, lift_criterion
from .exactalg import Polynomial
from .poisson import Bivector


def random_poly(rng: random.Random, nvars: int, max_deg: int = 3, max_terms: int = 3,
                min_normal_deg: int = 0, normal: tuple[int, ...] = ()) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        while True:
            mono = [0] * nvars
            for _ in range(rng.randint(0, max_deg)):
                mono[rng.randrange(nvars)] += 1
            if sum(mono[i - 1] for i in normal) >= min_normal_deg:
                break
            if min_normal_deg and normal:
                mono[rng.choice(normal) - 1] += min_normal_deg
                break
        terms[tuple(mono)] = rng.choice([-3, -2, -1, 1, 1, 2, 3])
    return Polynomial(nvars, terms)


def random_bivector(rng: random.Random, nvars: int, max_deg: int = 3, density: float = 0.6) -> Bivector:
    coeffs = {}
    for s, t in combinations(range(1, nvars + 1), 2):
        if rng.random() < density:
            coeffs[(s, t)] = random_poly(rng, nvars, max_deg)
    return Bivector(nvars, coeffs)


def euler_wedge(center: Center, field_: list[Polynomial]) -> Bivector:
    """``E ^ V`` with ``E`` the Euler field of the normal coordinates."""
    n = center.nvars
    coeffs: dict[tuple[int, int], Polynomial] = {}
    for a in center.normal:
        xa = Polynomial.var(n, a)
        for b in range(1, n + 1):
            if a == b:
                continue
            key, sign = ((a, b), 1) if a < b else ((b, a), -1)
            coeffs[key] = coeffs.get(key, Polynomial.zero(n)) + (xa * field_[b - 1]).scale(sign)
    return Bivector(n, coeffs)


def random_liftable_leaning(rng: random.Random, center: Center, max_deg: int = 3) -> Bivector:
    """Bivectors biased toward the boundary of the lifting conditions."""
    n = center.nvars
    normal = tuple(center.normal)
    coeffs = {}
    for s, t in combinations(range(1, n + 1), 2):
        if rng.random() < 0.7:
            need = 2 if (s in normal and t in normal and center.codim >= 3) else (1 if t in normal else 0)
            coeffs[(s, t)] = random_poly(rng, n, max_deg, 2, need, normal)
    theta = Bivector(n, coeffs)
    if center.codim >= 3 and rng.random() < 0.6:
        along = [Polynomial.constant(n, rng.randint(-2, 2)) if i in normal
                 else Polynomial.zero(n) for i in range(1, n + 1)]
        theta = theta + euler_wedge(center, along)
    if rng.random() < 0.3:
        # a single stray term usually breaks liftability
        s, t = rng.choice(list(combinations(range(1, n + 1), 2)))
        theta = theta + Bivector(n, {(s, t): random_poly(rng, n, 1, 1)})
    return theta


def all_centers(nvars: int) -> list[Center]:
    return [Center(nvars, k) for k in range(0, nvars - 1)]


@dataclass
class DifferentialResult:
    cases: int = 0
    lifting: int = 0
    disagreements: list[tuple[Bivector, Center, bool, list[bool]]] = field(default_factory=list)


def differential_run(seed: int, cases: int = 200, nvars_choices=(2, 3, 4), max_deg: int = 3) -> DifferentialResult:
    rng = random.Random(seed)
    out = DifferentialResult()
    for _ in range(cases):
        n = rng.choice(nvars_choices)
        center = rng.choice(all_centers(n))
        theta = (random_liftable_leaning(rng, center, max_deg) if rng.random() < 0.6
                 else random_bivector(rng, n, max_deg))
        verdict = lift_criterion(theta, center, with_oracle=False).verdict
        flags = [holomorphy_oracle(chart_transform(theta, center, j)) for j in center.charts]
        out.cases += 1
        out.lifting += verdict
        if verdict != all(flags):
            out.disagreements.append((theta, center, verdict, flags))
    return out


def casimir_bivector(f: Polynomial, casimir: Polynomial) -> Bivector:
    """``f * (dC)^#`` in three variables: ``g_ij = f * eps_ijk * d_k C``; always Poisson."""
    if f.nvars != 3 or casimir.nvars != 3:
        raise ValueError("three variables required")
    d = [casimir.diff(k) for k in (1, 2, 3)]
    return Bivector(3, {(1, 2): f * d[2], (2, 3): f * d[0], (1, 3): -(f * d[1])})


def random_nondegenerate(rng: random.Random, nvars: int, max_deg: int = 2) -> Bivector:
    """Random nondegenerate bivector in an even number of variables, mixing Poisson and generic shapes."""
    from .poisson import is_nondegenerate

    while True:
        shape = rng.choice(["generic", "split", "shifted"]) if nvars == 4 else "generic"
        if shape == "generic":
            theta = random_bivector(rng, nvars, max_deg, density=0.8)
        elif shape == "split":
            f = random_poly(rng, 4, max_deg, 2, 0, ()).subst(
                [Polynomial.var(4, 1), Polynomial.var(4, 2), Polynomial.zero(4), Polynomial.zero(4)])
            h = random_poly(rng, 4, max_deg, 2, 0, ()).subst(
                [Polynomial.zero(4), Polynomial.zero(4), Polynomial.var(4, 3), Polynomial.var(4, 4)])
            theta = Bivector(4, {(1, 2): f + 1, (3, 4): h + 2})
        else:
            # constant symplectic part plus a coefficient depending on a Casimir-free direction
            theta = Bivector(4, {(1, 3): Polynomial.one(4), (2, 4): Polynomial.one(4),
                                 (1, 2): random_poly(rng, 4, max_deg, 2, 0, ()).subst(
                                     [Polynomial.var(4, 1), Polynomial.var(4, 2),
                                      Polynomial.zero(4), Polynomial.zero(4)])})
        if is_nondegenerate(theta):
            return theta
