"""Divisor calculus on dual graphs of surface resolutions.

A :class:`DualGraph` records the exceptional curves ``E_i`` of a resolution
with their self-intersections, arithmetic genera and pairwise intersection
numbers. Its intersection matrix must be negative definite; this is checked
when the graph is built.

Coefficients are computed by exact solves against the intersection matrix:

* pullback ``pi^*D = D' + sum a_i E_i`` with ``pi^*D . E_j = 0``;
* canonical cycle ``Z = sum b_i E_i`` with ``Z . E_j = -K . E_j``, where
  ``K . E_j = 2 g_j - 2 - E_j^2`` by adjunction.

A resolution is Poisson exactly when ``pi^*F + Z`` is effective for every
anticanonical ``F``. Only finitely many ``F`` can be supplied, so
:func:`decide_poisson` answers relative to the given family; ``pi^*F + Z``
depends on ``F`` only through its intersection numbers with the ``E_i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactalg import QMatrix, format_rational, inverse, is_negative_definite, solve_linear
from .exactalg import det as qdet
from .exactalg.parser import parse_rational


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    name: str
    self_int: int
    genus: int = 0

    def canonical_degree(self) -> int:
        """``K . E`` by adjunction."""
        return 2 * self.genus - 2 - self.self_int


class DualGraph:
    """Weighted graph of exceptional curves with a negative definite intersection form."""

    def __init__(self, vertices: Iterable[Vertex], edges: Mapping[tuple[str, str], int] | None = None):
        self.vertices: tuple[Vertex, ...] = tuple(vertices)
        names = [v.name for v in self.vertices]
        if len(set(names)) != len(names):
            raise GraphError("vertex names must be unique")
        for v in self.vertices:
            if v.self_int >= 0:
                raise GraphError(f"{v.name}: self-intersection must be negative, got {v.self_int}")
            if v.genus < 0:
                raise GraphError(f"{v.name}: genus must be non-negative")
        self._index = {name: i for i, name in enumerate(names)}
        self.edges: dict[frozenset, int] = {}
        for (a, b), w in (edges or {}).items():
            if a not in self._index or b not in self._index:
                raise GraphError(f"edge ({a}, {b}) names an unknown vertex")
            if a == b:
                raise GraphError(f"loop at {a}; self-intersections go on the vertex")
            if w < 0:
                raise GraphError(f"edge ({a}, {b}) has negative weight {w}")
            key = frozenset((a, b))
            if key in self.edges:
                raise GraphError(f"duplicate edge ({a}, {b})")
            if w:
                self.edges[key] = int(w)
        if self.vertices and not is_negative_definite(self.intersection_matrix()):
            raise GraphError("intersection matrix is not negative definite")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def names(self) -> list[str]:
        return [v.name for v in self.vertices]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def weight(self, a: str, b: str) -> int:
        return self.edges.get(frozenset((a, b)), 0)

    def degree(self, name: str) -> int:
        return sum(1 for e in self.edges if name in e)

    def intersection_matrix(self) -> QMatrix:
        n = len(self.vertices)
        rows = [[0] * n for _ in range(n)]
        for i, v in enumerate(self.vertices):
            rows[i][i] = v.self_int
        for pair, w in self.edges.items():
            a, b = tuple(pair)
            i, j = self._index[a], self._index[b]
            rows[i][j] = rows[j][i] = w
        return QMatrix(rows)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0].name}
        stack = [self.vertices[0].name]
        while stack:
            a = stack.pop()
            for pair in self.edges:
                if a in pair:
                    (b,) = pair - {a}
                    if b not in seen:
                        seen.add(b)
                        stack.append(b)
        return len(seen) == len(self.vertices)

    def __eq__(self, other) -> bool:
        return (isinstance(other, DualGraph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __repr__(self) -> str:
        vs = ", ".join(f"{v.name}({v.self_int},g={v.genus})" for v in self.vertices)
        es = ", ".join(f"{'-'.join(sorted(p))}:{w}" for p, w in sorted(self.edges.items(), key=lambda kv: sorted(kv[0])))
        return f"DualGraph([{vs}], [{es}])"

    def to_dict(self) -> dict:
        edges = []
        for pair, w in self.edges.items():
            a, b = sorted(pair, key=self._index.__getitem__)
            edges.append((self._index[a], self._index[b], {"a": a, "b": b, "w": w}))
        edges.sort(key=lambda e: e[:2])
        return {
            "vertices": [{"name": v.name, "self_int": v.self_int, "genus": v.genus} for v in self.vertices],
            "edges": [e[2] for e in edges],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> DualGraph:
        vertices = [Vertex(str(v["name"]), int(v["self_int"]), int(v.get("genus", 0)))
                    for v in data.get("vertices", [])]
        edges = {}
        for e in data.get("edges", []):
            key = (str(e["a"]), str(e["b"]))
            if key in edges or key[::-1] in edges:
                raise GraphError(f"duplicate edge {key}")
            edges[key] = int(e["w"])
        return cls(vertices, edges)


@dataclass(frozen=True)
class StrictTransform:
    """Strict transform of an effective divisor, recorded by ``D' . E_i``."""

    name: str
    meets: tuple[Fraction, ...]

    def __post_init__(self):
        meets = tuple(Fraction(m) for m in self.meets)
        if any(m < 0 for m in meets):
            raise GraphError(f"{self.name}: strict transform meets exceptional curves negatively")
        object.__setattr__(self, "meets", meets)

    def __add__(self, other: StrictTransform) -> StrictTransform:
        if len(self.meets) != len(other.meets):
            raise GraphError("strict transforms over different graphs")
        return StrictTransform(f"{self.name}+{other.name}", tuple(a + b for a, b in zip(self.meets, other.meets)))

    def to_dict(self) -> dict:
        return {"name": self.name, "meets": [format_rational(m) for m in self.meets]}

    @classmethod
    def from_dict(cls, data: Mapping) -> StrictTransform:
        return cls(str(data["name"]), tuple(parse_rational(str(m)) for m in data["meets"]))


@dataclass(frozen=True)
class QDivisor:
    """``strict + sum_i coeffs[i] * E_i``."""

    coeffs: tuple[Fraction, ...]
    strict: StrictTransform | None = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if self.strict is not None and len(self.strict.meets) != len(self.coeffs):
            raise GraphError("strict part and exceptional part disagree in length")

    def __add__(self, other: QDivisor) -> QDivisor:
        if len(self.coeffs) != len(other.coeffs):
            raise GraphError("divisors over different graphs")
        if self.strict is None or other.strict is None:
            strict = self.strict or other.strict
        else:
            strict = self.strict + other.strict
        return QDivisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), strict)

    def intersect(self, graph: DualGraph) -> list[Fraction]:
        """``D . E_j`` for every exceptional curve."""
        m = graph.intersection_matrix()
        base = m @ list(self.coeffs) if len(graph) else []
        if self.strict is not None:
            base = [b + s for b, s in zip(base, self.strict.meets)]
        return base

    def to_dict(self) -> dict:
        out = {"coeffs": [format_rational(c) for c in self.coeffs]}
        if self.strict is not None:
            out["strict"] = self.strict.name
        return out


def _check_meets(graph: DualGraph, d: StrictTransform) -> None:
    if len(d.meets) != len(graph):
        raise GraphError(f"{d.name}: {len(d.meets)} intersection numbers for {len(graph)} curves")


def intersection_matrix(graph: DualGraph) -> QMatrix:
    return graph.intersection_matrix()


def pullback(graph: DualGraph, d: StrictTransform) -> QDivisor:
    _check_meets(graph, d)
    a = solve_linear(graph.intersection_matrix(), [-m for m in d.meets]) if len(graph) else []
    return QDivisor(tuple(a), d)


def canonical_cycle(graph: DualGraph) -> QDivisor:
    rhs = [-v.canonical_degree() for v in graph.vertices]
    b = solve_linear(graph.intersection_matrix(), rhs) if len(graph) else []
    return QDivisor(tuple(b))


def is_effective(d: QDivisor) -> bool:
    return all(c >= 0 for c in d.coeffs)


@dataclass(frozen=True)
class MemberVerdict:
    name: str
    pullback: tuple[Fraction, ...]
    total: tuple[Fraction, ...]
    effective: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pullback": [format_rational(c) for c in self.pullback],
            "pullback_plus_z": [format_rational(c) for c in self.total],
            "effective": self.effective,
        }


@dataclass(frozen=True)
class PoissonDecision:
    canonical: QDivisor
    members: tuple[MemberVerdict, ...]
    overall: bool
    scope: str = "relative to supplied family"

    def failures(self) -> list[str]:
        return [m.name for m in self.members if not m.effective]

    def to_dict(self) -> dict:
        return {
            "canonical_cycle": [format_rational(c) for c in self.canonical.coeffs],
            "members": [m.to_dict() for m in self.members],
            "overall": self.overall,
            "scope": self.scope,
        }


def decide_poisson(graph: DualGraph, family: Sequence[StrictTransform]) -> PoissonDecision:
    """Effectiveness of ``pi^*F + Z`` for each supplied anticanonical member ``F``."""
    if not family:
        raise GraphError("anticanonical family must be nonempty")
    z = canonical_cycle(graph)
    members = []
    for f in family:
        pf = pullback(graph, f)
        total = pf + z
        members.append(MemberVerdict(f.name, pf.coeffs, total.coeffs, is_effective(total)))
    return PoissonDecision(z, tuple(members), all(m.effective for m in members))


def _chain_edges(names: Sequence[str]) -> dict[tuple[str, str], int]:
    return {(a, b): 1 for a, b in zip(names, names[1:])}


def ade_graph(kind: str, rank: int) -> DualGraph:
    """Minimal resolution graph of a rational double point: all (-2)-curves of genus 0."""
    kind = kind.upper()
    if kind == "A" and rank >= 1:
        names = [f"E{i}" for i in range(1, rank + 1)]
        edges = _chain_edges(names)
    elif kind == "D" and rank >= 4:
        names = [f"E{i}" for i in range(1, rank + 1)]
        edges = _chain_edges(names[:-1])
        edges[(names[rank - 3], names[-1])] = 1
    elif kind == "E" and rank in (6, 7, 8):
        names = [f"E{i}" for i in range(1, rank + 1)]
        edges = _chain_edges(names[:-1])
        edges[(names[2], names[-1])] = 1
    else:
        raise GraphError(f"no ADE diagram of type {kind}{rank}")
    return DualGraph([Vertex(n, -2, 0) for n in names], edges)


def elliptic_cone(d: int, genus: int = 1) -> DualGraph:
    """Single curve of genus ``genus`` and self-intersection ``-d`` (cone over a curve)."""
    if d < 1:
        raise GraphError("degree must be positive")
    return DualGraph([Vertex("E", -d, genus)])


def inverse_negativity(graph: DualGraph) -> bool:
    """True iff every entry of the inverse intersection matrix is strictly negative."""
    if not graph.is_connected():
        raise GraphError("inverse negativity is a per-component statement; graph is disconnected")
    if not len(graph):
        raise GraphError("empty graph")
    inv = inverse(graph.intersection_matrix())
    return all(inv[i, j] < 0 for i in range(inv.rows) for j in range(inv.cols))


def _fresh_name(graph: DualGraph, base: str = "E0") -> str:
    if base not in graph.names:
        return base
    i = 1
    while f"{base}_{i}" in graph.names:
        i += 1
    return f"{base}_{i}"


def blowup_graph(graph: DualGraph, incidence: Sequence[str], name: str | None = None) -> DualGraph:
    """Blow up a point lying on one exceptional curve, on a node of two, or on none.

    Only transverse points of multiplicity one are modelled.
    """
    incidence = list(incidence)
    if len(incidence) > 2:
        raise GraphError("a point lies on at most two curves of a normal crossing configuration")
    if len(set(incidence)) != len(incidence):
        raise GraphError("incidence names the same curve twice")
    for v in incidence:
        graph.index(v)
    new = name or _fresh_name(graph)
    if new in graph.names:
        raise GraphError(f"vertex {new!r} already exists")
    vertices = [Vertex(v.name, v.self_int - 1, v.genus) if v.name in incidence else v
                for v in graph.vertices]
    vertices.append(Vertex(new, -1, 0))
    edges = {tuple(sorted(p, key=graph.index)): w for p, w in graph.edges.items()}
    if len(incidence) == 2:
        a, b = sorted(incidence, key=graph.index)
        if not edges.get((a, b)):
            raise GraphError(f"{a} and {b} do not meet; no node to blow up")
        edges[(a, b)] -= 1
    for v in incidence:
        edges[(v, new)] = 1
    return DualGraph(vertices, edges)


def is_minimal(graph: DualGraph) -> bool:
    """No smooth rational (-1)-curve among the exceptional curves."""
    return not any(v.genus == 0 and v.self_int == -1 for v in graph.vertices)


def cartan_determinant(graph: DualGraph) -> Fraction:
    """``det(-M)``."""
    return qdet(-graph.intersection_matrix())
