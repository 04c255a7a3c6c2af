"""Exact tools for lifting Poisson structures through blowups and resolutions."""
from .blowup import (
    Center,
    ChartBivector,
    LiftReport,
    chart_transform,
    holomorphy_oracle,
    lift_bivector,
    lift_criterion,
)
from .exactalg import Polynomial, QMatrix, RationalFunction, parse_poly
from .poisson import (
    Bivector,
    TriVector,
    TwoForm,
    anchor,
    bracket,
    exterior_derivative,
    invert_to_form,
    is_nondegenerate,
    jacobiator,
    schouten_square,
)
from .resgraph import (
    DualGraph,
    QDivisor,
    StrictTransform,
    Vertex,
    ade_graph,
    blowup_graph,
    canonical_cycle,
    decide_poisson,
    elliptic_cone,
    inverse_negativity,
    is_effective,
    is_minimal,
    pullback,
)

__version__ = "0.1.0"
