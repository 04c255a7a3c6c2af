"""Canonical cycles, pullbacks and the Poisson-resolution test on dual graphs."""
from poissonres import (
    StrictTransform,
    ade_graph,
    blowup_graph,
    canonical_cycle,
    decide_poisson,
    elliptic_cone,
    inverse_negativity,
    is_minimal,
    pullback,
)
from poissonres.exactalg import inverse

e8 = ade_graph("E", 8)
print("E8 canonical cycle:", [str(c) for c in canonical_cycle(e8).coeffs])
print("E8 inverse strictly negative:", inverse_negativity(e8))

a2 = ade_graph("A", 2)
print("A2 pullback of a curve through E1:", [str(c) for c in pullback(a2, StrictTransform("D", (1, 0))).coeffs])
print("A2 inverse:", [[str(x) for x in r] for r in inverse(a2.intersection_matrix()).tolist()])

cone = elliptic_cone(3)
print("elliptic cone, E^2 = -3: Z =", [str(c) for c in canonical_cycle(cone).coeffs])

# Blow up a point on the (-2)-curve of an A1 resolution.
g = blowup_graph(ade_graph("A", 1), ["E1"])
print(g, "minimal:", is_minimal(g))
decision = decide_poisson(g, [StrictTransform("through", (0, 1)), StrictTransform("miss", (0, 0))])
for m in decision.members:
    print(f"  {m.name}: pi*F + Z = {[str(c) for c in m.total]} effective {m.effective}")
print("Poisson", decision.scope + ":", decision.overall)
