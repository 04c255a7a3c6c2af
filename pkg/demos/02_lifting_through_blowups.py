"""Lifting bivectors through blowups of coordinate subspaces."""
from poissonres import Bivector, Center, chart_transform, lift_bivector, lift_criterion
from poissonres.blowup import normal_derivative_violations

surface = Center(2, 0)
for g in ["x1", "1 + x2", "x1^2 - x2^3"]:
    theta = Bivector.from_strings(2, {(1, 2): g})
    rep = lift_criterion(theta, surface)
    print(f"surface, g = {g}: lifts {rep.verdict}")

origin = Center(3, 0)
theta = Bivector.from_strings(3, {(1, 2): "x3^2"})
print("x3^2 d1^d2 in chart 1:", chart_transform(theta, origin, 1).normalize())
print("lifted charts:", [str(b) for b in lift_bivector(theta, origin)])

theta = Bivector.from_strings(3, {(1, 2): "x3"})
rep = lift_criterion(theta, origin)
print("x3 d1^d2:", rep.verdict, [v.describe() for v in rep.violations])

# d1 ^ (x1 d1 + x2 d2 + x3 d3) lifts, even though some first derivatives of its
# coefficients are nonzero at the origin.
euler = Bivector.from_strings(3, {(1, 2): "x2", (1, 3): "x3"})
print("d1 ^ Euler lifts:", lift_criterion(euler, origin).verdict)
print("nonzero normal derivatives:", [v.indices for v in normal_derivative_violations(euler, origin)])
for j, b in zip(origin.charts, lift_bivector(euler, origin)):
    print(f"  chart {j}: {b}")
