"""Checking the Jacobi identity of a polynomial bivector in two independent ways.

Run with ``python demos/01_jacobi_two_ways.py``.
"""
from poissonres import Bivector, bracket, jacobiator, parse_poly, schouten_square
from poissonres.poisson import SCHOUTEN_JACOBI_RATIO, invert_to_form, is_closed

# The rotational Lie-Poisson structure on so(3)*: {x1, x2} = x3 and cyclic.
rot = Bivector.from_strings(3, {(1, 2): "x3", (2, 3): "x1", (1, 3): "-x2"})
x1, x2 = parse_poly("x1", 3), parse_poly("x2", 3)
print("{x1, x2} =", bracket(rot, x1, x2))
print("jacobiator zero:", jacobiator(rot).is_zero())
print("[theta, theta] zero:", schouten_square(rot).is_zero())

# A bivector that is not Poisson; the two formulations differ by a fixed factor.
bad = Bivector.from_strings(3, {(1, 2): "x2", (2, 3): "1"})
print("jacobiator:", jacobiator(bad).to_dict()["coeffs"])
print("schouten:  ", schouten_square(bad).to_dict()["coeffs"])
print("ratio:", SCHOUTEN_JACOBI_RATIO)

# Nondegenerate case: Poisson exactly when the inverse two-form is closed.
split = Bivector.from_strings(4, {(1, 2): "x1^2 + 1", (3, 4): "x3*x4 - 2"})
twisted = Bivector.from_strings(4, {(1, 2): "x3 + 1", (3, 4): "1"})
for name, theta in [("split", split), ("twisted", twisted)]:
    omega = invert_to_form(theta)
    print(f"{name}: omega = {omega}")
    print(f"  Poisson {jacobiator(theta).is_zero()}, d(omega) = 0 {is_closed(omega)}")
