"""Quadratics are exactly the functions with the midpoint mean value property.

For f quadratic the chord over [zeta - t, zeta + t] always has slope
f'(zeta), whatever t is.  For any other smooth f the residual
f'(zeta) - (f(zeta+t) - f(zeta-t)) / 2t is nonzero somewhere; for z^3 it
is exactly -t^2, independent of zeta.
"""

import numpy as np

from revquad import max_midpoint_residual, midpoint_residual

zetas = np.linspace(-1.0, 1.0, 21)
ts = np.arange(1, 22) / 21.0

print("max |residual| over a 21 x 21 (zeta, t) grid:")
for label, coeffs in [
    ("3 - 2 z + 5 z^2", (3.0, -2.0, 5.0)),
    ("z^3            ", (0.0, 0.0, 0.0, 1.0)),
    ("1 + z^2 + z^4  ", (1.0, 0.0, 1.0, 0.0, 1.0)),
    ("sin-like quintic", (0.0, 1.0, 0.0, -1 / 6, 0.0, 1 / 120)),
]:
    p = np.polynomial.Polynomial(coeffs)
    worst = max_midpoint_residual(p, p.deriv(), zetas, ts)
    tag = "quadratic" if worst <= 1e-9 else "not quadratic"
    print(f"  {label}  {worst:10.3e}   -> {tag}")

# the cubic's residual in detail: -t^2 exactly, zeta drops out
cube = np.polynomial.Polynomial((0.0, 0.0, 0.0, 1.0))
print("\nresidual of z^3 at a few (zeta, t):")
for zeta in (-0.8, 0.0, 0.6):
    row = [midpoint_residual(cube, cube.deriv(), zeta, t) for t in (0.25, 0.5, 1.0)]
    print(f"  zeta={zeta:+.1f}:", "  ".join(f"{r:+.6f}" for r in row), "  (vs -t^2)")
