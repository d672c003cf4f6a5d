"""Decide from cross-sections alone whether a surface of revolution is quadric.

Quadric surfaces (F quadratic) cut every transverse plane in a centrally
symmetric loop; any other profile leaves some plane whose loop fails the
point-reflection test.  The detector sweeps shallow planes across the
surface, adds a handful of steeper probe planes where cubic-order
asymmetry actually shows up, and fits F quadratically once everything
passes.
"""

from revquad import detect_quadric, parse_profile

CASES = [
    ("sphere", "sphere"),
    ("cylinder", "cylinder:1,10"),
    ("hyperboloid", "hyperboloid:1,2"),
    ("paraboloid", "paraboloid:2,1"),
    ("bumped sphere", "poly:1,0,-1,0,0.05;1"),   # quartic bump, not quadric
    ("cubic flank", "poly:2,0,0,1;1"),           # F = 2 + z^3
]

for name, spec in CASES:
    prof = parse_profile(spec)
    v = detect_quadric(prof, 0.1 * prof.q, n_planes=9, n_samples=512, tol=1e-4)
    if v.is_quadric:
        a, b, c = v.params.a, v.params.b, v.params.c
        print(f"{name:>13}: quadric, F(z) = {a:+.6f} z^2 {b:+.6f} z {c:+.6f}"
              f"   (fit residual {v.fit_residual:.1e}, {v.planes_tested} planes)")
    else:
        plane, report = v.witness
        print(f"{name:>13}: NOT quadric, witness plane m={plane.m:.4f} "
              f"beta={plane.beta:+.3f} with asymmetry {report.asymmetry:.2e}")
