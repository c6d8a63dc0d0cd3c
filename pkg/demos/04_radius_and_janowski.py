"""The radius of convexity and the Janowski inclusion test.

The convexity functional g(r) decreases strictly from g(0) = 1; the
radius for level gamma is the unique root of g(r) = gamma in (0, 1).
Bisection with exact rational sign tests produces a bracket that
provably contains the root.

Separately, a class target phi maps the disk into a Janowski region
when the image disk of |z| = 1 sits inside it; the interval test (real
axis) and the full disk test must agree, and the scan of phi itself
checks modulus, real part and the starlikeness ratio on a polar grid.
"""
from fractions import Fraction

from starcert import (JanowskiParams, janowski_check, ma_minda_scan,
                      radius_g, solve_radius)

print("g(r) along the unit interval (exact rationals, shown as floats):")
for i in range(0, 10, 2):
    r = Fraction(i, 10)
    print(f"  g({r}) = {float(radius_g(r)):+.6f}")
print()

res = solve_radius(0)
print(f"g = 0 at r = {res.root:.15f}")
print(f"  bracket [{res.bracket_lo} , {res.bracket_hi}]")
print(f"  width {float(res.bracket_hi - res.bracket_lo):.3e} "
      f"after {res.iterations} bisections")
print()

for gamma in (Fraction(1, 10), Fraction(1, 2)):
    print(f"g = {gamma} at r = {solve_radius(gamma).root:.12f}")
print()

print("Janowski inclusion, two parameter pairs:")
for a, b in ((Fraction(1, 2), Fraction(-1, 4)), (1, Fraction(1, 3))):
    inside, rep = janowski_check(JanowskiParams(a, b))
    verdict = "inside" if inside else "NOT inside"
    print(f"  (A, B) = ({a}, {b}): image disk center {rep.center}, "
          f"radius {rep.radius} -> {verdict}")
print()

rep = ma_minda_scan(grid_density=48)
print(f"target-function scan on a {rep.grid_density}^2 polar grid:")
for name, ok in rep.checks.items():
    print(f"  {'pass' if ok else 'FAIL'}  {name}")
print(f"  boundary minimum {rep.boundary_min:.12f} at t = {rep.boundary_argmin:.6f}")
