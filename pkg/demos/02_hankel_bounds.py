"""The two sharp Hankel determinant bounds, end to end.

|H2(2)| = |a2 a4 - a3^2| <= 1/4   and   |H3(1)| <= 1/9,

both sharp (w = z^2 and w = z^3 respectively).  The second bound reduces
to the positivity of a bivariate polynomial on the unit square, which is
certified by the Bernstein branch-and-bound pipeline; the first reduces
to a one-variable envelope handled with exact rational arithmetic.  Both
pipelines re-check themselves against dense float oracles.
"""
from fractions import Fraction

from starcert import (h2_envelope, h3_schwarz_poly, hankel2, hankel3,
                      schwarz_to_coeffs, verify_h2, verify_h3)

print("=== second Hankel determinant ===")
print("envelope at p1=0:", h2_envelope(0), "  at p1=2:", h2_envelope(Fraction(2)))
a = schwarz_to_coeffs((0, 1, 0, 0))          # the member driven by w = z^2
print("sharpness witness w=z^2: H2 =", hankel2(a))
report = verify_h2()
print(report.render())
print()

print("=== third Hankel determinant ===")
c = (0, 0, 1, 0)                             # the member driven by w = z^3
print("sharpness witness w=z^3: 9216*H3 =", h3_schwarz_poly(c),
      " (so H3 =", 9216 * hankel3(schwarz_to_coeffs(c)), "/ 9216)")
report = verify_h3()
print(report.render())
print()

cert = report.certificate
print(f"certificate: {cert.node_count()} nodes, {len(cert.leaves())} leaves")
for leaf in cert.leaves():
    print(f"  {leaf.status:<16} on {leaf.box}")
