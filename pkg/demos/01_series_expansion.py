"""Exact truncated power series and the coefficient map.

Every member of the class studied here is built from a Schwarz function w
(analytic, w(0) = 0, |w| < 1) through

    f(z) = z * exp( integral of (phi(w(t)) - 1) / t dt ),   phi(z) = (1 + z/2)^2.

The series module carries this construction out with exact rational
coefficients, so the classical extremal members can be checked by eye.
"""
from fractions import Fraction

from starcert import (TruncSeries, member_from_schwarz, phi_series,
                      schwarz_monomial, schwarz_to_coeffs)


def show(label, series, upto):
    coeffs = "  ".join(f"a{k}={series.coeff(k)}" for k in range(2, upto + 1))
    print(f"  {label:<14} {coeffs}")


phi = phi_series(4)
print("phi(z) = (1 + z/2)^2 expands to",
      [str(phi.coeff(k)) for k in range(phi.order + 1)])
print()

print("members driven by monomial Schwarz functions:")
show("w(z) = z", member_from_schwarz(schwarz_monomial(1, 5)), 5)
show("w(z) = z^2", member_from_schwarz(schwarz_monomial(2, 5)), 5)
show("w(z) = z^3", member_from_schwarz(schwarz_monomial(3, 5)), 5)
print()

# The closed-form coefficient map agrees with the series pipeline on any
# polynomial Schwarz function; here w = z/2 + z^2/3 - z^3/7.
w = TruncSeries.from_coeffs(
    [0, Fraction(1, 2), Fraction(1, 3), Fraction(-1, 7)], 5)
f = member_from_schwarz(w)
a = schwarz_to_coeffs((Fraction(1, 2), Fraction(1, 3), Fraction(-1, 7), 0))
print("series route vs closed-form map for w = z/2 + z^2/3 - z^3/7:")
for k, closed in zip(range(2, 6), a):
    match = "ok" if f.coeff(k) == closed else "MISMATCH"
    print(f"  a{k}: series {f.coeff(k)}  map {closed}   [{match}]")
