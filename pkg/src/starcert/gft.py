"""Coefficient machinery for the starlike class with target (1 + z/2)^2.

This module collects the algebraic ingredients used by the verification
pipelines:

* maps from Schwarz-function coefficients ``c = (c1, c2, c3, c4)`` to the
  class coefficients ``a2..a5`` and to Caratheodory coefficients
  ``p1..p4``;
* the classical parametrizations of those coefficient bodies in terms of
  points ``(gamma, eta, rho)`` of the closed unit disk;
* the Hankel determinants ``H2(2) = a2 a4 - a3^2`` and ``H3(1)``,
  together with the degree-six polynomial identity for ``9216 * H3(1)``;
* the piecewise closed form for ``max_{|z|<=1} |A + Bz + Cz^2| + 1 - |z|^2``;
* the Janowski disk criterion and numeric scans of the target function;
* the envelope that bounds ``|H2(2)|`` along the Caratheodory slice.

Exact inputs (ints/Fractions) stay exact through every polynomial map;
floats/complex are accepted and then everything is float.  Only the scan
helpers use numpy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .rationals import as_fraction

__all__ = [
    "SchwarzCoeffs", "CaratheodoryCoeffs", "ClassCoeffs", "ParamTriple",
    "schwarz_to_coeffs", "caratheodory_from_schwarz", "caratheodory_to_coeffs",
    "lz_parametrize", "schwarz_parametrize",
    "hankel2", "hankel3", "h3_schwarz_poly",
    "y_max", "y_max_detail", "YMaxDetail",
    "JanowskiParams", "DiskReport", "janowski_check",
    "PhiScanReport", "ma_minda_scan",
    "H2Terms", "h2_terms", "h2_normalized", "h2_envelope", "h2_envelope_deriv",
]


# ---------------------------------------------------------------------------
# coefficient tuples
# ---------------------------------------------------------------------------

class SchwarzCoeffs(NamedTuple):
    """First four Taylor coefficients of a Schwarz function w."""
    c1: object
    c2: object
    c3: object
    c4: object


class CaratheodoryCoeffs(NamedTuple):
    """First four coefficients of p(z) = 1 + p1 z + p2 z^2 + ... with Re p > 0."""
    p1: object
    p2: object
    p3: object
    p4: object


class ClassCoeffs(NamedTuple):
    """Coefficients a2..a5 of a normalized class member f(z) = z + a2 z^2 + ..."""
    a2: object
    a3: object
    a4: object
    a5: object


class ParamTriple(NamedTuple):
    """A point (gamma, eta, rho) of the closed unit tridisk."""
    gamma: object
    eta: object
    rho: object


def _exact_div(value, n: int):
    """value / n, kept exact (Fraction) when value is int or Fraction.

    Plain ``/`` would silently turn exact integer data into floats; the
    coefficient maps must stay exact on exact input so the sharpness
    witnesses come out as literal rationals.
    """
    if isinstance(value, (int, Fraction)):
        return Fraction(value, n)
    return value / n


def _conj(v):
    # Fraction/int/float/complex all implement conjugate()
    return v.conjugate()


def _abs2(v):
    """|v|^2, exact when v is rational (real), float otherwise."""
    return v.real * v.real + v.imag * v.imag


def _check_unit(name: str, v) -> None:
    m2 = _abs2(v)
    tol = 1e-12 if isinstance(m2, float) else 0
    if m2 > 1 + tol:
        raise ValueError(f"|{name}| must be <= 1, got |{name}|^2 = {m2}")


# ---------------------------------------------------------------------------
# coefficient maps
# ---------------------------------------------------------------------------

def schwarz_to_coeffs(c: SchwarzCoeffs | tuple) -> ClassCoeffs:
    """Class coefficients a2..a5 of the member driven by the Schwarz data c.

    These are the closed forms obtained by expanding
    z f'/f = (1 + w/2)^2; they agree with the series route
    (:func:`starcert.series.member_from_schwarz`) identically.
    """
    c1, c2, c3, c4 = c
    a2 = c1
    a3 = _exact_div(5 * c1 * c1 + 4 * c2, 8)
    a4 = _exact_div(7 * c1 ** 3 + 16 * c1 * c2 + 8 * c3, 24)
    a5 = _exact_div(43 * c1 ** 4 + 184 * c1 * c1 * c2 + 72 * c2 * c2
                    + 176 * c1 * c3 + 96 * c4, 384)
    return ClassCoeffs(a2, a3, a4, a5)


def caratheodory_from_schwarz(w: SchwarzCoeffs | tuple) -> CaratheodoryCoeffs:
    """Coefficients of p = (1 + w)/(1 - w) from the Schwarz coefficients of w."""
    w1, w2, w3, w4 = w
    p1 = 2 * w1
    p2 = 2 * (w2 + w1 * w1)
    p3 = 2 * (w3 + 2 * w1 * w2 + w1 ** 3)
    p4 = 2 * (w4 + 2 * w1 * w3 + w2 * w2 + 3 * w1 * w1 * w2 + w1 ** 4)
    return CaratheodoryCoeffs(p1, p2, p3, p4)


def caratheodory_to_coeffs(p: CaratheodoryCoeffs | tuple):
    """(a2, a3, a4) expressed through Caratheodory coefficients.

    a5 has no printed p-form here, so only the first three are returned;
    they satisfy a2 = p1/2, a3 = (p1^2 + 8 p2)/32, a4 = (32 p3 - p1^3)/192.
    """
    p1, p2, p3, _p4 = p
    a2 = _exact_div(p1, 2)
    a3 = _exact_div(p1 * p1 + 8 * p2, 32)
    a4 = _exact_div(32 * p3 - p1 ** 3, 192)
    return a2, a3, a4


# ---------------------------------------------------------------------------
# parametrizations of the coefficient bodies
# ---------------------------------------------------------------------------

def lz_parametrize(p1, t: ParamTriple | tuple) -> CaratheodoryCoeffs:
    """Caratheodory coefficients (p1..p4) from the disk parameters (gamma, eta, rho).

    Standard parametrization of the Caratheodory coefficient body: with
    0 <= p1 <= 2 fixed (rotation makes p1 real), every admissible
    (p2, p3, p4) arises from some point of the closed unit tridisk via

        2 p2 = p1^2 + gamma (4 - p1^2),
        4 p3 = p1^3 + 2 (4 - p1^2) p1 gamma - (4 - p1^2) p1 gamma^2
               + 2 (4 - p1^2)(1 - |gamma|^2) eta,
        8 p4 = p1^4 + (4 - p1^2) gamma (p1^2 (gamma^2 - 3 gamma + 3) + 4 gamma)
               - 4 (4 - p1^2)(1 - |gamma|^2)
                 (p1 (gamma - 1) eta + conj(gamma) eta^2 - (1 - |eta|^2) rho).
    """
    if not 0 <= p1 <= 2:
        raise ValueError(f"p1 must lie in [0, 2], got {p1}")
    gamma, eta, rho = t
    _check_unit("gamma", gamma)
    _check_unit("eta", eta)
    _check_unit("rho", rho)
    s = 4 - p1 * p1
    g2 = 1 - _abs2(gamma)
    e2 = 1 - _abs2(eta)
    p2 = _exact_div(p1 * p1 + gamma * s, 2)
    p3 = _exact_div(p1 ** 3 + 2 * s * p1 * gamma - s * p1 * gamma * gamma
                    + 2 * s * g2 * eta, 4)
    p4 = _exact_div(p1 ** 4
                    + s * gamma * (p1 * p1 * (gamma * gamma - 3 * gamma + 3)
                                   + 4 * gamma)
                    - 4 * s * g2 * (p1 * (gamma - 1) * eta
                                    + _conj(gamma) * eta * eta - e2 * rho), 8)
    return CaratheodoryCoeffs(p1, p2, p3, p4)


def schwarz_parametrize(c1, t: ParamTriple | tuple) -> SchwarzCoeffs:
    """Schwarz coefficients (c1..c4) from disk parameters, c1 in [0, 1].

        c2 = (1 - c1^2) gamma,
        c3 = (1 - c1^2) ((1 - |gamma|^2) eta - c1 gamma^2),
        c4 = (1 - c1^2) (c1^2 gamma^3
                         - (1 - |gamma|^2)(2 c1 gamma eta + conj(gamma) eta^2
                                           - (1 - |eta|^2) rho)).
    """
    if not 0 <= c1 <= 1:
        raise ValueError(f"c1 must lie in [0, 1], got {c1}")
    gamma, eta, rho = t
    _check_unit("gamma", gamma)
    _check_unit("eta", eta)
    _check_unit("rho", rho)
    u = 1 - c1 * c1
    g2 = 1 - _abs2(gamma)
    e2 = 1 - _abs2(eta)
    c2 = u * gamma
    c3 = u * (g2 * eta - c1 * gamma * gamma)
    c4 = u * (c1 * c1 * gamma ** 3
              - g2 * (2 * c1 * gamma * eta + _conj(gamma) * eta * eta - e2 * rho))
    return SchwarzCoeffs(c1, c2, c3, c4)


# ---------------------------------------------------------------------------
# Hankel determinants
# ---------------------------------------------------------------------------

def hankel2(a: ClassCoeffs | tuple):
    """Second Hankel determinant H2(2) = a2 a4 - a3^2."""
    a2, a3, a4, _a5 = a
    return a2 * a4 - a3 * a3


def hankel3(a: ClassCoeffs | tuple):
    """Third Hankel determinant

    H3(1) = a3 (a2 a4 - a3^2) - a4 (a4 - a2 a3) + a5 (a3 - a2^2).
    """
    a2, a3, a4, a5 = a
    return (a3 * (a2 * a4 - a3 * a3)
            - a4 * (a4 - a2 * a3)
            + a5 * (a3 - a2 * a2))


def h3_schwarz_poly(c: SchwarzCoeffs | tuple):
    """The degree-six polynomial equal to 9216 * H3(1) in Schwarz coefficients.

        -61 c1^6 + 244 c1^4 c2 + 464 c1^3 c3 + 1088 c1 c2 c3
        - 8 c1^2 (89 c2^2 + 108 c4) - 32 (9 c2^3 + 32 c3^2 - 36 c2 c4)

    Exact identity: h3_schwarz_poly(c) == 9216 * hankel3(schwarz_to_coeffs(c)).
    """
    c1, c2, c3, c4 = c
    return (-61 * c1 ** 6 + 244 * c1 ** 4 * c2 + 464 * c1 ** 3 * c3
            + 1088 * c1 * c2 * c3
            - 8 * c1 * c1 * (89 * c2 * c2 + 108 * c4)
            - 32 * (9 * c2 ** 3 + 32 * c3 * c3 - 36 * c2 * c4))


# ---------------------------------------------------------------------------
# max of |A + Bz + Cz^2| + 1 - |z|^2 over the closed unit disk
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YMaxDetail:
    value: float
    branch: str
    near_boundary: bool
    boundary_gap: float


def _y_R(aA: float, aB: float, aC: float, A: float, B: float, C: float):
    if aC * (aB + 4 * aA) <= abs(A * B):
        return aA + aB + aC, "R.edge"
    if abs(A * B) <= aC * (aB - 4 * aA):
        return -aA + aB + aC, "R.opposite"
    return (aA + aC) * math.sqrt(1 - B * B / (4 * A * C)), "R.curve"


def y_max_detail(A, B, C, boundary_eps: float = 1e-9) -> YMaxDetail:
    """max over the closed unit disk of |A + Bz + Cz^2| + 1 - |z|^2.

    Case split for real A, B, C.  For AC < 0 the inner condition uses
    -4AC(C^{-2} - 1); with C^2 in place of C^{-2} the formula fails
    against direct maximization, so the inverse-square form is the one
    implemented.  Branch boundaries are decided by first match in the
    order written here; inputs within ``boundary_eps`` of a boundary are
    flagged in the returned detail rather than resolved specially.
    """
    A, B, C = float(A), float(B), float(C)
    aA, aB, aC = abs(A), abs(B), abs(C)
    gaps = []
    if A * C >= 0:
        gaps.append(abs(aB - 2 * (1 - aC)))
        if aB >= 2 * (1 - aC):
            val, br = aA + aB + aC, "i.edge"
        else:
            val, br = 1 + aA + B * B / (4 * (1 - aC)), "i.parabola"
    else:
        disc = -4 * A * C * (C ** -2 - 1)
        gaps.append(abs(B * B - disc))
        gaps.append(abs(aB - 2 * (1 - aC)))
        if disc <= B * B and aB < 2 * (1 - aC):
            val, br = 1 - aA + B * B / (4 * (1 - aC)), "ii.inner"
        elif B * B < min(4 * (1 + aC) ** 2, disc):
            gaps.append(abs(B * B - 4 * (1 + aC) ** 2))
            val, br = 1 + aA + B * B / (4 * (1 + aC)), "ii.outer"
        else:
            gaps.append(abs(aC * (aB + 4 * aA) - abs(A * B)))
            gaps.append(abs(abs(A * B) - aC * (aB - 4 * aA)))
            val, br = _y_R(aA, aB, aC, A, B, C)
    gap = min(gaps) if gaps else math.inf
    return YMaxDetail(val, br, gap < boundary_eps, gap)


def y_max(A, B, C) -> float:
    """Value-only form of :func:`y_max_detail`."""
    return y_max_detail(A, B, C).value


# ---------------------------------------------------------------------------
# Janowski disk criterion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JanowskiParams:
    """Parameters of (1 + Az)/(1 + Bz) with -1 < B < A <= 1, kept exact."""
    A: Fraction
    B: Fraction

    def __post_init__(self):
        # floats are converted to their exact binary rational so that the
        # two equivalent tests below can never disagree by rounding
        to_frac = lambda v: Fraction(v) if isinstance(v, float) else as_fraction(v)
        object.__setattr__(self, "A", to_frac(self.A))
        object.__setattr__(self, "B", to_frac(self.B))
        if not (-1 < self.B < self.A <= 1):
            raise ValueError(f"need -1 < B < A <= 1, got A={self.A}, B={self.B}")

    @property
    def center(self) -> Fraction:
        """Center (1 - AB)/(1 - B^2) of the image disk of the unit circle."""
        return (1 - self.A * self.B) / (1 - self.B * self.B)

    @property
    def radius(self) -> Fraction:
        """Radius (A - B)/(1 - B^2) of the image disk."""
        return (self.A - self.B) / (1 - self.B * self.B)


@dataclass(frozen=True)
class DiskReport:
    center: Fraction
    radius: Fraction
    inner_value: Fraction           # center - radius = (1 - A)/(1 - B)
    outer_value: Fraction           # center + radius = (1 + A)/(1 + B)
    interval_test: bool             # 1/4 <= inner and outer <= 9/4
    disk_test: bool                 # |center - 5/4| + radius <= 1
    agree: bool


def janowski_check(j: JanowskiParams) -> tuple[bool, DiskReport]:
    """Does (1 + Az)/(1 + Bz) map the disk into the region between 1/4 and 9/4?

    Checks the endpoint inequalities (1-A)/(1-B) >= 1/4 and
    (1+A)/(1+B) <= 9/4, and independently the single disk inclusion
    |center - 5/4| + radius <= 1.  The two are algebraically equivalent,
    and with exact rational arithmetic they must agree verbatim.

    Floats are accepted (converted exactly to their binary rational), so
    the two routes still agree bit-for-bit.
    """
    a, r = j.center, j.radius
    inner = a - r
    outer = a + r
    interval_test = inner >= Fraction(1, 4) and outer <= Fraction(9, 4)
    disk_test = abs(a - Fraction(5, 4)) + r <= 1
    report = DiskReport(a, r, inner, outer, interval_test, disk_test,
                        interval_test == disk_test)
    if not report.agree:  # pragma: no cover - the two tests are algebraically equal
        raise AssertionError("interval and disk tests disagree on exact input")
    return interval_test, report


# ---------------------------------------------------------------------------
# scans of the target phi(z) = (1 + z/2)^2
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiScanReport:
    grid_density: int
    radius_cap: float
    min_modulus: float
    max_modulus: float
    min_real: float
    max_starlike_ratio: float      # max |z / (8 + 3z)|, must stay < 1/5
    boundary_min: float            # min over t of |phi(e^it) - 5/4|^2
    boundary_argmin: float
    boundary_at_0: float
    boundary_at_pi: float
    checks: dict
    passed: bool


def ma_minda_scan(grid_density: int = 64, boundary_points: int | None = None,
                  radius_cap: float = 1 - 1e-6) -> PhiScanReport:
    """Numeric scan of the analytic properties the target function needs.

    On a polar grid of the disk of radius ``radius_cap`` it measures the
    range of phi(z) = (1 + z/2)^2 (modulus between 1/4 and 9/4, positive
    real part) and the starlikeness ratio |z/(8 + 3z)| of the Mobius
    transform (1 + z/2)/(1 + z/4).  On ``boundary_points`` points of the
    unit circle it measures |phi(e^it) - 5/4|^2, whose minimum value 1 is
    attained exactly at t = 0 and t = pi.
    """
    if grid_density < 8:
        raise ValueError("grid_density must be >= 8")
    npts = boundary_points if boundary_points is not None else grid_density * grid_density
    if npts % 2:
        npts += 1  # keep t = pi on the grid

    radii = np.linspace(0.0, radius_cap, grid_density)
    angles = np.linspace(0.0, 2 * math.pi, 4 * grid_density, endpoint=False)
    z = radii[:, None] * np.exp(1j * angles)[None, :]
    phi = (1 + z / 2) ** 2
    mod = np.abs(phi)
    ratio = np.abs(z / (8 + 3 * z))

    t = np.linspace(0.0, 2 * math.pi, npts, endpoint=False)
    bnd = np.abs((1 + np.exp(1j * t) / 2) ** 2 - 1.25) ** 2
    kmin = int(np.argmin(bnd))

    at0 = abs((1 + 0.5) ** 2 - 1.25) ** 2
    atpi = abs((1 - 0.5) ** 2 - 1.25) ** 2

    checks = {
        "modulus_above_quarter": float(mod.min()) > 0.25,
        "modulus_below_nine_quarters": float(mod.max()) < 2.25,
        "real_part_positive": float(phi.real.min()) > 0.0,
        "starlike_ratio_below_fifth": float(ratio.max()) < 0.2,
        "boundary_distance_at_least_one": float(bnd.min()) >= 1 - 1e-10,
        "tangency_at_0_and_pi": abs(at0 - 1) <= 1e-10 and abs(atpi - 1) <= 1e-10,
    }
    return PhiScanReport(
        grid_density=grid_density,
        radius_cap=radius_cap,
        min_modulus=float(mod.min()),
        max_modulus=float(mod.max()),
        min_real=float(phi.real.min()),
        max_starlike_ratio=float(ratio.max()),
        boundary_min=float(bnd.min()),
        boundary_argmin=float(t[kmin]),
        boundary_at_0=float(at0),
        boundary_at_pi=float(atpi),
        checks=checks,
        passed=all(checks.values()),
    )


# ---------------------------------------------------------------------------
# the |H2(2)| envelope over the Caratheodory slice
# ---------------------------------------------------------------------------

class H2Terms(NamedTuple):
    """Coefficients of H2(2) = A + B gamma + C gamma^2 + D (1 - |gamma|^2).

    D is reported by magnitude (its phase is carried by eta, |eta| <= 1).
    """
    A: Fraction
    B: Fraction
    C: Fraction
    D_mag: Fraction


def h2_terms(p1) -> H2Terms:
    """Exact slice coefficients of H2(2) at fixed p1 in [0, 2]."""
    q = as_fraction(p1)
    if not 0 <= q <= 2:
        raise ValueError(f"p1 must lie in [0, 2], got {p1}")
    s = 4 - q * q
    return H2Terms(
        A=Fraction(-19) * q ** 4 / 3072,
        B=q * q * s / 384,
        C=(q ** 4 + 8 * q * q - 48) / Fraction(192),
        D_mag=q * s / 24,
    )


def h2_normalized(p1):
    """(A1, B1, C1) = (A, B, C)/|D| for 0 < p1 < 2 (normalization needs D != 0)."""
    q = as_fraction(p1)
    if not 0 < q < 2:
        raise ValueError(f"normalized coefficients need 0 < p1 < 2, got {p1}")
    a1 = Fraction(-19) * q ** 3 / (128 * (4 - q * q))
    b1 = q / 16
    c1 = -(12 + q * q) / (8 * q)
    return a1, b1, c1


def h2_envelope(p1) -> Fraction:
    """Sharp upper envelope of |H2(2)| at fixed p1, exact.

    Interior values follow g1(p1) = (768 - 96 p1^2 - 5 p1^4)/3072; the
    endpoints are handled by their own degenerate maximizations (gamma
    alone at p1 = 0, the constant sequence at p1 = 2) and happen to agree
    with the same formula.
    """
    q = as_fraction(p1)
    if not 0 <= q <= 2:
        raise ValueError(f"p1 must lie in [0, 2], got {p1}")
    if q == 0:
        return Fraction(1, 4)
    if q == 2:
        return Fraction(19, 192)
    return (768 - 96 * q * q - 5 * q ** 4) / Fraction(3072)


def h2_envelope_deriv(p1) -> Fraction:
    """g1'(p1) = (-192 p1 - 20 p1^3)/3072, strictly negative on (0, 2)."""
    q = as_fraction(p1)
    if not 0 <= q <= 2:
        raise ValueError(f"p1 must lie in [0, 2], got {p1}")
    return (-192 * q - 20 * q ** 3) / Fraction(3072)
