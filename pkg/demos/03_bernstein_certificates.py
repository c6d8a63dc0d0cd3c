"""Bernstein enclosures as machine-checkable positivity certificates.

A polynomial with nonnegative Bernstein coefficients on a box is
nonnegative there; subdividing the box tightens the enclosure.  The
certificate records the subdivision tree with exact rational
coefficients, so an independent checker can replay every step — and
will loudly reject a tampered tree.
"""
import json

from starcert import (CertificateError, PositivityCertificate, UNIT_BOX,
                      bound_above, certify_positive, check_certificate,
                      enclosure, parse_poly_text, to_bernstein)

POLY_TEXT = """\
# 3p^2 - 2px + 3x^2 + 1/50: positive, but with one negative Bernstein
# coefficient on the unit square, so a certificate needs subdivision.
bidegree 2 2
2 0 3
1 1 -2
0 2 3
0 0 1/50
"""

f = parse_poly_text(POLY_TEXT)
patch = to_bernstein(f, UNIT_BOX)
print("Bernstein matrix on the unit square:")
for row in patch.bcoeffs:
    print("  ", [str(c) for c in row])
print("enclosure:", enclosure(patch))
print("upper bound after 2 subdivision rounds:", bound_above(f, depth=2))
print()

cert = certify_positive(f, max_depth=3)
print(f"certificate succeeded: {cert.succeeded} "
      f"({cert.node_count()} nodes, {len(cert.leaves())} leaves)")
assert check_certificate(f, cert, UNIT_BOX)
print("independent re-validation: passed")
print()

# A shallow attempt fails honestly, with an exact counter-witness to the
# *method* (the polynomial itself stays positive).
shallow = certify_positive(f, max_depth=1)
print(f"depth-1 attempt succeeded: {shallow.succeeded}")
for leaf in shallow.leaves():
    if leaf.status == "failed":
        wp, wx, val = leaf.witness
        print(f"  failed on {leaf.box}: min Bernstein coeff "
              f"{leaf.min_bcoeff}, lattice value {val} at ({wp}, {wx})")
print()

# Tamper with a serialized certificate; the checker refuses it.
payload = json.loads(cert.to_json())
payload["children"][0]["min_bcoeff"] = "1/1000000"
forged = PositivityCertificate.from_json(json.dumps(payload))
try:
    check_certificate(f, forged, UNIT_BOX)
    print("tampered certificate accepted (BUG)")
except CertificateError as exc:
    print("tampered certificate rejected:", exc)
