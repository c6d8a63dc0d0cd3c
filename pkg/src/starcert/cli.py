"""Command-line front end.

Exit codes
----------
0   verified / computed successfully
2   a certification or verdict failed (certificate incomplete, disk test
    negative)
3   an oracle violation (a numeric scan contradicted a certified bound)
64  usage errors (bad flags, unreadable input files)
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .bernstein import (UNIT_BOX, Box, CertificateError, CornerRule,
                        bound_above, certify_positive, check_certificate,
                        parse_poly_text)
from .gft import JanowskiParams, janowski_check, ma_minda_scan
from .radius import solve_radius
from .rationals import format_rational, parse_rational
from .series import TruncSeries, member_from_schwarz
from .verify import max_a4, verify_h2, verify_h3

__all__ = ["main"]

USAGE_EXIT = 64
CERT_EXIT = 2
ORACLE_EXIT = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here reserves 2 for
    failed certifications, so remap usage errors to 64."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let option values like "-1/4" parse as numbers, not unknown flags
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _number(text: str):
    """Rational 'num/den' or integer preferred; falls back to float."""
    try:
        return parse_rational(text)
    except ValueError:
        try:
            return float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _write_json(path: str, doc) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {path}")


def _leaf_note(leaf) -> str:
    if leaf.margin is not None:
        return f" margin={format_rational(leaf.margin)}"
    if leaf.witness is not None:
        p, x, v = leaf.witness
        return (f" witness=({format_rational(p)},{format_rational(x)})"
                f" value={format_rational(v)}")
    return f" min_coeff={format_rational(leaf.min_bcoeff)}"


def _read_schwarz(spec: str, order: int) -> TruncSeries:
    """A Schwarz function from 'z', 'z^k', or a coefficient file.

    A file holds whitespace-separated exact rationals w1 w2 ... (the
    coefficients of z, z^2, ...); '#' starts a comment.
    """
    path = Path(spec)
    if path.is_file():
        tokens = []
        for line in path.read_text().splitlines():
            line = line.split("#", 1)[0]
            tokens.extend(line.split())
        coeffs = [Fraction(0)] + [parse_rational(t) for t in tokens]
        return TruncSeries.from_coeffs(coeffs, max(order, len(coeffs) - 1))
    mono = spec.replace("**", "^")
    if mono == "z":
        k = 1
    elif mono.startswith("z^"):
        k = int(mono[2:])
    else:
        raise ValueError(f"--schwarz wants 'z', 'z^k' or a file, got {spec!r}")
    if k < 1:
        raise ValueError("exponent must be >= 1")
    return TruncSeries.monomial(k, max(order, k))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_expand(args) -> int:
    try:
        w = _read_schwarz(args.schwarz, args.order)
    except (ValueError, OSError) as exc:
        print(f"expand: {exc}", file=sys.stderr)
        return USAGE_EXIT
    f = member_from_schwarz(w, args.order)
    parts = [f"a{k}={format_rational(f.coeff(k))}"
             for k in range(2, args.order + 1)]
    print(" ".join(parts))
    return 0


def _cmd_verify_h2(args) -> int:
    report = verify_h2(grid=args.grid, seed=args.seed)
    print(report.render())
    if args.json:
        _write_json(args.json, report.to_json_doc())
    return 0 if report.verified else ORACLE_EXIT


def _cmd_certify_h3(args) -> int:
    report = verify_h3(max_depth=args.max_depth, grid=args.grid)
    cert = report.certificate
    if args.out and cert is not None:
        Path(args.out).write_text(cert.to_json() + "\n")
        report.artifacts.append(args.out)
        print(f"wrote {args.out}")
    print(report.render())
    if cert is not None:
        by_status: dict[str, int] = {}
        for leaf in cert.leaves():
            by_status[leaf.status] = by_status.get(leaf.status, 0) + 1
        print("  leaves by status: "
              + ", ".join(f"{k}={v}" for k, v in sorted(by_status.items())))
    if args.json:
        _write_json(args.json, report.to_json_doc())
    if report.verified:
        return 0
    return CERT_EXIT if report.details.get("failure") == "certification" \
        else ORACLE_EXIT


def _cmd_bernstein(args) -> int:
    try:
        poly = parse_poly_text(Path(args.poly).read_text())
    except (ValueError, OSError) as exc:
        print(f"bernstein: {exc}", file=sys.stderr)
        return USAGE_EXIT
    box = Box(*args.box) if args.box else UNIT_BOX
    if args.bound_above:
        hi = bound_above(poly, box, args.depth)
        print(f"bernstein upper bound on {box}: "
              f"{format_rational(hi)} = {float(hi):.12g}")
        return 0
    corner = CornerRule(*args.corner) if args.corner else None
    cert = certify_positive(poly, box, args.max_depth, corner)
    try:
        check_certificate(poly, cert, box)
    except CertificateError as exc:  # pragma: no cover - internal bug guard
        print(f"bernstein: certificate failed re-validation: {exc}",
              file=sys.stderr)
        return CERT_EXIT
    print(f"certificate: {'succeeded' if cert.succeeded else 'FAILED'} "
          f"({cert.node_count()} nodes, {len(cert.leaves())} leaves, "
          f"re-validated)")
    for leaf in cert.leaves():
        print(f"  {leaf.status:16s} box={leaf.box}{_leaf_note(leaf)}")
    if args.out:
        Path(args.out).write_text(cert.to_json() + "\n")
        print(f"wrote {args.out}")
    return 0 if cert.succeeded else CERT_EXIT


def _cmd_radius(args) -> int:
    try:
        res = solve_radius(args.gamma, args.tol)
    except ValueError as exc:
        print(f"radius: {exc}", file=sys.stderr)
        return USAGE_EXIT
    print(f"gamma:      {format_rational(res.gamma)}")
    print(f"root:       {res.root:.18f}")
    print(f"bracket:    [{format_rational(res.bracket_lo)}, "
          f"{format_rational(res.bracket_hi)}]")
    print(f"width:      {float(res.bracket_hi - res.bracket_lo):.3e} "
          f"({res.iterations} bisections)")
    return 0


def _cmd_max_a4(args) -> int:
    res = max_a4(grid=args.grid, refine=args.refine)
    print(f"max |a4|:      {res.value:.9f}  ({res.samples} samples)")
    print(f"witness:       c1={res.c1:.9f}  gamma={res.gamma:.6f}  "
          f"eta={res.eta:.6f}")
    print(f"family argmax: t={res.family_t:.9f}  value={res.family_value:.9f}")
    if args.json:
        _write_json(args.json, {
            "max_a4": res.value, "c1": res.c1,
            "gamma": [res.gamma.real, res.gamma.imag],
            "eta": [res.eta.real, res.eta.imag],
            "family_t": res.family_t, "family_value": res.family_value,
            "samples": res.samples,
        })
    return 0


def _cmd_janowski(args) -> int:
    try:
        params = JanowskiParams(args.A, args.B)
    except ValueError as exc:
        print(f"janowski: {exc}", file=sys.stderr)
        return USAGE_EXIT
    ok, rep = janowski_check(params)
    print(f"A = {format_rational(params.A)}, B = {format_rational(params.B)}")
    print(f"image disk:    center {format_rational(rep.center)}, "
          f"radius {format_rational(rep.radius)}")
    print(f"value range:   [{format_rational(rep.inner_value)}, "
          f"{format_rational(rep.outer_value)}]  (needs [1/4, 9/4])")
    print(f"interval test: {rep.interval_test}")
    print(f"disk test:     {rep.disk_test}   (|center - 5/4| + radius <= 1)")
    print(f"verdict:       {'inside' if ok else 'NOT inside'}")
    return 0 if ok else CERT_EXIT


def _cmd_scan_phi(args) -> int:
    rep = ma_minda_scan(grid_density=args.grid)
    print(f"grid density:     {rep.grid_density} (radius cap {rep.radius_cap})")
    print(f"modulus range:    [{rep.min_modulus:.9f}, {rep.max_modulus:.9f}]"
          f"  (needs (1/4, 9/4))")
    print(f"min real part:    {rep.min_real:.9f}")
    print(f"starlike ratio:   {rep.max_starlike_ratio:.9f}  (needs < 1/5)")
    print(f"boundary minimum: {rep.boundary_min:.12f} at t={rep.boundary_argmin:.6f}"
          f"  (tangency value 1 at t=0 and pi)")
    for name, ok in rep.checks.items():
        print(f"  {'pass' if ok else 'FAIL'}  {name}")
    return 0 if rep.passed else ORACLE_EXIT


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    p = _Parser(prog="starcert",
                description="Certified coefficient and Hankel determinant "
                            "bounds for a starlike class (exact rational "
                            "arithmetic + Bernstein positivity certificates).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("expand", help="series coefficients of the member "
                                      "driven by a Schwarz function")
    q.add_argument("--schwarz", required=True,
                   help="'z', 'z^k', or a file of rational coefficients")
    q.add_argument("--order", type=int, default=5,
                   help="highest coefficient index to print (default 5)")
    q.set_defaults(func=_cmd_expand)

    q = sub.add_parser("verify-h2",
                       help="certify the sharp bound 1/4 for the second "
                            "Hankel determinant")
    q.add_argument("--grid", type=int, default=32)
    q.add_argument("--seed", type=int, default=20240605)
    q.add_argument("--json", metavar="PATH", help="write the report as JSON")
    q.set_defaults(func=_cmd_verify_h2)

    q = sub.add_parser("certify-h3",
                       help="certify the sharp bound 1/9 for the third "
                            "Hankel determinant")
    q.add_argument("--max-depth", type=int, default=3)
    q.add_argument("--grid", type=int, default=12)
    q.add_argument("--out", metavar="PATH",
                   help="write the positivity certificate as JSON")
    q.add_argument("--json", metavar="PATH", help="write the report as JSON")
    q.set_defaults(func=_cmd_certify_h3)

    q = sub.add_parser("bernstein",
                       help="certify positivity / bound a bivariate "
                            "polynomial from a .poly file")
    q.add_argument("--poly", required=True, metavar="FILE")
    q.add_argument("--box", nargs=4, type=_rational,
                   metavar=("PLO", "PHI", "XLO", "XHI"))
    mode = q.add_mutually_exclusive_group(required=True)
    mode.add_argument("--certify", action="store_true")
    mode.add_argument("--bound-above", action="store_true")
    q.add_argument("--corner", nargs=2, type=_rational, metavar=("PLO", "XLO"),
                   help="corner point eligible for the tail estimate")
    q.add_argument("--max-depth", type=int, default=3)
    q.add_argument("--depth", type=int, default=0,
                   help="uniform subdivision depth for --bound-above")
    q.add_argument("--out", metavar="PATH", help="write the certificate JSON")
    q.set_defaults(func=_cmd_bernstein)

    q = sub.add_parser("radius",
                       help="radius at which the convexity functional "
                            "reaches a level gamma")
    q.add_argument("--gamma", type=_number, default=Fraction(0),
                   help="level, rational like 1/10 (default 0)")
    q.add_argument("--tol", type=float, default=1e-12)
    q.set_defaults(func=_cmd_radius)

    q = sub.add_parser("max-a4", help="maximize |a4| over the Schwarz "
                                      "coefficient body")
    q.add_argument("--grid", type=int, default=48)
    q.add_argument("--refine", type=int, default=60)
    q.add_argument("--json", metavar="PATH")
    q.set_defaults(func=_cmd_max_a4)

    q = sub.add_parser("janowski",
                       help="test whether (1+Az)/(1+Bz) maps into the "
                            "target region")
    q.add_argument("--A", type=_number, required=True)
    q.add_argument("--B", type=_number, required=True)
    q.set_defaults(func=_cmd_janowski)

    q = sub.add_parser("scan-phi", help="numeric scan of the target "
                                        "function's analytic properties")
    q.add_argument("--grid", type=int, default=64)
    q.set_defaults(func=_cmd_scan_phi)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"starcert {args.command}: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
