"""``hypheron`` command line.

Exit codes: 0 success, 1 verification failure, 2 invalid or singular
parameters, 3 nothing found within the search budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, angleparam, cevians, ecq, equilateral, sideparam
from .certificate import (
    angle_certificate,
    bisector_certificate,
    median_certificate,
    side_certificate,
    verify_certificate,
)
from .ecq import format_point
from .errors import HypheronError
from .exactnum import format_rat, format_scalar, parse_rat

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_NONE = 0, 1, 2, 3


class InvalidParameters(Exception):
    pass


def _rat(text: str):
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameters(f"not a rational 'p/q': {text!r}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _preview(q) -> str:
    """Approximate decimal, for human tables only."""
    return f"~{float(q):.6g}"


def _emit_certs(args, certs, rows, header):
    if args.json:
        print(_dump(certs))
        return
    print(header)
    for row in rows:
        print("  " + row)


# --------------------------------------------------------------------------
# subcommands


def cmd_heron_angle(args) -> int:
    m, u = _rat(args.area), _rat(args.angle)
    if not (m > 0 and u > 0 and m * u < 1):
        raise InvalidParameters(f"need m, u > 0 and mu < 1 (got m={m}, u={u})")
    F = angleparam.build_family(m, u)
    found = angleparam.enumerate_heron(F, args.kmax, args.count)
    certs = [angle_certificate(F, f) for f in found]
    rows = [
        f"k={f.k:>4}  tAlpha={f.triangle.alpha.t}  tGamma={f.triangle.gamma.t}  "
        f"e^a={f.triangle.exp_sides[0]} ({_preview(f.triangle.exp_sides[0])})"
        for f in found
    ]
    _emit_certs(args, certs, rows, f"area m={m}, angle u={u}: {len(found)} Heron triangle(s), |k| <= {args.kmax}")
    return EXIT_OK if found else EXIT_NONE


def cmd_heron_side(args) -> int:
    v, w = _rat(args.v), _rat(args.w)
    if not (v > 1 and w > 1):
        raise InvalidParameters("need v, w > 1 so the sides log v, log w are positive")
    F = sideparam.build_family(v, w)
    res = sideparam.search_completions(F, args.height)
    certs = [side_certificate(F, P, T) for P, T in res.triangles]
    rows = [f"e^a={T.exp_sides[0]}  point={format_point(P)}" for P, T in res.triangles]
    rows.append(f"rational points scanned: {', '.join(format_point(P) for P in res.points_scanned) or 'none'}")
    if args.json:
        print(_dump({"heightBound": str(args.height), "summary": res.summary, "certificates": certs}))
    else:
        _emit_certs(args, certs, rows, f"sides log {v}, log {w}: {res.summary}")
    return EXIT_OK


def cmd_median(args) -> int:
    u, w = _rat(args.u), _rat(args.w)
    F = cevians.median_family(u, w)
    if F.degenerate_side:
        raise InvalidParameters("|u| = 1 or |w| = 1 gives a zero side")
    found = cevians.enumerate_medians(F, args.kmax)
    certs = [median_certificate(F, k, T0, Q, tri) for k, T0, Q, tri in found]
    rows = [
        f"k={k:>4}  e^b={tri.exp_b}  coshMedian={tri.cosh_median}  heron={tri.heron}"
        for k, _, _, tri in found
    ]
    _emit_certs(args, certs, rows, f"median family u={u}, w={w}: {len(found)} triangle(s), |k| <= {args.kmax}")
    return EXIT_OK if found else EXIT_NONE


def cmd_bisector(args) -> int:
    n, u = _rat(args.n), _rat(args.u)
    if not (0 < n < 1 and u > 0):
        raise InvalidParameters("need 0 < n < 1 and u > 0")
    F = cevians.bisector_family(n, u)
    found = cevians.enumerate_bisectors(F, args.kmax)
    certs = [bisector_certificate(F, k, T0, R, B) for k, T0, R, B in found]
    rows = [
        f"k={k:>4}  tAlpha={B.whole.alpha.t}  coshBisector={B.cosh_bisector}  heron={B.heron}"
        for k, _, _, B in found
    ]
    _emit_certs(args, certs, rows, f"bisector family n={n}, u={u}: {len(found)} triangle(s), |k| <= {args.kmax}")
    return EXIT_OK if found else EXIT_NONE


def cmd_equilateral(args) -> int:
    ok = True
    out = []
    for which in equilateral.CASES:
        case = equilateral.build_case(which)
        entry = {"case": which, "curve": [format_scalar(c) for c in case.E.coefficients]}
        if args.verify:
            tor = equilateral.verify_torsion(case)
            entry["torsion"] = {
                "group": [format_point(P) for P in ecq.sort_points(tor.group)],
                "orders": {k: str(v) for k, v in tor.orders.items()},
                "extra": {k: str(v) for k, v in tor.extra.items()},
                "matchesExpected": tor.ok,
            }
            ok = ok and tor.ok
        scan = equilateral.nonexistence_scan(case, args.height)
        rejected = all(scan.rejections.values())
        entry["scan"] = {
            "heightBound": str(args.height),
            "points": {str(P): scan.rejections[str(P)] for P in scan.points},
            "torsionOnly": scan.torsion_only,
        }
        entry["rankZero"] = "externally asserted, not proved here"
        ok = ok and scan.torsion_only and rejected
        out.append((entry, scan))
    if args.json:
        print(_dump([entry for entry, _ in out]))
    else:
        for entry, scan in out:
            print(f"{entry['case']}: y^2 = x^3 + ({entry['curve'][0]})x^2 + ({entry['curve'][1]})x + ({entry['curve'][2]})")
            if "torsion" in entry:
                t = entry["torsion"]
                print(f"  torsion group ({len(t['group'])}): {', '.join(t['group'])}")
                print(f"  generator orders: {t['orders']}  {t['extra']}  ok={t['matchesExpected']}")
            for line in scan.lines():
                print("  " + line)
            print(f"  rank 0: {entry['rankZero']}")
    return EXIT_OK if ok else EXIT_FAIL


def _load_certificates(path: str) -> list:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [json.loads(line) for line in text.splitlines() if line.strip()]
    if isinstance(data, dict):
        data = data.get("certificates", [data]) if "kind" not in data else [data]
    return data


def cmd_verify(args) -> int:
    try:
        certs = _load_certificates(args.file)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read certificates: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if not isinstance(certs, list):
        print("expected a certificate, a list of them, or a search result", file=sys.stderr)
        return EXIT_FAIL
    failures = 0
    for i, cert in enumerate(certs):
        problems = verify_certificate(cert) if isinstance(cert, dict) else ["not a JSON object"]
        status = "ok" if not problems else "FAIL: " + "; ".join(problems)
        print(f"certificate {i}: {status}")
        failures += bool(problems)
    print(f"{len(certs) - failures}/{len(certs)} certificate(s) verified")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _curve_record(args) -> dict:
    fam = args.family
    need = {"angle": ("m", "u"), "side": ("v", "w"), "median": ("u", "w"), "bisector": ("n", "u")}[fam]
    vals = {}
    for name in need:
        raw = getattr(args, name)
        if raw is None:
            raise InvalidParameters(f"--family {fam} needs --{name}")
        vals[name] = _rat(raw)
    points = {}
    if fam == "angle":
        F = angleparam.build_family(vals["m"], vals["u"])
        points["P"] = angleparam.point_P(F)
        points["T"] = angleparam.point_T(F)
        if F.u == 1:
            points["Q"] = angleparam.point_Q_u1(F.m)
    elif fam == "side":
        F = sideparam.build_family(vals["v"], vals["w"])
        points.update(sideparam.special_points(F))
    elif fam == "median":
        F = cevians.median_family(vals["u"], vals["w"])
        points["P"] = cevians.median_point_P(F)
    else:
        F = cevians.bisector_family(vals["n"], vals["u"])
        points["Q"] = cevians.bisector_point_Q(F)
        points["T2"] = cevians.bisector_two_torsion_point(F)
    E = F.E
    computed = ecq.discriminant(E)
    closed = F.closed_form_discriminant()
    return {
        "family": fam,
        "params": {k: format_rat(v) for k, v in vals.items()},
        "a2": format_scalar(E.a2),
        "a4": format_scalar(E.a4),
        "a6": format_scalar(E.a6),
        "discriminant": format_scalar(computed),
        "discriminantClosedForm": format_scalar(closed),
        "discriminantsAgree": computed == closed,
        "specialPoints": {k: format_point(P) for k, P in points.items()},
        "twoTorsion": [format_point(P) for P in ecq.two_torsion(E)],
        "twoPrimaryTorsion": ecq.torsion_structure_label(ecq.two_primary_torsion(E), E),
    }


def cmd_curve(args) -> int:
    rec = _curve_record(args)
    if args.emit or args.json:
        print(_dump(rec))
    else:
        print(f"{rec['family']} family {rec['params']}")
        print(f"  y^2 = x^3 + a2 x^2 + a4 x + a6 with a2={rec['a2']}, a4={rec['a4']}, a6={rec['a6']}")
        print(f"  discriminant: {rec['discriminant']} (closed form {rec['discriminantClosedForm']})")
        for name, P in rec["specialPoints"].items():
            print(f"  {name} = {P}")
        print(f"  rational 2-torsion: {', '.join(rec['twoTorsion'])}")
        print(f"  2-primary torsion over Q: {rec['twoPrimaryTorsion']}")
    return EXIT_OK if rec["discriminantsAgree"] else EXIT_FAIL


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypheron", description="Exact hyperbolic Heron triangles from elliptic curves.")
    p.add_argument("--version", action="version", version=f"hypheron {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("heron-angle", cmd_heron_angle, "Heron triangles with given area and one angle")
    sp.add_argument("--area", required=True, help="half-tangent m of the area, as p/q")
    sp.add_argument("--angle", required=True, help="half-tangent u of the fixed angle, as p/q")
    sp.add_argument("--kmax", type=int, default=20)
    sp.add_argument("--count", type=int, default=None, help="stop after this many triangles")

    sp = add("heron-side", cmd_heron_side, "bounded search for a third side completing two sides")
    sp.add_argument("--v", required=True, help="e^b as p/q")
    sp.add_argument("--w", required=True, help="e^c as p/q")
    sp.add_argument("--height", type=int, default=10000)

    sp = add("median", cmd_median, "triangles with rational sides and a rational median")
    sp.add_argument("--u", required=True, help="e^(a/2) as p/q")
    sp.add_argument("--w", required=True, help="e^c as p/q")
    sp.add_argument("--kmax", type=int, default=30)

    sp = add("bisector", cmd_bisector, "triangles with a rational area bisector")
    sp.add_argument("--n", required=True, help="half-tangent of half the area, as p/q")
    sp.add_argument("--u", required=True, help="half-tangent of the fixed angle, as p/q")
    sp.add_argument("--kmax", type=int, default=10)

    sp = add("equilateral", cmd_equilateral, "torsion and bounded-scan checks for equilateral triangles")
    sp.add_argument("--verify", action="store_true", help="also verify the torsion groups")
    sp.add_argument("--height", type=int, default=10000)

    sp = add("verify", cmd_verify, "re-verify a certificate file")
    sp.add_argument("file")

    sp = add("curve", cmd_curve, "print a family curve, its discriminant and special points")
    sp.add_argument("--family", required=True, choices=("angle", "side", "median", "bisector"))
    for name in ("m", "u", "v", "w", "n"):
        sp.add_argument(f"--{name}")
    sp.add_argument("--emit", action="store_true", help="emit the curve record as JSON")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("kmax", "count", "height"):
        val = getattr(args, name, None)
        if val is not None and val < 0:
            print(f"error: --{name} must be non-negative", file=sys.stderr)
            return EXIT_INVALID
    try:
        return args.func(args)
    except (InvalidParameters, HypheronError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
