"""Self-verifying JSON certificates for generated triangles.

A certificate stores only exact rationals as strings.  Re-verification
rebuilds the family curve from its parameters and recomputes every
identity; nothing from the certificate is trusted beyond its raw values.
"""

from __future__ import annotations

from . import __version__, angleparam, cevians, ecq, sideparam
from .ecq import INF, format_point, parse_point
from .errors import HypheronError
from .exactnum import format_rat, parse_rat
from .hypgeom import HyperbolicTriangle, verify_triangle

KINDS = ("heron-angle", "heron-side", "median", "bisector")


def make_certificate(kind: str, params: dict, point, triangle: dict, report: dict, k=None, translate=None) -> dict:
    cert = {
        "kind": kind,
        "family": {key: format_rat(val) for key, val in params.items()},
        "point": format_point(point),
        "triangle": triangle,
        "report": report,
        "version": __version__,
    }
    if k is not None:
        cert["k"] = k
        cert["translate"] = format_point(translate if translate is not None else INF)
    return cert


def angle_certificate(F, found) -> dict:
    return make_certificate(
        "heron-angle",
        {"m": F.m, "u": F.u},
        found.point,
        found.triangle.to_json(),
        verify_triangle(found.triangle).summary(),
        k=found.k,
        translate=found.translate,
    )


def side_certificate(F, point, triangle) -> dict:
    return make_certificate(
        "heron-side",
        {"v": F.v, "w": F.w},
        point,
        triangle.to_json(),
        verify_triangle(triangle).summary(),
    )


def median_certificate(F, k, translate, point, tri) -> dict:
    return make_certificate(
        "median", {"u": F.u, "w": F.w}, point, tri.to_json(), tri.identities(), k=k, translate=translate
    )


def bisector_certificate(F, k, translate, point, B) -> dict:
    return make_certificate(
        "bisector",
        {"n": F.half_area_n, "u": F.u},
        point,
        B.to_json(),
        cevians.bisector_identities(F, B),
        k=k,
        translate=translate,
    )


def _check_generator_path(E, generator, cert, problems):
    """If the certificate records ``k`` and a translate, recompute ``k*G + T``."""
    if "k" not in cert:
        return
    translate = parse_point(cert["translate"])
    if translate is not INF and not ecq.on_curve(E, translate):
        problems.append("translate is not on the curve")
        return
    expected = ecq.add(E, ecq.scalar_mul(E, int(cert["k"]), generator), translate)
    if expected != parse_point(cert["point"]):
        problems.append("point != k*generator + translate")


def verify_certificate(cert: dict) -> list:
    """Return the list of failed checks; empty means the certificate verifies."""
    problems: list = []
    try:
        kind = cert["kind"]
        fam = {key: parse_rat(val) for key, val in cert["family"].items()}
        point = parse_point(cert["point"])
        tri_json = cert["triangle"]
    except (KeyError, ValueError, TypeError, AttributeError) as exc:
        return [f"malformed certificate: {exc!r}"]

    try:
        if kind == "heron-angle":
            F = angleparam.build_family(fam["m"], fam["u"])
            if not ecq.on_curve(F.E, point):
                return ["point is not on the curve"]
            _check_generator_path(F.E, angleparam.point_P(F), cert, problems)
            T = HyperbolicTriangle.from_json(tri_json)
            rep = verify_triangle(T)
            if not rep.valid:
                problems.append(f"identity failure: {rep.summary()}")
            if not (rep.heron and tri_json.get("heron") is True):
                problems.append("triangle is not Heron")
            if T.area.t != F.m or T.beta.t != F.u:
                problems.append("area or angle does not match the family")
            rebuilt = angleparam.triangle_from_point(F, point)
            if rebuilt is None or rebuilt.to_json() != tri_json:
                problems.append("point does not reproduce the triangle")
        elif kind == "heron-side":
            F = sideparam.build_family(fam["v"], fam["w"])
            if not ecq.on_curve(F.E, point):
                return ["point is not on the curve"]
            T = HyperbolicTriangle.from_json(tri_json)
            rep = verify_triangle(T)
            if not (rep.valid and rep.heron):
                problems.append(f"identity failure: {rep.summary()}")
            if (parse_rat(tri_json["expB"]), parse_rat(tri_json["expC"])) != (F.v, F.w):
                problems.append("sides do not match the family")
            rebuilt = sideparam.triangle_from_point(F, point)
            if rebuilt is None or rebuilt.to_json() != tri_json:
                problems.append("point does not reproduce the triangle")
        elif kind == "median":
            F = cevians.median_family(fam["u"], fam["w"])
            if not ecq.on_curve(F.E, point):
                return ["point is not on the curve"]
            _check_generator_path(F.E, cevians.median_point_P(F), cert, problems)
            tri = cevians.MedianTriangle.from_json(tri_json)
            failed = [name for name, ok in tri.identities().items() if not ok]
            if failed:
                problems.append(f"median identities failed: {failed}")
            if (tri.exp_half_a, tri.exp_c) != (abs(F.u), F.w):
                problems.append("sides do not match the family")
            rebuilt = cevians.median_triangle_from_point(F, point)
            if rebuilt is None or rebuilt.to_json() != tri_json:
                problems.append("point does not reproduce the triangle")
        elif kind == "bisector":
            F = cevians.bisector_family(fam["n"], fam["u"])
            if not ecq.on_curve(F.E, point):
                return ["point is not on the curve"]
            _check_generator_path(F.E, cevians.bisector_point_Q(F), cert, problems)
            t, w = cevians.bisector_inverse(F, point)
            B = cevians.bisector_reconstruct(F, t, w)
            if B is None or B.to_json() != tri_json:
                problems.append("point does not reproduce the triangle")
            else:
                failed = [name for name, ok in cevians.bisector_identities(F, B).items() if not ok]
                if failed:
                    problems.append(f"bisector identities failed: {failed}")
                rep = verify_triangle(B.whole)
                if not rep.valid:
                    problems.append(f"identity failure: {rep.summary()}")
        else:
            problems.append(f"unknown certificate kind {kind!r}")
    except (HypheronError, ArithmeticError, ValueError, KeyError, TypeError, AssertionError) as exc:
        problems.append(f"verification error: {exc!r}")
    return problems
