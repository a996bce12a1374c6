"""Rational medians and rational area bisectors.

Median family ``(u, w)``: side ``a = 2 log u`` (so ``e^{a/2} = u``), side
``c = log w``; a curve point gives the third side ``b = log v`` together
with ``t``, where ``sinh(median) = t / (2 v w (u^2 + 1))``.

Bisector family ``(n, u)``: ``n`` is the half-tangent of *half* the area
(``cos(A/2) = (1 - n^2)/(1 + n^2)``), ``u`` that of the angle ``beta``; a
curve point gives the half-tangent ``t`` of ``alpha``.  In code the
half-area parameter is called ``half_area_n`` wherever it could be
confused with the ``n`` of the angle family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ecq
from .ecq import INF, Curve, Point
from .errors import MapUndefined, NotOnQuartic, SingularCurve, SingularFamily
from .exactnum import half_tangent_from_unit, rat_sqrt, unit_from_half_tangent
from .hypgeom import (
    HyperbolicTriangle,
    RatAngle,
    RatLength,
    angles_sum_below_pi,
    delta1_squared,
    delta2_squared,
)

# --------------------------------------------------------------------------
# medians


@dataclass(frozen=True)
class MedianFamily:
    u: Fraction
    w: Fraction
    E: Curve

    def closed_form_discriminant(self) -> Fraction:
        u, w = self.u, self.w
        return (
            2**12
            * u**4
            * w**8
            * (u**2 + 1) ** 4
            * (u * w**2 + u - 2 * (u**2 + u + 1) * w)
            * (u * w**2 + u - 2 * (u**2 - u + 1) * w)
            * (u * w**2 + u + 2 * (u**2 + u + 1) * w)
            * (u * w**2 + u + 2 * (u**2 - u + 1) * w)
        )

    @property
    def degenerate_side(self) -> bool:
        """``|u| = 1`` or ``|w| = 1`` gives a zero side: no triangle is possible."""
        return abs(self.u) == 1 or abs(self.w) == 1


def median_coefficients(u, w) -> tuple:
    u, w = Fraction(u), Fraction(w)
    a2 = u**2 * w**4 + 2 * (4 * u**4 + 7 * u**2 + 4) * w**2 + u**2
    a4 = 8 * (u**2 + 1) ** 2 * w**2 * (u**2 * w**4 + 2 * (u**2 + 1) ** 2 * w**2 + u**2)
    a6 = 16 * u**2 * w**4 * (u**2 + 1) ** 4 * (w**2 + 1) ** 2
    return a2, a4, a6


def median_family(u, w) -> MedianFamily:
    u, w = Fraction(u), Fraction(w)
    if u == 0 or w == 0:
        raise SingularFamily(f"median family (u={u}, w={w}) is singular")
    try:
        E = Curve(*median_coefficients(u, w))
    except SingularCurve as exc:
        raise SingularFamily(str(exc)) from None
    F = MedianFamily(u, w, E)
    assert ecq.discriminant(E) == F.closed_form_discriminant()
    return F


def median_quartic(u, v, w) -> Fraction:
    """Equals ``(2 v w (u^2 + 1))^2 sinh(median)^2``; a square iff the median is rational."""
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    return (v**2 * w + w + v * w**2 + v) ** 2 * u**2 - 4 * v**2 * w**2 * (u**2 + 1) ** 2


def median_forward(F: MedianFamily, v, t) -> Point:
    u, w = F.u, F.w
    v, t = Fraction(v), Fraction(t)
    if t * t != median_quartic(u, v, w):
        raise NotOnQuartic(f"t^2 mismatch at v = {v}")
    x = 2 * w * (u**2 * w * v**2 + u**2 * (w**2 + 1) * v - 2 * u**4 * w - 3 * u**2 * w + u * t - 2 * w)
    y = 2 * u * w * (
        2 * u**2 * w**2 * v**3
        + 3 * w * u**2 * (w**2 + 1) * v**2
        + (-4 * u**4 * w**2 + u**2 * w**4 - 4 * u**2 * w**2 + 2 * u * w * t + u**2 - 4 * w**2) * v
        + u * (w**2 + 1) * (u * w + t)
    )
    P = Point(x, y)
    assert ecq.on_curve(F.E, P)
    return P


def median_inverse(F: MedianFamily, P) -> tuple:
    """Point to ``(v, t)``; undefined at ``x = 0``."""
    if P is INF:
        raise MapUndefined("median inverse undefined at infinity")
    u, w = F.u, F.w
    x, y = P.x, P.y
    if x == 0:
        raise MapUndefined("median inverse undefined at x = 0")
    v = -(4 * u * w**2 * (w**2 + 1) * (u**2 + 1) ** 2 + u * (w**2 + 1) * x - y) / (2 * x * u * w)
    t = -(
        -(x**3)
        + 8 * w**2 * (u**2 + 1) ** 2 * (2 * w**2 * (u**2 + 1) ** 2 + (w**4 + 1) * u**2) * x
        - 8 * u * w**2 * (w**2 + 1) * (u**2 + 1) ** 2 * y
        + 32 * u**2 * w**4 * (w**2 + 1) ** 2 * (u**2 + 1) ** 4
    ) / (4 * x**2 * u * w)
    return v, t


def median_point_P(F: MedianFamily) -> Point:
    u, w = F.u, F.w
    return F.E.point(0, 4 * u * (u**2 + 1) ** 2 * w**2 * (w**2 + 1))


@dataclass(frozen=True)
class MedianTriangle:
    """Triangle with rational sides and a rational median to side ``a``."""

    exp_half_a: Fraction  # u = e^{a/2}
    exp_b: Fraction  # v
    exp_c: Fraction  # w
    cosh_median: Fraction
    sinh_median: Fraction
    heron: bool

    @property
    def exp_a(self) -> Fraction:
        return self.exp_half_a**2

    @property
    def exp_median(self) -> Fraction:
        return self.cosh_median + self.sinh_median

    def identities(self) -> dict:
        half_a, b, c = RatLength(self.exp_half_a), RatLength(self.exp_b), RatLength(self.exp_c)
        qa = self.exp_a
        return {
            "sidesPositive": self.exp_half_a > 1 and self.exp_b > 1 and self.exp_c > 1,
            "triangleInequality": qa < self.exp_b * self.exp_c
            and self.exp_b < qa * self.exp_c
            and self.exp_c < qa * self.exp_b,
            "medianRelation": 2 * self.cosh_median * half_a.cosh == b.cosh + c.cosh,
            "hyperbolicPythagoras": self.cosh_median**2 - self.sinh_median**2 == 1,
            "medianPositive": self.sinh_median > 0,
            "quartic": median_quartic(self.exp_half_a, self.exp_b, self.exp_c)
            == (2 * self.exp_b * self.exp_c * (self.exp_half_a**2 + 1)) ** 2 * (self.cosh_median**2 - 1),
        }

    def to_json(self) -> dict:
        return {
            "expHalfA": str(self.exp_half_a),
            "expA": str(self.exp_a),
            "expB": str(self.exp_b),
            "expC": str(self.exp_c),
            "coshMedian": str(self.cosh_median),
            "sinhMedian": str(self.sinh_median),
            "expMedian": str(self.exp_median),
            "heron": self.heron,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MedianTriangle":
        from .exactnum import parse_rat

        return cls(
            parse_rat(data["expHalfA"]),
            parse_rat(data["expB"]),
            parse_rat(data["expC"]),
            parse_rat(data["coshMedian"]),
            parse_rat(data["sinhMedian"]),
            bool(data["heron"]),
        )


def median_triangle_from_point(F: MedianFamily, P) -> Optional[MedianTriangle]:
    if P is INF or not P.is_rational:
        return None
    v, t = median_inverse(F, P)
    u, w = F.u, F.w
    qa = u * u
    if not (qa > 1 and v > 1 and w > 1):
        return None
    if not (qa < v * w and v < qa * w and w < qa * v):
        return None
    if t == 0:
        return None
    half_a, b, c = RatLength(abs(u)), RatLength(v), RatLength(w)
    cosh_m = (b.cosh + c.cosh) / (2 * half_a.cosh)
    sinh_m = abs(t) / (2 * v * w * (u**2 + 1))
    heron = rat_sqrt(delta2_squared(RatLength(qa), b, c)) not in (None, 0)
    tri = MedianTriangle(abs(u), v, w, cosh_m, sinh_m, heron)
    checks = tri.identities()
    if not all(checks.values()):
        raise AssertionError(f"median identities failed: {checks}")
    return tri


def enumerate_medians(F: MedianFamily, k_max: int) -> list:
    """Median triangles from ``k * P(u, w) + T`` for ``1 <= |k| <= k_max``."""
    E = F.E
    P = median_point_P(F)
    translates = [INF] + ecq.two_torsion(E)
    found: dict = {}
    kP = INF
    for k in range(1, k_max + 1):
        kP = ecq.add(E, kP, P)
        for sign in (1, -1):
            base = kP if sign == 1 else ecq.neg(E, kP)
            for T0 in translates:
                Q = ecq.add(E, base, T0)
                if Q is INF or Q.x == 0:
                    continue
                tri = median_triangle_from_point(F, Q)
                if tri is not None and tri.exp_b not in found:
                    found[tri.exp_b] = (sign * k, T0, Q, tri)
    return sorted(found.values(), key=lambda item: (abs(item[0]), item[0] < 0))


# --------------------------------------------------------------------------
# area bisectors


def _bisector_parts(n, u) -> dict:
    K = 2 * n**3 * u + 3 * n**2 * u**2 - 3 * n**2 - 6 * n * u - u**2 + 1
    D = (n * u - 1) * (n + u)
    M = (n * u**2 - n - 2 * u) ** 2 * (n**2 + 1) ** 2
    C2 = (
        n**6 * u**4 + 2 * n**6 * u**2 + 8 * n**5 * u**3 + 11 * n**4 * u**4 + n**6
        - 8 * n**5 * u - 50 * n**4 * u**2 - 64 * n**3 * u**3 - 13 * n**2 * u**4
        + 11 * n**4 + 64 * n**3 * u + 86 * n**2 * u**2 + 24 * n * u**3 + u**4
        - 13 * n**2 - 24 * n * u - 6 * u**2 + 1
    )
    B = (n**2 + 1) * (
        n**4 * u**4 - 8 * n**2 * u**4 - u**4 - 16 * n**3 * u**3 + 16 * n * u**3
        - 6 * n**4 * u**2 + 32 * n**2 * u**2 - 10 * u**2 + 16 * n**3 * u - 16 * n * u
        + n**4 - 8 * n**2 - 1
    )
    return {"K": K, "D": D, "M": M, "C2": C2, "B": B}


@dataclass(frozen=True)
class BisectorFamily:
    half_area_n: Fraction
    u: Fraction
    E: Curve

    @property
    def parts(self) -> dict:
        return _bisector_parts(self.half_area_n, self.u)

    @property
    def area_m(self) -> Fraction:
        """Half-tangent of the full area ``A`` (double-angle of ``n``)."""
        n = self.half_area_n
        return 2 * n / (1 - n * n)

    def closed_form_discriminant(self) -> Fraction:
        n, u = self.half_area_n, self.u
        return (
            2**12
            * (n**2 + 1) ** 8
            * (u + n) ** 4
            * (n * u - 1) ** 4
            * (u**2 + 1) ** 2
            * ((u**2 - 1) * n - 2 * u) ** 4
            * (
                (n**4 + 18 * n**2 + 1) * u**4
                + 16 * n * (n**2 - 3) * u**3
                + 2 * (n**4 - 30 * n**2 + 17) * u**2
                - 16 * n * (n**2 - 3) * u
                + n**4
                + 18 * n**2
                + 1
            )
        )


def bisector_family(n, u) -> BisectorFamily:
    n, u = Fraction(n), Fraction(u)
    p = _bisector_parts(n, u)
    L = p["M"]  # root of the linear factor
    a2 = -(L + p["B"])
    const = L * p["K"] ** 2  # constant term of the quadratic factor, negated
    a4 = L * p["B"] - const
    a6 = L * const
    try:
        E = Curve(a2, a4, a6)
    except SingularCurve as exc:
        raise SingularFamily(str(exc)) from None
    F = BisectorFamily(n, u, E)
    assert ecq.discriminant(E) == F.closed_form_discriminant()
    return F


def bisector_two_torsion_point(F: BisectorFamily) -> Point:
    return F.E.point(F.parts["M"], 0)


def bisector_quartic(n, u, t) -> Fraction:
    n, u, t = Fraction(n), Fraction(u), Fraction(t)
    p = _bisector_parts(n, u)
    D, K, C2 = p["D"], p["K"], p["C2"]
    return 4 * D**2 * t**4 + 4 * D * K * t**3 + C2 * t**2 - 4 * D * K * t + 4 * D**2


def bisector_forward(F: BisectorFamily, t, w) -> Point:
    n, u = F.half_area_n, F.u
    t, w = Fraction(t), Fraction(w)
    if t == 0:
        raise MapUndefined("bisector forward map undefined at t = 0")
    if w * w != bisector_quartic(n, u, t):
        raise NotOnQuartic(f"w^2 mismatch at t = {t}")
    p = F.parts
    D, K, C2 = p["D"], p["K"], p["C2"]
    x2 = (
        n**6 * u**4 - 2 * n**6 * u**2 - 4 * n**5 * u**3 + 2 * n**4 * u**4 + n**6
        + 4 * n**5 * u - 8 * n**4 * u**2 - 24 * n**3 * u**3 - 7 * n**2 * u**4
        + 2 * n**4 + 24 * n**3 * u + 38 * n**2 * u**2 + 12 * n * u**3
        - 7 * n**2 - 12 * n * u - 4 * u**2
    )
    y = 4 * D / t**3 * (
        2 * K * D * t**3 + C2 * t**2 + 8 * D**2 - 6 * K * D * t + 4 * D * w - K * t * w
    )
    x = (8 * D**2 - 4 * K * D * t + x2 * t**2 + 4 * D * w) / t**2
    P = Point(x, y)
    assert ecq.on_curve(F.E, P)
    return P


def bisector_inverse(F: BisectorFamily, P) -> tuple:
    if P is INF:
        raise MapUndefined("bisector inverse undefined at infinity")
    n, u = F.half_area_n, F.u
    p = F.parts
    D, K, M = p["D"], p["K"], p["M"]
    x, y = P.x, P.y
    den_t = K * M - K * x - y
    den_w = (
        K**2 * M**2 - 2 * K**2 * M * x - 2 * K * M * y + K**2 * x**2 + 2 * K * y * x + y**2
    )
    if den_t == 0 or den_w == 0:
        raise MapUndefined(f"bisector inverse undefined at {P}")
    G = (
        2 * n**4 * u**4 - 8 * n**4 * u**2 - 20 * n**3 * u**3 - 7 * n**2 * u**4 + 2 * n**4
        + 20 * n**3 * u + 34 * n**2 * u**2 + 12 * n * u**3 - u**4 - 7 * n**2
        - 12 * n * u - 6 * u**2 - 1
    )
    t = -(4 * (n * u - 1) * x * (n + u)) / den_t
    w = -2 * D * (K**2 * M**2 - 2 * K * M * y + G * (n**2 + 1) * x**2 - 2 * x**3 + y**2) / den_w
    return t, w


def bisector_point_Q(F: BisectorFamily) -> Point:
    p = F.parts
    return F.E.point(0, p["M"] * p["K"])


def bisector_torsion_report(F: BisectorFamily) -> tuple:
    """``(label, points)`` for the 2-primary torsion of this member of the family.

    Which of the possible groups occurs depends on ``(n, u)``; this is
    computed per curve, not claimed for the family.
    """
    group = ecq.two_primary_torsion(F.E)
    return ecq.torsion_structure_label(group, F.E), ecq.sort_points(group)


@dataclass(frozen=True)
class BisectorTriangle:
    """Whole triangle plus the sub-triangle cut off by the area bisector.

    The sub-triangle has angles ``alpha1`` (at the split vertex), ``beta``
    and ``theta`` (at the foot of the bisector) and area ``A/2``.
    """

    whole: HyperbolicTriangle
    alpha1: RatAngle
    theta: RatAngle
    cosh_bisector: Fraction
    sinh_bisector: Optional[Fraction]

    @property
    def heron(self) -> bool:
        return self.whole.is_heron

    def to_json(self) -> dict:
        data = {
            "whole": self.whole.to_json(),
            "tAlpha1": str(self.alpha1.t),
            "tTheta": str(self.theta.t),
            "coshBisector": str(self.cosh_bisector),
        }
        if self.sinh_bisector is not None:
            data["sinhBisector"] = str(self.sinh_bisector)
        return data


def bisector_reconstruct(F: BisectorFamily, t, w=None) -> Optional[BisectorTriangle]:
    """Rebuild the triangle and its area bisector from ``alpha``'s half-tangent.

    Returns None when ``(A, alpha, beta)`` do not form a bounded triangle or
    the bisecting angle falls outside ``(0, alpha)``.
    """
    n, u = F.half_area_n, F.u
    t = Fraction(t)
    q = bisector_quartic(n, u, t)
    if w is None:
        w = rat_sqrt(q)
        if w is None:
            raise NotOnQuartic(f"quartic is not a square at t = {t}")
    elif w * w != q:
        raise NotOnQuartic(f"w^2 mismatch at t = {t}")
    if not (0 < n < 1 and u > 0 and t > 0):
        return None
    m = F.area_m
    if not angles_sum_below_pi(m, t, u):
        return None
    whole = HyperbolicTriangle.from_angles(m, t, u)
    alpha, beta = whole.alpha, whole.beta
    half = RatAngle(n)
    e_half_beta = half.unit * beta.unit  # e^{i(A/2 + beta)}
    c_hb, s_hb = e_half_beta.re, e_half_beta.im
    w1 = abs(w) * 4 * n / ((n**2 + 1) ** 2 * (t**2 + 1) * (u**2 + 1))
    if w1 == 0:
        return None
    sin_a1 = (beta.cos - c_hb) * alpha.sin / w1
    cos_a1 = sin_a1 * (beta.sin * whole.cosh_c - s_hb) / (beta.cos - c_hb)
    alpha1 = RatAngle.from_cos_sin(cos_a1, sin_a1)
    if not (0 < alpha1.t < alpha.t):
        return None
    e_theta = -(half.unit * alpha1.unit * beta.unit).conj()
    if e_theta == -1:
        return None
    theta = RatAngle(half_tangent_from_unit(e_theta))
    if not theta.in_range:
        return None
    # bisector is the side of the sub-triangle opposite beta
    cosh_bis = (beta.cos + alpha1.cos * theta.cos) / (alpha1.sin * theta.sin)
    d1 = rat_sqrt(delta1_squared(beta, alpha1, theta))
    sinh_bis = d1 / (alpha1.sin * theta.sin) if d1 else None
    return BisectorTriangle(whole, alpha1, theta, cosh_bis, sinh_bis)


def bisector_identities(F: BisectorFamily, B: BisectorTriangle) -> dict:
    """Independent cross-checks of a reconstructed bisector triangle."""
    whole, a1, th = B.whole, B.alpha1, B.theta
    half = RatAngle(F.half_area_n)
    beta = whole.beta
    # cos(theta) from the law of cosines in the sub-triangle vs the unit-circle value
    cos_theta_law = a1.sin * beta.sin * whole.cosh_c - a1.cos * beta.cos
    composed = half.unit * a1.unit * beta.unit * th.unit
    return {
        "subAreaIsHalf": composed == -1 and angles_sum_below_pi(a1.t, beta.t, th.t),
        "cosThetaAgrees": cos_theta_law == th.cos,
        "alpha1InsideAlpha": 0 < a1.t < whole.alpha.t,
        "heronIffBisectorRational": whole.is_heron == (B.sinh_bisector is not None),
        "bisectorLengthPositive": B.cosh_bisector > 1,
    }


def enumerate_bisectors(F: BisectorFamily, k_max: int) -> list:
    """Bisector triangles from ``k * Q(n, u) + T`` for ``1 <= |k| <= k_max``."""
    E = F.E
    Q = bisector_point_Q(F)
    translates = [INF] + ecq.two_torsion(E)
    found: dict = {}
    kQ = INF
    for k in range(1, k_max + 1):
        kQ = ecq.add(E, kQ, Q)
        for sign in (1, -1):
            base = kQ if sign == 1 else ecq.neg(E, kQ)
            for T0 in translates:
                R = ecq.add(E, base, T0)
                if R is INF:
                    continue
                try:
                    t, w = bisector_inverse(F, R)
                except MapUndefined:
                    continue
                if t <= 0:
                    continue
                B = bisector_reconstruct(F, t, w)
                if B is not None and t not in found:
                    found[t] = (sign * k, T0, R, B)
    return sorted(found.values(), key=lambda item: (abs(item[0]), item[0] < 0))
