"""Heron triangles with prescribed rational area and one rational angle.

For area half-tangent ``m`` and angle half-tangent ``u`` the triangles
correspond to points of ``y^2 = x (x - n) (x - n (u^2 + 1))`` with
``n = m (m^2 + 1) (2u - m (u^2 - 1))``.  The free angle ``alpha`` has
half-tangent ``t``; the Heron condition is that the quartic
:func:`quartic_w2` in ``t`` is a square.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ecq
from .ecq import INF, Curve, Point
from .errors import (
    DegenerateDenominator,
    ExcludedLine,
    MapUndefined,
    NotOnQuartic,
    SingularFamily,
)
from .exactnum import rat_height, rat_sqrt
from .hypgeom import HyperbolicTriangle, verify_triangle


@dataclass(frozen=True)
class AngleFamily:
    m: Fraction
    u: Fraction
    n: Fraction
    E: Curve

    @property
    def k(self) -> Fraction:
        """``2u - m(u^2 - 1)``, the factor shared by ``n`` and the maps."""
        return 2 * self.u - self.m * (self.u**2 - 1)

    @property
    def admissible(self) -> bool:
        """``m, u > 0`` and ``mu < 1``: the family can carry triangles."""
        return self.m > 0 and self.u > 0 and self.m * self.u < 1

    def closed_form_discriminant(self) -> Fraction:
        u, n = self.u, self.n
        return 16 * u**4 * (u**2 + 1) ** 2 * n**6


def build_family(m, u) -> AngleFamily:
    m, u = Fraction(m), Fraction(u)
    n = m * (m**2 + 1) * (2 * u - m * (u**2 - 1))
    if n == 0 or u == 0:
        raise SingularFamily(f"angle family (m={m}, u={u}) is singular")
    E = Curve.from_roots(Fraction(0), n, n * (u**2 + 1))
    F = AngleFamily(m, u, n, E)
    assert ecq.discriminant(E) == F.closed_form_discriminant()
    return F


def quartic_w2(F: AngleFamily, t) -> Fraction:
    m, u = F.m, F.u
    t = Fraction(t)
    c = m * u**2 - m - 2 * u
    return 4 * m * c * (m * t**2 - 2 * t - m) * (c * t**2 + (-4 * m * u - 2 * u**2 + 2) * t - m * u**2 + m + 2 * u)


def forward_map(F: AngleFamily, t, w) -> Point:
    """``(t, w)`` on the quartic to a point of ``F.E``.

    The y-coordinate uses ``t (t^2 - 3)`` in its first term; this is the
    version that lands on the curve and inverts :func:`inverse_map`.
    """
    t, w = Fraction(t), Fraction(w)
    if t == 0:
        raise MapUndefined("forward map undefined at t = 0")
    if w * w != quartic_w2(F, t):
        raise NotOnQuartic(f"w^2 != quartic at t = {t}")
    m, u, k = F.m, F.u, F.k
    L = (m * u - 1) * (m + u)
    x = k / (4 * t**2) * (
        -4 * L * m * t
        + 2 * (m**2 * u**2 + m**2 - 2 * m * u + 2) * m * t**2
        + 2 * k * m**2
        + m * w
    )
    y = -k / (4 * t**3) * (
        2 * k * L * m**2 * t * (t**2 - 3)
        + 2 * (m**2 * u**2 - m**2 - 6 * m * u - 2 * u**2 + 2) * k * m**2 * t**2
        + 2 * k**2 * m**3
        - L * m * t * w
        + k * m**2 * w
    )
    P = Point(x, y)
    assert ecq.on_curve(F.E, P)
    return P


def _line_value(F: AngleFamily, P: Point) -> Fraction:
    m, u = F.m, F.u
    return P.y + (m + u) * (1 - m * u) * (P.x - F.n)


def inverse_map(F: AngleFamily, P) -> tuple:
    """Point of ``F.E`` to ``(t, w)`` on the quartic."""
    if P is INF:
        raise MapUndefined("inverse map undefined at infinity")
    d = _line_value(F, P)
    if d == 0:
        raise ExcludedLine(f"{P} lies on the excluded line")
    m, u, k, n = F.m, F.u, F.k, F.n
    x, y = P.x, P.y
    t = -m * k * (x - (m + u) ** 2 * (m**2 + 1)) / d
    w = 2 * m * k / d**2 * (
        x**3
        - 3 * (m**2 + 1) * (u + m) ** 2 * x**2
        + m * (m**2 + 1) ** 2 * k
        * (m**2 * u**4 + 2 * u**4 + 2 * m * u**3 + 2 * m**2 * u**2 + 4 * u**2 + 6 * m * u + 3 * m**2)
        * x
        - m**2 * (m**2 + 1) ** 3 * (u + m) ** 2 * (u**2 + 1) * k**2
        + 2 * (m**2 + 1) ** 2 * u**2 * (u + m) * (m * u - 1) * y
    )
    return t, w


def special_t_for_P(F: AngleFamily) -> Fraction:
    """The one quartic point whose image is :func:`point_P` (on the excluded line)."""
    m, u = F.m, F.u
    den = (
        m**4 * u**4 - m**4 * u**2 - 4 * m**3 * u**3 + m**4 + 4 * m**3 * u + 6 * m**2 * u**2 + u**2
    )
    if den == 0:
        raise DegenerateDenominator("special t undefined for this family")
    return 2 * m * (m + u) * (1 - m * u) * F.k / den


def special_preimage_of_P(F: AngleFamily) -> tuple:
    """``(t, w)`` with ``forward_map(t, w) == point_P(F)``."""
    t = special_t_for_P(F)
    root = rat_sqrt(quartic_w2(F, t))
    if root is None:
        raise DegenerateDenominator("quartic is not a square at the special t")
    P = point_P(F)
    for w in (root, -root):
        if t != 0 and forward_map(F, t, w) == P:
            return t, w
    raise DegenerateDenominator("special t does not map to P")


def condition_A(F: AngleFamily, t) -> bool:
    t = Fraction(t)
    m, u = F.m, F.u
    return 0 < t < (1 - m * u) / (m + u)


def gamma_positive_polynomial(F: AngleFamily, t) -> bool:
    """The polynomial form of ``gamma > 0``, kept as a cross-check."""
    m, u = F.m, F.u
    return (t * m + t * u + m * u - 1) * (t * m * u - t - m - u) > 0


def point_P(F: AngleFamily) -> Point:
    m, u = F.m, F.u
    return F.E.point((m**2 + 1) * (m + u) ** 2, u**2 * (m**2 + 1) ** 2 * (m + u) * (m * u - 1))


def point_T(F: AngleFamily) -> Point:
    return Point(F.n, Fraction(0))


def torsion_points(F: AngleFamily) -> list:
    n, u = F.n, F.u
    return [F.E.point(x, 0) for x in (Fraction(0), n, n * (u**2 + 1))]


def excluded_points(F: AngleFamily) -> list:
    """The three points on the excluded line: ``T``, ``P`` and ``-(P + T)``."""
    P, T = point_P(F), point_T(F)
    return [T, P, ecq.neg(F.E, ecq.add(F.E, P, T))]


def point_Q_u1(m) -> Point:
    """Second independent point for ``u = 1``; it is defined over Q(i)."""
    from .exactnum import GaussRat

    m = Fraction(m)
    F = build_family(m, 1)
    return F.E.point(2 * m * (m + 1) ** 2, GaussRat(0, 4 * m**2 * (m**2 - 1)))


def _triangle_from_tw(F: AngleFamily, t, w) -> Optional[HyperbolicTriangle]:
    if not condition_A(F, t):
        return None
    T = HyperbolicTriangle.from_angles(F.m, t, F.u)
    # Heron data straight from w, then checked against the angle formula.
    delta1 = abs(w) / ((F.m**2 + 1) * (F.u**2 + 1) * (t**2 + 1))
    if delta1 == 0 or T.delta1 != delta1:
        raise AssertionError("Delta_1 from the curve disagrees with the angles")
    report = verify_triangle(T)
    if not (report.valid and report.heron):
        raise AssertionError(f"triangle failed verification: {report.summary()}")
    return T


def triangle_from_point(F: AngleFamily, P) -> Optional[HyperbolicTriangle]:
    """Heron triangle for a rational point, or None outside condition (A).

    ``P`` itself is handled through its special preimage; ``T`` and
    ``-(P + T)`` have no preimage and give None.
    """
    if not F.admissible:
        raise ValueError("family needs m, u > 0 and mu < 1")
    if P is INF or not P.is_rational:
        return None
    try:
        t, w = inverse_map(F, P)
    except ExcludedLine:
        if P != point_P(F):
            return None
        try:
            t, w = special_preimage_of_P(F)
        except DegenerateDenominator:
            return None
    return _triangle_from_tw(F, t, w)


@dataclass(frozen=True)
class FoundTriangle:
    triangle: HyperbolicTriangle
    point: object
    k: int
    translate: object  # torsion point added to k*P, or INF


def k_order(k_max: int):
    """``1, -1, 2, -2, ..., k_max, -k_max``."""
    for k in range(1, k_max + 1):
        yield k
        yield -k


def enumerate_heron(F: AngleFamily, k_max: int, count: Optional[int] = None) -> list:
    """Triangles from ``k*P + T'`` for ``|k| <= k_max`` and ``T'`` torsion.

    Scanning stops early once ``count`` distinct triangles are found.
    Output is deduplicated by ``t_alpha`` and sorted by its height.
    """
    if not F.admissible:
        raise ValueError("family needs m, u > 0 and mu < 1")
    E = F.E
    P = point_P(F)
    translates = [INF] + torsion_points(F)
    found: dict = {}
    for T0 in translates:
        _collect(F, T0, 0, T0, found)
    kP = INF
    for k in range(1, k_max + 1):
        kP = ecq.add(E, kP, P)
        for sign in (1, -1):
            base = kP if sign == 1 else ecq.neg(E, kP)
            for T0 in translates:
                Q = ecq.add(E, base, T0)
                _collect(F, Q, sign * k, T0, found)
            if count is not None and len(found) >= count:
                return _ordered(found)[:count]
    return _ordered(found)


def _collect(F, Q, k, T0, found):
    tri = triangle_from_point(F, Q)
    if tri is not None and tri.alpha.t not in found:
        found[tri.alpha.t] = FoundTriangle(tri, Q, k, T0)


def _ordered(found: dict) -> list:
    return [found[t] for t in sorted(found, key=lambda t: (rat_height(t), t))]
