"""Heron triangles with two prescribed rational sides.

Sides ``b = log v`` and ``c = log w`` are fixed; the third side ``a = log u``
and ``Delta_2`` correspond to points of
``y^2 = x (x - (v - 1/v)^2) (x - (w - 1/w)^2)``.  The maps are written
field-generically so they also run on the Q(i) points of this curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ecq
from .ecq import INF, Curve, Point, make_point
from .errors import MapUndefined, NotOnQuartic, SingularFamily
from .exactnum import GaussRat
from .hypgeom import HyperbolicTriangle, verify_triangle


@dataclass(frozen=True)
class SideFamily:
    v: Fraction
    w: Fraction
    E: Curve

    @property
    def r1(self) -> Fraction:
        return (self.v - 1 / self.v) ** 2

    @property
    def r2(self) -> Fraction:
        return (self.w - 1 / self.w) ** 2

    @property
    def c(self) -> Fraction:
        """``(v^2 - 1)(w^2 - 1)``, recurring in both maps."""
        return (self.v**2 - 1) * (self.w**2 - 1)

    def closed_form_discriminant(self) -> Fraction:
        v, w = self.v, self.w
        return (
            16
            * (v - 1 / v) ** 4
            * (w - 1 / w) ** 4
            * (w / v - v / w) ** 2
            * (v * w - 1 / (v * w)) ** 2
        )


def build_family(v, w) -> SideFamily:
    v, w = Fraction(v), Fraction(w)
    if v in (0, 1, -1) or w in (0, 1, -1):
        raise SingularFamily(f"side family (v={v}, w={w}) is singular")
    F_disc = 16 * (v - 1 / v) ** 4 * (w - 1 / w) ** 4 * (w / v - v / w) ** 2 * (v * w - 1 / (v * w)) ** 2
    if F_disc == 0:
        raise SingularFamily(f"side family (v={v}, w={w}) is singular")
    E = Curve.from_roots(Fraction(0), (v - 1 / v) ** 2, (w - 1 / w) ** 2)
    F = SideFamily(v, w, E)
    assert ecq.discriminant(E) == F.closed_form_discriminant()
    return F


def side_quartic(F: SideFamily, u):
    """``Delta_2^2`` as a function of the third side exponential ``u``."""
    v, w = F.v, F.w
    return (u * v - w) * (u * w - v) * (v * w - u) * (u * v * w - 1) / (4 * u * u * v * v * w * w)


def forward_map(F: SideFamily, u, d2) -> Point:
    v, w = F.v, F.w
    if u == v * w:
        raise MapUndefined("forward map undefined at u = vw")
    if u == 0:
        raise MapUndefined("forward map undefined at u = 0")
    if d2 * d2 != side_quartic(F, u):
        raise NotOnQuartic(f"Delta_2^2 mismatch at u = {u}")
    y = 2 * u * F.c * (v**2 * w**2 - 1) * d2 / (v * w * (u - v * w) ** 2)
    x = F.c * (u * v * w - 1) / (v * w * (v * w - u))
    P = make_point(x, y)
    assert ecq.on_curve(F.E, P)
    return P


def inverse_map(F: SideFamily, P) -> tuple:
    """Point to ``(u, Delta_2)``."""
    if P is INF:
        raise MapUndefined("inverse map undefined at infinity")
    v, w, c = F.v, F.w, F.c
    x, y = P.x, P.y
    d_a = x + c
    d_b = v**2 * w**2 * x + c
    if d_a == 0 or d_b == 0:
        raise MapUndefined(f"inverse map undefined at x = {x}")
    d2 = c * (v**2 * w**2 - 1) * y / (2 * d_a * d_b)
    u = d_b / (v * w * d_a)
    return _demote(u), _demote(d2)


def _demote(value):
    if isinstance(value, GaussRat) and value.is_real:
        return value.re
    return value


def condition_B(F: SideFamily, u) -> bool:
    v, w = F.v, F.w
    return max(v / w, w / v) < u < v * w


def special_points(F: SideFamily) -> dict:
    """``R`` (infinite order, over Q(i)) and the torsion generators ``S0, S1``."""
    v, w = F.v, F.w
    a, b = v - 1 / v, w - 1 / w
    R = F.E.point(-v * w * a * b, GaussRat(0, v * w * a * b * (v * w - 1 / (v * w))))
    S0 = F.E.point(a * b, GaussRat(0, a * b * (1 / v - 1 / w) * (v * w + 1)))
    S1 = F.E.point(a * a, Fraction(0))
    return {"R": R, "S0": S0, "S1": S1}


def triangle_from_point(F: SideFamily, P) -> Optional[HyperbolicTriangle]:
    """Heron triangle with sides ``(log u, log v, log w)`` or None."""
    if P is INF or not P.is_rational:
        return None
    if not (F.v > 1 and F.w > 1):
        raise ValueError("side family needs v, w > 1")
    u, d2 = inverse_map(F, P)
    if not condition_B(F, u) or d2 == 0:
        return None
    T = HyperbolicTriangle.from_sides(u, F.v, F.w)
    if T is None or T.delta1 is None:
        raise AssertionError("rational point did not give rational angles")
    report = verify_triangle(T)
    if not (report.valid and report.heron):
        raise AssertionError(f"triangle failed verification: {report.summary()}")
    return T


@dataclass(frozen=True)
class SearchResult:
    height_bound: int
    points_scanned: list
    triangles: list  # (point, triangle) pairs

    @property
    def summary(self) -> str:
        if self.triangles:
            return f"{len(self.triangles)} triangle(s) found up to height {self.height_bound}"
        return f"none found up to height {self.height_bound}"


def search_completions(F: SideFamily, height_bound: int) -> SearchResult:
    """Bounded search for third sides completing ``(log v, log w)``.

    An empty result only means nothing exists below the height bound.
    """
    points = ecq.naive_search(F.E, height_bound)
    found = []
    seen = set()
    for P in points:
        T = triangle_from_point(F, P)
        if T is None:
            continue
        key = T.exp_sides[0]
        if key not in seen:
            seen.add(key)
            found.append((P, T))
    return SearchResult(height_bound, points, found)
