"""Equilateral triangles: the two fixed curves and why they give nothing.

``heron``: an equilateral Heron triangle would be a non-torsion point of
``y^2 = x (x^2 + x + 1)``.  ``median``: an equilateral triangle with
rational side (or rational angle) and rational median would be a point of
``y^2 = x^3 + 10 x^2 + 9 x`` with ``y != 0`` and ``x != +-3``.

Rank 0 of both curves is taken as an external fact.  What is checked here
is the torsion structure, the rejection of every torsion point, and the
absence of other points up to a height bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import ecq
from .ecq import INF, Curve, Point

HERON = "heron"
MEDIAN_SIDE = "median-rational-side"
MEDIAN_ANGLE = "median-rational-angle"
CASES = (HERON, MEDIAN_SIDE, MEDIAN_ANGLE)


@dataclass(frozen=True)
class EquilateralCase:
    which: str
    E: Curve

    @property
    def is_median(self) -> bool:
        return self.which != HERON

    def interpret(self, P) -> dict:
        """Map a curve point back to the quantities it parametrizes."""
        if P is INF:
            return {}
        x, y = Fraction(P.x), Fraction(P.y)
        if self.which == HERON:
            # u = Delta_1/(cos a + 1), v = 2 sin a
            if x == -1:
                return {}
            return {"u": (x - 1) / (x + 1), "v": 4 * y / (x + 1) ** 2}
        # s = p t with p = cosh(a/2) (side case) or sin(a/2) (angle case), t = sinh(median)
        if x == 0:
            return {"p": Fraction(0)}
        return {"s": (9 - x * x) / (8 * x), "p": y / (4 * x)}


def build_case(which: str) -> EquilateralCase:
    if which == HERON:
        return EquilateralCase(which, Curve(1, 1, 0))
    if which in (MEDIAN_SIDE, MEDIAN_ANGLE):
        return EquilateralCase(which, Curve(10, 9, 0))
    raise ValueError(f"unknown equilateral case {which!r}")


HERON_TORSION = frozenset({INF, Point(Fraction(0), Fraction(0))})
MEDIAN_TORSION = frozenset(
    {INF}
    | {Point(Fraction(x), Fraction(y)) for x, y in ((0, 0), (-1, 0), (-9, 0), (-3, 6), (-3, -6), (3, 12), (3, -12))}
)


def expected_torsion(case: EquilateralCase) -> frozenset:
    return MEDIAN_TORSION if case.is_median else HERON_TORSION


@dataclass
class TorsionReport:
    which: str
    generators: list
    orders: dict
    group: set
    matches_expected: bool
    two_torsion: list
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.matches_expected


def verify_torsion(case: EquilateralCase) -> TorsionReport:
    E = case.E
    if case.is_median:
        gens = [Point(Fraction(-3), Fraction(6)), Point(Fraction(-1), Fraction(0))]
    else:
        gens = [Point(Fraction(0), Fraction(0))]
    for g in gens:
        assert ecq.on_curve(E, g)
    orders = {str(g): ecq.torsion_order(E, g) for g in gens}
    group = ecq.generated_subgroup(E, gens)
    extra = {}
    if case.is_median:
        g0, g1 = gens
        extra["2*(-3,6)"] = str(ecq.double(E, g0))
        extra["(-3,6)+(-1,0)"] = str(ecq.add(E, g0, g1))
        extra["orderOfSum"] = ecq.torsion_order(E, ecq.add(E, g0, g1))
        expected_orders = {"(-3, 6)": 4, "(-1, 0)": 2}
    else:
        extra["2*(0,0)"] = str(ecq.double(E, gens[0]))
        expected_orders = {"(0, 0)": 2}
    twos = ecq.two_torsion(E)
    matches = group == set(expected_torsion(case)) and orders == expected_orders
    # every rational 2-torsion point must already be in the group
    matches = matches and all(p in group for p in twos)
    return TorsionReport(case.which, gens, orders, group, matches, twos, extra)


def interpret_and_reject(case: EquilateralCase, P) -> str:
    """Name the triangle constraint a torsion point violates."""
    if P is INF:
        return "point at infinity: identity, no parameters"
    data = case.interpret(P)
    if case.which == HERON:
        if not data:
            return "x = -1: u undefined"
        if data["v"] == 0:
            return "v = 0: sin(alpha) = 0, degenerate triangle"
        return ""
    if P.y == 0:
        return "y = 0: p = 0, but p = cosh(a/2) or sin(alpha/2) must be nonzero"
    if data["s"] == 0:
        return "x = +-3: s = 0 so t = sinh(median) = 0, degenerate median"
    return ""


@dataclass
class ScanReport:
    which: str
    height_bound: int
    points: list
    torsion_only: bool
    rejections: dict

    def lines(self) -> list:
        out = [f"{self.which}: {len(self.points)} affine point(s) with height <= {self.height_bound}"]
        for P in self.points:
            out.append(f"  {P}: {self.rejections.get(str(P), 'NOT REJECTED')}")
        out.append(
            "  no non-torsion point found up to this height"
            if self.torsion_only
            else "  NON-TORSION POINT FOUND"
        )
        return out


def nonexistence_scan(case: EquilateralCase, height_bound: int) -> ScanReport:
    """Bounded evidence for rank 0: only torsion points, each rejected."""
    points = ecq.naive_search(case.E, height_bound)
    torsion = expected_torsion(case)
    torsion_only = all(P in torsion for P in points)
    rejections = {str(P): interpret_and_reject(case, P) for P in points}
    return ScanReport(case.which, height_bound, points, torsion_only, rejections)


def delta1_equilateral(cos_alpha) -> Fraction:
    """``(2c - 1)(c + 1)^2``: Delta_1^2 of an equilateral triangle with angle cosine c."""
    c = Fraction(cos_alpha)
    return (2 * c - 1) * (c + 1) ** 2
