"""Exact hyperbolic triangles with rational angles and rational lengths.

An angle ``x`` in ``(0, pi)`` is stored as its half-tangent ``t = tan(x/2)``
so that ``cos x = (1 - t^2)/(1 + t^2)`` and ``sin x = 2t/(1 + t^2)``.  A
length ``x`` is stored, when possible, as ``q = e^x``.  Nothing here ever
touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DegenerateAngle
from .exactnum import (
    GaussRat,
    format_rat,
    half_tangent_from_unit,
    parse_rat,
    rat_sqrt,
    unit_from_half_tangent,
)


@dataclass(frozen=True)
class RatAngle:
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))

    @property
    def cos(self) -> Fraction:
        return (1 - self.t**2) / (1 + self.t**2)

    @property
    def sin(self) -> Fraction:
        return 2 * self.t / (1 + self.t**2)

    @property
    def unit(self) -> GaussRat:
        return unit_from_half_tangent(self.t)

    @property
    def in_range(self) -> bool:
        """True iff the angle lies in ``(0, pi)``."""
        return self.t > 0

    @classmethod
    def from_cos_sin(cls, c, s) -> "RatAngle":
        c, s = Fraction(c), Fraction(s)
        if c * c + s * s != 1:
            raise ValueError("(cos, sin) is not on the unit circle")
        if c == -1:
            raise DegenerateAngle("angle pi has no half-tangent")
        return cls(s / (1 + c))


@dataclass(frozen=True)
class RatLength:
    q: Fraction  # e^x

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 0:
            raise ValueError("e^x must be positive")

    @property
    def cosh(self) -> Fraction:
        return (self.q + 1 / self.q) / 2

    @property
    def sinh(self) -> Fraction:
        return (self.q - 1 / self.q) / 2

    @property
    def positive(self) -> bool:
        return self.q > 1

    @classmethod
    def from_cosh_sinh(cls, c, s) -> "RatLength":
        return cls(Fraction(c) + Fraction(s))


def gauss_bonnet_gamma(m, t_alpha, t_beta) -> Fraction:
    """Half-tangent of ``gamma = pi - A - alpha - beta``.

    ``m``, ``t_alpha``, ``t_beta`` are half-tangents of the area and two
    angles.  The third angle comes from ``e^{i gamma} = -conj(e^{iA}
    e^{i alpha} e^{i beta})``.  The result is only determined modulo
    ``2 pi``; callers must still check that ``A + alpha + beta < pi``.
    """
    prod = unit_from_half_tangent(m) * unit_from_half_tangent(t_alpha) * unit_from_half_tangent(t_beta)
    e_gamma = -prod.conj()
    if e_gamma == -1:
        raise DegenerateAngle("gamma = pi")
    return half_tangent_from_unit(e_gamma)


def angles_sum_below_pi(*ts) -> bool:
    """Exact test that positive angles with these half-tangents sum to less than pi.

    For half-angles in ``(0, pi/2)`` the sum is below ``pi/2`` iff the
    cosine of the sum is positive, which after dividing by the cosines is
    ``1 - e2 + e4 - ... > 0`` in the elementary symmetric functions of ``ts``
    (valid for up to three terms, where the sum is below ``3 pi / 2``).
    """
    ts = [Fraction(t) for t in ts]
    if any(t <= 0 for t in ts):
        return False
    if len(ts) == 1:
        return True
    if len(ts) == 2:
        return ts[0] * ts[1] < 1
    if len(ts) == 3:
        a, b, c = ts
        return a * b + b * c + c * a < 1
    raise ValueError("supports at most three angles")


def cosh_from_angles(alpha: RatAngle, beta: RatAngle, gamma: RatAngle) -> Fraction:
    """``cosh`` of the side opposite ``alpha`` (dual law of cosines)."""
    den = beta.sin * gamma.sin
    if den == 0:
        raise ZeroDivisionError("degenerate angle in law of cosines")
    return (alpha.cos + beta.cos * gamma.cos) / den


def delta1_squared(alpha: RatAngle, beta: RatAngle, gamma: RatAngle) -> Fraction:
    return (alpha.cos + beta.cos * gamma.cos) ** 2 - beta.sin**2 * gamma.sin**2


def delta1_symmetric(alpha: RatAngle, beta: RatAngle, gamma: RatAngle) -> Fraction:
    """Same value as :func:`delta1_squared`, from the symmetric cosine sum."""
    ea, eb, ec = alpha.unit, beta.unit, gamma.unit

    def cos_of(z):
        return z.re

    total = (
        cos_of(ea.conj() * eb * ec)
        + cos_of(ea * eb.conj() * ec)
        + cos_of(ea * eb * ec.conj())
        + cos_of(ea * eb * ec)
        + cos_of(ea * ea)
        + cos_of(eb * eb)
        + cos_of(ec * ec)
        + 1
    )
    return total / 2


def sin_area_from_angles(alpha: RatAngle, beta: RatAngle, gamma: RatAngle) -> Fraction:
    """``sin A`` for ``A = pi - alpha - beta - gamma``."""
    sa, sb, sg = alpha.sin, beta.sin, gamma.sin
    ca, cb, cg = alpha.cos, beta.cos, gamma.cos
    return -sa * sb * sg + sa * cb * cg + sb * ca * cg + sg * ca * cb


def delta2_squared(u: RatLength, v: RatLength, w: RatLength) -> Fraction:
    """``Delta_2^2`` for sides with exponentials ``u, v, w``."""
    u, v, w = u.q, v.q, w.q
    return (u * v - w) * (u * w - v) * (v * w - u) * (u * v * w - 1) / (4 * u * u * v * v * w * w)


def delta2_squared_cosh(ca, cb, cc) -> Fraction:
    """``1 - ca^2 - cb^2 - cc^2 + 2 ca cb cc`` from the side cosines."""
    return 1 - ca * ca - cb * cb - cc * cc + 2 * ca * cb * cc


@dataclass(frozen=True)
class HyperbolicTriangle:
    """A bounded triangle with rational angles and rational area.

    Side ``a`` is opposite ``alpha`` etc.  ``sinh_*`` are None when the side
    length is not rational (the triangle is then not Heron).
    """

    alpha: RatAngle
    beta: RatAngle
    gamma: RatAngle
    area: RatAngle
    cosh_a: Fraction
    cosh_b: Fraction
    cosh_c: Fraction
    sinh_a: Optional[Fraction] = None
    sinh_b: Optional[Fraction] = None
    sinh_c: Optional[Fraction] = None
    delta1: Optional[Fraction] = None

    @classmethod
    def from_angles(cls, m, t_alpha, t_beta) -> "HyperbolicTriangle":
        """Triangle with area half-tangent ``m`` and angles ``t_alpha, t_beta``."""
        t_gamma = gauss_bonnet_gamma(m, t_alpha, t_beta)
        alpha, beta, gamma = RatAngle(t_alpha), RatAngle(t_beta), RatAngle(t_gamma)
        if not (alpha.in_range and beta.in_range and gamma.in_range and RatAngle(m).in_range):
            raise ValueError("angles and area must lie in (0, pi)")
        if not angles_sum_below_pi(alpha.t, beta.t, gamma.t):
            raise ValueError("angles sum to more than pi")
        d1sq = delta1_squared(alpha, beta, gamma)
        d1 = rat_sqrt(d1sq)
        sinhs = (None, None, None)
        if d1 is not None and d1 != 0:
            sinhs = (
                d1 / (beta.sin * gamma.sin),
                d1 / (alpha.sin * gamma.sin),
                d1 / (alpha.sin * beta.sin),
            )
        return cls(
            alpha,
            beta,
            gamma,
            RatAngle(m),
            cosh_from_angles(alpha, beta, gamma),
            cosh_from_angles(beta, alpha, gamma),
            cosh_from_angles(gamma, alpha, beta),
            *sinhs,
            delta1=d1 if sinhs[0] is not None else None,
        )

    @classmethod
    def from_sides(cls, exp_a, exp_b, exp_c) -> Optional["HyperbolicTriangle"]:
        """Triangle with side exponentials ``exp_a, exp_b, exp_c``.

        Returns None unless all angles (equivalently the area) are rational.
        Raises ValueError if the sides violate the triangle inequality.
        """
        a, b, c = RatLength(exp_a), RatLength(exp_b), RatLength(exp_c)
        if not (a.positive and b.positive and c.positive):
            raise ValueError("side lengths must be positive")
        qa, qb, qc = a.q, b.q, c.q
        if not (qa < qb * qc and qb < qa * qc and qc < qa * qb):
            raise ValueError("triangle inequality violated")
        d2 = rat_sqrt(delta2_squared(a, b, c))
        if d2 is None or d2 == 0:
            return None
        ca, cb, cc = a.cosh, b.cosh, c.cosh
        sa, sb, sc = a.sinh, b.sinh, c.sinh
        alpha = RatAngle.from_cos_sin((cb * cc - ca) / (sb * sc), d2 / (sb * sc))
        beta = RatAngle.from_cos_sin((ca * cc - cb) / (sa * sc), d2 / (sa * sc))
        gamma = RatAngle.from_cos_sin((ca * cb - cc) / (sa * sb), d2 / (sa * sb))
        e_area = -(alpha.unit * beta.unit * gamma.unit).conj()
        area = RatAngle(half_tangent_from_unit(e_area))
        return cls(
            alpha,
            beta,
            gamma,
            area,
            ca,
            cb,
            cc,
            sa,
            sb,
            sc,
            delta1=sa * beta.sin * gamma.sin,
        )

    @property
    def is_heron(self) -> bool:
        return None not in (self.sinh_a, self.sinh_b, self.sinh_c)

    @property
    def exp_sides(self) -> tuple:
        """``(e^a, e^b, e^c)``, with None for irrational sides."""
        out = []
        for c, s in ((self.cosh_a, self.sinh_a), (self.cosh_b, self.sinh_b), (self.cosh_c, self.sinh_c)):
            out.append(None if s is None else c + s)
        return tuple(out)

    def to_json(self) -> dict:
        data = {
            "tAlpha": format_rat(self.alpha.t),
            "tBeta": format_rat(self.beta.t),
            "tGamma": format_rat(self.gamma.t),
            "m": format_rat(self.area.t),
        }
        for key, e in zip(("expA", "expB", "expC"), self.exp_sides):
            if e is not None:
                data[key] = format_rat(e)
        data["heron"] = self.is_heron
        return data

    @classmethod
    def from_json(cls, data: dict) -> "HyperbolicTriangle":
        """Rebuild from JSON, taking every stored value at face value.

        Side data comes from ``expA`` etc. when present, otherwise the
        cosh values are recomputed from the angles.  No identity is
        enforced here; run :func:`verify_triangle` on the result.
        """
        alpha, beta, gamma = (RatAngle(parse_rat(data[k])) for k in ("tAlpha", "tBeta", "tGamma"))
        area = RatAngle(parse_rat(data["m"]))
        coshes, sinhs = [], []
        for key, (x, y, z) in zip(
            ("expA", "expB", "expC"),
            ((alpha, beta, gamma), (beta, alpha, gamma), (gamma, alpha, beta)),
        ):
            if key in data:
                length = RatLength(parse_rat(data[key]))
                coshes.append(length.cosh)
                sinhs.append(length.sinh)
            else:
                coshes.append(cosh_from_angles(x, y, z))
                sinhs.append(None)
        delta1 = None
        if sinhs[0] is not None:
            delta1 = sinhs[0] * beta.sin * gamma.sin
        return cls(alpha, beta, gamma, area, *coshes, *sinhs, delta1=delta1)


@dataclass
class IdentityReport:
    """Exact outcome of every identity check on a triangle."""

    angles_positive: bool
    angle_sum_below_pi: bool
    gauss_bonnet: bool
    law_of_cosines: tuple
    law_of_sines: bool
    sides_positive: bool
    hyperbolic_pythagoras: bool
    heron: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return (
            self.angles_positive
            and self.angle_sum_below_pi
            and self.gauss_bonnet
            and all(self.law_of_cosines)
            and self.law_of_sines
            and self.sides_positive
            and self.hyperbolic_pythagoras
        )

    def summary(self) -> dict:
        return {
            "anglesPositive": self.angles_positive,
            "angleSumBelowPi": self.angle_sum_below_pi,
            "gaussBonnet": self.gauss_bonnet,
            "lawOfCosines": list(self.law_of_cosines),
            "lawOfSines": self.law_of_sines,
            "sidesPositive": self.sides_positive,
            "hyperbolicPythagoras": self.hyperbolic_pythagoras,
            "heron": self.heron,
            "valid": self.valid,
        }


def verify_triangle(T: HyperbolicTriangle) -> IdentityReport:
    """Recompute every identity from the stored rationals."""
    al, be, ga, ar = T.alpha, T.beta, T.gamma, T.area
    angles_positive = all(x.in_range for x in (al, be, ga, ar))
    sum_ok = angles_positive and angles_sum_below_pi(al.t, be.t, ga.t)
    # A + alpha + beta + gamma = pi  <=>  product of unit numbers is -1
    total = ar.unit * al.unit * be.unit * ga.unit
    gauss_bonnet = total == -1

    loc = (
        be.sin * ga.sin * T.cosh_a == al.cos + be.cos * ga.cos,
        al.sin * ga.sin * T.cosh_b == be.cos + al.cos * ga.cos,
        al.sin * be.sin * T.cosh_c == ga.cos + al.cos * be.cos,
    )
    sides_positive = all(c > 1 for c in (T.cosh_a, T.cosh_b, T.cosh_c))

    sinh_sq = [c * c - 1 for c in (T.cosh_a, T.cosh_b, T.cosh_c)]
    pyth = True
    for s, ssq in zip((T.sinh_a, T.sinh_b, T.sinh_c), sinh_sq):
        if s is not None and (s * s != ssq or s <= 0):
            pyth = False

    if T.is_heron:
        law_of_sines = (
            T.sinh_a * be.sin == T.sinh_b * al.sin
            and T.sinh_b * ga.sin == T.sinh_c * be.sin
        )
    else:
        law_of_sines = (
            sinh_sq[0] * be.sin**2 == sinh_sq[1] * al.sin**2
            and sinh_sq[1] * ga.sin**2 == sinh_sq[2] * be.sin**2
        )

    d1sq = delta1_squared(al, be, ga)
    heron = T.is_heron and pyth and rat_sqrt(d1sq) is not None
    witnesses = {
        "delta1Squared": d1sq,
        "unitProduct": total,
        "sinAreaFromAngles": sin_area_from_angles(al, be, ga),
        "sinArea": ar.sin,
    }
    return IdentityReport(
        angles_positive=angles_positive,
        angle_sum_below_pi=sum_ok,
        gauss_bonnet=gauss_bonnet,
        law_of_cosines=loc,
        law_of_sines=law_of_sines,
        sides_positive=sides_positive,
        hyperbolic_pythagoras=pyth,
        heron=heron,
        witnesses=witnesses,
    )


def sin_area_from_sides(T: HyperbolicTriangle) -> Fraction:
    """``sin A`` of a triangle whose angles are all rational."""
    return sin_area_from_angles(T.alpha, T.beta, T.gamma)
