"""Elliptic curves ``y^2 = x^3 + a2 x^2 + a4 x + a6`` over Q and Q(i).

The group law is written once and works for any exact field whose
elements support ``+ - * /`` and ``==``: Fractions for Q, GaussRat for
Q(i).  Points are immutable; the point at infinity is the module constant
:data:`INF`.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Optional

import numpy as np

from .errors import SingularCurve
from .exactnum import GaussRat, format_scalar, parse_scalar, rat_height, rat_sqrt

# Uniform bounds on the order of a torsion point: Mazur over Q,
# Kamienny-Kenku-Momose over quadratic fields.
TORSION_BOUND_Q = 12
TORSION_BOUND_QUADRATIC = 18


@dataclass(frozen=True)
class Point:
    x: object
    y: object

    def __str__(self):
        return f"({format_scalar(self.x)}, {format_scalar(self.y)})"

    @property
    def is_infinity(self) -> bool:
        return False

    @property
    def is_rational(self) -> bool:
        return _is_rational(self.x) and _is_rational(self.y)


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    is_infinity = True
    is_rational = True

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _is_rational(value) -> bool:
    return not isinstance(value, GaussRat) or value.is_real


def _to_rational(value) -> Fraction:
    if isinstance(value, GaussRat):
        if not value.is_real:
            raise ValueError(f"{value} is not rational")
        return value.re
    return Fraction(value)


def _normalize(value):
    """Demote real GaussRat values to Fractions so points compare cleanly."""
    if isinstance(value, GaussRat):
        return value.re if value.is_real else value
    return Fraction(value)


class Curve:
    """Long Weierstrass model without ``a1, a3`` terms."""

    __slots__ = ("a2", "a4", "a6")

    def __init__(self, a2, a4, a6):
        object.__setattr__(self, "a2", _normalize(a2))
        object.__setattr__(self, "a4", _normalize(a4))
        object.__setattr__(self, "a6", _normalize(a6))
        if discriminant(self) == 0:
            raise SingularCurve(f"singular curve {self}")

    def __setattr__(self, name, value):
        raise AttributeError("Curve is immutable")

    @classmethod
    def from_roots(cls, e1, e2, e3) -> "Curve":
        """``y^2 = (x - e1)(x - e2)(x - e3)``."""
        return cls(
            -(e1 + e2 + e3),
            e1 * e2 + e1 * e3 + e2 * e3,
            -(e1 * e2 * e3),
        )

    @property
    def coefficients(self) -> tuple:
        return (self.a2, self.a4, self.a6)

    @property
    def over_q(self) -> bool:
        return all(_is_rational(c) for c in self.coefficients)

    def rhs(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def point(self, x, y) -> Point:
        """Build a point and check it lies on the curve."""
        p = Point(_normalize(x), _normalize(y))
        if not on_curve(self, p):
            raise ValueError(f"{p} is not on {self}")
        return p

    def __eq__(self, other):
        return isinstance(other, Curve) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "Curve({}, {}, {})".format(*map(format_scalar, self.coefficients))

    def __str__(self):
        a2, a4, a6 = map(format_scalar, self.coefficients)
        return f"y^2 = x^3 + ({a2})x^2 + ({a4})x + ({a6})"


def make_point(x, y) -> Point:
    return Point(_normalize(x), _normalize(y))


def discriminant(E: Curve):
    """16 times the discriminant of the cubic on the right-hand side.

    For ``(x - e1)(x - e2)(x - e3)`` this is ``16 * prod (ei - ej)^2``.
    """
    a2, a4, a6 = E.a2, E.a4, E.a6
    disc = (
        a2 * a2 * a4 * a4
        - 4 * a4 * a4 * a4
        - 4 * a2 * a2 * a2 * a6
        - 27 * a6 * a6
        + 18 * a2 * a4 * a6
    )
    return _normalize(16 * disc)


def on_curve(E: Curve, P) -> bool:
    if P is INF:
        return True
    return P.y * P.y == E.rhs(P.x)


def neg(E: Curve, P):
    if P is INF:
        return INF
    return Point(P.x, _normalize(-P.y))


def add(E: Curve, P, Q):
    """Chord-tangent addition."""
    if P is INF:
        return Q
    if Q is INF:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return INF
        lam = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - E.a2 - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return Point(_normalize(x3), _normalize(y3))


def double(E: Curve, P):
    return add(E, P, P)


def scalar_mul(E: Curve, k: int, P):
    """``k * P`` by double-and-add; negative ``k`` negates first."""
    if k < 0:
        return scalar_mul(E, -k, neg(E, P))
    result = INF
    addend = P
    while k:
        if k & 1:
            result = add(E, result, addend)
        k >>= 1
        if k:
            addend = add(E, addend, addend)
    return result


def multiples(E: Curve, P, count: int) -> list:
    """``[1*P, 2*P, ..., count*P]`` by repeated addition."""
    out = []
    acc = INF
    for _ in range(count):
        acc = add(E, acc, P)
        out.append(acc)
    return out


def torsion_order(E: Curve, P, bound: Optional[int] = None) -> Optional[int]:
    """Order of ``P`` if it is at most ``bound``; None means infinite order.

    With the default bound (12 over Q, 18 when a coordinate or coefficient
    is non-real) a None result certifies infinite order.
    """
    if P is INF:
        return 1
    if bound is None:
        field_is_q = E.over_q and P.is_rational
        bound = TORSION_BOUND_Q if field_is_q else TORSION_BOUND_QUADRATIC
    acc = P
    for k in range(1, bound + 1):
        if acc is INF:
            return k
        acc = add(E, acc, P)
    return None


def generated_subgroup(E: Curve, generators: Iterable, limit: int = 64) -> set:
    """Closure of ``generators`` under addition, or ValueError past ``limit``."""
    gens = list(generators)
    group = {INF}
    frontier = [INF]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = add(E, p, g)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
                    if len(group) > limit:
                        raise ValueError("subgroup exceeds limit; generator of infinite order?")
        frontier = nxt
    return group


def _small_factor(n: int) -> Optional[dict]:
    """Trial-division factorization for modest ``n``; None if too large."""
    factors: dict = {}
    d = 2
    while d * d <= n:
        if d > 10**6:
            return None
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def integral_scale(E: Curve) -> int:
    """Least ``s > 0`` with ``s^2 a2, s^4 a4, s^6 a6`` all integers."""
    if not E.over_q:
        raise ValueError("integral models are only defined over Q")
    need: dict = {}
    fallback = 1
    for c, weight in ((E.a2, 2), (E.a4, 4), (E.a6, 6)):
        den = _to_rational(c).denominator
        fac = _small_factor(den)
        if fac is None:
            fallback = fallback * den // gcd(fallback, den)
            continue
        for p, e in fac.items():
            need[p] = max(need.get(p, 0), -(-e // weight))
    s = 1
    for p, e in need.items():
        s *= p**e
    return s * fallback // gcd(s, fallback)


def integral_model(E: Curve) -> tuple:
    """Return ``(s, A2, A4, A6)``: integer model reached by ``x -> s^2 x``."""
    s = integral_scale(E)
    a2, a4, a6 = (_to_rational(c) for c in E.coefficients)
    A2, A4, A6 = a2 * s**2, a4 * s**4, a6 * s**6
    return s, int(A2), int(A4), int(A6)


def _integer_cubic_roots(A: int, B: int, C: int) -> list:
    """Integer roots of the monic ``X^3 + A X^2 + B X + C`` (exact)."""

    def f(X):
        return ((X + A) * X + B) * X + C

    if C == 0:
        roots = {0}
        disc = A * A - 4 * B
        if disc >= 0:
            r = isqrt(disc)
            if r * r == disc:
                for num in (-A + r, -A - r):
                    if num % 2 == 0:
                        roots.add(num // 2)
        return sorted(roots)

    R = 1 + max(abs(A), abs(B), abs(C))
    D = 4 * A * A - 12 * B
    if D <= 0:
        cuts = []
    else:
        s = isqrt(D)
        cuts = sorted({(-2 * A - s) // 6, (-2 * A + s) // 6})

    roots = set()
    # f is monotone on each open segment between the (rounded) critical points.
    bounds = [-R] + [c for cut in cuts for c in (cut - 3, cut + 3)] + [R]
    for lo, hi in zip(bounds[::2], bounds[1::2]):
        if lo > hi:
            continue
        flo, fhi = f(lo), f(hi)
        if flo == 0:
            roots.add(lo)
        if fhi == 0:
            roots.add(hi)
        if (flo < 0) == (fhi < 0) or flo == 0 or fhi == 0:
            continue
        increasing = flo < 0
        a, b = lo, hi
        while b - a > 1:
            mid = (a + b) // 2
            fm = f(mid)
            if fm == 0:
                roots.add(mid)
                break
            if (fm < 0) == increasing:
                a = mid
            else:
                b = mid
    for cut in cuts:
        for X in range(cut - 3, cut + 4):
            if f(X) == 0:
                roots.add(X)
    return sorted(roots)


def two_torsion(E: Curve) -> list:
    """Rational points of order two, i.e. ``(r, 0)`` for rational roots ``r``."""
    s, A2, A4, A6 = integral_model(E)
    return [Point(Fraction(r, s * s), Fraction(0)) for r in _integer_cubic_roots(A2, A4, A6)]


def halve_two_torsion(E: Curve, T: Point) -> list:
    """Rational points ``Q`` with ``2Q = T`` for a rational 2-torsion point ``T``.

    Moving ``T`` to the origin gives ``y^2 = X (X^2 + a X + b)``; the halves
    of the origin sit at ``X = +-d`` with ``b = d^2``, and exist exactly
    when ``a + 2d`` (resp. ``a - 2d``) is a square as well.
    """
    e = _to_rational(T.x)
    a2, a4 = _to_rational(E.a2), _to_rational(E.a4)
    a = 3 * e + a2
    b = 3 * e * e + 2 * a2 * e + a4
    d = rat_sqrt(b)
    if d is None or d == 0:
        return []
    halves = []
    for X in (d, -d):
        r = rat_sqrt(a + 2 * X)
        if r is None:
            continue
        y = abs(X) * r
        for yy in {y, -y}:
            Q = Point(X + e, yy)
            if on_curve(E, Q) and double(E, Q) == T:
                halves.append(Q)
    return sort_points(halves)


def two_primary_torsion(E: Curve) -> set:
    """Subgroup generated by the rational 2-torsion and its rational halves."""
    twos = two_torsion(E)
    gens = list(twos)
    for T in twos:
        gens.extend(halve_two_torsion(E, T))
    return generated_subgroup(E, gens)


def torsion_structure_label(group: set, E: Curve) -> str:
    """Name a finite abelian 2-group given as a set of points."""
    n = len(group)
    n2 = sum(1 for P in group if P is not INF and double(E, P) is INF) + 1
    if n2 == n:
        return {1: "trivial", 2: "Z/2Z", 4: "Z/2Z x Z/2Z"}[n]
    if n2 == 2:
        return f"Z/{n}Z"
    return f"Z/{n // 2}Z x Z/2Z"


def point_height(P) -> int:
    if P is INF:
        return 0
    return rat_height(_to_rational(P.x))


def sort_points(points: Iterable) -> list:
    """Deterministic order: infinity first, then by x-height, x and y."""

    def key(P):
        if P is INF:
            return (0,)
        return (1, point_height(P), _to_rational(P.x), _to_rational(P.y))

    return sorted(points, key=key)


# Quadratic-residue sieve moduli; product of pass rates is well under 1%.
_SIEVE_MODULI = (64, 63, 65, 11, 17, 19)
_SQUARES_MOD = {m: np.isin(np.arange(m), [(r * r) % m for r in range(m)]) for m in _SIEVE_MODULI}


def _scan_denominators(args) -> list:
    A2, A4, A6, H, qs = args
    ps = np.arange(-H, H + 1, dtype=np.int64)
    found = []
    for q in qs:
        q2 = q * q
        B2, B4, B6 = A2 * q2, A4 * q2 * q2, A6 * q2 * q2 * q2
        keep = np.ones(ps.shape, dtype=bool)
        for m in _SIEVE_MODULI:
            pm = ps % m
            val = (pm * pm % m * pm + (B2 % m) * (pm * pm % m) + (B4 % m) * pm + B6 % m) % m
            keep &= _SQUARES_MOD[m][val]
        if q > 1:
            keep &= np.gcd(ps, q) == 1
        for p in ps[keep].tolist():
            value = ((p + B2) * p + B4) * p + B6
            if value < 0:
                continue
            r = isqrt(value)
            if r * r == value:
                found.append((p, q, r))
    return found


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("HYPHERON_THREADS", "1")))
    except ValueError:
        return 1


def naive_search(E: Curve, height_bound: int, workers: Optional[int] = None) -> list:
    """All affine rational points of bounded height.

    The curve is first moved to its integral model.  There every rational
    point has ``x = p/q^2``, ``y = r/q^3`` with ``gcd(p, q) = 1``; the scan
    covers ``|p| <= height_bound`` and ``q^2 <= height_bound``.  Points are
    returned in the original coordinates, sorted by :func:`sort_points`.
    """
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    s, A2, A4, A6 = integral_model(E)
    qmax = isqrt(height_bound)
    qs = list(range(1, qmax + 1))
    workers = workers or _thread_count()
    if workers > 1 and len(qs) > 1:
        chunks = [qs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan_denominators, [(A2, A4, A6, height_bound, c) for c in chunks])
            triples = [t for part in parts for t in part]
    else:
        triples = _scan_denominators((A2, A4, A6, height_bound, qs))

    points = set()
    s2, s3 = s * s, s * s * s
    for p, q, r in triples:
        x = Fraction(p, q * q * s2)
        for yy in {r, -r}:
            P = Point(x, Fraction(yy, q**3 * s3))
            assert on_curve(E, P)
            points.add(P)
    return sort_points(points)


def format_point(P) -> str:
    return str(P)


def parse_point(text: str):
    text = text.strip()
    if text == "inf":
        return INF
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"not a point: {text!r}")
    xs, ys = text[1:-1].split(",")
    return make_point(parse_scalar(xs.strip()), parse_scalar(ys.strip()))


def curve_to_json(E: Curve) -> list:
    return [format_scalar(c) for c in E.coefficients]


def curve_from_json(data) -> Curve:
    return Curve(*(parse_scalar(c) for c in data))
