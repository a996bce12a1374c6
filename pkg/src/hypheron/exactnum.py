"""Exact rationals and Gaussian rationals.

Rationals are plain :class:`fractions.Fraction` values (always in lowest
terms with the sign on the numerator).  :class:`GaussRat` adds the field
``Q(i)`` on top of them.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC
from typing import Optional, Union

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``.  Decimal and exponent forms are refused."""
    match = _RAT_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rat(q: Fraction) -> str:
    return str(Fraction(q))


def rat_sqrt(q) -> Optional[Fraction]:
    """Return the non-negative rational square root of ``q``, or None.

    Lowest terms means ``q`` is a square exactly when numerator and
    denominator both are, so no factorization is needed.
    """
    q = Fraction(q)
    if q < 0:
        return None
    a = isqrt(q.numerator)
    if a * a != q.numerator:
        return None
    b = isqrt(q.denominator)
    if b * b != q.denominator:
        return None
    return Fraction(a, b)


def is_square(q) -> bool:
    return rat_sqrt(q) is not None


def rat_height(q) -> int:
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)


Scalar = Union[int, Fraction]


class GaussRat:
    """An element ``re + im*i`` of Q(i) with rational parts.

    Instances are immutable.  A GaussRat with zero imaginary part compares
    and hashes equal to the corresponding Fraction, so field-generic code
    can mix the two freely.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def coerce(cls, value) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, (int, _RationalABC)):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussRat")

    @property
    def is_real(self) -> bool:
        return self._im == 0

    def conj(self) -> "GaussRat":
        return GaussRat(self._re, -self._im)

    def norm(self) -> Fraction:
        """``z * conj(z)``, a non-negative rational."""
        return self._re * self._re + self._im * self._im

    def __add__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self._re, -self._im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussRat division by zero")
        return GaussRat(self._re / n, -self._im / n)

    def __truediv__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = GaussRat(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, _RationalABC)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __repr__(self):
        return f"GaussRat({self._re!r}, {self._im!r})"

    def __str__(self):
        return format_gauss(self)


def gauss_mul(a, b) -> GaussRat:
    return GaussRat.coerce(a) * GaussRat.coerce(b)


def unit_from_half_tangent(t) -> GaussRat:
    """``e^{ix}`` for the angle with ``tan(x/2) = t``."""
    t = Fraction(t)
    d = 1 + t * t
    return GaussRat((1 - t * t) / d, 2 * t / d)


def half_tangent_from_unit(z: GaussRat) -> Fraction:
    """Inverse of :func:`unit_from_half_tangent`: ``sin x / (1 + cos x)``.

    Raises ZeroDivisionError for ``z = -1``.
    """
    z = GaussRat.coerce(z)
    if z.re == -1 and z.im == 0:
        raise ZeroDivisionError("half-tangent of pi is undefined")
    return z.im / (1 + z.re)


_GAUSS_RE = re.compile(
    r"^\s*(?:(?P<re>[+-]?\d+(?:/\d+)?)(?P<im>[+-]\d*(?:/\d+)?)i"
    r"|(?P<pure>[+-]?\d*(?:/\d+)?)i"
    r"|(?P<real>[+-]?\d+(?:/\d+)?))\s*$"
)


_I_OVER_RE = re.compile(r"(\d*)i/(\d+)")


def _parse_coeff(text: str) -> Fraction:
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    if text.startswith("+"):
        text = text[1:]
    return parse_rat(text)


def parse_gauss(text: str) -> GaussRat:
    """Parse ``"a/b+c/di"``, ``"c/di"``, ``"i"`` or a plain rational.

    ``"ci/d"`` is accepted as a spelling of ``"c/di"``.
    """
    text = _I_OVER_RE.sub(lambda mt: f"{mt.group(1) or '1'}/{mt.group(2)}i", text)
    match = _GAUSS_RE.match(text)
    if match is None:
        raise ValueError(f"not a Gaussian rational: {text!r}")
    if match.group("real") is not None:
        return GaussRat(parse_rat(match.group("real")))
    if match.group("pure") is not None:
        return GaussRat(0, _parse_coeff(match.group("pure")))
    return GaussRat(parse_rat(match.group("re")), _parse_coeff(match.group("im")))


def format_gauss(z) -> str:
    z = GaussRat.coerce(z)
    if z.im == 0:
        return str(z.re)
    if z.re == 0:
        return f"{z.im}i"
    sign = "+" if z.im > 0 else "-"
    return f"{z.re}{sign}{abs(z.im)}i"


def format_scalar(value) -> str:
    """Text form of a field element: Rat form, or Gaussian form if imaginary."""
    if isinstance(value, GaussRat):
        return format_gauss(value)
    return format_rat(value)


def parse_scalar(text: str):
    """Parse a field element; returns a Fraction unless an ``i`` is present."""
    if "i" in text:
        return parse_gauss(text)
    return parse_rat(text)
