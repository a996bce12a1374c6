"""Exception hierarchy shared by the curve and parametrization modules."""


class HypheronError(Exception):
    pass


class SingularCurve(HypheronError):
    """The Weierstrass model has zero discriminant."""


class SingularFamily(HypheronError):
    """Family parameters give a singular (or undefined) curve."""


class MapUndefined(HypheronError):
    """A change of variables hits the zero set of one of its denominators."""


class NotOnQuartic(HypheronError):
    pass


class ExcludedLine(MapUndefined):
    """Point lies on the line where the angle-family inverse map is undefined."""


class DegenerateDenominator(HypheronError):
    pass


class DegenerateAngle(HypheronError):
    """An angle equals 0 or pi, so its half-tangent is 0 or undefined."""
