from fractions import Fraction

import pytest

from hypheron import ecq
from hypheron import equilateral as eq
from hypheron.ecq import INF, Point

F = Fraction


def test_curves():
    assert eq.build_case(eq.HERON).E.coefficients == (1, 1, 0)
    assert eq.build_case(eq.MEDIAN_SIDE).E == eq.build_case(eq.MEDIAN_ANGLE).E
    with pytest.raises(ValueError):
        eq.build_case("isosceles")


@pytest.mark.parametrize("which", eq.CASES)
def test_torsion(which):
    case = eq.build_case(which)
    rep = eq.verify_torsion(case)
    assert rep.ok
    assert rep.group == set(eq.expected_torsion(case))


def test_median_torsion_structure():
    case = eq.build_case(eq.MEDIAN_SIDE)
    E = case.E
    assert ecq.double(E, Point(F(-3), F(6))) == Point(F(0), F(0))
    assert len(eq.MEDIAN_TORSION) == 8
    for P in eq.MEDIAN_TORSION:
        assert ecq.on_curve(E, P)
        assert ecq.torsion_order(E, P) in (1, 2, 4)


@pytest.mark.parametrize("which", eq.CASES)
def test_every_torsion_point_rejected(which):
    case = eq.build_case(which)
    for P in eq.expected_torsion(case):
        assert eq.interpret_and_reject(case, P)


def test_scan_small_height():
    for which in eq.CASES:
        case = eq.build_case(which)
        rep = eq.nonexistence_scan(case, 500)
        assert rep.torsion_only
        assert set(rep.points) == set(eq.expected_torsion(case)) - {INF}
        assert "no non-torsion point" in rep.lines()[-1]


def test_interpretation_of_torsion_points():
    case = eq.build_case(eq.MEDIAN_SIDE)
    assert case.interpret(Point(F(3), F(12))) == {"s": F(0), "p": F(1)}
    assert case.interpret(INF) == {}
    heron = eq.build_case(eq.HERON)
    assert heron.interpret(Point(F(0), F(0))) == {"u": F(-1), "v": F(0)}


def test_delta1_equilateral():
    # cos(alpha) = 3/5 gives (1/5)(8/5)^2
    assert eq.delta1_equilateral(F(3, 5)) == F(64, 125)
