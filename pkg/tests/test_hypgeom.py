import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypheron.exactnum import rat_sqrt
from hypheron.hypgeom import (
    HyperbolicTriangle,
    RatAngle,
    RatLength,
    angles_sum_below_pi,
    delta1_squared,
    delta1_symmetric,
    delta2_squared,
    delta2_squared_cosh,
    gauss_bonnet_gamma,
    sin_area_from_angles,
    sin_area_from_sides,
    verify_triangle,
)

F = Fraction
pos = st.fractions(min_value=F(1, 50), max_value=50, max_denominator=60)


@pytest.fixture
def fixture_triangle():
    return HyperbolicTriangle.from_angles(F(1, 2), F(1, 4), 1)


def test_fixture_values(fixture_triangle):
    T = fixture_triangle
    assert T.gamma.t == F(1, 13)
    assert (T.cosh_a, T.cosh_b, T.cosh_c) == (F(75, 13), F(315, 26), F(21, 10))
    assert delta1_squared(T.alpha, T.beta, T.gamma) == F(5456, 7225)
    assert T.area.sin == F(4, 5)
    assert not T.is_heron
    rep = verify_triangle(T)
    assert rep.valid and not rep.heron


def test_rat_angle_and_length():
    a = RatAngle(F(1, 2))
    assert (a.cos, a.sin) == (F(3, 5), F(4, 5))
    assert RatAngle.from_cos_sin(F(3, 5), F(4, 5)) == a
    with pytest.raises(ValueError):
        RatAngle.from_cos_sin(F(1, 2), F(1, 2))
    q = RatLength(F(3))
    assert (q.cosh, q.sinh) == (F(5, 3), F(4, 3))
    assert RatLength.from_cosh_sinh(F(5, 3), F(4, 3)) == q


def test_delta2_fixture():
    assert delta2_squared(RatLength(4), RatLength(2), RatLength(3)) == F(575, 576)


@given(pos, pos, pos)
def test_delta2_forms_agree(a, b, c):
    la, lb, lc = RatLength(a), RatLength(b), RatLength(c)
    assert delta2_squared(la, lb, lc) == delta2_squared_cosh(la.cosh, lb.cosh, lc.cosh)


@given(pos, pos, pos)
def test_angle_sum_test_matches_floats(a, b, c):
    total = 2 * (math.atan(a) + math.atan(b) + math.atan(c))
    if abs(total - math.pi) > 1e-9:
        assert angles_sum_below_pi(a, b, c) == (total < math.pi)


def test_angle_sum_edge_cases():
    assert not angles_sum_below_pi(1, 1)  # two right angles
    assert angles_sum_below_pi(F(1, 2), F(1, 2))
    assert not angles_sum_below_pi(F(1, 2), 0)
    with pytest.raises(ValueError):
        angles_sum_below_pi(1, 1, 1, 1)


@given(pos, pos, pos)
def test_random_triangles_from_angles(m, ta, tb):
    if not angles_sum_below_pi(m, ta, tb):
        with pytest.raises(ValueError):
            HyperbolicTriangle.from_angles(m, ta, tb)
        return
    T = HyperbolicTriangle.from_angles(m, ta, tb)
    rep = verify_triangle(T)
    assert rep.valid
    d1 = delta1_squared(T.alpha, T.beta, T.gamma)
    assert d1 == delta1_symmetric(T.alpha, T.beta, T.gamma)
    assert d1 > 0
    assert sin_area_from_angles(T.alpha, T.beta, T.gamma) == T.area.sin
    assert gauss_bonnet_gamma(m, ta, tb) == T.gamma.t


def test_from_sides_heron_and_non_heron(fixture_triangle):
    # equal sides e^a = e^b = e^c = 2 give irrational angles
    assert HyperbolicTriangle.from_sides(2, 2, 2) is None
    with pytest.raises(ValueError):
        HyperbolicTriangle.from_sides(20, 2, 3)
    with pytest.raises(ValueError):
        HyperbolicTriangle.from_sides(F(1, 2), 2, 3)


def test_from_sides_rebuilds_a_heron_triangle(family_half_one):
    from hypheron.angleparam import enumerate_heron

    T = enumerate_heron(family_half_one, 3)[0].triangle
    assert T.is_heron
    S = HyperbolicTriangle.from_sides(*T.exp_sides)
    assert S.to_json() == T.to_json()
    assert sin_area_from_sides(S) == T.area.sin
    assert rat_sqrt(delta2_squared(*(RatLength(q) for q in T.exp_sides))) is not None


def test_json_roundtrip(fixture_triangle, family_half_one):
    from hypheron.angleparam import enumerate_heron

    for T in (fixture_triangle, enumerate_heron(family_half_one, 3)[0].triangle):
        data = T.to_json()
        assert all(isinstance(v, (str, bool)) for v in data.values())
        assert HyperbolicTriangle.from_json(data) == T


def test_verify_detects_tampering(fixture_triangle):
    from dataclasses import replace

    bad = replace(fixture_triangle, cosh_a=fixture_triangle.cosh_a + F(1, 10**9))
    rep = verify_triangle(bad)
    assert not rep.valid
    assert rep.law_of_cosines[0] is False
