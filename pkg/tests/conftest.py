import random
from fractions import Fraction

import pytest

from hypheron import angleparam, cevians, sideparam
from hypheron.errors import SingularFamily

ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rand_frac(rng, lo_num=1, hi_num=12, hi_den=12):
    return Fraction(rng.randint(lo_num, hi_num), rng.randint(1, hi_den))


def draw_angle(rng):
    while True:
        m, u = rand_frac(rng), rand_frac(rng)
        if m * u < 1:
            try:
                return angleparam.build_family(m, u)
            except SingularFamily:
                pass


def draw_side(rng):
    while True:
        v, w = rand_frac(rng, 2, 30, 9), rand_frac(rng, 2, 30, 9)
        if v > 1 and w > 1 and v != w:
            try:
                return sideparam.build_family(v, w)
            except SingularFamily:
                pass


def draw_median(rng):
    while True:
        u, w = rand_frac(rng, 2, 20, 5), rand_frac(rng, 2, 20, 5)
        if u > 1 and w > 1:
            try:
                return cevians.median_family(u, w)
            except SingularFamily:
                pass


def draw_bisector(rng):
    while True:
        d = rng.randint(2, 12)
        n, u = Fraction(rng.randint(1, d - 1), d), rand_frac(rng)
        try:
            return cevians.bisector_family(n, u)
        except SingularFamily:
            pass


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture(scope="session")
def family_half_one():
    return angleparam.build_family(Fraction(1, 2), 1)
