import random
import pytest
from divpoly.algebra import make_algebra, quaternion_algebra
from divpoly.freepoly import FreePoly
from divpoly.nullstellensatz import make_ideal
from helpers import quaternion_constants


@pytest.fixture()
def H():
    return quaternion_algebra()


@pytest.fixture()
def other_quaternions():
    # (-1, -3 | Q): positive definite norm form, so a division algebra
    return make_algebra(4, quaternion_constants(-1, -3))


@pytest.fixture()
def rng():
    return random.Random(20240611)


@pytest.fixture()
def x1(H):
    return FreePoly.variable(H, 1, 0)


@pytest.fixture()
def unit_i(H):
    return FreePoly.basis(H, 1, 1)


@pytest.fixture()
def ideal_at_i(H, x1, unit_i):
    return make_ideal([x1 - unit_i])
