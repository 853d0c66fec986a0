import random
from fractions import Fraction
from typing import List
from divpoly.algebra import AlgebraSpec, Element
from divpoly.centralpoly import CentralPoly
from divpoly.freepoly import FreePoly, Point, Word


def quaternion_constants(a: int, b: int) -> List[List[List[int]]]:
    """Structure constants of the quaternion algebra (a, b | Q): i^2 = a, j^2 = b, k = ij."""
    table = {
        (1, 1): (a, 0), (2, 2): (b, 0), (3, 3): (-a * b, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (1, 3): (a, 2), (3, 1): (-a, 2),
        (2, 3): (-b, 1), (3, 2): (b, 1),
    }
    constants = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for t in range(4):
        constants[0][t][t] = 1
        constants[t][0][t] = 1
    for (s, t), (c, u) in table.items():
        constants[s][t][u] = c
    return constants


def matrix_algebra_constants() -> List[List[List[Fraction]]]:
    """2x2 rational matrices in the basis I, e11 - e22, e12, e21."""
    basis = [((1, 0), (0, 1)), ((1, 0), (0, -1)), ((0, 1), (0, 0)), ((0, 0), (1, 0))]

    def product(x, y):
        return tuple(
            tuple(sum(x[r][k] * y[k][c] for k in range(2)) for c in range(2)) for r in range(2)
        )

    def coordinates(z):
        (p, q), (r, s) = z
        return [Fraction(p + s, 2), Fraction(p - s, 2), Fraction(q), Fraction(r)]

    return [[coordinates(product(x, y)) for y in basis] for x in basis]


def gaussian_rationals_constants() -> List[List[List[int]]]:
    """The field Q(t) with t^2 = -1: a division algebra that is not central simple."""
    return [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]


def random_rational(rng: random.Random, bound: int = 10) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_element(rng: random.Random, spec: AlgebraSpec, bound: int = 10) -> Element:
    return spec.element([random_rational(rng, bound) for _ in range(spec.m)])


def random_point(rng: random.Random, spec: AlgebraSpec, n: int, bound: int = 10) -> Point:
    return Point([random_element(rng, spec, bound) for _ in range(n)], spec)


def random_word(rng: random.Random, spec: AlgebraSpec, n: int, degree: int) -> Word:
    return Word(
        tuple(rng.randrange(spec.m) for _ in range(degree + 1)),
        tuple(rng.randrange(n) for _ in range(degree)),
    )


def random_freepoly(
        rng: random.Random,
        spec: AlgebraSpec,
        n: int,
        max_degree: int = 2,
        max_terms: int = 4,
        bound: int = 10
    ) -> FreePoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(0, max_degree) if n else 0
        terms[random_word(rng, spec, n, degree)] = random_rational(rng, bound)
    return FreePoly(spec, n, terms)


def random_centralpoly(
        rng: random.Random,
        spec: AlgebraSpec,
        n: int,
        max_degree: int = 3,
        max_terms: int = 4,
        bound: int = 10
    ) -> CentralPoly:
    size = n * spec.m
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exponents = [0] * size
        for _ in range(rng.randint(0, max_degree)):
            exponents[rng.randrange(size)] += 1
        terms[tuple(exponents)] = random_element(rng, spec, bound)
    return CentralPoly(spec, n, terms)
