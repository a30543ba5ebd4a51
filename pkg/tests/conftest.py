import random
from fractions import Fraction

import pytest
from hypothesis import settings

from cubeshell.geometry import PointSet

settings.register_profile("suite", deadline=None, max_examples=30)
settings.load_profile("suite")


def F(v) -> Fraction:
    return Fraction(v)


def pts(*rows) -> PointSet:
    rows = tuple(tuple(Fraction(c) for c in row) for row in rows)
    return PointSet(rows, len(rows[0]))


CUBE8 = pts(*[(sx, sy, sz) for sx in (-1, 1) for sy in (-1, 1)
              for sz in (-1, 1)])


def rand_fraction(rng: random.Random, span: int = 100,
                  dens=(1, 2, 4, 8)) -> Fraction:
    den = rng.choice(dens)
    return Fraction(rng.randint(-span * den, span * den), den)


def rand_points(rng: random.Random, n: int, dim: int = 3,
                span: int = 100) -> PointSet:
    return pts(*[[rand_fraction(rng, span) for _ in range(dim)]
                 for _ in range(n)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260814)
