import random
from fractions import Fraction

import pytest

from octopoly import OctonionAlgebra


@pytest.fixture(scope="session")
def alg():
    """The standard exact algebra alpha = beta = gamma = -1."""
    return OctonionAlgebra(-1, -1, -1)


@pytest.fixture(scope="session")
def alg_float():
    return OctonionAlgebra(-1, -1, -1, mode="float")


@pytest.fixture(scope="session")
def alg_generic():
    """A division algebra with three distinct parameters."""
    return OctonionAlgebra(-2, -3, -5)


@pytest.fixture()
def rng():
    return random.Random(20240817)


def rand_octonion(rng, algebra, lo=-9, hi=9, max_den=1):
    if algebra.mode == "float":
        return algebra.octonion([rng.uniform(lo, hi) for _ in range(8)])
    return algebra.octonion(
        [Fraction(rng.randint(lo, hi), rng.randint(1, max_den)) for _ in range(8)]
    )


def rand_invertible(rng, algebra, lo=-9, hi=9, max_den=1):
    while True:
        x = rand_octonion(rng, algebra, lo, hi, max_den)
        if algebra.mode == "float":
            if abs(x.norm()) > 1e-3:
                return x
        elif x.norm() != 0:
            return x
