import random

import pytest

from ringunits import IntPoly


def P(*coeffs) -> IntPoly:
    """IntPoly from ascending coefficients: P(1, -1, 1) is 1 - x + x^2."""
    return IntPoly(tuple(coeffs))


def random_poly(rng: random.Random, max_degree: int, coeff_bound: int, nonzero=False):
    while True:
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(max_degree + 1)]
        f = IntPoly(tuple(coeffs))
        if not (nonzero and f.is_zero):
            return f


@pytest.fixture
def rng():
    return random.Random(0xC1C10)
