import random
from fractions import Fraction

import pytest

from bt_invariants.config import DEFAULT_SEED
from bt_invariants.scalars import MultiPoly, RatFunc


def _random_poly(rng: random.Random, terms: int = 3) -> MultiPoly:
    monomials = {}
    for _ in range(terms):
        monom = tuple(rng.randint(0, 2) for _ in range(3))
        monomials[monom] = rng.choice([-3, -2, -1, 1, 2, 3])
    return MultiPoly.from_terms(monomials)


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)


@pytest.fixture
def random_ratfunc(rng):
    """Factory of nonzero random rational functions in (u, A, B)."""
    def make() -> RatFunc:
        while True:
            numerator = _random_poly(rng)
            denominator = _random_poly(rng, terms=2) + 1
            if not numerator.is_zero() and not denominator.is_zero():
                return RatFunc.constant(1) * numerator / denominator
    return make


@pytest.fixture
def random_point(rng):
    """Factory of random rational points keyed by variable name."""
    def make(names=('u', 'A', 'B')):
        return {name: Fraction(rng.randint(-7, 7), rng.randint(1, 4)) for name in names}
    return make
