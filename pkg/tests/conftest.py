import random
from fractions import Fraction

import pytest

from fpplane.numberfield import KElt, LElt


def random_L(rng: random.Random, span: int = 9, den: int = 4) -> LElt:
    return LElt(
        tuple(
            Fraction(rng.randint(-span, span), rng.randint(1, den))
            for _ in range(6)
        )
    )


def random_L_nonzero(rng: random.Random, **kw) -> LElt:
    while True:
        x = random_L(rng, **kw)
        if x:
            return x


def random_K(rng: random.Random, span: int = 9, den: int = 4) -> KElt:
    return KElt(
        Fraction(rng.randint(-span, span), rng.randint(1, den)),
        Fraction(rng.randint(-span, span), rng.randint(1, den)),
    )


def random_K_integral(rng: random.Random, span: int = 9) -> KElt:
    return KElt(rng.randint(-span, span), rng.randint(-span, span))


@pytest.fixture
def rng():
    return random.Random(20260811)
