import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpplane import numberfield as nf
from fpplane.numberfield import (
    INFINITE_EPSILON,
    INFINITE_THETA,
    INFINITY,
    LAM,
    LAMBAR,
    LAMBDA,
    LAMBDABAR,
    MU,
    ONE_L,
    SEVEN,
    SQRT_M7,
    ZETA,
    KElt,
    LElt,
    Place,
)

from conftest import random_K, random_L, random_L_nonzero

small_rationals = st.builds(
    Fraction, st.integers(-8, 8), st.integers(1, 4)
)
l_elements = st.builds(LElt, st.tuples(*[small_rationals] * 6))


def test_zeta_relations():
    assert ZETA**7 == ONE_L
    assert sum((ZETA**i for i in range(7)), -ONE_L + ONE_L) == nf.ZERO_L
    assert ZETA * LElt.zeta(6) == ONE_L


def test_lambda_arithmetic():
    # lam * lambar = 2 is the prime factorization of 2 in K
    assert LAM * LAMBAR == KElt(2)
    assert LAM + LAMBAR == KElt(-1)
    assert LAM * LAM + LAM + 2 == KElt(0)
    # the K <-> L injection respects all of it
    assert LAM.to_L() == ZETA + ZETA**2 + ZETA**4
    assert LAM.to_L() * LAMBAR.to_L() == 2 * ONE_L
    assert MU == LAM / LAMBAR
    assert MU * MU.conj() == KElt(1)
    assert SQRT_M7 * SQRT_M7 == KElt(-7)


@settings(max_examples=60, deadline=None)
@given(l_elements, l_elements, l_elements)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x


def test_galois_action():
    assert ZETA.galois(1) == ZETA**2
    assert LAM.to_L().galois(1) == LAM.to_L()
    assert ZETA.galois(0) == ZETA
    # sigma generates Gal(L/K), which has order 3
    assert ZETA.galois(3) == ZETA
    # conjugation is not a power of sigma; it generates the rest
    assert ZETA.conj() == LElt.zeta(6)
    assert LAM.to_L().conj() == LAMBAR.to_L()


@settings(max_examples=40, deadline=None)
@given(l_elements, l_elements)
def test_galois_is_ring_automorphism(x, y):
    for k in range(6):
        assert (x * y).galois(k) == x.galois(k) * y.galois(k)
        assert (x + y).galois(k) == x.galois(k) + y.galois(k)
    assert (x * y).conj() == x.conj() * y.conj()


def test_fixed_field_of_sigma_is_K(rng):
    for _ in range(50):
        k = random_K(rng)
        assert k.to_L().galois(1) == k.to_L()
        assert k.to_L().is_in_K()
        assert k.to_L().to_K() == k
    assert not ZETA.is_in_K()
    with pytest.raises(ValueError):
        ZETA.to_K()


def test_inverse(rng):
    for _ in range(25):
        x = random_L_nonzero(rng)
        assert x * x.inv() == ONE_L
    k = KElt(Fraction(3, 2), Fraction(-5, 7))
    assert k * k.inv() == KElt(1)
    assert LAM.inv() == LAMBAR / 2


def test_embeddings():
    t = ZETA.embed(INFINITE_THETA)
    expected = complex(math.cos(2 * math.pi / 7), math.sin(2 * math.pi / 7))
    assert abs(t - expected) < 1e-12
    assert abs(abs(t) - 1.0) < 1e-12
    e = LAM.to_L().embed(INFINITE_EPSILON)
    assert abs(e - complex(-0.5, math.sqrt(7) / 2)) < 1e-12
    assert abs(LAM.embed() - e) < 1e-12
    with pytest.raises(ValueError):
        ZETA.embed(INFINITE_EPSILON)


def test_embedding_is_multiplicative(rng):
    for _ in range(30):
        x, y = random_L(rng), random_L(rng)
        lhs = (x * y).embed()
        rhs = x.embed() * y.embed()
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs(rhs))


def test_valuations_over_2():
    assert nf.valuation(KElt(2), LAMBDA) == 1
    assert nf.valuation(KElt(2), LAMBDABAR) == 1
    assert nf.valuation(LAM, LAMBDA) == 1
    assert nf.valuation(LAM, LAMBDABAR) == 0
    assert nf.valuation(MU, LAMBDA) == 1
    assert nf.valuation(MU, LAMBDABAR) == -1
    assert nf.valuation(KElt(0), LAMBDA) == INFINITY


def test_valuation_at_seven_and_odd_places():
    assert nf.valuation(SQRT_M7, SEVEN) == 1
    assert nf.valuation(KElt(7), SEVEN) == 2
    assert nf.valuation(LAM, SEVEN) == 0
    p3 = Place.rational(3)
    assert nf.valuation(KElt(3), p3) == 1
    assert nf.valuation(MU, p3) == 0
    # 11 splits: rational inputs and conjugation-stable values still work
    p11 = Place.rational(11)
    assert nf.valuation(KElt(11), p11) == 1
    assert nf.valuation(MU, p11) == 0
    # 3 + 2*lam generates one of the primes over 11
    with pytest.raises(ValueError):
        nf.valuation(KElt(3, 2), p11)


def test_valuation_additive(rng):
    for place in (LAMBDA, LAMBDABAR, SEVEN):
        for _ in range(25):
            x, y = random_K(rng), random_K(rng)
            if not x or not y:
                continue
            assert nf.valuation(x * y, place) == nf.valuation(
                x, place
            ) + nf.valuation(y, place)
            s = x + y
            if s:
                assert nf.valuation(s, place) >= min(
                    nf.valuation(x, place), nf.valuation(y, place)
                )


def test_valuation_L():
    assert nf.valuation_L(LAM.to_L(), LAMBDA) == 1
    assert nf.valuation_L(LAM.to_L(), LAMBDABAR) == 0
    assert nf.valuation_L(ONE_L + ZETA, LAMBDA) == 0
    assert nf.valuation_L(2 * ONE_L, LAMBDABAR) == 1
    assert nf.valuation_L(nf.ZERO_L, LAMBDA) == INFINITY


def test_K_coords_of_L():
    # z^3 = 1 - lambar z + lam z^2 and friends
    assert nf.to_K_coords(LElt.zeta(3)) == (KElt(1), -LAMBAR, LAM)
    assert nf.to_K_coords(LElt.zeta(4)) == (LAM, KElt(-1), KElt(-1))
    for i in range(7):
        x = LElt.zeta(i)
        assert nf.from_K_coords(nf.to_K_coords(x)) == x


def test_trace_and_norm():
    assert ZETA.trace_LK() == LAM
    assert ZETA.trace_LQ() == -1
    assert ONE_L.trace_LQ() == 6
    assert LAM.to_L().norm_LK() == LAM**3
    assert (ONE_L + ZETA).norm_LK() == KElt(1)
