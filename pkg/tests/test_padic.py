from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpplane import padic
from fpplane.numberfield import LAM, LAMBDA, LAMBDABAR, MU, KElt
from fpplane.padic import (
    PadicInt,
    PadicMat,
    PrecisionError,
    embed_K_2adic,
    embed_K_scaled,
    hensel_root_lambda,
    lambda_images,
)

from conftest import random_K_integral


def exhaustive_roots(bits):
    mod = 1 << bits
    return sorted(r for r in range(mod) if (r * r + r + 2) % mod == 0)


@pytest.mark.parametrize("bits", [2, 3, 4, 6, 10])
def test_hensel_root_matches_exhaustive_search(bits):
    r = hensel_root_lambda(bits)
    roots = exhaustive_roots(bits)
    assert r.value in roots
    assert r.value % 4 == 2  # the valuation-1 branch
    assert r.valuation() == 1


def test_hensel_root_mod_16():
    # the two roots mod 16 are 5 (unit) and 10 (valuation 1)
    assert exhaustive_roots(4) == [5, 10]
    assert hensel_root_lambda(4).value == 10


def test_root_pair_relations():
    n = 40
    r, rbar = lambda_images(n)
    mod = 1 << n
    assert (r + rbar) % mod == mod - 1  # sum = -1
    assert (r * rbar) % (1 << (n - 1)) == 2  # product = 2
    assert r % 4 == 2 and rbar % 2 == 1


def test_embed_basic():
    x = embed_K_2adic(KElt(2), LAMBDA, 16)
    assert x.value == 2
    assert embed_K_2adic(LAM, LAMBDA, 16).valuation() == 1
    assert embed_K_2adic(LAM, LAMBDABAR, 16).valuation() == 0
    e, u = embed_K_scaled(MU, LAMBDA, 16)
    assert e == 0 and u.valuation() == 1
    e, u = embed_K_scaled(MU, LAMBDABAR, 16)
    assert e == -1 and u.valuation() == 0
    with pytest.raises(ValueError):
        embed_K_2adic(MU, LAMBDABAR, 16)


def test_embed_is_ring_homomorphism(rng):
    n = 48
    for place in (LAMBDA, LAMBDABAR):
        for _ in range(40):
            x, y = random_K_integral(rng), random_K_integral(rng)
            ex = embed_K_2adic(x, place, n)
            ey = embed_K_2adic(y, place, n)
            assert (ex * ey).eq_mod(
                embed_K_2adic(x * y, place, n), 40
            )
            assert (ex + ey).eq_mod(embed_K_2adic(x + y, place, n), 40)


def test_round_trip_determines_x(rng):
    # (image at LAMBDA, image at LAMBDABAR) pins a + b*lam mod 2^N
    n = 32
    mod = 1 << n
    r, rbar = lambda_images(n)
    inv_diff = pow(r - rbar, -1, mod)  # r - rbar = 2r + 1 is odd
    for _ in range(40):
        x = random_K_integral(rng, span=500)
        u = embed_K_2adic(x, LAMBDA, n).value
        v = embed_K_2adic(x, LAMBDABAR, n).value
        b = (u - v) * inv_diff % mod
        a = (u - b * r) % mod
        assert a == x.a % mod and b == x.b % mod


@settings(max_examples=60, deadline=None)
@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_padic_arithmetic_matches_integers(x, y):
    n = 50
    px, py = PadicInt(x, n), PadicInt(y, n)
    assert (px + py).eq_mod(PadicInt(x + y, n), n)
    assert (px * py).eq_mod(PadicInt(x * y, n), min((px * py).prec, n))
    assert (px - py).eq_mod(PadicInt(x - y, n), n)


def test_precision_errors():
    z = PadicInt(0, 8)
    with pytest.raises(PrecisionError):
        z.valuation()
    x = PadicInt(5, 8)
    with pytest.raises(PrecisionError):
        x.eq_mod(PadicInt(5, 8), 20)
    with pytest.raises(PrecisionError):
        x.is_zero_mod(9)
    assert not x.is_zero_mod(2)


def test_precision_tracking_through_multiplication():
    x = PadicInt(4, 10, valuation_floor=2)
    y = PadicInt(6, 6, valuation_floor=1)
    z = x * y
    # product precision: min(10 + 1, 6 + 2) = 8, capped at max(10, 6)
    assert z.prec == 8
    assert z.valuation_floor == 3


def test_unit_inverse():
    x = PadicInt(7, 20)
    assert (x * x.unit_inverse()).eq_mod(PadicInt(1, 20), 20)
    with pytest.raises(ZeroDivisionError):
        PadicInt(4, 20).unit_inverse()


def test_matrix_embed_and_inverse():
    a = (
        (KElt(3), LAM, KElt(1)),
        (KElt(0), KElt(1), LAM.conj()),
        (KElt(1), KElt(0), KElt(5)),
    )
    m = PadicMat.from_K_matrix(a, LAMBDA, 48)
    minv = m.inverse()
    prod = m * minv
    assert prod.eq_mod(PadicMat.identity(48), 30)


def test_matrix_scaled_entries():
    a = ((MU, KElt(0), KElt(0)), (KElt(0), KElt(1), KElt(0)), (KElt(0), KElt(0), KElt(1)))
    m = PadicMat.from_K_matrix(a, LAMBDABAR, 32)
    assert m.scale == -1
    # 2 * mu is integral at LAMBDABAR
    assert m.entries[0][0].valuation() == 0
