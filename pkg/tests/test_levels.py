from fractions import Fraction

import pytest

from fpplane import levels
from fpplane import matrices as mx
from fpplane.hermitian import H_MAT
from fpplane.levels import (
    I2,
    MINUS_I2,
    NULL_BASIS,
    SylowP,
    component_count,
    det_pm1_subgroup,
    find_conjugator,
    in_C7,
    reduce_K_mod_sqrt7,
    reduce_mat_mod_sqrt7,
    reduced_H_rank_and_null_basis,
    scaled_P,
    similitude_factor,
    sylow_P,
    theta_of,
    varpi,
)
from fpplane.numberfield import (
    LAM,
    LAMBAR,
    SQRT_M7,
    KElt,
    LElt,
    from_K_coords,
    to_K_coords,
)

from conftest import random_K_integral

K0, K1 = KElt(0), KElt(1)


def galois_similitude():
    """Matrix of sigma acting on rows of K-coordinates (an isometry)."""
    rows = []
    for i in range(3):
        rows.append(to_K_coords(LElt.zeta(i).galois(1)))
    return mx.mat(rows)


def zeta_similitude(power=1):
    """Matrix of multiplication by zeta^power (an isometry)."""
    rows = []
    for i in range(3):
        rows.append(to_K_coords(LElt.zeta(i + power)))
    return mx.mat(rows)


def lam_scalar():
    return mx.scalar_mat(LAM, K0)


def test_reduction():
    assert reduce_K_mod_sqrt7(LAM) == 3
    assert reduce_K_mod_sqrt7(LAMBAR) == 3
    assert reduce_K_mod_sqrt7(SQRT_M7) == 0
    assert reduce_K_mod_sqrt7(KElt(Fraction(1, 2))) == 4
    with pytest.raises(ValueError):
        reduce_K_mod_sqrt7(KElt(Fraction(1, 7)))


def test_reduction_is_ring_hom(rng):
    for _ in range(40):
        x, y = random_K_integral(rng), random_K_integral(rng)
        assert (
            reduce_K_mod_sqrt7(x * y)
            == reduce_K_mod_sqrt7(x) * reduce_K_mod_sqrt7(y) % 7
        )
        assert (
            reduce_K_mod_sqrt7(x + y)
            == (reduce_K_mod_sqrt7(x) + reduce_K_mod_sqrt7(y)) % 7
        )


def test_H_reduction_rank_and_nullspace():
    hbar = reduce_mat_mod_sqrt7(H_MAT)
    assert hbar == ((3, 3, 3), (3, 3, 3), (3, 3, 3))
    rank, basis, free = reduced_H_rank_and_null_basis()
    assert rank == 1
    assert len(basis) == 2
    assert basis == ((6, 1, 0), (6, 0, 1))
    ident = mx.identity(K1, K0)
    assert reduce_mat_mod_sqrt7(ident) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_varpi_basics():
    ident = mx.identity(K1, K0)
    assert varpi(ident) == I2
    assert varpi(mx.scalar_mat(KElt(3), K0)) == ((3, 0), (0, 3))
    assert varpi(lam_scalar()) == ((3, 0), (0, 3))


def test_varpi_rejects_non_similitude():
    bad = (
        (K1, K1, K0),
        (K0, K1, K0),
        (K0, K0, K1),
    )
    with pytest.raises(ValueError):
        varpi(bad)


def test_varpi_multiplicative(rng):
    mats = [galois_similitude(), zeta_similitude(1), zeta_similitude(2),
            lam_scalar(), mx.scalar_mat(KElt(-1), K0)]
    for _ in range(40):
        a, b = rng.choice(mats), rng.choice(mats)
        prod = mx.mat_mul(a, b)
        lhs = varpi(prod)
        rhs = levels._m2_mul(varpi(a), varpi(b))
        assert lhs == rhs


def test_similitude_factors():
    assert similitude_factor(galois_similitude()) == 1
    assert similitude_factor(zeta_similitude()) == 1
    assert similitude_factor(lam_scalar()) == 2
    with pytest.raises(ValueError):
        similitude_factor(((K1, K1, K0), (K0, K1, K0), (K0, K0, K1)))


def test_det_pm1_subgroup_order():
    g = det_pm1_subgroup()
    assert len(g) == 672
    assert len({m for m in g}) == 672


def test_sylow_subgroup():
    p = sylow_P(0)
    assert p.order == 32
    assert MINUS_I2 in p
    for m in p.elements:
        assert levels._m2_det(m) in (1, 6)
    # closed under product and inverse
    for a in list(p.elements)[:8]:
        assert levels._m2_inv(a) in p
        for b in list(p.elements)[:8]:
            assert levels._m2_mul(a, b) in p


def test_sylow_subgroups_conjugate():
    p0 = sylow_P(0)
    for seed in (1, 2, 3):
        ps = levels.sylow2_P(seed)
        assert ps.order == 32
        g = find_conjugator(ps, p0)
        assert g is not None


def test_scaled_P_order():
    assert len(scaled_P(0)) == 96  # 6 * 32 / |scalars in P| = 6*32/2


def test_in_C7():
    ident = mx.identity(K1, K0)
    assert in_C7(ident)
    assert in_C7(mx.scalar_mat(KElt(-1), K0))
    # 1 + sqrt(-7) * (integral matrix) reduces to the identity
    shifted = mx.mat_add(
        ident, mx.mat_scalar(SQRT_M7, ((K1, LAM, K0), (K0, K1, K1), (LAMBAR, K0, K1)))
    )
    assert in_C7(shifted)
    # multiplication by zeta has varpi of order 7, never in a 2-group
    assert not in_C7(zeta_similitude())
    # the lam scalar reduces to 3I, of order 6
    assert not in_C7(lam_scalar())


def test_theta():
    ident = mx.identity(K1, K0)
    assert theta_of(ident) == K1
    assert theta_of(mx.scalar_mat(KElt(5), K0)) == KElt(5)
    assert theta_of(lam_scalar()) == LAM * LAM / LAMBAR  # lam^3 / 2
    with pytest.raises(ValueError):
        theta_of(((K1, K1, K0), (K0, K1, K0), (K0, K0, K1)))


def test_theta_multiplicative(rng):
    mats = [galois_similitude(), zeta_similitude(1), lam_scalar(),
            mx.scalar_mat(KElt(-2), K0)]
    for _ in range(25):
        a, b = rng.choice(mats), rng.choice(mats)
        assert theta_of(mx.mat_mul(a, b)) == theta_of(a) * theta_of(b)


def test_component_count():
    assert component_count() == 3
    assert component_count(frozenset({1, 6})) == 3
    # full level at 7: the quotient collapses
    assert component_count(frozenset(range(1, 7))) == 1
    # the count always divides |F_7^*| = 6
    for image in (frozenset({1}), frozenset({1, 2, 4}), frozenset({6})):
        assert 6 % component_count(image) == 0


def test_unit_group():
    assert levels.unit_group_mod_sqrt7() == frozenset({1, 6})
