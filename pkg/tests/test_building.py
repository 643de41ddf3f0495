import pytest

from fpplane import matrices as mx
from fpplane.building import (
    BuildingVertex,
    act,
    ball,
    canonicalize,
    check_transitivity,
    det_valuation_at_lambda,
    hermite_normal_form,
    neighbors,
    oracle_ball_size,
    standard_vertex,
)
from fpplane.lattice_group import Similitude, enumerate_similitudes, in_gamma_mum
from fpplane.numberfield import KElt, LAM
from fpplane.padic import PrecisionError

K0, K1 = KElt(0), KElt(1)


def test_standard_vertex():
    std = standard_vertex()
    assert std.rep == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert std.type == 0


def test_hermite_examples():
    # a lattice whose Hermite diagonal is not sorted
    rep = hermite_normal_form([[1, 1, 0], [0, 2, 0], [0, 0, 1]], 16)
    assert rep == ((1, 1, 0), (0, 2, 0), (0, 0, 1))
    # odd units normalize away (3 is a 2-adic unit)
    rep = hermite_normal_form([[3, 0, 0], [0, 1, 0], [0, 0, 1]], 16)
    assert rep == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    # homothety content is stripped
    rep = hermite_normal_form([[2, 0, 0], [0, 2, 0], [0, 0, 2]], 16)
    assert rep == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_hermite_idempotent():
    for v in ball(standard_vertex(), 2)[::7]:
        again = canonicalize([list(r) for r in v.rep], v.det_valuation())
        assert again.rep == v.rep


def test_hermite_precision_error():
    with pytest.raises(PrecisionError):
        hermite_normal_form([[4, 0, 0], [0, 4, 0], [0, 0, 4]], 2)


def test_neighbors():
    std = standard_vertex()
    n = neighbors(std)
    assert len(n) == 14
    assert sorted({u.type for u in n}) == [1, 2]
    assert sum(1 for u in n if u.type == 1) == 7
    assert sum(1 for u in n if u.type == 2) == 7


def test_neighbor_symmetry():
    std = standard_vertex()
    for u in neighbors(std):
        assert std.rep in {w.rep for w in neighbors(u)}


def test_ball_sizes():
    std = standard_vertex()
    assert len(ball(std, 0)) == 1
    assert len(ball(std, 1)) == 15
    b2 = ball(std, 2)
    assert len(b2) == len({v.rep for v in b2})


def test_ball_matches_independent_oracle():
    std = standard_vertex()
    assert oracle_ball_size(0) == 1
    assert oracle_ball_size(1) == 15
    assert oracle_ball_size(2) == len(ball(std, 2))


def test_act_identity_and_scalars():
    std = standard_vertex()
    ident = Similitude.from_rows(mx.identity(K1, K0), 1)
    assert act(ident, std) == std
    two = Similitude.from_rows(mx.scalar_mat(KElt(2), K0), 4)
    assert act(two, std) == std
    lam_scalar = Similitude.from_rows(mx.scalar_mat(LAM, K0), 2)
    assert act(lam_scalar, std) == std
    for v in neighbors(std)[:3]:
        assert act(two, v) == v


def test_act_is_group_action(rng):
    std = standard_vertex()
    pool = list(enumerate_similitudes(2))
    verts = ball(std, 1)
    for _ in range(20):
        a, b = rng.choice(pool), rng.choice(pool)
        prod = Similitude.from_rows(mx.mat_mul(a.matrix, b.matrix), 4)
        v = rng.choice(verts)
        # rows transform on the right, so (ab) acts as a then b
        assert act(prod, v) == act(b, act(a, v))


def test_act_preserves_adjacency(rng):
    std = standard_vertex()
    pool = [g for g in enumerate_similitudes(2) if in_gamma_mum(g)]
    for g in rng.sample(pool, 6):
        image = act(g, std)
        image_neighbors = {w.rep for w in neighbors(image)}
        for u in neighbors(std)[:5]:
            assert act(g, u).rep in image_neighbors


def test_type_shift_matches_det_valuation(rng):
    std = standard_vertex()
    for c in (1, 2, 4):
        for g in rng.sample(list(enumerate_similitudes(c)), 12):
            shift = det_valuation_at_lambda(g) % 3
            assert act(g, std).type == shift
    # an element with v2(factor) = 1 that genuinely rotates the type
    rotating = [
        g
        for g in enumerate_similitudes(2)
        if in_gamma_mum(g) and det_valuation_at_lambda(g) % 3
    ]
    assert rotating


def test_transitivity_radius_1():
    report = check_transitivity(1, factors=(1, 2))
    assert report.ball_size == 15
    assert report.transitive
    assert report.unreached == []
    assert report.stabilizers == []


def test_transitivity_report_contents():
    report = check_transitivity(1, factors=(1, 2))
    std = standard_vertex()
    for u in ball(std, 1):
        factor, coords = report.reached[u.rep]
        g = Similitude(coords, factor)
        assert act(g, std).rep == u.rep
        assert in_gamma_mum(g)
