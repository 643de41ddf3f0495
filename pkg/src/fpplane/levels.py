"""Level structure at the ramified prime 7.

Reduction modulo sqrt(-7) sends O_K onto F_7 (lam and lambar both land on
3).  The reduced Gram matrix (H mod sqrt(-7)) is the all-3 matrix of rank
1; integral similitudes act on its 2-dimensional null space, giving the
homomorphism varpi into GL2(F_7).  The congruence subgroup of interest is
the preimage of a 2-Sylow subgroup P of {g in GL2(F_7) : det g = +-1}
(order 672 = 2^5 * 21, so |P| = 32).

The similitude character theta(g) = (g g^dagger)^-1 det g feeds the
connected-component count: with the level above, its image modulo sqrt(-7)
is {+-1}, and the component count is the index of that image (together
with the global units +-1) in F_7^*, namely 3.  The finite quotient stands
in for the idele class computation because K has class number 1 (Minkowski
bound 2*sqrt(7)/pi < 2) and unit group {+-1} (the norm form a^2 - ab + 2b^2
represents 1 only at (+-1, 0)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import matrices as mx
from .hermitian import H_MAT, dagger
from .numberfield import KElt, _as_K

P7 = 7


def reduce_K_mod_sqrt7(x: KElt) -> int:
    """Ring homomorphism O_K -> F_7 with sqrt(-7) -> 0; lam -> 3."""
    x = _as_K(x)
    if x.a.denominator == 1 and x.b.denominator == 1:
        return (x.a.numerator + 3 * x.b.numerator) % P7
    if x.a.denominator % P7 == 0 or x.b.denominator % P7 == 0:
        raise ValueError(f"{x!r} is not integral at 7")
    a = x.a.numerator * pow(x.a.denominator, -1, P7)
    b = x.b.numerator * pow(x.b.denominator, -1, P7)
    return (a + 3 * b) % P7


def reduce_mat_mod_sqrt7(a):
    if hasattr(a, "entries"):
        a = a.entries
    return tuple(tuple(reduce_K_mod_sqrt7(x) for x in row) for row in a)


def _rref_mod7(rows):
    a = [list(r) for r in rows]
    m, n = len(a), len(a[0])
    row = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(row, m) if a[r][col] % P7), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, P7)
        a[row] = [v * inv % P7 for v in a[row]]
        for r in range(m):
            if r != row and a[r][col] % P7:
                f = a[r][col]
                a[r] = [(v - f * w) % P7 for v, w in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    return a, pivots


def reduced_H_rank_and_null_basis():
    """Rank of (H mod sqrt(-7)) and the pinned ordered basis of its left
    null space {v : v Hbar = 0}, from smallest-index-pivot elimination."""
    hbar = reduce_mat_mod_sqrt7(H_MAT)
    # left null space = null space of the transpose
    ht = [list(col) for col in zip(*hbar)]
    rref, pivots = _rref_mod7(ht)
    rank = len(pivots)
    free = [j for j in range(3) if j not in pivots]
    basis = []
    for j in free:
        v = [0, 0, 0]
        v[j] = 1
        for r, col in enumerate(pivots):
            v[col] = (-rref[r][j]) % P7
        basis.append(tuple(v))
    return rank, tuple(basis), tuple(free)


_RANK, NULL_BASIS, _FREE_COORDS = reduced_H_rank_and_null_basis()


def varpi(a) -> tuple:
    """Matrix of the right action v -> v * (a mod sqrt(-7)) on the pinned
    null-space basis.  Raises if the action leaves the null space (the
    input was not an integral similitude)."""
    abar = reduce_mat_mod_sqrt7(a)
    rows = []
    for v in NULL_BASIS:
        w = tuple(
            sum(v[i] * abar[i][j] for i in range(3)) % P7 for j in range(3)
        )
        # each basis vector is a unit vector on the free coordinates, so the
        # coefficients can be read off there and checked on the rest
        alpha, beta = (w[j] for j in _FREE_COORDS)
        chk = tuple(
            (alpha * NULL_BASIS[0][j] + beta * NULL_BASIS[1][j]) % P7
            for j in range(3)
        )
        if chk != w:
            raise ValueError("action does not preserve the null space")
        rows.append((alpha, beta))
    return tuple(rows)


# ---------------------------------------------------------------------------
# GL2(F_7) with determinant +-1, and its 2-Sylow subgroups


def _m2_mul(a, b):
    return (
        (
            (a[0][0] * b[0][0] + a[0][1] * b[1][0]) % P7,
            (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % P7,
        ),
        (
            (a[1][0] * b[0][0] + a[1][1] * b[1][0]) % P7,
            (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % P7,
        ),
    )


def _m2_det(a):
    return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % P7


def _m2_inv(a):
    d = pow(_m2_det(a), -1, P7)
    return (
        (a[1][1] * d % P7, -a[0][1] * d % P7),
        (-a[1][0] * d % P7, a[0][0] * d % P7),
    )


I2 = ((1, 0), (0, 1))
MINUS_I2 = ((6, 0), (0, 6))


def det_pm1_subgroup():
    """All elements of GL2(F_7) with determinant +-1 (order 672)."""
    out = []
    for a in range(P7):
        for b in range(P7):
            for c in range(P7):
                for d in range(P7):
                    if (a * d - b * c) % P7 in (1, 6):
                        out.append(((a, b), (c, d)))
    return out


def _element_order(g):
    acc, n = g, 1
    while acc != I2:
        acc = _m2_mul(acc, g)
        n += 1
    return n


def _closure(gens):
    seen = {I2}
    frontier = [I2]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _m2_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class SylowP:
    elements: frozenset
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements


def sylow2_P(seed: int = 0) -> SylowP:
    """A 2-Sylow subgroup of {det = +-1} < GL2(F_7), grown from a random
    2-element by repeated normalizer extension.  All such subgroups are
    conjugate; the seed (default 0) pins the construction."""
    rng = random.Random(seed)
    group = det_pm1_subgroup()
    two_elements = [g for g in group if _element_order(g) & (_element_order(g) - 1) == 0]
    start = rng.choice(two_elements)
    gens = [start]
    sub = _closure(gens)
    while len(sub) < 32:
        normalizer_2elts = []
        for g in group:
            if g in sub:
                continue
            gi = _m2_inv(g)
            if any(_m2_mul(_m2_mul(g, s), gi) not in sub for s in sub):
                continue
            if _m2_mul(g, g) in sub:
                normalizer_2elts.append(g)
        g = rng.choice(normalizer_2elts)
        gens.append(g)
        sub = _closure(gens)
    assert len(sub) == 32
    return SylowP(elements=frozenset(sub), generators=tuple(gens))


_P_CACHE: dict = {}


def sylow_P(seed: int = 0) -> SylowP:
    if seed not in _P_CACHE:
        _P_CACHE[seed] = sylow2_P(seed)
    return _P_CACHE[seed]


def find_conjugator(p1: SylowP, p2: SylowP):
    """A g with g p1 g^-1 = p2, by scanning the 672-element group."""
    for g in det_pm1_subgroup():
        gi = _m2_inv(g)
        if all(_m2_mul(_m2_mul(g, s), gi) in p2.elements for s in p1.elements):
            return g
    return None


def scaled_P(seed: int = 0) -> frozenset:
    """F_7^* . P: the admissible level set for the adjoint-group membership
    test (rational rescalings reduce onto all of F_7^*)."""
    p = sylow_P(seed)
    out = set()
    for s in range(1, P7):
        for g in p.elements:
            out.add(
                ((s * g[0][0] % P7, s * g[0][1] % P7),
                 (s * g[1][0] % P7, s * g[1][1] % P7))
            )
    return frozenset(out)


def in_C7(a, seed: int = 0) -> bool:
    """Membership in the congruence group at 7: varpi lands in P."""
    return varpi(a) in sylow_P(seed)


# ---------------------------------------------------------------------------
# similitude character and component count

_H_INV = mx.inv3(H_MAT.entries)


def similitude_factor(a) -> Fraction:
    """The scalar c with a H a* = c H; raises if a is not a similitude."""
    if hasattr(a, "entries"):
        a = a.entries
    m = mx.mat_mul(mx.mat_mul(a, H_MAT.entries), mx.conj_transpose(a))
    target = H_MAT.entries
    c = None
    for i in range(3):
        for j in range(3):
            if target[i][j]:
                q = m[i][j] / target[i][j]
                if c is None:
                    c = q
                elif c != q:
                    raise ValueError("not a similitude of H")
            elif m[i][j]:
                raise ValueError("not a similitude of H")
    if not c.is_rational():
        raise ValueError("similitude factor is not rational")
    return c.rational_value()


def theta_of(a) -> KElt:
    """The character (g g^dagger)^-1 det g; for a similitude with factor c
    this is det(g)/c."""
    if hasattr(a, "entries"):
        a = a.entries
    ggd = mx.mat_mul(a, dagger(a))
    if not mx.is_scalar(ggd, KElt(0)):
        raise ValueError("g g^dagger is not scalar")
    c = ggd[0][0]
    return mx.det3(a) * c.inv()


def unit_group_mod_sqrt7() -> frozenset:
    """Reductions of the global units of O_K (which are exactly +-1: the
    norm form a^2 - ab + 2b^2 = (a - b/2)^2 + 7b^2/4 represents 1 only at
    (+-1, 0))."""
    sols = [
        (a, b)
        for a in range(-2, 3)
        for b in range(-2, 3)
        if a * a - a * b + 2 * b * b == 1
    ]
    assert sorted(sols) == [(-1, 0), (1, 0)]
    return frozenset(reduce_K_mod_sqrt7(KElt(a, b)) for a, b in sols)


def _subgroup_generated(values: frozenset) -> frozenset:
    sub = {1}
    frontier = {1}
    while frontier:
        nxt = set()
        for x in frontier:
            for v in values:
                y = x * v % P7
                if y not in sub:
                    sub.add(y)
                    nxt.add(y)
        frontier = nxt
    return frozenset(sub)


def component_count(theta_image_mod7: frozenset | None = None) -> int:
    """Number of connected components: the index in (O_K/sqrt(-7))^* of the
    subgroup generated by the global units and the mod-sqrt(-7) image of
    the similitude character on the level group.  Defaults to the image
    {+-1} established for the Sylow level."""
    if theta_image_mod7 is None:
        theta_image_mod7 = frozenset({1, P7 - 1})
    if not theta_image_mod7 or 0 in theta_image_mod7:
        raise ValueError("theta image must consist of units mod 7")
    gens = frozenset(theta_image_mod7) | unit_group_mod_sqrt7()
    sub = _subgroup_generated(gens)
    count, rem = divmod(P7 - 1, len(sub))
    assert rem == 0
    return count
