"""Enumeration of the integral similitudes of the hermitian lattice
(O_L, h), the k*theta normalization, and the lattice-group membership
predicate.

A similitude with factor c is gamma in M3(O_K) with gamma H gamma* = c H.
Written in rows, this says every row has h-norm 3c and the three row pairs
(2,1), (3,1), (3,2) have h-inner product c*lam.  Rows are found by exact
short-vector enumeration of the rank-6 positive definite rational form
underlying h (Fincke-Pohst over Fraction; no floats touch the completeness
argument), and assembled with the pair conditions checked by integer
bilinear forms.  Because h is definite and det H = 7, integral similitudes
only exist for factors 2^k up to rational rescaling, which is why the
enumeration is indexed by powers of 2.

Membership in the uniformizing lattice group modulo scalars: an enumerated
gamma represents a class of the adjoint group at 2, and the class belongs
to the group iff some rescaling t*gamma (t a unit away from 2, so t mod
sqrt(-7) sweeps all of F_7^*) passes the level test at 7, i.e. iff
varpi(gamma) lands in F_7^* . P.  The equivalent route through the
k*theta normalization (theta = theta_of(gamma)^-1 gamma unitary) is also
exposed; the two predicates provably agree and tests check it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import matrices as mx
from .hermitian import H_MAT, dagger, gram_h_coords
from .levels import scaled_P, sylow_P, theta_of, varpi
from .numberfield import KElt

K0 = KElt(0)
K1 = KElt(1)
LAM = KElt(0, 1)

_H = H_MAT.entries


def _basis_vector(m: int):
    """The m-th basis vector of O_K^3 over Z: index 2i gives e_i, index
    2i+1 gives lam*e_i."""
    v = [K0, K0, K0]
    v[m // 2] = K1 if m % 2 == 0 else LAM
    return tuple(v)


def _int_bilinear_tables():
    """Integer matrices (A, B) with <u, w> = u^T A w + lam * (u^T B w) on
    6-dimensional integer coordinates."""
    a = [[0] * 6 for _ in range(6)]
    b = [[0] * 6 for _ in range(6)]
    for i in range(6):
        for j in range(6):
            val = gram_h_coords(_basis_vector(i), _basis_vector(j))
            assert val.is_integral()
            a[i][j] = int(val.a)
            b[i][j] = int(val.b)
    return a, b


_TAB_A, _TAB_B = _int_bilinear_tables()
_NP_A = np.array(_TAB_A, dtype=np.int64)
_NP_B = np.array(_TAB_B, dtype=np.int64)

# symmetric Gram matrix of the rational quadratic form q(v) = <v, v>
_GRAM6 = [
    [Fraction(_TAB_A[i][j] + _TAB_A[j][i], 2) for j in range(6)]
    for i in range(6)
]


def coords_to_vector(coords):
    """6 integers -> row vector in O_K^3."""
    return (
        KElt(coords[0], coords[1]),
        KElt(coords[2], coords[3]),
        KElt(coords[4], coords[5]),
    )


def vector_to_coords(v):
    out = []
    for x in v:
        assert x.is_integral()
        out.extend((int(x.a), int(x.b)))
    return tuple(out)


@dataclass(frozen=True)
class ShortVector:
    coords: tuple
    norm: int

    @property
    def vector(self):
        return coords_to_vector(self.coords)


def _cholesky6():
    n = 6
    a = [[Fraction(_GRAM6[i][j]) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        assert d[i] > 0, "the form must be positive definite"
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for k in range(i + 1, n):
            for l in range(k, n):
                a[k][l] -= d[i] * u[i][k] * u[i][l]
    return d, u


_CHOL_D, _CHOL_U = _cholesky6()


def _integer_interval(s: Fraction, t: Fraction):
    """All integers x with (x + s)^2 <= t, bounds made exact by widening a
    float guess outward and shrinking inward with Fraction comparisons."""
    if t < 0:
        return range(0)
    root = math.sqrt(float(t)) + 1.0e-9
    lo = math.floor(-float(s) - root) - 1
    hi = math.ceil(-float(s) + root) + 1
    while (Fraction(lo - 1) + s) ** 2 <= t:
        lo -= 1
    while lo <= hi and (Fraction(lo) + s) ** 2 > t:
        lo += 1
    while (Fraction(hi + 1) + s) ** 2 <= t:
        hi += 1
    while hi >= lo and (Fraction(hi) + s) ** 2 > t:
        hi -= 1
    return range(lo, hi + 1)


def _short_vector_coords(n: int):
    """All integer 6-vectors with q(v) = n, by exact Fincke-Pohst descent
    through the rational Cholesky factorization q = sum d_i (x_i + S_i)^2."""
    if n < 0:
        return []
    if n == 0:
        return [(0, 0, 0, 0, 0, 0)]
    d, u = _CHOL_D, _CHOL_U
    out = []
    x = [0] * 6
    target = Fraction(n)

    def descend(i: int, budget: Fraction):
        if i < 0:
            if budget == 0:
                out.append(tuple(x))
            return
        s = sum((u[i][j] * x[j] for j in range(i + 1, 6)), Fraction(0))
        for xi in _integer_interval(s, budget / d[i]):
            x[i] = xi
            term = d[i] * (Fraction(xi) + s) ** 2
            descend(i - 1, budget - term)
        x[i] = 0

    descend(5, target)
    return sorted(out)


_short_cache: dict = {}


def enumerate_short_vectors(n: int):
    """All v in O_K^3 with h(v, v) = n, complete, canonically sorted."""
    if n not in _short_cache:
        _short_cache[n] = tuple(
            ShortVector(coords=c, norm=n) for c in _short_vector_coords(n)
        )
    return _short_cache[n]


def minimal_eigenvalue_bound() -> Fraction:
    """A verified rational lower bound for the least eigenvalue of the
    6-dimensional Gram matrix, by LDL-definiteness bisection."""
    lo, hi = Fraction(0), Fraction(3)  # trace/6 < 3 caps the minimum
    for _ in range(30):
        mid = (lo + hi) / 2
        shifted = [
            [_GRAM6[i][j] - (mid if i == j else 0) for j in range(6)]
            for i in range(6)
        ]
        if mx.is_positive_semidefinite(shifted):
            lo = mid
        else:
            hi = mid
    assert lo > 0
    return lo


def short_vectors_box_oracle(n: int):
    """Independent completeness oracle: scan the full coefficient box
    |x_i| <= sqrt(n / lambda_min) and keep q(x) = n, with the eigenvalue
    bound certified rationally.  Intented for small n only."""
    if n == 0:
        return [(0, 0, 0, 0, 0, 0)]
    m = minimal_eigenvalue_bound()
    # q(x) >= m * |x|^2, so any solution has |x_i|^2 <= n/m
    bound = math.isqrt(math.floor(n / m))
    while Fraction((bound + 1) ** 2) * m <= n:
        bound += 1
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([rng] * 6), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    two_g = np.array(
        [[2 * _GRAM6[i][j] for j in range(6)] for i in range(6)],
        dtype=np.int64,
    )
    vals = np.einsum("ij,jk,ik->i", pts, two_g, pts)
    sel = pts[vals == 2 * n]
    return sorted(tuple(int(c) for c in row) for row in sel)


class Similitude:
    """An integral similitude gamma H gamma* = factor * H.

    The primary data is the 18-tuple of integer coordinates (a, b per entry,
    row-major); the KElt matrix, determinant and level image are derived on
    demand and cached, which keeps the factor-8 list (tens of thousands of
    elements) cheap to hold."""

    __slots__ = ("coords", "factor", "_matrix", "_det", "_level")

    def __init__(self, coords, factor: int):
        self.coords = tuple(int(v) for v in coords)
        if len(self.coords) != 18:
            raise ValueError("a similitude carries 18 integer coordinates")
        self.factor = int(factor)
        self._matrix = None
        self._det = None
        self._level = None

    @classmethod
    def from_rows(cls, rows, factor: int) -> "Similitude":
        coords = []
        for row in rows:
            for x in row:
                assert x.is_integral()
                coords.extend((int(x.a), int(x.b)))
        return cls(coords, factor)

    @property
    def matrix(self):
        if self._matrix is None:
            c = self.coords
            self._matrix = tuple(
                tuple(
                    KElt(c[6 * i + 2 * j], c[6 * i + 2 * j + 1])
                    for j in range(3)
                )
                for i in range(3)
            )
        return self._matrix

    @property
    def det(self) -> KElt:
        if self._det is None:
            self._det = mx.det3(self.matrix)
        return self._det

    @property
    def level_image(self):
        if self._level is None:
            self._level = varpi(self.matrix)
        return self._level

    def verify(self) -> bool:
        lhs = mx.mat_mul(
            mx.mat_mul(self.matrix, _H), mx.conj_transpose(self.matrix)
        )
        rhs = mx.mat_scalar(KElt(self.factor), _H)
        return lhs == rhs

    def is_scalar(self) -> bool:
        return mx.is_scalar(self.matrix, K0)

    def __eq__(self, other):
        return (
            isinstance(other, Similitude)
            and self.coords == other.coords
            and self.factor == other.factor
        )

    def __hash__(self):
        return hash((self.coords, self.factor))

    def __repr__(self):
        return f"Similitude(factor={self.factor}, coords={self.coords})"


def _pair_mask_arrays(svecs):
    """For the short-vector array S, the boolean matrix C with
    C[u, j] = ( <S_u, S_j> == factor*lam ) is assembled lazily by the
    caller; here we just prepare S A and S B."""
    s = np.array([v.coords for v in svecs], dtype=np.int64)
    return s, s @ _NP_A, s @ _NP_B


_simil_cache: dict = {}


def enumerate_similitudes(c: int):
    """All gamma in M3(O_K) with gamma H gamma* = c H, for c a power of 2.
    Complete by construction: rows are drawn from the complete norm-3c
    short-vector list and all pair conditions are enforced exactly."""
    if c in _simil_cache:
        return _simil_cache[c]
    if c < 1 or (c & (c - 1)):
        raise ValueError("integral similitudes only occur for factors 2^k")
    svecs = enumerate_short_vectors(3 * c)
    if not svecs:
        _simil_cache[c] = ()
        return ()
    s, sa, sb = _pair_mask_arrays(svecs)
    m = len(svecs)
    # C[u, j] <=> <S_u, S_j> = c*lam, i.e. A-part 0 and B-part c
    c_mask = np.zeros((m, m), dtype=bool)
    block = max(1, (1 << 22) // max(m, 1))
    st = s.T.copy()
    for lo in range(0, m, block):
        hi = min(lo + block, m)
        pa = sa[lo:hi] @ st
        pb = sb[lo:hi] @ st
        c_mask[lo:hi] = (pa == 0) & (pb == c)
    results = []
    for j in range(m):
        r2_candidates = np.nonzero(c_mask[:, j])[0]
        if r2_candidates.size == 0:
            continue
        mask_j = c_mask[:, j]
        cj = svecs[j].coords
        for u in r2_candidates:
            r3_candidates = np.nonzero(mask_j & c_mask[:, u])[0]
            if r3_candidates.size == 0:
                continue
            cu = svecs[u].coords
            for t in r3_candidates:
                results.append(
                    Similitude(cj + cu + svecs[t].coords, c)
                )
    results.sort(key=lambda g: g.coords)
    _simil_cache[c] = tuple(results)
    return _simil_cache[c]


def similitude_oracle_bruteforce(c: int):
    """Completeness oracle for the similitude assembly: run over all
    ordered row triples from the short-vector list and keep those whose
    full Gram condition holds, with inner products computed by the exact
    K-arithmetic path instead of the integer tables."""
    svecs = enumerate_short_vectors(3 * c)
    rows = [coords_to_vector(v.coords) for v in svecs]
    m = len(rows)
    hrow = [
        tuple(
            sum((rows[i][k] * _H[k][l] for k in range(3)), K0)
            for l in range(3)
        )
        for i in range(m)
    ]

    def pair(i, j):
        return sum((hrow[i][l] * rows[j][l].conj() for l in range(3)), K0)

    target = KElt(c) * LAM
    good_pairs = {}
    for i in range(m):
        for j in range(m):
            if pair(i, j) == target:
                good_pairs.setdefault(j, set()).add(i)
    out = []
    for j in range(m):
        for u in good_pairs.get(j, ()):
            for t in good_pairs.get(j, set()) & good_pairs.get(u, set()):
                out.append(
                    Similitude.from_rows((rows[j], rows[u], rows[t]), c)
                )
    out.sort(key=lambda g: g.coords)
    return tuple(out)


def normalize_k_theta(sim: Similitude):
    """gamma = k * theta with k = theta_of(gamma) and theta unitary for
    dagger (theta theta^dagger = 1, checked exactly)."""
    k = theta_of(sim.matrix)
    theta = mx.mat_scalar(k.inv(), sim.matrix)
    prod = mx.mat_mul(theta, dagger(theta))
    assert prod == mx.identity(K1, K0), "k*theta normalization failed"
    return k, theta


def in_gamma_mum(sim: Similitude, seed: int = 0) -> bool:
    """Class membership in the uniformizing lattice group: some rescaling
    by a unit-away-from-2 lands in the level group at 7, i.e. the level
    image lies in F_7^* . P.  Integrality away from 2 is automatic for
    O_K entries and 2-power factor."""
    return sim.level_image in scaled_P(seed)


def in_gamma_mum_via_normalization(sim: Similitude, seed: int = 0) -> bool:
    """The same membership through the unitary normalization: theta =
    k^-1 gamma must satisfy the level condition, up to the residual sign
    freedom (norm-one rescalings reduce to +-1 mod sqrt(-7))."""
    from .levels import P7, reduce_K_mod_sqrt7

    k = theta_of(sim.matrix)
    kred = reduce_K_mod_sqrt7(k)
    if kred == 0:
        return False
    kinv = pow(kred, -1, P7)
    p = sylow_P(seed)
    for sign in (1, P7 - 1):
        s = sign * kinv % P7
        scaled = tuple(
            tuple(s * e % P7 for e in row) for row in sim.level_image
        )
        if scaled in p:
            return True
    return False


# ---------------------------------------------------------------------------
# serialization: one similitude per line, 18 integers a,b per entry

FORMAT_HEADER = "# fpplane-similitudes v1"


def serialize_similitudes(sims, factor: int) -> str:
    lines = [FORMAT_HEADER, f"# factor={factor} count={len(sims)}"]
    for g in sims:
        lines.append(" ".join(str(v) for v in g.coords))
    return "\n".join(lines) + "\n"


def parse_similitudes(text: str):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != FORMAT_HEADER:
        raise ValueError("not a fpplane similitude list")
    meta = dict(
        kv.split("=") for kv in lines[1].lstrip("# ").split() if "=" in kv
    )
    factor = int(meta["factor"])
    sims = []
    for ln in lines[2:]:
        vals = [int(v) for v in ln.split()]
        if len(vals) != 18:
            raise ValueError("each line carries 18 integers")
        rows = tuple(
            tuple(
                KElt(vals[6 * i + 2 * j], vals[6 * i + 2 * j + 1])
                for j in range(3)
            )
            for i in range(3)
        )
        sims.append(Similitude.from_rows(rows, factor))
    return tuple(sims)
