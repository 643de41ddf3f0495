"""Combinatorial model of the vertex set of the Bruhat-Tits building of
PGL3(Q2), the action of enumerated similitudes on it, and the machinery
for the vertex-transitivity check.

A vertex is a homothety class of rank-3 Z2-lattices.  The canonical
representative is the 2-adic Hermite form of a basis matrix (rows span the
lattice): upper triangular, diagonal entries powers of 2, each column's
above-diagonal entries reduced modulo that column's diagonal, and the
whole matrix divided by the largest power of 2 dividing every entry.  This form is the unique such representative of the class, so
vertex equality is literal equality of integer matrices.  (The diagonal is
not sorted; no valid Hermite form sorts it for every lattice.)

Neighbors of [L] are the classes [M] with 2L < M < L, i.e. the proper
nonzero subspaces of the 3-dimensional F2-space L/2L: 7 lines and 7
planes, 14 neighbors, with the index (2 or 4) shifting the vertex type
(v2(det) mod 3) by 1 or 2.

Similitudes act through their entrywise 2-adic image at the place LAMBDA
(the other choice of place conjugates the action by the opposition
involution); the image is truncated, so the Hermite reduction tracks the
working modulus and raises PrecisionError when the truncated bits cannot
decide a pivot, at which point the caller doubles the precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice_group import Similitude, enumerate_similitudes, in_gamma_mum
from .numberfield import LAMBDA, valuation
from .padic import DEFAULT_PRECISION, MAX_PRECISION, PrecisionError, lambda_images


def _v2(n: int) -> int:
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


@dataclass(frozen=True)
class BuildingVertex:
    """Canonical representative of a homothety class of Z2-lattices; rows
    of rep span the lattice."""

    rep: tuple

    @property
    def type(self) -> int:
        d = self.rep[0][0] * self.rep[1][1] * self.rep[2][2]
        return _v2(d) % 3

    def det_valuation(self) -> int:
        return _v2(self.rep[0][0] * self.rep[1][1] * self.rep[2][2])

    def __repr__(self):
        return f"BuildingVertex({self.rep})"


def standard_vertex() -> BuildingVertex:
    return BuildingVertex(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def hermite_normal_form(rows, mod_bits: int) -> tuple:
    """Canonical 2-adic Hermite form of the lattice spanned by the given
    integer rows, all arithmetic mod 2^mod_bits.

    Raises PrecisionError when a pivot column is identically 0 at the
    working modulus (can only happen when the modulus is too small for the
    lattice's elementary divisors, or the rows are not full rank)."""
    m = 1 << mod_bits
    work = [[x % m for x in r] for r in rows]
    pivots = []
    for col in range(3):
        best, bestv = None, None
        for idx, r in enumerate(work):
            x = r[col]
            if x == 0:
                continue
            v = _v2(x)
            if bestv is None or v < bestv:
                best, bestv = idx, v
        if best is None:
            raise PrecisionError(
                f"no pivot in column {col} at modulus 2^{mod_bits}"
            )
        piv = work.pop(best)
        inv_odd = pow(piv[col] >> bestv, -1, m)
        for r in work:
            x = r[col]
            if x:
                q = (x >> bestv) * inv_odd % m
                for k in range(3):
                    r[k] = (r[k] - q * piv[k]) % m
        pivots.append((bestv, piv))
    for r in work:
        if any(r):
            raise PrecisionError(
                "leftover generator outside the span at this modulus"
            )
    # unit-normalize pivots so the diagonal is exactly a power of 2
    tri = []
    for v, piv in pivots:
        inv_odd = pow(piv[_first_nonzero(piv)] >> v, -1, m)
        tri.append([x * inv_odd % m for x in piv])
    # reduce above-diagonal entries modulo the column diagonal
    for j in (1, 2):
        dj = tri[j][j]
        for i in range(j):
            q = tri[i][j] // dj
            if q:
                for k in range(3):
                    tri[i][k] = (tri[i][k] - q * tri[j][k]) % m
    # homothety normalization: strip the content power of 2
    mn = min(_v2(x) for r in tri for x in r if x)
    if mn:
        tri = [[x >> mn for x in r] for r in tri]
    out = tuple(tuple(r) for r in tri)
    _check_canonical(out)
    return out


def _first_nonzero(row):
    for i, x in enumerate(row):
        if x:
            return i
    raise ValueError("zero row")


def _check_canonical(rep):
    for i in range(3):
        for j in range(3):
            x = rep[i][j]
            if j < i:
                assert x == 0
            elif j == i:
                assert x and (x & (x - 1)) == 0  # a power of 2
            else:
                assert 0 <= x < rep[j][j]


def canonicalize(rows, det_valuation_hint: int | None = None) -> BuildingVertex:
    """Exact canonical form of integer generator rows: the working modulus
    is chosen from the determinant valuation so it is provably sufficient."""
    if det_valuation_hint is None:
        det_valuation_hint = 12
    bits = det_valuation_hint + 8
    while True:
        try:
            return BuildingVertex(hermite_normal_form(rows, bits))
        except PrecisionError:
            if bits > 256:
                raise
            bits *= 2


def neighbors(v: BuildingVertex) -> list:
    """The 14 adjacent classes: preimages of the proper nonzero subspaces
    of L/2L, listed in canonical order."""
    r = v.rep
    twice = [[2 * x for x in row] for row in r]
    dv = v.det_valuation() + 3 + 4

    def combo(bits):
        return [
            sum(r[i][k] for i in range(3) if bits >> i & 1) for k in range(3)
        ]

    out = set()
    # lines in L/2L: cyclic subgroups generated by one nonzero class
    for bits in range(1, 8):
        rows = twice + [combo(bits)]
        out.add(canonicalize(rows, dv).rep)
    # planes: kernels of nonzero functionals
    for phi in range(1, 8):
        gens = [
            combo(bits)
            for bits in range(1, 8)
            if bin(bits & phi).count("1") % 2 == 0
        ]
        rows = twice + gens
        out.add(canonicalize(rows, dv).rep)
    verts = sorted(out)
    assert len(verts) == 14
    return [BuildingVertex(rep) for rep in verts]


def ball(v: BuildingVertex, radius: int) -> list:
    """All vertices within gallery distance radius, BFS with canonical
    deduplication; canonically ordered within each distance shell."""
    seen = {v.rep}
    shells = [[v]]
    for _ in range(radius):
        frontier = []
        for u in shells[-1]:
            for w in neighbors(u):
                if w.rep not in seen:
                    seen.add(w.rep)
                    frontier.append(w)
        frontier.sort(key=lambda x: x.rep)
        shells.append(frontier)
    return [u for shell in shells for u in shell]


def _embed_similitude(sim: Similitude, prec: int):
    """Entrywise 2-adic image at LAMBDA as an integer matrix mod 2^prec."""
    r, _ = lambda_images(prec)
    m = 1 << prec
    c = sim.coords
    return [
        [(c[6 * i + 2 * j] + c[6 * i + 2 * j + 1] * r) % m for j in range(3)]
        for i in range(3)
    ]


def det_valuation_at_lambda(sim: Similitude) -> int:
    v = valuation(sim.det, LAMBDA)
    assert isinstance(v, int)
    return v


def act(
    sim: Similitude, v: BuildingVertex, prec: int = DEFAULT_PRECISION
) -> BuildingVertex:
    """Image of the vertex under the similitude: rows transform by right
    multiplication with the embedded matrix, then renormalize.  Retries at
    doubled precision up to the module ceiling."""
    while True:
        try:
            a = _embed_similitude(sim, prec)
            m = 1 << prec
            rows = [
                [
                    sum(v.rep[i][k] * a[k][j] for k in range(3)) % m
                    for j in range(3)
                ]
                for i in range(3)
            ]
            return BuildingVertex(hermite_normal_form(rows, prec))
        except PrecisionError:
            if prec >= MAX_PRECISION:
                raise
            prec = min(2 * prec, MAX_PRECISION)


@dataclass
class TransitivityReport:
    radius: int
    factors: tuple
    ball_size: int
    reached: dict          # vertex rep -> (factor, coords) witness
    unreached: list        # vertex reps with no witness
    stabilizers: list      # non-scalar level-passing elements fixing the base
    candidates: int

    @property
    def transitive(self) -> bool:
        return not self.unreached


def check_transitivity(
    radius: int,
    factors=(1, 2, 4, 8),
    seed: int = 0,
    prec: int = DEFAULT_PRECISION,
) -> TransitivityReport:
    """For every vertex within the given radius of the base vertex, search
    the level-passing enumerated similitudes for one mapping the base there;
    also report any non-scalar level-passing element stabilizing the base
    (the action of the lattice group should have none)."""
    base = standard_vertex()
    targets = ball(base, radius)
    reached: dict = {}
    stabilizers = []
    candidates = 0
    for c in factors:
        for g in enumerate_similitudes(c):
            if not in_gamma_mum(g, seed):
                continue
            candidates += 1
            image = act(g, base, prec)
            if image.rep not in reached:
                reached[image.rep] = (c, g.coords)
            if image == base and not g.is_scalar():
                stabilizers.append(g)
    unreached = [u.rep for u in targets if u.rep not in reached]
    return TransitivityReport(
        radius=radius,
        factors=tuple(factors),
        ball_size=len(targets),
        reached={u.rep: reached[u.rep] for u in targets if u.rep in reached},
        unreached=unreached,
        stabilizers=stabilizers,
        candidates=candidates,
    )


# ---------------------------------------------------------------------------
# Independent BFS oracle with a different vertex encoding: lattices kept as
# rational basis matrices, equality decided by the unimodularity test on the
# transition matrix, no canonical form anywhere.


def _frac_mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]


def _frac_inv(a):
    d = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    adj = [
        [
            a[1][1] * a[2][2] - a[1][2] * a[2][1],
            a[0][2] * a[2][1] - a[0][1] * a[2][2],
            a[0][1] * a[1][2] - a[0][2] * a[1][1],
        ],
        [
            a[1][2] * a[2][0] - a[1][0] * a[2][2],
            a[0][0] * a[2][2] - a[0][2] * a[2][0],
            a[0][2] * a[1][0] - a[0][0] * a[1][2],
        ],
        [
            a[1][0] * a[2][1] - a[1][1] * a[2][0],
            a[0][1] * a[2][0] - a[0][0] * a[2][1],
            a[0][0] * a[1][1] - a[0][1] * a[1][0],
        ],
    ]
    return [[x / d for x in row] for row in adj], d


def _v2_frac(x: Fraction) -> int:
    return _v2(x.numerator) - _v2(x.denominator)


def _is_2_integral(x: Fraction) -> bool:
    return x.denominator % 2 == 1


def _oracle_span_basis(rows):
    """A Z2-basis of the Z2-span of rational generator rows, by elimination
    with minimal-valuation pivoting and 2-integral multipliers only."""
    work = [list(map(Fraction, r)) for r in rows]
    basis = []
    for col in range(3):
        live = [r for r in work if r[col] != 0]
        if not live:
            raise ValueError("rows are not full rank")
        piv = min(live, key=lambda r: _v2_frac(r[col]))
        work.remove(piv)
        for r in work:
            if r[col]:
                q = r[col] / piv[col]
                assert _is_2_integral(q)
                for k in range(3):
                    r[k] -= q * piv[k]
        basis.append(piv)
        work = [r for r in work if any(r)]
    return basis


class _OracleVertex:
    __slots__ = ("basis", "inv", "detv")

    def __init__(self, rows):
        self.basis = _oracle_span_basis(rows)
        self.inv, det = _frac_inv(self.basis)
        self.detv = _v2_frac(det)

    def same_class(self, other: "_OracleVertex") -> bool:
        shift = self.detv - other.detv
        if shift % 3:
            return False
        j = shift // 3
        t = _frac_mat_mul(self.basis, other.inv)
        half = Fraction(1, 2) ** j
        t = [[x * half for x in row] for row in t]
        if not all(_is_2_integral(x) for row in t for x in row):
            return False
        d = (
            t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1])
            - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0])
            + t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0])
        )
        return _v2_frac(d) == 0


def _oracle_neighbors(v: _OracleVertex):
    b = v.basis
    twice = [[2 * x for x in row] for row in b]

    def combo(bits):
        return [
            sum(b[i][k] for i in range(3) if bits >> i & 1) for k in range(3)
        ]

    out = []
    for bits in range(1, 8):
        out.append(_OracleVertex(twice + [combo(bits)]))
    for phi in range(1, 8):
        gens = [
            combo(bits)
            for bits in range(1, 8)
            if bin(bits & phi).count("1") % 2 == 0
        ]
        out.append(_OracleVertex(twice + gens))
    return out


def oracle_ball_size(radius: int) -> int:
    """Ball size around the standard vertex computed by the independent
    encoding (rational bases, pairwise class-equality tests, no canonical
    forms)."""
    start = _OracleVertex([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    known = [start]
    frontier = [start]
    for _ in range(radius):
        new = []
        for u in frontier:
            for w in _oracle_neighbors(u):
                if any(w.same_class(x) for x in known) or any(
                    w.same_class(x) for x in new
                ):
                    continue
                new.append(w)
        known.extend(new)
        frontier = new
    return len(known)
