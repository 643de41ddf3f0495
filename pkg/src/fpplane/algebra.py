"""The cyclic division algebra D = L + L*P + L*P^2 over K, where the
generator P satisfies

    P^3 = mu = lam/lambar,        P z = sigma(z) P   for z in L,

together with its two involutions, the order O_D, the splitting map into
3x3 matrices over L, the trace form psi, the local invariants, and the
similitude-group membership predicate.

Elements are coefficient triples (x0, x1, x2) over L.  The splitting map
phi sends z to diag(z, sigma^2 z, sigma z) and P to the companion-style
matrix Q with mu in the corner; it is a ring isomorphism onto the
sigma-twisted centralizer of Q, which is how inverses are computed.

The first involution is star: P -> mubar P^2, z -> zbar.  The element

    b = (lam - lambar) - lambar P + lambar P^2

is star-antisymmetric and induces the second involution
bigstar(x) = b star(x) b^-1 and the rational bilinear form
psi(x, y) = tr(y b star(x)).
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import matrices as mx
from .numberfield import (
    LAM,
    LAMBAR,
    LAMBDA,
    LAMBDABAR,
    MU,
    ONE_L,
    SEVEN,
    ZERO_L,
    KElt,
    LElt,
    Place,
    _as_L,
    valuation,
    valuation_L,
)

MUBAR = MU.conj()


class DElt:
    """x0 + x1*P + x2*P^2 with L coefficients."""

    __slots__ = ("x0", "x1", "x2")

    def __init__(self, x0, x1=ZERO_L, x2=ZERO_L):
        self.x0 = _as_L(x0)
        self.x1 = _as_L(x1)
        self.x2 = _as_L(x2)

    @classmethod
    def from_L(cls, z) -> "DElt":
        return cls(z)

    def coeffs(self):
        return (self.x0, self.x1, self.x2)

    def __add__(self, other):
        other = _as_D(other)
        return DElt(self.x0 + other.x0, self.x1 + other.x1, self.x2 + other.x2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_D(other)
        return DElt(self.x0 - other.x0, self.x1 - other.x1, self.x2 - other.x2)

    def __rsub__(self, other):
        return _as_D(other) - self

    def __neg__(self):
        return DElt(-self.x0, -self.x1, -self.x2)

    def __mul__(self, other):
        other = _as_D(other)
        x0, x1, x2 = self.x0, self.x1, self.x2
        y0, y1, y2 = other.x0, other.x1, other.x2
        mu = MU.to_L()
        # P^i z = sigma^i(z) P^i and P^3 = mu
        z0 = x0 * y0 + mu * (x1 * y2.galois(1) + x2 * y1.galois(2))
        z1 = x0 * y1 + x1 * y0.galois(1) + mu * (x2 * y2.galois(2))
        z2 = x0 * y2 + x1 * y1.galois(1) + x2 * y0.galois(2)
        return DElt(z0, z1, z2)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _as_D(other)
        except TypeError:
            return NotImplemented
        return (
            self.x0 == other.x0 and self.x1 == other.x1 and self.x2 == other.x2
        )

    def __hash__(self):
        return hash((self.x0, self.x1, self.x2))

    def __bool__(self):
        return bool(self.x0) or bool(self.x1) or bool(self.x2)

    def __repr__(self):
        return f"D({self.x0!r}; {self.x1!r}; {self.x2!r})"


def _as_D(x) -> DElt:
    if isinstance(x, DElt):
        return x
    if isinstance(x, (LElt, KElt, int, Fraction)):
        return DElt(_as_L(x))
    raise TypeError(f"cannot coerce {type(x).__name__} into D")


ONE_D = DElt(ONE_L)
PI = DElt(ZERO_L, ONE_L)


def mul_D(x: DElt, y: DElt) -> DElt:
    return _as_D(x) * _as_D(y)


def phi(x: DElt):
    """The splitting map into M3(L): multiplication in the first summand of
    D (x)_K L on the basis 1, P, P^2."""
    x = _as_D(x)
    x0, x1, x2 = x.x0, x.x1, x.x2
    mu = MU.to_L()
    return (
        (x0, mu * x2, mu * x1),
        (x1.galois(2), x0.galois(2), mu * x2.galois(2)),
        (x2.galois(1), x1.galois(1), x0.galois(1)),
    )


Q_MAT = phi(PI)


def phi_inverse(m) -> DElt:
    """Read a matrix in the image of phi back off its first row."""
    mu_inv = MU.inv().to_L()
    x = DElt(m[0][0], m[0][2] * mu_inv, m[0][1] * mu_inv)
    if phi(x) != mx.mat(m):
        raise ValueError("matrix is not in the image of phi")
    return x


def inv_D(x: DElt) -> DElt:
    x = _as_D(x)
    if not x:
        raise ZeroDivisionError("inverse of 0 in D")
    return phi_inverse(mx.inv3(phi(x)))


def reduced_trace(x: DElt) -> KElt:
    return mx.trace(phi(x)).to_K()


def reduced_norm(x: DElt) -> KElt:
    return mx.det3(phi(x)).to_K()


def star(x: DElt) -> DElt:
    """The first involution: z -> zbar, P -> mubar P^2."""
    x = _as_D(x)
    mubar = MUBAR.to_L()
    return DElt(
        x.x0.conj(),
        mubar * x.x2.conj().galois(1),
        mubar * x.x1.conj().galois(2),
    )


def build_b() -> DElt:
    return DElt(
        (LAM - LAMBAR).to_L(), -LAMBAR.to_L(), LAMBAR.to_L()
    )


B_ELT = build_b()
_B_INV = inv_D(B_ELT)


def bigstar_by_definition(x: DElt) -> DElt:
    """The second-kind involution twisted by b, straight from the formula."""
    return B_ELT * star(x) * _B_INV


def _coords18(x: DElt):
    return (*x.x0.coeffs, *x.x1.coeffs, *x.x2.coeffs)


def _from_coords18(c) -> DElt:
    return DElt(
        LElt._raw(tuple(c[0:6])),
        LElt._raw(tuple(c[6:12])),
        LElt._raw(tuple(c[12:18])),
    )


def _bigstar_matrix():
    # bigstar is Q-linear on the 18-dimensional algebra; its coordinate
    # matrix is applied as a matvec, much cheaper than two ring products
    cols = [_coords18(bigstar_by_definition(e)) for e in d_basis()]
    return tuple(tuple(col[i] for col in cols) for i in range(18))


_BIGSTAR_MAT: tuple | None = None


def bigstar(x: DElt) -> DElt:
    """The second-kind involution x -> b star(x) b^-1 (as a precomputed
    linear operator)."""
    global _BIGSTAR_MAT
    if _BIGSTAR_MAT is None:
        _BIGSTAR_MAT = _bigstar_matrix()
    cin = _coords18(_as_D(x))
    zero = Fraction(0)
    out = [
        sum((m * c for m, c in zip(row, cin) if c), zero)
        for row in _BIGSTAR_MAT
    ]
    return _from_coords18(out)


def psi(x: DElt, y: DElt) -> Fraction:
    """The rational bilinear form tr_{D/Q}(y b star(x)) on V = D; here the
    trace is the reduced trace followed by the trace of K/Q."""
    w = _as_D(y) * B_ELT * star(x)
    return reduced_trace(w).trace_KQ()


def d_basis():
    """The 18-element Q-basis z^i P^j of D."""
    basis = []
    for j in range(3):
        for i in range(6):
            c = [ZERO_L, ZERO_L, ZERO_L]
            c[j] = LElt.zeta(i)
            basis.append(DElt(*c))
    return basis


def psi_gram():
    """Gram matrix of psi on the 18-element Q-basis of V."""
    basis = d_basis()
    return [[psi(x, y) for y in basis] for x in basis]


def in_order_OD(x: DElt, localized_at: Place | None = None) -> bool:
    """Membership in O_D = O_L + O_L lambar P + O_L lambar P^2, globally or
    localized at one of the places over 2."""
    x = _as_D(x)
    lam_over_2 = LAM.to_L() * Fraction(1, 2)  # 1/lambar
    parts = (x.x0, x.x1 * lam_over_2, x.x2 * lam_over_2)
    if localized_at is None:
        return all(p.is_integral() for p in parts)
    if localized_at not in (LAMBDA, LAMBDABAR):
        raise ValueError("localization implemented at the places over 2 only")
    return all(
        (not p) or valuation_L(p, localized_at) >= 0 for p in parts
    )


def hasse_invariants(odd_primes=(3, 5, 11, 13)) -> dict:
    """Local invariants of D: v(mu)/3 at the two unramified places over 2
    (where sigma is the Frobenius), 0 at odd unramified places where mu is
    a unit, and the reciprocity complement at the ramified place 7."""
    inv = {}
    inv[LAMBDA] = Fraction(valuation(MU, LAMBDA), 3)
    inv[LAMBDABAR] = Fraction(valuation(MU, LAMBDABAR), 3)
    for ell in odd_primes:
        # mu is integral away from 2 and has norm 1, hence is a unit above
        # every odd prime; the unramified cyclic algebra with unit class
        # splits.
        nrm = MU.norm_KQ()
        assert nrm.numerator % ell and nrm.denominator % ell
        assert MU.a.denominator % ell and MU.b.denominator % ell
        inv[Place.rational(ell)] = Fraction(0)
    partial = sum(inv.values())
    inv[SEVEN] = Fraction(-partial) % 1  # assigned by reciprocity
    return inv


def in_group_G(x: DElt):
    """Similitude-group membership: x bigstar(x) must be a nonzero rational
    scalar, which is returned as the factor."""
    x = _as_D(x)
    w = x * bigstar(x)
    if w.x1 or w.x2 or not w.x0.is_rational():
        return False, None
    c = w.x0.rational_value()
    if not c:
        return False, None
    return True, c


def _pair_mul(p, q):
    # A x A^op as pairs; second component multiplies in reverse
    return (mx.mat_mul(p[0], q[0]), mx.mat_mul(q[1], p[1]))


def _involution_iu(p, u, u_inv):
    x, y = p
    return (
        mx.mat_mul(mx.mat_mul(u, y), u_inv),
        mx.mat_mul(mx.mat_mul(u_inv, x), u),
    )


def check_conjugation_transport(u, samples) -> bool:
    """Concrete instance of the inner-twist lemma: conjugating A x A^op by
    (1, u) carries the involution i_u to the factor swap i_1."""
    u_inv = mx.inv3(u)
    for x, y in samples:
        p = (x, y)
        lhs = _conjugate_by_1u(_involution_iu(p, u, u_inv), u, u_inv)
        rhs = _swap(_conjugate_by_1u(p, u, u_inv))
        if lhs != rhs:
            return False
    return True


def _conjugate_by_1u(p, u, u_inv):
    x, y = p
    return (x, mx.mat_mul(mx.mat_mul(u, y), u_inv))


def _swap(p):
    return (p[1], p[0])


def check_inner_form_data(seed: int = 0, samples: int = 12) -> dict:
    """The identities behind the inner-form comparison of the two groups:

    (i)   Q^-1 sigma(phi(x)) Q = phi(x) for x in a Q-basis of D, sigma acting
          entrywise (phi(D) is the sigma-twisted invariant ring);
    (ii)  phi(b) Q = Q phi(b);
    (iii) conjugation by (1, u) transports i_u to the factor swap on sampled
          pairs, for u = H and u = phi(b) over K.

    Returns a dict of identity name -> bool.
    """
    from .hermitian import build_H  # local import; hermitian imports algebra

    rng = random.Random(seed)
    report = {}

    q_inv = mx.inv3(Q_MAT)
    ok = True
    for x in d_basis():
        m = phi(x)
        m_sigma = mx.mat_apply(lambda e: e.galois(1), m)
        if mx.mat_mul(mx.mat_mul(q_inv, m_sigma), Q_MAT) != mx.mat(m):
            ok = False
            break
    report["twisted_invariance_of_phi_image"] = ok

    phib = phi(B_ELT)
    report["phi_b_commutes_with_Q"] = mx.mat_mul(phib, Q_MAT) == mx.mat_mul(
        Q_MAT, phib
    )

    def rand_kmat():
        return mx.mat(
            [
                [
                    KElt(
                        Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
                        Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
                    )
                    for _ in range(3)
                ]
                for _ in range(3)
            ]
        )

    pairs = [(rand_kmat(), rand_kmat()) for _ in range(samples)]
    h = build_H().entries
    phib_K = mx.mat_apply(lambda e: e.to_K(), phib)
    report["transport_i_H_to_i_1"] = check_conjugation_transport(h, pairs)
    report["transport_i_phib_to_i_1"] = check_conjugation_transport(
        phib_K, pairs
    )
    return report
