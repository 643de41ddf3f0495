"""The rank-3 hermitian form h(x, y) = Tr_{L/K}(x ybar) on O_L, its Gram
matrix H (determinant 7, positive definite), the rational decomposition
H = W W*, the involution dagger(A) = H A* H^-1, characteristic polynomials,
float-based signatures, the determinant-mod-norms local equivalence test
for hermitian forms at odd primes, and the splitting of M3(K) at 2.

Sign convention for signatures.  For an anti-hermitian A the matrix A/i is
hermitian once a complex embedding is chosen, and replacing sqrt(-7) by its
negative swaps the positive and negative counts.  The embedding used by
default here is the one under which the reference diagonal for phi(b),
diag(-i, -i, i), is reproduced literally; the other choice (the embedding
epsilon with sqrt(-7) upper half plane, used everywhere else in this
package) gives the swapped signature and is available via orientation=+1.
This is recorded in reports; nothing else in the package depends on it.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import matrices as mx
from .algebra import B_ELT, phi
from .numberfield import (
    LAM,
    LAMBAR,
    LAMBDA,
    LAMBDABAR,
    MU,
    SQRT_M7,
    KElt,
    LElt,
    _as_K,
    to_K_coords,
)
from .padic import DEFAULT_PRECISION, PadicMat

K_ZERO = KElt(0)
K_ONE = KElt(1)


class HermMat:
    """A 3x3 matrix over K flagged hermitian (A* = A) or anti-hermitian
    (A* = -A); the flag is checked at construction."""

    __slots__ = ("entries", "flag")

    def __init__(self, entries, flag: str = "hermitian"):
        entries = mx.mat([[_as_K(x) for x in row] for row in entries])
        ct = mx.conj_transpose(entries)
        if flag == "hermitian":
            if ct != entries:
                raise ValueError("matrix is not hermitian")
        elif flag == "antihermitian":
            if ct != mx.mat_neg(entries):
                raise ValueError("matrix is not anti-hermitian")
        else:
            raise ValueError(f"unknown flag {flag!r}")
        self.entries = entries
        self.flag = flag

    def det(self) -> KElt:
        return mx.det3(self.entries)

    def det_rational(self) -> Fraction:
        return self.det().rational_value()

    def scale(self, c: KElt) -> "HermMat":
        c = _as_K(c)
        flips = c.conj() == -c  # scaling by a purely imaginary element
        flag = self.flag
        if flips:
            flag = "antihermitian" if flag == "hermitian" else "hermitian"
        return HermMat(mx.mat_scalar(c, self.entries), flag)

    def __eq__(self, other):
        return (
            isinstance(other, HermMat)
            and self.entries == other.entries
            and self.flag == other.flag
        )

    def __repr__(self):
        return f"HermMat({self.flag}, {self.entries!r})"


def build_H() -> HermMat:
    """Gram matrix of h on the basis 1, z, z^2 of O_L over O_K."""
    return HermMat(
        (
            (KElt(3), LAMBAR, LAMBAR),
            (LAM, KElt(3), LAMBAR),
            (LAM, LAM, KElt(3)),
        )
    )


def build_W():
    """The rational splitting H = W W*."""
    return mx.mat(
        (
            (LAM, K_ONE, K_ZERO),
            (K_ZERO, LAM, K_ONE),
            (MU, K_ZERO, LAM),
        )
    )


H_MAT = build_H()
_H = H_MAT.entries
_H_INV = mx.inv3(_H)


def build_H_prime() -> HermMat:
    """(lam - lambar) * phi(b): hermitian of determinant 49, the comparison
    form in the local-equivalence check."""
    phib = mx.mat_apply(lambda e: e.to_K(), phi(B_ELT))
    return HermMat(mx.mat_scalar(SQRT_M7, phib))


def gram_h(x: LElt, y: LElt) -> KElt:
    """h(x, y) = Tr_{L/K}(x * conj(y)), valued in K."""
    return (x * y.conj()).trace_LK()


def gram_h_coords(u, v) -> KElt:
    """h on K-coordinate triples (rows), h(u, v) = u H v*."""
    acc = K_ZERO
    for i in range(3):
        for j in range(3):
            acc = acc + u[i] * _H[i][j] * v[j].conj()
    return acc


def dagger(a):
    """The second-kind involution A -> H A* H^-1 on M3(K)."""
    return mx.mat_mul(mx.mat_mul(_H, mx.conj_transpose(a)), _H_INV)


def char_poly(a):
    """Monic characteristic polynomial coefficients (c2, c1, c0) of a 3x3
    matrix over K or L (HermMat accepted)."""
    if isinstance(a, HermMat):
        a = a.entries
    return mx.char_poly3(a)


def embed_matrix_complex(a, conjugate: bool = False) -> np.ndarray:
    if isinstance(a, HermMat):
        a = a.entries
    return np.array(
        [[x.embed(conjugate=conjugate) for x in row] for row in a],
        dtype=complex,
    )


def positive_definite_margin(a) -> float:
    """Smallest eigenvalue of the embedded hermitian matrix."""
    if isinstance(a, HermMat) and a.flag != "hermitian":
        raise ValueError("definiteness is for hermitian matrices")
    m = embed_matrix_complex(a)
    assert np.allclose(m, m.conj().T)
    return float(np.linalg.eigvalsh(m).min())


def signature_antihermitian(
    a, orientation: int = -1, zero_tol: float = 1e-6
):
    """Signature (positives, negatives) of A/i for anti-hermitian A under
    the pinned complex embedding; orientation=+1 switches to the embedding
    epsilon itself and swaps the counts.  Aborts if an eigenvalue sits
    within zero_tol of 0."""
    if isinstance(a, HermMat):
        if a.flag != "antihermitian":
            raise ValueError("signature_antihermitian needs the anti flag")
        a = a.entries
    m = embed_matrix_complex(a, conjugate=(orientation == -1))
    m = -1j * m
    assert np.allclose(m, m.conj().T), "A/i is not hermitian"
    eigs = np.linalg.eigvalsh(m)
    if np.any(np.abs(eigs) < zero_tol):
        raise ArithmeticError(
            f"eigenvalue within {zero_tol} of zero; signature unreliable"
        )
    return int((eigs > 0).sum()), int((eigs < 0).sum())


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _vp(x: Fraction, p: int) -> int:
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def locally_equivalent(a: HermMat, b: HermMat, ell: int) -> bool:
    """Equivalence of two non-degenerate rank-3 hermitian forms over the
    completion of K at an odd prime, decided by the class of det(a)/det(b)
    modulo local norms:

    * ell split in K: the norm map is onto, always equivalent;
    * ell inert: norms are the even-valuation classes, so test parity;
    * ell = 7 (ramified, norm form x^2 + 7 y^2): 7 itself is a norm and a
      unit is a norm exactly when it is a square mod 7.
    """
    if ell == 2:
        raise ValueError("the determinant criterion does not apply at 2")
    if not _is_odd_prime(ell):
        raise ValueError(f"{ell} is not an odd prime")
    for m in (a, b):
        if m.flag != "hermitian":
            raise ValueError("inputs must be hermitian")
    ratio = a.det_rational() / b.det_rational()  # nondegeneracy checked here
    if ell == 7:
        u = ratio / Fraction(7) ** _vp(ratio, 7)
        res = u.numerator * pow(u.denominator, -1, 7) % 7
        return pow(res, 3, 7) == 1  # Euler's criterion for squares mod 7
    legendre = pow(-7 % ell, (ell - 1) // 2, ell)
    if legendre == 1:  # split
        return True
    return _vp(ratio, ell) % 2 == 0


def split_at_2(a, prec: int = DEFAULT_PRECISION):
    """The splitting M3(K) (x) Q2 = M3(Q2) x M3(Q2)^op: entrywise embedding
    at LAMBDA in the first factor and the transpose of the entrywise
    embedding at LAMBDABAR in the second (the transpose makes the second
    component a homomorphism into the opposite ring, so that the standard
    involution * becomes the factor swap)."""
    if isinstance(a, HermMat):
        a = a.entries
    x = PadicMat.from_K_matrix(a, LAMBDA, prec)
    y = PadicMat.from_K_matrix(a, LAMBDABAR, prec).transpose()
    return x, y
