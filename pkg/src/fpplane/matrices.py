"""Small exact linear algebra helpers: 3x3 matrices over any ring whose
elements implement +, -, *, conj() and (where needed) inv(), plus dense
rational elimination for the few larger determinants and rank computations
the verification suite needs.

Matrices are plain nested tuples; everything here is pure and allocation
cheap, which keeps the property-test loops fast enough.
"""

from __future__ import annotations

from fractions import Fraction


def mat(rows):
    return tuple(tuple(r) for r in rows)


def dim(a) -> int:
    return len(a)


def mat_add(a, b):
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_sub(a, b):
    return tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_neg(a):
    return tuple(tuple(-x for x in r) for r in a)


def mat_mul(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    out = []
    for ra in a:
        row = []
        for cb in bt:
            acc = ra[0] * cb[0]
            for x, y in zip(ra[1:], cb[1:]):
                acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_scalar(c, a):
    return tuple(tuple(c * x for x in r) for r in a)


def transpose(a):
    return tuple(zip(*a))


def conj_transpose(a):
    return tuple(tuple(x.conj() for x in col) for col in zip(*a))


def mat_apply(f, a):
    return tuple(tuple(f(x) for x in r) for r in a)


def identity(one, zero):
    return (
        (one, zero, zero),
        (zero, one, zero),
        (zero, zero, one),
    )


def scalar_mat(c, zero):
    return ((c, zero, zero), (zero, c, zero), (zero, zero, c))


def trace(a):
    t = a[0][0]
    for i in range(1, len(a)):
        t = t + a[i][i]
    return t


def det3(a):
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = a
    return (
        a11 * (a22 * a33 - a23 * a32)
        - a12 * (a21 * a33 - a23 * a31)
        + a13 * (a21 * a32 - a22 * a31)
    )


def adjugate3(a):
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = a
    return (
        (a22 * a33 - a23 * a32, a13 * a32 - a12 * a33, a12 * a23 - a13 * a22),
        (a23 * a31 - a21 * a33, a11 * a33 - a13 * a31, a13 * a21 - a11 * a23),
        (a21 * a32 - a22 * a31, a12 * a31 - a11 * a32, a11 * a22 - a12 * a21),
    )


def inv3(a):
    d = det3(a)
    dinv = d.inv()
    return mat_scalar(dinv, adjugate3(a))


def char_poly3(a):
    """Coefficients (c2, c1, c0) of the monic characteristic polynomial
    t^3 + c2 t^2 + c1 t + c0 = det(tI - A): c2 = -trace, c1 = sum of the
    principal 2x2 minors, c0 = -det."""
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = a
    c2 = -(a11 + a22 + a33)
    c1 = (
        (a11 * a22 - a12 * a21)
        + (a11 * a33 - a13 * a31)
        + (a22 * a33 - a23 * a32)
    )
    c0 = -det3(a)
    return (c2, c1, c0)


def is_scalar(a, zero) -> bool:
    n = len(a)
    d = a[0][0]
    for i in range(n):
        for j in range(n):
            if i == j:
                if a[i][j] != d:
                    return False
            elif a[i][j] != zero:
                return False
    return True


def fraction_det(rows) -> Fraction:
    """Determinant of a square matrix of Fractions by exact elimination."""
    a = [list(map(Fraction, r)) for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def fraction_rank(rows) -> int:
    a = [list(map(Fraction, r)) for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        for r in range(m):
            if r != row and a[r][col]:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[row][c]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def ldl_pivots(g):
    """Pivot list of the LDL^T decomposition of a symmetric rational matrix.

    Returns None if a zero pivot with a nonzero row is hit (the matrix is
    then not definite, which is all callers need to know)."""
    n = len(g)
    a = [[Fraction(x) for x in row] for row in g]
    pivots = []
    for k in range(n):
        p = a[k][k]
        if p == 0:
            if any(a[k][j] for j in range(k, n)):
                return None
            pivots.append(Fraction(0))
            continue
        pivots.append(p)
        for i in range(k + 1, n):
            f = a[i][k] / p
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return pivots


def is_positive_semidefinite(g) -> bool:
    pivots = ldl_pivots(g)
    return pivots is not None and all(p >= 0 for p in pivots)
