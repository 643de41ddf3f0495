"""Exact arithmetic in the degree-6 cyclotomic field L = Q(z) generated by a
primitive 7th root of unity z, and in its imaginary quadratic subfield
K = Q(lam), lam = z + z^2 + z^4.

Elements of L live on the rational power basis 1, z, ..., z^5 subject to
z^7 = 1 and 1 + z + ... + z^6 = 0.  Elements of K are pairs a + b*lam with

    lam^2 + lam + 2 = 0,      lambar = -1 - lam,      lam * lambar = 2,

so the rational prime 2 splits in K as lam * lambar, and 7 ramifies with
sqrt(-7) = lam - lambar = 2*lam + 1.  The Frobenius sigma: z -> z^2
generates Gal(L/K) (order 3); complex conjugation z -> z^6 generates the
rest of Gal(L/Q).

All equalities are decided exactly over Fraction; the complex embeddings
are float valued and are used only for inequality checks.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

INFINITY = math.inf

_SQRT7 = math.sqrt(7.0)
_F0 = Fraction(0)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Place:
    """A place of K (or of Q below it).

    LAMBDA and LAMBDABAR are the two primes of K over 2, pinned so that the
    2-adic image of lam at LAMBDA has valuation 1.  SEVEN is the ramified
    prime over 7, normalized with v(sqrt(-7)) = 1.  RATIONAL(l) stands for
    the places over an odd prime l != 7.  The two infinite tags are the
    complex embeddings: EPSILON for K, THETA for L.
    """

    __slots__ = ("kind", "prime")

    def __init__(self, kind: str, prime: int | None = None):
        self.kind = kind
        self.prime = prime

    @classmethod
    def rational(cls, ell: int) -> "Place":
        if ell == 2 or ell == 7 or ell < 2:
            raise ValueError("RATIONAL places are the odd primes other than 7")
        return cls("rational", ell)

    def is_finite(self) -> bool:
        return self.kind in ("lambda", "lambdabar", "seven", "rational")

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and self.kind == other.kind
            and self.prime == other.prime
        )

    def __hash__(self):
        return hash((self.kind, self.prime))

    def __repr__(self):
        if self.kind == "rational":
            return f"Place(rational {self.prime})"
        return f"Place({self.kind})"


LAMBDA = Place("lambda")
LAMBDABAR = Place("lambdabar")
SEVEN = Place("seven")
INFINITE_EPSILON = Place("epsilon")
INFINITE_THETA = Place("theta")


def _reduce_pairs(pairs) -> tuple:
    """Collect (exponent, coefficient) pairs into canonical coordinates.

    Exponents are first reduced mod 7; a z^6 contribution c is rewritten as
    -c * (1 + z + ... + z^5).
    """
    out = [Fraction(0)] * 6
    for e, c in pairs:
        if not c:
            continue
        e %= 7
        if e == 6:
            for i in range(6):
                out[i] -= c
        else:
            out[e] += c
    return tuple(out)


class LElt:
    """An element of L = Q(z) in canonical power-basis coordinates."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(_frac(c) for c in coeffs)
        if len(coeffs) != 6:
            raise ValueError("LElt needs 6 coordinates on 1, z, ..., z^5")
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, coeffs: tuple) -> "LElt":
        # internal: coords already canonical Fractions
        out = object.__new__(cls)
        out.coeffs = coeffs
        return out

    @classmethod
    def zeta(cls, power: int = 1) -> "LElt":
        return cls(_reduce_pairs([(power, Fraction(1))]))

    @classmethod
    def from_rational(cls, a) -> "LElt":
        return cls((_frac(a), 0, 0, 0, 0, 0))

    def __add__(self, other):
        other = _as_L(other)
        return LElt._raw(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_L(other)
        return LElt._raw(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return _as_L(other) - self

    def __neg__(self):
        return LElt._raw(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = _as_L(other)
        # convolution into 11 slots; exponents 7..10 wrap to 0..3 and the
        # z^6 slot is rewritten as -(1 + z + ... + z^5)
        c = [_F0] * 11
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            bs = other.coeffs
            for j in range(6):
                b = bs[j]
                if b:
                    c[i + j] += a * b
        s = c[6]
        if s:
            return LElt._raw(
                (
                    c[0] + c[7] - s,
                    c[1] + c[8] - s,
                    c[2] + c[9] - s,
                    c[3] + c[10] - s,
                    c[4] - s,
                    c[5] - s,
                )
            )
        return LElt._raw(
            (c[0] + c[7], c[1] + c[8], c[2] + c[9], c[3] + c[10], c[4], c[5])
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _as_L(other).inv()

    def __rtruediv__(self, other):
        return _as_L(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        acc = ONE_L
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        try:
            other = _as_L(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def _exp_map(self, m: int) -> "LElt":
        out = [_F0] * 6
        s = _F0
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            t = i * m % 7
            if t == 6:
                s += c
            else:
                out[t] += c
        if s:
            return LElt._raw(tuple(x - s for x in out))
        return LElt._raw(tuple(out))

    def galois(self, power: int) -> "LElt":
        """Apply sigma^power, sigma: z -> z^2 (the Frobenius generating
        Gal(L/K); it has order 3, so the power only matters mod 3)."""
        return self._exp_map(pow(2, power % 6, 7))

    def conj(self) -> "LElt":
        """Complex conjugation z -> z^6 (generates Gal(L/Q) over <sigma>)."""
        return self._exp_map(6)

    def trace_LK(self) -> "KElt":
        return (self + self.galois(1) + self.galois(2)).to_K()

    def norm_LK(self) -> "KElt":
        return (self * self.galois(1) * self.galois(2)).to_K()

    def trace_LQ(self) -> Fraction:
        # Tr(1) = 6 and Tr(z^k) = -1 for k != 0 mod 7.
        c = self.coeffs
        return 6 * c[0] - (c[1] + c[2] + c[3] + c[4] + c[5])

    def norm_LQ(self) -> Fraction:
        n = self.norm_LK()
        return n.norm_KQ()

    def inv(self) -> "LElt":
        if not self:
            raise ZeroDivisionError("inverse of 0 in L")
        # x^-1 = (product of the five other Galois conjugates) / N_{L/Q}(x)
        prod = ONE_L
        for g in (self.galois(1), self.galois(2), self.conj(),
                  self.conj().galois(1), self.conj().galois(2)):
            prod = prod * g
        n = (self * prod).coeffs
        assert all(c == 0 for c in n[1:]), "norm computation left the rationals"
        return LElt(tuple(c / n[0] for c in prod.coeffs))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_in_K(self) -> bool:
        return self.galois(1) == self

    def to_K(self) -> "KElt":
        """Write a sigma-fixed element as a + b*lam."""
        c = self.coeffs
        cand = KElt(c[0], c[1])
        if cand.to_L() != self:
            raise ValueError(f"{self!r} does not lie in K")
        return cand

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def embed(self, place: Place = INFINITE_THETA) -> complex:
        """Complex embedding. THETA sends z to exp(2*pi*i/7); EPSILON is its
        restriction to K and rejects elements outside K."""
        if place == INFINITE_EPSILON:
            if not self.is_in_K():
                raise ValueError("EPSILON only embeds elements of K")
        elif place != INFINITE_THETA:
            raise ValueError(f"not a complex embedding: {place}")
        w = cmath.exp(2j * cmath.pi / 7)
        return sum(float(c) * w**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"


def _as_L(x) -> LElt:
    if isinstance(x, LElt):
        return x
    if isinstance(x, KElt):
        return x.to_L()
    if isinstance(x, (int, Fraction)):
        return LElt.from_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into L")


class KElt:
    """An element a + b*lam of K = Q(lam), lam^2 + lam + 2 = 0."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = _frac(a)
        self.b = _frac(b)

    def __add__(self, other):
        other = _as_K(other)
        return KElt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_K(other)
        return KElt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return _as_K(other) - self

    def __neg__(self):
        return KElt(-self.a, -self.b)

    def __mul__(self, other):
        other = _as_K(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + b lam)(c + d lam), lam^2 = -lam - 2
        return KElt(a * c - 2 * b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _as_K(other).inv()

    def __rtruediv__(self, other):
        return _as_K(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        acc = KElt(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        try:
            other = _as_K(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def conj(self) -> "KElt":
        return KElt(self.a - self.b, -self.b)

    def norm_KQ(self) -> Fraction:
        return self.a * self.a - self.a * self.b + 2 * self.b * self.b

    def trace_KQ(self) -> Fraction:
        return 2 * self.a - self.b

    def inv(self) -> "KElt":
        n = self.norm_KQ()
        if not n:
            raise ZeroDivisionError("inverse of 0 in K")
        c = self.conj()
        return KElt(c.a / n, c.b / n)

    def to_L(self) -> LElt:
        a, b = self.a, self.b
        return LElt((a, b, b, 0, b, 0))

    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self!r} is not rational")
        return self.a

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def embed(self, conjugate: bool = False) -> complex:
        """The embedding epsilon: lam -> (-1 + sqrt(7) i)/2.  With
        conjugate=True use the other infinite place."""
        s = -_SQRT7 if conjugate else _SQRT7
        lam = complex(-0.5, s / 2.0)
        return float(self.a) + float(self.b) * lam

    def __repr__(self):
        if not self.b:
            return f"{self.a}"
        if not self.a:
            return f"{self.b}*lam"
        return f"{self.a} + {self.b}*lam"


def _as_K(x) -> KElt:
    if isinstance(x, KElt):
        return x
    if isinstance(x, (int, Fraction)):
        return KElt(x)
    if isinstance(x, LElt):
        return x.to_K()
    raise TypeError(f"cannot coerce {type(x).__name__} into K")


ZERO_L = LElt((0, 0, 0, 0, 0, 0))
ONE_L = LElt((1, 0, 0, 0, 0, 0))
ZETA = LElt.zeta()

LAM = KElt(0, 1)
LAMBAR = LAM.conj()          # -1 - lam
MU = LAM / LAMBAR            # -1 - lam/2, the algebra constant of norm 1
SQRT_M7 = LAM - LAMBAR       # 2*lam + 1, a square root of -7


# Named operation aliases; thin wrappers over the methods above.

def mul_L(x: LElt, y: LElt) -> LElt:
    return _as_L(x) * _as_L(y)


def galois(x: LElt, power: int) -> LElt:
    return _as_L(x).galois(power)


def conj_L(x: LElt) -> LElt:
    return _as_L(x).conj()


def embed_complex(x, place: Place) -> complex:
    return _as_L(x).embed(place)


def _v2(n: int) -> int:
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _vp_frac(x: Fraction, p: int):
    if not x:
        return INFINITY
    return _vp(x.numerator, p) - _vp(x.denominator, p)


def _integral_scale(x: KElt) -> int:
    return math.lcm(x.a.denominator, x.b.denominator)


def _v_prime_over_2(y: KElt, other_gen: KElt) -> int:
    """Valuation of an integral y at the prime generated by the conjugate of
    other_gen; division by the prime is multiplication by other_gen / 2."""
    v = 0
    while y:
        z = y * other_gen
        if z.a.numerator % 2 or z.b.numerator % 2:
            break
        y = KElt(z.a / 2, z.b / 2)
        v += 1
    return v


def _split_prime_generator(ell: int) -> KElt:
    """A generator of one prime of O_K over a split odd prime ell, found by
    solving the norm form a^2 - a*b + 2*b^2 = ell."""
    for b in range(1, ell + 1):
        disc = b * b - 8 * b * b + 4 * ell  # from a^2 - ab + 2b^2 = ell
        if disc < 0:
            continue
        r = math.isqrt(disc)
        if r * r != disc:
            continue
        for a in ((b + r) // 2, (b - r) // 2):
            if a * a - a * b + 2 * b * b == ell:
                return KElt(a, b)
    raise ArithmeticError(f"no element of norm {ell} found; is {ell} split?")


def _v_split_prime(x: KElt, pi: KElt, ell: int) -> int:
    """Valuation of x at the prime (pi) over the split odd prime ell; one
    division by pi is multiplication by conj(pi) followed by division by
    ell = pi * conj(pi)."""
    d = _integral_scale(x)
    y = x * d
    v = -_vp(d, ell)
    while y:
        z = y * pi.conj()
        if z.a.numerator % ell or z.b.numerator % ell:
            break
        y = KElt(z.a / ell, z.b / ell)
        v += 1
    return v


def valuation(x, place: Place):
    """Normalized additive valuation of a K-element at a finite place.

    Conventions: v(lam) = 1 at LAMBDA, v(lambar) = 1 at LAMBDABAR,
    v(sqrt(-7)) = 1 at SEVEN.  At RATIONAL(l) the value is the common
    valuation of the places over l; if l splits and the two valuations
    disagree, a ValueError explains the ambiguity.  Returns the INFINITY
    sentinel for x = 0.
    """
    x = _as_K(x)
    if not x:
        return INFINITY
    if place in (LAMBDA, LAMBDABAR):
        d = _integral_scale(x)
        y = x * d
        gen = LAMBAR if place == LAMBDA else LAM
        return _v_prime_over_2(y, gen) - _v2(d)
    if place == SEVEN:
        # v is conjugation-stable, so v(x) equals the plain 7-adic valuation
        # of the rational norm.
        return _vp_frac(x.norm_KQ(), 7)
    if place.kind == "rational":
        ell = place.prime
        if x.is_rational():
            return _vp_frac(x.a, ell)
        if pow(-7 % ell, (ell - 1) // 2, ell) == ell - 1:  # inert
            v = _vp_frac(x.norm_KQ(), ell)
            assert v % 2 == 0
            return v // 2
        pi = _split_prime_generator(ell)
        v1 = _v_split_prime(x, pi, ell)
        v2 = _v_split_prime(x, pi.conj(), ell)
        if v1 != v2:
            raise ValueError(
                f"{ell} splits in K and the two valuations of {x!r} differ "
                f"({v1} vs {v2}); pick a place explicitly"
            )
        return v1
    raise ValueError(f"not a finite place: {place}")


def valuation_L(x: LElt, place: Place):
    """Valuation of an L-element at the unique prime of L over LAMBDA or
    LAMBDABAR.  L/K is unramified of degree 3 there, so the value is
    v_place(N_{L/K} x) / 3."""
    if place not in (LAMBDA, LAMBDABAR):
        raise ValueError("only the places over 2 are needed for L")
    x = _as_L(x)
    if not x:
        return INFINITY
    v = valuation(x.norm_LK(), place)
    assert v % 3 == 0, "norm valuation must be divisible by the residue degree"
    return v // 3


# O_K-module structure of O_L on the basis 1, z, z^2.  The minimal
# polynomial of z over K is t^3 - lam t^2 + lambar t - 1, giving
#   z^3 = 1 - lambar z + lam z^2
#   z^4 = lam - z - z^2
#   z^5 = -1 - z + lambar z^2
_Z3 = (KElt(1), -LAMBAR, LAM)
_Z4 = (LAM, KElt(-1), KElt(-1))
_Z5 = (KElt(-1), KElt(-1), LAMBAR)


def to_K_coords(x: LElt) -> tuple:
    """Coordinates of x on the O_K-basis 1, z, z^2 of O_L (a K-basis of L)."""
    c = [_frac(v) for v in _as_L(x).coeffs]
    k = [KElt(c[0]), KElt(c[1]), KElt(c[2])]
    for coeff, red in ((c[3], _Z3), (c[4], _Z4), (c[5], _Z5)):
        if coeff:
            for i in range(3):
                k[i] = k[i] + coeff * red[i]
    return tuple(k)


def from_K_coords(coords) -> LElt:
    k0, k1, k2 = (_as_K(c) for c in coords)
    return k0.to_L() + k1.to_L() * ZETA + k2.to_L() * LElt.zeta(2)
