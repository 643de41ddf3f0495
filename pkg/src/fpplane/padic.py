"""Fixed-precision 2-adic integers and 3x3 matrices, plus the two Hensel
embeddings of K = Q(lam) into Q2.

lam satisfies lam^2 + lam + 2 = 0, and that quadratic has two roots in Z2
(its discriminant -7 is 1 mod 8): one root with 2-adic valuation 1 and one
that is a unit.  The place LAMBDA is pinned to the valuation-1 root; this
is a convention the source material never fixes, and it is recorded in all
reports.  Both roots together realize the splitting K (x) Q2 = Q2 x Q2.

Values never claim more precision than the inputs justify, and questions
the stored bits cannot answer (valuation of a residue that is 0 mod 2^N,
equality beyond the tracked modulus) raise PrecisionError instead of
guessing, so callers can retry at doubled precision.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .numberfield import LAMBDA, LAMBDABAR, KElt, Place, valuation

DEFAULT_PRECISION = 64
MAX_PRECISION = 1024


class PrecisionError(ArithmeticError):
    """The tracked 2-adic precision cannot decide the question asked."""


def _v2(n: int) -> int:
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


class PadicInt:
    """An element of Z2 known modulo 2^prec.

    valuation_floor is a proven lower bound on the 2-adic valuation; it is
    carried through arithmetic so product precision never overstates what
    the operands support.
    """

    __slots__ = ("value", "prec", "valuation_floor")

    def __init__(self, value: int, prec: int, valuation_floor: int = 0):
        if prec < 1:
            raise ValueError("precision must be at least 1 bit")
        self.prec = prec
        self.value = value % (1 << prec)
        self.valuation_floor = min(valuation_floor, prec)

    def __add__(self, other):
        other = _as_padic(other, self.prec)
        p = min(self.prec, other.prec)
        return PadicInt(
            self.value + other.value,
            p,
            min(self.valuation_floor, other.valuation_floor),
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_padic(other, self.prec))

    def __rsub__(self, other):
        return _as_padic(other, self.prec) + (-self)

    def __neg__(self):
        return PadicInt(-self.value, self.prec, self.valuation_floor)

    def __mul__(self, other):
        other = _as_padic(other, self.prec)
        p = min(
            self.prec + other.valuation_floor,
            other.prec + self.valuation_floor,
        )
        p = min(p, max(self.prec, other.prec))
        return PadicInt(
            self.value * other.value,
            p,
            self.valuation_floor + other.valuation_floor,
        )

    __rmul__ = __mul__

    def valuation(self) -> int:
        if self.value == 0:
            raise PrecisionError(
                f"residue is 0 mod 2^{self.prec}; valuation undecidable"
            )
        return _v2(self.value)

    def is_zero_mod(self, bits: int) -> bool:
        if bits > self.prec:
            raise PrecisionError(f"only {self.prec} bits tracked, asked {bits}")
        return self.value % (1 << bits) == 0

    def unit_inverse(self) -> "PadicInt":
        if self.value % 2 == 0:
            raise ZeroDivisionError("not a 2-adic unit")
        return PadicInt(pow(self.value, -1, 1 << self.prec), self.prec)

    def shift(self, k: int) -> "PadicInt":
        """Multiply by 2^k (k >= 0: exact; k < 0: requires divisibility)."""
        if k >= 0:
            return PadicInt(
                self.value << k, self.prec + k, self.valuation_floor + k
            )
        if self.value % (1 << -k):
            raise ValueError("not divisible by the requested power of 2")
        return PadicInt(
            self.value >> -k,
            self.prec + k,
            max(self.valuation_floor + k, 0),
        )

    def eq_mod(self, other, bits: int) -> bool:
        other = _as_padic(other, self.prec)
        if bits > min(self.prec, other.prec):
            raise PrecisionError(
                f"comparison mod 2^{bits} exceeds tracked precision"
            )
        return (self.value - other.value) % (1 << bits) == 0

    def __eq__(self, other):
        try:
            other = _as_padic(other, self.prec)
        except TypeError:
            return NotImplemented
        return self.eq_mod(other, min(self.prec, other.prec))

    def __hash__(self):
        raise TypeError("PadicInt is approximate; not hashable")

    def __repr__(self):
        return f"PadicInt({self.value} mod 2^{self.prec})"


def _as_padic(x, prec: int) -> PadicInt:
    if isinstance(x, PadicInt):
        return x
    if isinstance(x, int):
        return PadicInt(x, prec, _v2(x) if x else prec)
    raise TypeError(f"cannot coerce {type(x).__name__} into Z2")


def hensel_root_lambda(prec: int = DEFAULT_PRECISION) -> PadicInt:
    """The root of t^2 + t + 2 in Z2 with valuation 1 (the image of lam at
    the place LAMBDA).  Newton iteration from the branch r = 2 mod 4; the
    other root, a 2-adic unit, is -1 - r."""
    if prec < 2:
        raise ValueError("need at least 2 bits")
    r, bits = 2, 2
    while bits < prec:
        bits = min(2 * bits, prec)
        mod = 1 << bits
        f = (r * r + r + 2) % mod
        fprime_inv = pow(2 * r + 1, -1, mod)
        r = (r - f * fprime_inv) % mod
    assert (r * r + r + 2) % (1 << prec) == 0
    assert r % 4 == 2
    return PadicInt(r, prec, valuation_floor=1)


def lambda_images(prec: int = DEFAULT_PRECISION) -> tuple:
    """Integer residues mod 2^prec of lam at (LAMBDA, LAMBDABAR)."""
    r = hensel_root_lambda(prec).value
    return r, (-1 - r) % (1 << prec)


def embed_K_2adic(x: KElt, place: Place, prec: int = DEFAULT_PRECISION) -> PadicInt:
    """Ring homomorphism K -> Q2 at one of the places over 2, for x integral
    at that place.  Use embed_K_scaled for general x."""
    e, u = embed_K_scaled(x, place, prec)
    if e < 0:
        raise ValueError(f"{x!r} is not integral at {place}; use embed_K_scaled")
    return u.shift(e) if e else u


def embed_K_scaled(x: KElt, place: Place, prec: int = DEFAULT_PRECISION):
    """(exponent, unit_part): x maps to 2^exponent * unit_part with
    unit_part in Z2 at the requested place."""
    if place not in (LAMBDA, LAMBDABAR):
        raise ValueError("embedding only at the places over 2")
    if not x:
        return 0, PadicInt(0, prec, valuation_floor=prec)
    v = valuation(x, place)
    exp = min(v, 0)
    y = x * Fraction(1, 2) ** exp  # integral at the place now
    # Clear the whole coordinate denominator m; even though y is integral at
    # the place, its (a, b) coordinates may carry 2-denominators through the
    # other place (2 = lam * lambar).  The combined numerator then absorbs
    # the 2-part of m exactly.
    m = math.lcm(y.a.denominator, y.b.denominator)
    v2m = _v2(m)
    work = prec + v2m + 2
    r, rbar = lambda_images(work)
    img = r if place == LAMBDA else rbar
    mod = 1 << work
    num = (int(y.a * m) + int(y.b * m) * img) % mod
    assert num % (1 << v2m) == 0, "element claimed integral at the place"
    num >>= v2m
    num = num * pow(m >> v2m, -1, mod) % mod
    vf = max(v - exp, 0)
    return exp, PadicInt(num, prec, valuation_floor=min(vf, prec))


class PadicMat:
    """A 3x3 matrix over Q2 stored as 2^scale times a PadicInt matrix."""

    __slots__ = ("entries", "scale")

    def __init__(self, entries, scale: int = 0):
        self.entries = tuple(tuple(e for e in row) for row in entries)
        self.scale = scale

    @classmethod
    def from_K_matrix(cls, a, place: Place, prec: int = DEFAULT_PRECISION):
        scaled = [
            [embed_K_scaled(x, place, prec + 4) for x in row] for row in a
        ]
        s = min((e for row in scaled for e, _ in row), default=0)
        s = min(s, 0)
        entries = [
            [u.shift(e - s) for e, u in row] for row in scaled
        ]
        return cls(entries, scale=s)

    @classmethod
    def identity(cls, prec: int = DEFAULT_PRECISION):
        one = PadicInt(1, prec)
        zero = PadicInt(0, prec, valuation_floor=prec)
        return cls(
            ((one, zero, zero), (zero, one, zero), (zero, zero, one))
        )

    def min_prec(self) -> int:
        return min(e.prec for row in self.entries for e in row)

    def __mul__(self, other):
        if not isinstance(other, PadicMat):
            return NotImplemented
        bt = tuple(zip(*other.entries))
        rows = []
        for ra in self.entries:
            row = []
            for cb in bt:
                acc = ra[0] * cb[0]
                for x, y in zip(ra[1:], cb[1:]):
                    acc = acc + x * y
                row.append(acc)
            rows.append(row)
        return PadicMat(rows, self.scale + other.scale)

    def __add__(self, other):
        if not isinstance(other, PadicMat):
            return NotImplemented
        s = min(self.scale, other.scale)
        a = self.rescale(s)
        b = other.rescale(s)
        return PadicMat(
            [
                [x + y for x, y in zip(ra, rb)]
                for ra, rb in zip(a.entries, b.entries)
            ],
            s,
        )

    def __neg__(self):
        return PadicMat([[-e for e in r] for r in self.entries], self.scale)

    def rescale(self, new_scale: int) -> "PadicMat":
        """Rewrite with a smaller scale exponent (entries shift up)."""
        d = self.scale - new_scale
        if d < 0:
            raise ValueError("can only lower the scale exponent")
        if d == 0:
            return self
        return PadicMat(
            [[e.shift(d) for e in r] for r in self.entries], new_scale
        )

    def transpose(self) -> "PadicMat":
        return PadicMat(tuple(zip(*self.entries)), self.scale)

    def det(self) -> PadicInt:
        (a, b, c), (d, e, f), (g, h, i) = self.entries
        return (
            a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        )

    def inverse(self) -> "PadicMat":
        """Inverse via the adjugate; the determinant valuation must be
        readable at the stored precision."""
        dt = self.det()
        v = dt.valuation()
        unit = PadicInt(dt.value >> v, dt.prec - v)
        uinv = unit.unit_inverse()
        (a, b, c), (d, e, f), (g, h, i) = self.entries
        adj = (
            (e * i - f * h, c * h - b * i, b * f - c * e),
            (f * g - d * i, a * i - c * g, c * d - a * f),
            (d * h - e * g, b * g - a * h, a * e - b * d),
        )
        rows = [[x * uinv for x in r] for r in adj]
        return PadicMat(rows, -self.scale - v)

    def eq_mod(self, other: "PadicMat", bits: int) -> bool:
        s = min(self.scale, other.scale)
        a = self.rescale(s)
        b = other.rescale(s)
        return all(
            x.eq_mod(y, bits)
            for ra, rb in zip(a.entries, b.entries)
            for x, y in zip(ra, rb)
        )

    def __repr__(self):
        return f"PadicMat(2^{self.scale} * {[[e.value for e in r] for r in self.entries]})"
