"""Exact arithmetic in Z_{2^n - 1}.

Moduli have the Mersenne form 2^n - 1, so reduction never divides:
2^n = 1 holds in the ring, hence an integer is reduced by folding its
n-bit limbs together until the result fits, with one conditional
subtract at the end.  Everything is an arbitrary-precision Python int;
the canonical representative of a residue class is the integer in
[0, 2^n - 2].

The trivial ring n = 1 has modulus 1 and the single residue 0, with one
deliberate exception: inversion returns the conventional unit 1 there,
because the recursive lifting formulas consume the base value
Inv_d(1) = 1 as an integer.  `Residue` therefore admits the value 1 in
the n = 1 ring and nothing else out of range.

All types are immutable and all operations are pure functions, so the
module is safe to use from any number of concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class NotInvertible(ValueError):
    """Raised when d has no inverse modulo 2^n - 1; carries the gcd."""

    def __init__(self, d: int, n: int, gcd: int):
        super().__init__(f"{d} is not invertible modulo 2^{n}-1 (gcd = {gcd})")
        self.d = d
        self.n = n
        self.gcd = gcd


@dataclass(frozen=True)
class MersenneRing:
    """The modulus context 2^n - 1, held as the bit length n."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ring bit length must be a positive integer, got {self.n!r}")

    @property
    def modulus(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class Residue:
    """Canonical value in [0, 2^n - 2] tied to its MersenneRing.

    In the n = 1 ring the value 1 is additionally allowed; it is the
    conventional result of inversion there (see module docstring).
    """

    value: int
    ring: MersenneRing

    def __post_init__(self):
        top = self.ring.modulus - 1 if self.ring.n > 1 else 1
        if not 0 <= self.value <= top:
            raise ValueError(
                f"{self.value} is not a canonical residue modulo 2^{self.ring.n}-1")

    def __int__(self) -> int:
        return self.value

    def __mul__(self, other: "Residue") -> "Residue":
        return mul(self, other)


def reduce(x: int, ring: MersenneRing) -> Residue:
    """Reduce a nonnegative integer to its canonical residue by limb folding."""
    if x < 0:
        raise ValueError("reduce expects a nonnegative integer")
    n, m = ring.n, ring.modulus
    while x.bit_length() > n:
        x = (x & m) + (x >> n)
    if x >= m:
        x -= m
    return Residue(x, ring)


def mul(a: Residue, b: Residue) -> Residue:
    """Product of two residues of the same ring."""
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring} vs {b.ring}")
    return reduce(a.value * b.value, a.ring)


def _binary_gcd(a: int, b: int) -> int:
    if a == 0:
        return b
    if b == 0:
        return a
    shift = ((a | b) & -(a | b)).bit_length() - 1
    a >>= (a & -a).bit_length() - 1
    while b:
        b >>= (b & -b).bit_length() - 1
        if a > b:
            a, b = b, a
        b -= a
    return a << shift


def gcd_with_modulus(d: int, n: int) -> int:
    """gcd(d, 2^n - 1).

    For d of shape 2^k - 1 the gcd is 2^gcd(k,n) - 1; for d = 2^k + 1 it
    is 1 exactly when n/gcd(n,k) is odd and 2^gcd(n,k) + 1 otherwise.
    Both closed forms are cross-checked against a binary gcd, which is
    also the fallback for every other d.
    """
    if d < 1 or n < 1:
        raise ValueError("gcd_with_modulus expects positive arguments")
    shortcut = None
    if d >= 3 and d & (d + 1) == 0:          # d = 2^k - 1
        k = d.bit_length()
        shortcut = (1 << math.gcd(k, n)) - 1
    elif d >= 3 and (d - 1) & (d - 2) == 0:  # d = 2^k + 1
        k = (d - 1).bit_length() - 1
        s = math.gcd(n, k)
        shortcut = 1 if (n // s) % 2 == 1 else (1 << s) + 1
    g = _binary_gcd(d, (1 << n) - 1)
    if shortcut is not None and shortcut != g:
        raise AssertionError(
            f"closed-form gcd {shortcut} disagrees with binary gcd {g} for d={d}, n={n}")
    return g


@lru_cache(maxsize=None)
def order_of_two(d: int) -> int:
    """Least o >= 1 with 2^o = 1 (mod d), for odd d; order_of_two(1) = 0.

    Computed by iterative doubling mod d, so the cost is proportional to
    the order itself, not to d.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError(f"order of 2 is defined for odd d >= 1, got {d}")
    if d == 1:
        return 0
    o, t = 1, 2 % d
    while t != 1:
        t = (t << 1) % d
        o += 1
    return o


_INT_FORMATS = ("dec", "hex", "bits")


def int_to_text(x: int, fmt: str, n: int | None = None) -> str:
    """Serialize a nonnegative integer: 'dec', 'hex' (no prefix), or
    'bits' (MSB-first, zero-padded to explicit length n)."""
    if x < 0:
        raise ValueError("serialization is defined for nonnegative integers")
    if fmt == "dec":
        return str(x)
    if fmt == "hex":
        return format(x, "x")
    if fmt == "bits":
        if n is None or x >= (1 << n):
            raise ValueError("bit strings need an explicit length holding the value")
        return format(x, f"0{n}b")
    raise ValueError(f"unknown format {fmt!r}; expected one of {_INT_FORMATS}")


def int_from_text(s: str, fmt: str) -> int:
    """Parse the formats of `int_to_text`; 'bits' tolerates separators."""
    if fmt == "dec":
        return int(s)
    if fmt == "hex":
        return int(s, 16)
    if fmt == "bits":
        s = s.replace(" ", "").replace("_", "")
        if not s or s.strip("01"):
            raise ValueError(f"not a bit string: {s!r}")
        return int(s, 2)
    raise ValueError(f"unknown format {fmt!r}; expected one of {_INT_FORMATS}")


def euclid_inverse(d: int, ring: MersenneRing) -> Residue:
    """Inverse of d modulo 2^n - 1 by the binary extended gcd.

    This is the independent oracle the recursive machinery is tested
    against: a division-free extended-Euclid variant that walks the
    operands bit by bit, touching the full n-bit modulus throughout.
    For n = 1 it returns the conventional unit 1.
    """
    if d < 1:
        raise ValueError("euclid_inverse expects d >= 1")
    n, m = ring.n, ring.modulus
    if n == 1:
        return Residue(1, ring)
    g = math.gcd(d, m)
    if g != 1:
        raise NotInvertible(d, n, g)
    u, v = d % m, m
    x1, x2 = 1, 0
    while u != 1 and v != 1:
        while u & 1 == 0:
            u >>= 1
            x1 = (x1 >> 1) if x1 & 1 == 0 else ((x1 + m) >> 1)
        while v & 1 == 0:
            v >>= 1
            x2 = (x2 >> 1) if x2 & 1 == 0 else ((x2 + m) >> 1)
        if u >= v:
            u -= v
            x1 -= x2
        else:
            v -= u
            x2 -= x1
    t = (x1 if u == 1 else x2) % m
    return Residue(t, ring)
