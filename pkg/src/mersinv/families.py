"""The classical APN exponent families and their closed-form inverses.

Catalog (exponent d on F_{2^n}, with t = (n-1)/2 where n is odd):

    gold        2^k + 1                       invertible iff n/gcd(n,k) odd
    kasami      2^(2k) - 2^k + 1              invertibility below
    welch       2^t + 3,            n = 2t+1
    niho        2^t + 2^(t/2) - 1   (t even), 2^t + 2^((3t+1)/2) - 1 (t odd)
    inverse     2^(2t) - 1,         n = 2t+1
    dobbertin   2^(4t)+2^(3t)+2^(2t)+2^t-1,   n = 5t
    allones     2^k - 1                       invertible iff gcd(n,k) = 1

Each closed form here returns the least positive residue of the inverse
and is verified on the spot: the constructed InverseResult re-multiplies
by d, the stated weight is asserted, and the special-case values are
compared against the extended-gcd oracle.  A misread formula cannot
ship silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .inv import InverseResult, TraceStep, invert
from .ring import (MersenneRing, NotInvertible, Residue, euclid_inverse,
                   order_of_two)

FAMILY_NAMES = ("gold", "kasami", "welch", "niho", "inverse", "dobbertin",
                "allones")


@dataclass(frozen=True)
class Invertibility:
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ExponentSpec:
    """A family tag plus parameters (k, n) resolving to a concrete exponent."""

    family: str
    k: int
    n: int

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.k < 1 or self.n < 1:
            raise ValueError("parameters k and n must be positive")
        if self.family in ("welch", "niho", "inverse") and self.n != 2 * self.k + 1:
            raise ValueError(f"{self.family} requires n = 2k+1, got k={self.k}, n={self.n}")
        if self.family == "dobbertin" and self.n != 5 * self.k:
            raise ValueError(f"dobbertin requires n = 5k, got k={self.k}, n={self.n}")
        if self.family == "allones" and (self.k < 2 or self.n < 2):
            raise ValueError("allones requires k >= 2 and n >= 2")
        d = exponent_value(self)
        if d % ((1 << self.n) - 1) == 0:
            raise ValueError(f"exponent {d} collapses to 0 modulo 2^{self.n}-1")

    @property
    def exponent(self) -> int:
        return exponent_value(self)


def exponent_value(spec: ExponentSpec) -> int:
    """The concrete exponent d defined by the family and parameters."""
    k, n = spec.k, spec.n
    if spec.family == "gold":
        return (1 << k) + 1
    if spec.family == "kasami":
        return (1 << (2 * k)) - (1 << k) + 1
    if spec.family == "welch":
        return (1 << k) + 3
    if spec.family == "niho":
        if k % 2 == 0:
            return (1 << k) + (1 << (k // 2)) - 1
        return (1 << k) + (1 << ((3 * k + 1) // 2)) - 1
    if spec.family == "inverse":
        return (1 << (2 * k)) - 1
    if spec.family == "dobbertin":
        return (1 << (4 * k)) + (1 << (3 * k)) + (1 << (2 * k)) + (1 << k) - 1
    return (1 << k) - 1  # allones


def _gold_invertible(k: int, n: int) -> Invertibility:
    s = math.gcd(n, k)
    q = n // s
    if q % 2 == 1:
        return Invertibility(True, f"n/gcd(n,k) = {q} is odd")
    return Invertibility(False, f"n/gcd(n,k) = {q} is even")


def _kasami_invertible(k: int, n: int) -> Invertibility:
    q = n // math.gcd(n, k)
    if q % 2 == 1:
        return Invertibility(True, f"n/gcd(n,k) = {q} is odd")
    if k % 2 == 1:
        return Invertibility(False, f"n/gcd(n,k) = {q} is even and k is odd")
    g, g3 = math.gcd(k, n), math.gcd(3 * k, n)
    if g == g3:
        return Invertibility(True, f"k even and gcd(3k,n) = gcd(k,n) = {g}")
    return Invertibility(False,
                         f"n/gcd(n,k) even and gcd(3k,n) = {g3} != gcd(k,n) = {g}")


def _allones_invertible(k: int, n: int) -> Invertibility:
    g = math.gcd(n, k)
    if g == 1:
        return Invertibility(True, "gcd(n,k) = 1")
    return Invertibility(False, f"gcd(n,k) = {g} > 1")


def is_invertible(spec_or_d, n: int | None = None) -> Invertibility:
    """Whether the exponent is a unit modulo 2^n - 1, with the reason.

    For gold, kasami and allones the closed-form criterion is used and
    cross-checked against the gcd; anything else reports the gcd itself.
    """
    if isinstance(spec_or_d, ExponentSpec):
        spec = spec_or_d
        d, n = spec.exponent, spec.n
        verdict = None
        if spec.family == "gold":
            verdict = _gold_invertible(spec.k, n)
        elif spec.family == "kasami":
            verdict = _kasami_invertible(spec.k, n)
        elif spec.family == "allones":
            verdict = _allones_invertible(spec.k, n)
        if verdict is not None:
            if verdict.ok != (math.gcd(d, (1 << n) - 1) == 1):
                raise AssertionError(
                    f"{spec.family} criterion disagrees with gcd for k={spec.k}, n={n}")
            return verdict
    else:
        d = int(spec_or_d)
        if n is None:
            raise ValueError("raw exponents need an explicit n")
    g = math.gcd(d, (1 << n) - 1)
    if g == 1:
        return Invertibility(True, "gcd(d, 2^n-1) = 1")
    return Invertibility(False, f"gcd(d, 2^n-1) = {g}")


def family_order(spec: ExponentSpec) -> int:
    """Order of 2 modulo the exponent: 2k for gold, 6k for kasami (k >= 2)."""
    if spec.family == "gold":
        o = 2 * spec.k
    elif spec.family == "kasami":
        if spec.k < 2:
            raise ValueError("kasami order 6k holds for k >= 2 (k = 1 is gold's 3)")
        o = 6 * spec.k
    else:
        raise ValueError(f"no fixed order formula for family {spec.family!r}")
    if order_of_two(spec.exponent) != o:
        raise AssertionError(f"order formula disagrees for {spec}")
    return o


def gold_inverse(k: int, n: int) -> InverseResult:
    """Inverse of 2^k + 1 modulo 2^n - 1, lifted from the base residue.

    With s = gcd(n, k) and n/s odd, r = n mod 2k, and A = Inv_d(r):

        Inv_d(n) = A*2^(n-r) + (s(r) - 1)*(2^k - 1)*(2^(n-r) - 1)/(2^(2k) - 1)

    The binary weight always comes out as (n - s + 2)/2.
    """
    if k < 1 or n < 1:
        raise ValueError("gold_inverse expects positive k and n")
    d = (1 << k) + 1
    s = math.gcd(n, k)
    if (n // s) % 2 == 0:
        raise NotInvertible(d, n, (1 << s) + 1)
    r = n % (2 * k)
    assert r != 0, "2k | n contradicts n/gcd(n,k) odd"
    base = invert(d, r)
    a = base.value.value
    sq = (d * a - 1) // ((1 << r) - 1)
    q, rem = divmod((1 << (n - r)) - 1, (1 << (2 * k)) - 1)
    assert rem == 0
    t = a * (1 << (n - r)) + (sq - 1) * ((1 << k) - 1) * q
    assert t.bit_count() == (n - s + 2) // 2, f"gold weight law fails at k={k}, n={n}"
    trace = (TraceStep("ClosedForm", "gold"),) + base.trace
    return InverseResult(d, n, Residue(t, MersenneRing(n)), trace)


def gold_nyberg_inverse(k: int, n: int) -> int:
    """Inv_{2^k+1}(n) for odd n with gcd(n, k) = 1, as a sum of powers.

    The geometric form (2^(k(n+1)) - 1)/(2^(2k) - 1) reduces to
    sum_j 2^(2jk mod n) over 0 <= j <= (n-1)/2, which is already the
    least positive residue; its weight is (n+1)/2.
    """
    if n % 2 == 0 or math.gcd(n, k) != 1:
        raise ValueError("closed sum needs n odd and gcd(n,k) = 1")
    return sum(1 << ((2 * j * k) % n) for j in range((n - 1) // 2 + 1))


def gold_shift_claim(k: int, r: int) -> bool:
    """Check 2^k + 1 = 2^k * (2^r + 1) modulo 2^(k+r) - 1 for 0 <= r < k.

    When the two sides are units, their inverses differ by a cyclic
    shift, so their binary weights agree; both facts are asserted.
    """
    if not 0 <= r < k:
        raise ValueError("shift claim needs 0 <= r < k")
    m = (1 << (k + r)) - 1
    lhs = ((1 << k) + 1) % m
    rhs = ((1 << k) * ((1 << r) + 1)) % m
    if lhs != rhs:
        raise AssertionError(f"shift congruence fails for k={k}, r={r}")
    if math.gcd((1 << k) + 1, m) == 1:
        ring = MersenneRing(k + r)
        w1 = euclid_inverse((1 << k) + 1, ring).value.bit_count()
        w2 = euclid_inverse((1 << r) + 1, ring).value.bit_count()
        if w1 != w2:
            raise AssertionError(f"inverse weights differ for k={k}, r={r}")
    return True


def kasami_inverse(k: int, n: int) -> InverseResult:
    """Inverse of 2^(2k) - 2^k + 1 modulo 2^n - 1, lifted from r = n mod 6k.

    The weight satisfies wt(Inv_d(n)) = wt(Inv_d(r)) + (n - r)/2, which
    is asserted on every call.
    """
    if k < 1 or n < 1:
        raise ValueError("kasami_inverse expects positive k and n")
    d = (1 << (2 * k)) - (1 << k) + 1
    verdict = _kasami_invertible(k, n)
    if not verdict:
        raise NotInvertible(d, n, math.gcd(d, (1 << n) - 1))
    r = n % (6 * k)
    assert r != 0, "6k | n contradicts invertibility"
    base = invert(d, r)
    a = base.value.value
    sq = (d * a - 1) // ((1 << r) - 1)
    q, rem = divmod((1 << (n - r)) - 1, d)
    assert rem == 0
    t = a * (1 << (n - r)) + (sq - 1) * q
    assert t.bit_count() == a.bit_count() + (n - r) // 2, \
        f"kasami weight law fails at k={k}, n={n}"
    trace = (TraceStep("ClosedForm", "kasami"),) + base.trace
    return InverseResult(d, n, Residue(t, MersenneRing(n)), trace)


def kasami_special_inverse(k: int, case: str, b: int | None = None,
                           n: int | None = None) -> Residue:
    """Closed-form Inv_d at the special arguments of the Kasami exponent.

    d = 2^(2k) - 2^k + 1 throughout; the case tag picks the modulus:

        a   n = k/b (mod 6k), b | k      2^(n-k/b) + (2^k(2^k-1)/(2^(k/b)-1) - 1)(2^(n-k/b)-1)/d
        b   n = k - 1  (k even)          (2^k - 1)/3
        c   n = k + 1  (k even)          (2^(k+2) - 1)/3 + 1
        d   n = 2k     (k even)          (2^k + 2)(2^k - 1)/3 + 1
        e   n = 3k/b   (b | k, 3 !| b)   2^(3k/b - 1) + 2^(b'k/b - 1), b' = b mod 3
        f   n = 4k     (k even)          (1 + 2^(k+1) + 2^(2k) + 2^(3k+1))(2^k - 1)/3 + 2^k
        g   n = 5k                       2^(5k) - 2^(4k) + 2^(2k) + 2^k - 1
        h   n = 6k - 1                   (2^(3k) - 1)(2^k + 1)

    Case "a" takes the divisor b plus an explicit n (default: k/b + 6k).
    Every value is validated against the extended-gcd oracle before it
    is returned.
    """
    if k < 1:
        raise ValueError("k must be positive")
    d = (1 << (2 * k)) - (1 << k) + 1

    def third(x):
        q, rem = divmod(x, 3)
        if rem:
            raise ValueError(f"case {case!r} needs an exact division by 3 (k even)")
        return q

    if case == "a":
        if b is None or b < 1 or k % b != 0:
            raise ValueError("case 'a' needs a divisor b of k")
        r0 = k // b
        if n is None:
            n = r0 + 6 * k
        if n % (6 * k) != r0:
            raise ValueError(f"case 'a' needs n = {r0} (mod {6 * k})")
        assert d % ((1 << r0) - 1) == 1 or r0 == 1, "base inverse at k/b must be 1"
        s_form = (1 << k) * ((1 << k) - 1) // ((1 << r0) - 1)
        q, rem = divmod((1 << (n - r0)) - 1, d)
        if rem:
            raise ValueError(f"case 'a' undefined: d does not divide 2^{n - r0}-1")
        value = (1 << (n - r0)) + (s_form - 1) * q
    elif case == "b":
        n = k - 1
        value = third((1 << k) - 1)
    elif case == "c":
        n = k + 1
        value = third((1 << (k + 2)) - 1) + 1
    elif case == "d":
        n = 2 * k
        value = ((1 << k) + 2) * third((1 << k) - 1) + 1
    elif case == "e":
        if b is None or b < 1 or k % b != 0 or math.gcd(b, 3) != 1:
            raise ValueError("case 'e' needs a divisor b of k with gcd(b,3) = 1")
        n = 3 * k // b
        value = (1 << (n - 1)) + (1 << ((b % 3) * (k // b) - 1))
    elif case == "f":
        n = 4 * k
        value = (1 + (1 << (k + 1)) + (1 << (2 * k)) + (1 << (3 * k + 1))) \
            * third((1 << k) - 1) + (1 << k)
    elif case == "g":
        n = 5 * k
        value = (1 << (5 * k)) - (1 << (4 * k)) + (1 << (2 * k)) + (1 << k) - 1
    elif case == "h":
        n = 6 * k - 1
        value = ((1 << (3 * k)) - 1) * ((1 << k) + 1)
    else:
        raise ValueError(f"unknown case {case!r}")

    if n < 1:
        raise ValueError(f"case {case!r} needs a larger k")
    oracle = euclid_inverse(d, MersenneRing(n))
    if value != oracle.value:
        raise AssertionError(
            f"case {case!r} value {value} disagrees with oracle {oracle.value} "
            f"for k={k}, n={n}")
    return oracle


def kasami_gold_bridge(k: int, n: int) -> bool:
    """Check Inv_kasami(n) = (2^k + 1) * Inv_{2^(3k)+1}(n) modulo 2^n - 1.

    Both sides are units whenever n/gcd(n,k) is odd, because
    (2^k + 1)(2^(2k) - 2^k + 1) = 2^(3k) + 1.  Both sides are computed
    by the oracle and compared.
    """
    if (n // math.gcd(n, k)) % 2 == 0:
        raise ValueError("bridge needs n/gcd(n,k) odd")
    d = (1 << (2 * k)) - (1 << k) + 1
    m = (1 << n) - 1
    ring = MersenneRing(n)
    lhs = euclid_inverse(d, ring).value
    rhs = ((1 << k) + 1) * euclid_inverse((1 << (3 * k)) + 1, ring).value % m
    if lhs != rhs:
        raise AssertionError(f"bridge fails for k={k}, n={n}")
    return True


@dataclass(frozen=True)
class ConjectureProbe:
    """Outcome of probing whether Inv_kasami(5k/b) is again a shifted Kasami
    exponent, i.e. congruent to 2^u * (2^(2v) - 2^v + 1)."""

    k: int
    b: int
    n: int
    d: int
    value: int
    u: int | None
    v: int | None

    @property
    def matched(self) -> bool:
        return self.u is not None


def kasami_conjecture_probe(k: int, b: int) -> ConjectureProbe:
    """Search for (u, v) with Inv_kasami(5k/b) = 2^u(2^(2v) - 2^v + 1) mod 2^n-1.

    Exploratory only: reports the first match in (v, u) order or none.
    """
    if b < 1 or k % b != 0 or math.gcd(b, 5) != 1:
        raise ValueError("probe needs a divisor b of k with gcd(b,5) = 1")
    d = (1 << (2 * k)) - (1 << k) + 1
    n = 5 * k // b
    value = invert(d, n).value.value
    m = (1 << n) - 1
    for v in range(1, n + 1):
        dv = ((1 << (2 * v)) - (1 << v) + 1) % m
        for u in range(n):
            if (dv << u) % m == value:
                return ConjectureProbe(k, b, n, d, value, u, v)
    return ConjectureProbe(k, b, n, d, value, None, None)


def _welch_closed_form(k: int, j: int) -> int | None:
    # Returns None when a term would need a negative shift or an inexact
    # division by 17; empirically that never happens for k >= 1.
    def q17(c):
        if k < c:
            return None
        qq, rem = divmod((1 << (k - c)) - 1, 17)
        return None if rem else qq

    if j == 0:
        q = q17(0)
        return None if q is None else (1 << k) + q * (13 * (1 << (k + 1)) + 7)
    if j == 1:
        q = q17(1)
        return None if q is None else \
            (1 << (k - 1)) + (1 << k) + q * (7 * (1 << (k + 2)) + 1)
    if j == 2:
        q = q17(2)
        return None if q is None else \
            1 + (1 << (k + 1)) + q * (5 * (1 << (k + 3)) + 16)
    if j == 3:
        q = q17(3)
        return None if q is None else \
            (1 << k) + (1 << (k + 2)) + (1 << (k + 3)) + q * (7 * (1 << (k + 5)) + 8)
    if j == 4:
        q = q17(4)
        return None if q is None else \
            (1 << (k - 4)) + (1 << (k - 2)) + (1 << (k - 1)) + (1 << (k + 4)) \
            + q * (9 * (1 << (k + 5)) + 3)
    if j == 5:
        q = q17(5)
        return None if q is None else \
            1 + (1 << (k - 3)) + (1 << (k - 1)) + (1 << k) + (1 << (k + 1)) \
            + q * ((1 << (k + 6)) + 12)
    if j == 6:
        q = q17(6)
        return None if q is None else \
            (1 << (k - 5)) + (1 << (k - 4)) + (1 << (k - 2)) + (1 << (k + 3)) \
            + (1 << (k + 4)) + (1 << (k + 5)) + (1 << (k + 6)) \
            + q * (16 * (1 << (k + 7)) + 10)
    q = q17(7)
    return None if q is None else \
        (1 << (k - 5)) + (1 << (k - 4)) + (1 << (k - 3)) + (1 << (k - 2)) \
        + (1 << (k + 1)) + (1 << (k + 2)) + (1 << (k + 4)) + (1 << (k + 7)) \
        + q * (10 * (1 << (k + 8)) + 4)


def welch_inverse(k: int) -> InverseResult:
    """Inverse of 2^k + 3 modulo 2^(2k+1) - 1, one closed form per k mod 8.

    The binary weight is k + 1 for k = 0, 1, 6, 7 (mod 8) and k for the
    middle classes.  Should a class formula ever be inapplicable the
    oracle is used instead and the fallback is recorded in the trace.
    """
    if k < 1:
        raise ValueError("welch_inverse expects k >= 1")
    n = 2 * k + 1
    d = (1 << k) + 3
    j = k % 8
    tag = TraceStep("ClosedForm", f"welch[k%8={j}]")
    t = _welch_closed_form(k, j)
    if t is None:
        value = euclid_inverse(d, MersenneRing(n))
        return InverseResult(d, n, value, (tag, TraceStep("OracleFallback", n)))
    expected = k + 1 if j in (0, 1, 6, 7) else k
    assert t.bit_count() == expected, f"welch weight law fails at k={k}"
    return InverseResult(d, n, Residue(t, MersenneRing(n)), (tag,))


def niho_inverse(k: int, branch: str) -> InverseResult:
    """Inverse of the Niho exponent, by branch and parity of k (k >= 1).

    Branch "a": n = 4k+1, d = 2^(2k) + 2^k - 1
        k even:  (2^k-1)/3 * (2^(3k+1)+2^(k+1)+1) + 2^k + 2^(3k+1)
        k odd:   (2^(k-1)-1)/3 * (2^(3k+2)+2^(2k+2)+1) + 2^(3k+1)+2^(2k+1)+2^(k-1)
    Branch "b": n = 4k+3, d = 2^(3k+2) + 2^(2k+1) - 1
        k even:  (2^k-1)/3 * (2^(3k+4)+2^(k+2)+2) + 2^(3k+3) + 2^(k+1)
        k odd:   (2^(k+1)-1)/3 * (2^(3k+3)+2^(2k+3)+2) + 2^(2k+2)

    Weights: (3n+5)/8, (3n+9)/8, (3n+7)/8, (3n+11)/8 for n = 1, 5, 3, 7
    (mod 8) respectively.
    """
    if k < 1:
        raise ValueError("niho_inverse expects k >= 1 (n = 3 has no branch)")
    if branch == "a":
        n = 4 * k + 1
        d = (1 << (2 * k)) + (1 << k) - 1
        if k % 2 == 0:
            t = ((1 << k) - 1) // 3 * ((1 << (3 * k + 1)) + (1 << (k + 1)) + 1) \
                + (1 << k) + (1 << (3 * k + 1))
            w = (3 * n + 5) // 8
        else:
            t = ((1 << (k - 1)) - 1) // 3 * ((1 << (3 * k + 2)) + (1 << (2 * k + 2)) + 1) \
                + (1 << (3 * k + 1)) + (1 << (2 * k + 1)) + (1 << (k - 1))
            w = (3 * n + 9) // 8
    elif branch == "b":
        n = 4 * k + 3
        d = (1 << (3 * k + 2)) + (1 << (2 * k + 1)) - 1
        if k % 2 == 0:
            t = ((1 << k) - 1) // 3 * ((1 << (3 * k + 4)) + (1 << (k + 2)) + 2) \
                + (1 << (3 * k + 3)) + (1 << (k + 1))
            w = (3 * n + 7) // 8
        else:
            t = ((1 << (k + 1)) - 1) // 3 * ((1 << (3 * k + 3)) + (1 << (2 * k + 3)) + 2) \
                + (1 << (2 * k + 2))
            w = (3 * n + 11) // 8
    else:
        raise ValueError(f"branch must be 'a' or 'b', got {branch!r}")
    assert t.bit_count() == w, f"niho weight law fails at branch {branch}, k={k}"
    trace = (TraceStep("ClosedForm", f"niho[{branch},n%8={n % 8}]"),)
    return InverseResult(d, n, Residue(t, MersenneRing(n)), trace)


def dobbertin_inverse(k: int) -> InverseResult:
    """Inverse of 2^(4k)+2^(3k)+2^(2k)+2^k-1 modulo 2^(5k)-1, k odd.

        t = ((2^(5k)-1)/(2^k-1) * (2^(k+1)-1)/3 - 1) / 2

    with binary weight (5k+3)/2 -- strictly above the (n+1)/2 bound on
    the algebraic degree of almost-bent mappings, so this inverse (and
    with it the exponent itself) is never almost bent.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError("dobbertin_inverse expects odd k >= 1")
    n = 5 * k
    d = (1 << (4 * k)) + (1 << (3 * k)) + (1 << (2 * k)) + (1 << k) - 1
    t = (((1 << n) - 1) // ((1 << k) - 1) * (((1 << (k + 1)) - 1) // 3) - 1) // 2
    assert t.bit_count() == (5 * k + 3) // 2, f"dobbertin weight fails at k={k}"
    assert 2 * t + 1 == sum(1 << e for e in dobbertin_doubled_support(k))
    trace = (TraceStep("ClosedForm", "dobbertin"),)
    return InverseResult(d, n, Residue(t, MersenneRing(n)), trace)


def dobbertin_doubled_support(k: int) -> tuple[int, ...]:
    """Exponent set of 2t + 1 for the dobbertin inverse t: {ik + 2j}.

    Ranges are 0 <= i <= 4 and 0 <= j <= (k-1)/2, giving 5(k+1)/2
    distinct exponents, whence wt(t) = (5k+3)/2.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError("defined for odd k >= 1")
    return tuple(sorted(i * k + 2 * j for i in range(5) for j in range((k + 1) // 2)))


def allones_inverse(k: int, n: int) -> InverseResult:
    """Inverse of 2^k - 1 modulo 2^n - 1 for coprime n, k >= 2.

    With s the least positive inverse of k modulo n,

        Inv_{2^k-1}(n) = sum_{i<s} 2^(ki mod n),

    a sum of s distinct powers, so the weight is exactly s.
    """
    if k < 2 or n < 2:
        raise ValueError("allones_inverse expects k >= 2 and n >= 2")
    d = (1 << k) - 1
    g = math.gcd(n, k)
    if g != 1:
        raise NotInvertible(d, n, (1 << g) - 1)
    s = pow(k, -1, n)
    t = sum(1 << ((k * i) % n) for i in range(s))
    assert t.bit_count() == s
    trace = (TraceStep("ClosedForm", "allones"),)
    return InverseResult(d, n, Residue(t, MersenneRing(n)), trace)


def closed_form_inverse(spec: ExponentSpec) -> InverseResult:
    """Dispatch to the family's closed form for the spec's parameters."""
    if spec.family == "gold":
        return gold_inverse(spec.k, spec.n)
    if spec.family == "kasami":
        return kasami_inverse(spec.k, spec.n)
    if spec.family == "welch":
        return welch_inverse(spec.k)
    if spec.family == "niho":
        t = spec.k
        if t % 2 == 0:
            return niho_inverse(t // 2, "a")
        return niho_inverse((t - 1) // 2, "b")
    if spec.family == "inverse":
        result = allones_inverse(spec.n - 1, spec.n)
        assert result.d == spec.exponent
        return result
    if spec.family == "dobbertin":
        return dobbertin_inverse(spec.k)
    return allones_inverse(spec.k, spec.n)
