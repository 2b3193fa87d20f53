"""The function Inv_d(n) and recursive inversion modulo 2^n - 1.

For fixed d, Inv_d(n) is the least positive residue of the inverse of d
modulo 2^n - 1.  Writing ord for the multiplicative order of 2 modulo
d (odd), Inv_d is periodic in structure: its value at n follows from
its value at r = n mod ord by an exact integer lift, values at r and
ord - r determine each other by reflection, and the binary expansion of
Inv_d(n) is a head block followed by copies of one ord-bit block.

`invert` turns this into an inversion algorithm: strip powers of two
from d, reduce n modulo the order, reduce d modulo the (now small)
modulus, reflect past the half order, and only below ord/2 fall back to
the extended-gcd oracle.  Every step is recorded in a trace, and every
result is re-verified by one modular multiplication before it is
returned, so a transcription slip in any formula fails loudly.

Everything here is pure; the only shared state is the memo inside
`ring.order_of_two`, which concurrent readers may warm in any order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bitseq import BitSeq, complement, concat, to_seq
from .ring import MersenneRing, NotInvertible, Residue, euclid_inverse, order_of_two

_STEP_TAGS = ("EvenShift", "OrderReduce", "ModulusReduce", "Reflect",
              "OracleFallback", "ClosedForm")
_STEP_PARAM_NAMES = {
    "EvenShift": "u",
    "OrderReduce": "r",
    "ModulusReduce": "d",
    "Reflect": "r",
    "OracleFallback": "n",
}


@dataclass(frozen=True)
class TraceStep:
    """One derivation step; `param` is the step's single argument."""

    tag: str
    param: int | str | None = None

    def __post_init__(self):
        if self.tag not in _STEP_TAGS:
            raise ValueError(f"unknown trace step {self.tag!r}")

    def __str__(self) -> str:
        if self.tag == "ClosedForm":
            return f"ClosedForm({self.param})"
        if self.param is None:
            return self.tag
        return f"{self.tag}({_STEP_PARAM_NAMES[self.tag]}={self.param})"


@dataclass(frozen=True)
class InverseResult:
    """A verified inverse: d * value = 1 (mod 2^n - 1), plus how it was found."""

    d: int
    n: int
    value: Residue
    trace: tuple[TraceStep, ...] = field(default_factory=tuple)

    def __post_init__(self):
        m = (1 << self.n) - 1
        if (self.d * self.value.value - 1) % m != 0:
            raise AssertionError(
                f"claimed inverse fails verification: d={self.d}, n={self.n}, "
                f"value={self.value.value}")

    @property
    def weight(self) -> int:
        return self.value.value.bit_count()

    def bits(self) -> BitSeq:
        return to_seq(self.value.value, self.n)

    def record(self) -> str:
        """Stable key=value text form used by the regression fixtures."""
        return "\n".join([
            f"d={self.d}",
            f"n={self.n}",
            f"value={self.value.value}",
            f"bits={self.bits()}",
            f"weight={self.weight}",
            "trace=" + ",".join(str(s) for s in self.trace),
        ])


@dataclass(frozen=True)
class SQuantity:
    """The exact quotient s = (d * Inv_d(n) - 1) / (2^n - 1).

    Positive for every d >= 3; values at mirrored arguments satisfy
    s(r) + s(ord - r) = d + 1.
    """

    d: int
    n: int
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"quotient must be positive, got {self.s}")


def _inv_value(inv_r, r: int) -> int:
    """Accept an inverse as a Residue (ring checked) or a plain int."""
    if isinstance(inv_r, Residue):
        if inv_r.ring.n != r:
            raise ValueError(f"inverse lives in ring n={inv_r.ring.n}, expected n={r}")
        return inv_r.value
    return int(inv_r)


def _s_of(d: int, r: int, a: int) -> int:
    """(d*a - 1) / (2^r - 1), rejecting a that is not an inverse mod 2^r - 1."""
    s, rem = divmod(d * a - 1, (1 << r) - 1)
    if rem:
        raise ValueError(f"{a} is not the inverse of {d} modulo 2^{r}-1")
    return s


def s_quantity(d: int, n: int, inv) -> SQuantity:
    """Exact quotient (d * inv - 1) / (2^n - 1) for a verified inverse, d >= 3."""
    if d < 3:
        raise ValueError("the quotient is defined for d >= 3")
    return SQuantity(d, n, _s_of(d, n, _inv_value(inv, n)))


def reflect_inverse(d: int, r: int, inv_r) -> Residue:
    """Inv_d(ord - r) from Inv_d(r).

    For odd d >= 3 and 1 <= r <= ord-1 with gcd(d, 2^r - 1) = 1,

        Inv_d(ord - r) = ((d + 1 - s(r)) * (2^(ord-r) - 1) + 1) / d

    with s(r) = (d * Inv_d(r) - 1)/(2^r - 1); all divisions are exact.
    """
    if d < 3 or d % 2 == 0:
        raise ValueError("reflection needs odd d >= 3")
    o = order_of_two(d)
    if not 1 <= r <= o - 1:
        raise ValueError(f"r={r} outside 1..{o - 1} for d={d}")
    a = _inv_value(inv_r, r)
    s = _s_of(d, r, a)
    num = (d + 1 - s) * ((1 << (o - r)) - 1) + 1
    t, rem = divmod(num, d)
    if rem:
        raise AssertionError(f"reflection not divisible by d={d} at r={r}")
    return Residue(t, MersenneRing(o - r))


def _lift(d: int, r: int, a: int, n: int) -> int:
    # Inv_d(n) = Inv_d(r)*2^(n-r) + (s(r) - 1)*(2^(n-r) - 1)/d, n = r (mod ord)
    s = _s_of(d, r, a)
    q, rem = divmod((1 << (n - r)) - 1, d)
    if rem:
        raise AssertionError(f"2^{n - r}-1 not divisible by d={d}")
    return a * (1 << (n - r)) + (s - 1) * q


def _check_lift_args(d: int, r: int, n: int) -> int:
    if d < 3 or d % 2 == 0:
        raise ValueError("lifting needs odd d >= 3")
    o = order_of_two(d)
    if not 1 <= r <= o - 1:
        raise ValueError(f"r={r} outside 1..{o - 1} for d={d}")
    if n < r or (n - r) % o != 0:
        raise ValueError(f"n={n} is not r={r} plus a multiple of the order {o}")
    return o


def lift_inverse(d: int, r: int, inv_r, n: int) -> Residue:
    """Inv_d(n) from Inv_d(r) where r = n mod ord, as an exact integer lift."""
    _check_lift_args(d, r, n)
    return Residue(_lift(d, r, _inv_value(inv_r, r), n), MersenneRing(n))


def lift_inverse_concat(d: int, r: int, inv_r, inv_reflect, n: int) -> Residue:
    """Same lift written as geometric block sums over Inv_d(r) and Inv_d(ord-r).

        Inv_d(n) = Inv_d(r) * sum_{i<=m} 2^(ord*i)
                 + (2^(ord-r) - 1 - Inv_d(ord-r)) * 2^r * sum_{i<m} 2^(ord*i)

    with m = (n - r)/ord.
    """
    o = _check_lift_args(d, r, n)
    a = _inv_value(inv_r, r)
    b = _inv_value(inv_reflect, o - r)
    m = (n - r) // o
    block = (1 << o) - 1
    sum_m1 = ((1 << (o * (m + 1))) - 1) // block
    sum_m = ((1 << (o * m)) - 1) // block
    return Residue(a * sum_m1 + ((1 << (o - r)) - 1 - b) * (1 << r) * sum_m,
                   MersenneRing(n))


def lift_inverse_direct(d: int, r: int, inv_r, n: int) -> Residue:
    """Same lift in closed division form: (Inv_d(r)*(2^n-1) - (2^n-2^r)/d)/(2^r-1)."""
    _check_lift_args(d, r, n)
    a = _inv_value(inv_r, r)
    q, rem = divmod((1 << n) - (1 << r), d)
    if rem:
        raise AssertionError(f"2^{n}-2^{r} not divisible by d={d}")
    t, rem = divmod(a * ((1 << n) - 1) - q, (1 << r) - 1)
    if rem:
        raise AssertionError(f"direct lift not divisible by 2^{r}-1")
    return Residue(t, MersenneRing(n))


@dataclass(frozen=True)
class ConcatStructure:
    """Block layout of Inv_d(n): a head a_r then m copies of an ord-bit block u.

    The block itself splits as u = ~b | a_r where b represents
    Inv_d(ord - r), so the whole expansion is a_r | ~b | a_r | ... | a_r.
    """

    d: int
    n: int
    r: int
    order: int
    copies: int
    a: BitSeq
    u: BitSeq
    b_bar: BitSeq
    reassembled: BitSeq

    def describe(self) -> str:
        return f"t_{self.n} = a_{self.r} | u_{self.order} * {self.copies}"


def concat_structure(d: int, n: int) -> ConcatStructure:
    """Decompose the bit pattern of Inv_d(n) into its periodic blocks."""
    if d < 3 or d % 2 == 0:
        raise ValueError("structure needs odd d >= 3")
    g = math.gcd(d, (1 << n) - 1)
    if g != 1:
        raise NotInvertible(d, n, g)
    o = order_of_two(d)
    r = n % o
    assert r != 0, "order dividing n contradicts coprimality"
    m = (n - r) // o
    a_val = invert(d, r).value.value
    s = _s_of(d, r, a_val)
    u_val = (s - 1) * (((1 << o) - 1) // d)
    a = to_seq(a_val, r)
    u = to_seq(u_val, o)
    b = to_seq(invert(d, o - r).value.value, o - r)
    b_bar = complement(b)
    if concat(b_bar, a) != u:
        raise AssertionError(f"block u != ~b | a for d={d}, n={n}")
    reassembled = concat(a, *([u] * m))
    if reassembled != to_seq(invert(d, n).value.value, n):
        raise AssertionError(f"reassembled blocks disagree with Inv_{d}({n})")
    return ConcatStructure(d, n, r, o, m, a, u, b_bar, reassembled)


def weight_via_half_order(d: int, n: int) -> int:
    """Binary weight of Inv_d(n) without computing it at full size.

    Valid when ord is even and d divides 2^(ord/2) + 1: the periodic
    block then carries exactly ord/2 ones, so

        wt(Inv_d(n)) = wt(Inv_d(r)) + (n - r)/2,   r = n mod ord.
    """
    if d < 3 or d % 2 == 0:
        raise ValueError("weight shortcut needs odd d >= 3")
    o = order_of_two(d)
    if o % 2 != 0 or ((1 << (o // 2)) + 1) % d != 0:
        raise ValueError(f"d={d} does not divide 2^{o // 2}+1; weight shortcut undefined")
    g = math.gcd(d, (1 << n) - 1)
    if g != 1:
        raise NotInvertible(d, n, g)
    r = n % o
    assert r != 0
    return invert(d, r).weight + (n - r) // 2


def _unwind(frames, value: int) -> int:
    for kind, fd, fr, fn in reversed(frames):
        if kind == "even":
            fm = (1 << fn) - 1  # fd holds the stripped 2-power u here
            value = (value << ((fn - fd) % fn)) % fm
        elif kind == "lift":
            value = _lift(fd, fr, value, fn)
        else:  # reflect: value is Inv(fr), fr = ord - fn
            s = _s_of(fd, fr, value)
            num = (fd + 1 - s) * ((1 << fn) - 1) + 1
            value, rem = divmod(num, fd)
            assert rem == 0
    return value


def invert(d: int, n: int) -> InverseResult:
    """Inv_d(n) by recursive reduction, with a full derivation trace.

    The reduction chain is iterative (no Python recursion): strip the
    2-part of d in one step, reduce n modulo the order of 2 mod d,
    reduce d modulo the now-small modulus, reflect when n lies past the
    half order, and fall back to `euclid_inverse` only below it.  A
    defensive bound of 2*bitlen(d) + 4 chain steps guards against bugs;
    honest inputs stay far below it.
    """
    if d < 1 or n < 1:
        raise ValueError("invert expects positive d and n")
    g = math.gcd(d, (1 << n) - 1)
    if g != 1:
        raise NotInvertible(d, n, g)
    limit = 2 * d.bit_length() + 4
    steps: list[TraceStep] = []
    frames: list[tuple] = []
    cd, cn = d, n
    while True:
        if len(steps) > limit:
            raise AssertionError(
                f"reduction chain exceeded {limit} steps for d={d}, n={n}")
        if cn == 1 or cd == 1:
            value = 1
            break
        if cd % 2 == 0:
            u = (cd & -cd).bit_length() - 1
            steps.append(TraceStep("EvenShift", u))
            frames.append(("even", u, None, cn))
            cd >>= u
            continue
        o = order_of_two(cd)
        r = cn % o
        assert r != 0, "order dividing n contradicts coprimality"
        if r != cn:
            steps.append(TraceStep("OrderReduce", r))
            frames.append(("lift", cd, r, cn))
            cn = r
            continue
        cm = (1 << cn) - 1
        d_red = cd % cm
        if d_red != cd:
            assert d_red != 0, "d = 0 mod 2^n-1 contradicts coprimality"
            steps.append(TraceStep("ModulusReduce", d_red))
            cd = d_red
            continue
        if 2 * cn > o:
            steps.append(TraceStep("Reflect", o - cn))
            frames.append(("reflect", cd, o - cn, cn))
            cn = o - cn
            continue
        steps.append(TraceStep("OracleFallback", cn))
        value = euclid_inverse(cd, MersenneRing(cn)).value
        break
    value = _unwind(frames, value)
    ring = MersenneRing(n)
    res = Residue(value, ring)
    return InverseResult(d, n, res, tuple(steps))


def replay_trace(d: int, n: int, trace) -> int:
    """Re-run a trace produced by `invert` and return the value it implies.

    Rejects traces containing ClosedForm steps, which belong to the
    family formulas rather than to the reduction chain.
    """
    frames: list[tuple] = []
    cd, cn = d, n
    value = None
    for st in trace:
        if st.tag == "EvenShift":
            frames.append(("even", st.param, None, cn))
            cd >>= st.param
        elif st.tag == "OrderReduce":
            frames.append(("lift", cd, st.param, cn))
            cn = st.param
        elif st.tag == "ModulusReduce":
            cd = st.param
        elif st.tag == "Reflect":
            frames.append(("reflect", cd, st.param, cn))
            cn = st.param
        elif st.tag == "OracleFallback":
            if st.param != cn:
                raise ValueError(f"trace falls back at n={st.param}, state has n={cn}")
            value = euclid_inverse(cd, MersenneRing(cn)).value
        else:
            raise ValueError(f"cannot replay step {st}")
    if value is None:
        if cn != 1 and cd != 1:
            raise ValueError("trace ends before reaching a base case")
        value = 1
    return _unwind(frames, value)
