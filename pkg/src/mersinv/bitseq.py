"""Fixed-length binary sequences, most significant bit first.

A sequence of length r represents an integer v < 2^r together with its
leading zeros, so sequences of different lengths are always distinct.
The usual identities hold:

    value(a | b)  =  value(a) * 2^len(b) + value(b)
    value(~a)     =  2^r - 1 - value(a)

Internally a sequence is just the pair (value, length); string forms
are rendered on demand, so lengths well beyond 2^20 bits stay cheap.
Sequences are immutable and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BitSeq:
    value: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("sequence length must be positive")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"{self.value} does not fit in {self.length} bits")

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")

    def grouped(self, group: int = 8, sep: str = " ") -> str:
        """Display form with a separator every `group` bits from the left."""
        s = str(self)
        return sep.join(s[i:i + group] for i in range(0, len(s), group))


def to_seq(v: int, length: int) -> BitSeq:
    """The sequence of `length` bits representing v, leading zeros kept."""
    if v < 0 or v >= (1 << length):
        raise ValueError(f"{v} is not representable in {length} bits")
    return BitSeq(v, length)


def from_string(s: str) -> BitSeq:
    """Parse a 0/1 string, ignoring space and underscore separators."""
    s = s.replace(" ", "").replace("_", "")
    if not s or s.strip("01"):
        raise ValueError(f"not a bit string: {s!r}")
    return BitSeq(int(s, 2), len(s))


def complement(s: BitSeq) -> BitSeq:
    """Bitwise complement; represents 2^r - 1 - value(s)."""
    return BitSeq(s.value ^ ((1 << s.length) - 1), s.length)


def concat(first: BitSeq, *rest: BitSeq) -> BitSeq:
    """Concatenation; lengths add and values shift in from the right."""
    v, ln = first.value, first.length
    for s in rest:
        v = (v << s.length) | s.value
        ln += s.length
    return BitSeq(v, ln)


def weight(s: BitSeq) -> int:
    """Number of ones; the algebraic degree of x -> x^value(s)."""
    return s.value.bit_count()


def mersenne_multiple_decompose(s: int, u: int) -> tuple[BitSeq, BitSeq]:
    """Split (2^s - 1) * u into its two complementary half-blocks.

    For s >= 2 and 0 < u < 2^s the 2s-bit representation of
    (2^s - 1) * u is w | ~w with w the s-bit sequence of u - 1, because
    (2^s - 1) * u = (u - 1) * 2^s + (2^s - u).  The weight of the
    product is therefore exactly s.
    """
    if s < 2:
        raise ValueError("block size must be at least 2")
    if not 0 < u < (1 << s):
        raise ValueError(f"multiplier {u} out of range for block size {s}")
    w = to_seq(u - 1, s)
    wbar = complement(w)
    joined = concat(w, wbar)
    assert joined.value == ((1 << s) - 1) * u
    assert weight(joined) == s
    return w, wbar
