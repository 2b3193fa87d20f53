"""Small-field ground truth for power mappings x -> x^d on F_{2^n}.

Field elements are ints holding coefficient masks; multiplication is
shift-and-xor with reduction by a fixed irreducible polynomial (one per
n in 2..14, lowest weight first and lexicographically least among
those, re-verified at construction).  Differential and Walsh spectra of
power maps do not depend on the representation choice, so one
polynomial per degree is enough.

The two verdicts computed here are the exhaustive ones:

  * is_apn: every nonzero derivative direction a yields an image set
    {x^d + (x+a)^d} of exactly 2^(n-1) elements;
  * is_ab (n odd): every Walsh coefficient over alpha != 0, all beta,
    lies in {0, +-2^((n+1)/2)}.

Spectrum work is embarrassingly parallel over the direction a (resp.
the mask alpha): each direction is evaluated independently and merged
in a fixed order, so results are deterministic regardless of how
callers schedule the per-direction work.
"""

from __future__ import annotations

import numpy as np

# degree -> reduction polynomial mask, minimal weight then minimal value
IRREDUCIBLE = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000000011,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000000001001,
    13: 0b10000000011011,
    14: 0b100000000100001,
}

WALSH_CAP_DEFAULT = 11


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(poly: int, n: int) -> bool:
    """Exhaustive trial division by every polynomial of degree 1..n/2."""
    if poly.bit_length() != n + 1:
        return False
    for q in range(2, 1 << (n // 2 + 1)):
        if q.bit_length() >= 2 and _poly_mod(poly, q) == 0:
            return False
    return True


class FieldCtx:
    """F_{2^n} with a fixed reduction polynomial, 2 <= n <= 14.

    Immutable after construction; safe to share between workers.
    """

    def __init__(self, n: int, poly: int | None = None):
        if not 2 <= n <= 14:
            raise ValueError(f"field degree must be in 2..14, got {n}")
        if poly is None:
            poly = IRREDUCIBLE[n]
        if not is_irreducible(poly, n):
            raise ValueError(f"0b{poly:b} is not irreducible of degree {n}")
        self.n = n
        self.poly = poly
        self.size = 1 << n
        # trace mask: Tr(y) = parity(mask & y), built from Tr on the basis
        mask = 0
        for j in range(n):
            t, y = 0, 1 << j
            for _ in range(n):
                t ^= y
                y = self.mul(y, y)
            assert t in (0, 1)
            mask |= t << j
        self._trace_mask = mask

    def mul(self, a: int, b: int) -> int:
        """Shift-and-xor product with reduction."""
        r = 0
        top = self.size
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.poly
        return r

    def pow(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def trace(self, y: int) -> int:
        return ((self._trace_mask & y).bit_count()) & 1

    def linear_form_mask(self, alpha: int) -> int:
        """Mask m with Tr(alpha * y) = parity(m & y) for all y."""
        m, v = 0, alpha
        for j in range(self.n):
            m |= self.trace(v) << j
            v <<= 1
            if v & self.size:
                v ^= self.poly
        return m


def _power_table(d: int, ctx: FieldCtx) -> np.ndarray:
    return np.array([ctx.pow(x, d) for x in range(ctx.size)], dtype=np.int64)


def derivative_image_size(table: np.ndarray, a: int) -> int:
    """|{f(x) + f(x+a)}| for one direction a, from a value table of f."""
    idx = np.arange(table.size)
    return int(np.unique(table ^ table[idx ^ a]).size)


def differential_spectrum(d: int, ctx: FieldCtx) -> dict[int, int]:
    """Histogram mapping derivative image-set size to its direction count."""
    if not 1 <= d <= ctx.size - 2:
        raise ValueError(f"exponent must be in 1..2^{ctx.n}-2")
    table = _power_table(d, ctx)
    hist: dict[int, int] = {}
    for a in range(1, ctx.size):
        s = derivative_image_size(table, a)
        hist[s] = hist.get(s, 0) + 1
    return hist


def is_apn(d: int, ctx: FieldCtx) -> bool:
    """True iff every nonzero direction yields exactly 2^(n-1) values."""
    if not 1 <= d <= ctx.size - 2:
        raise ValueError(f"exponent must be in 1..2^{ctx.n}-2")
    table = _power_table(d, ctx)
    half = ctx.size // 2
    return all(derivative_image_size(table, a) == half for a in range(1, ctx.size))


def _parity_table(size: int) -> np.ndarray:
    v = np.arange(size, dtype=np.uint32)
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return (v & 1).astype(np.int64)


def _wht(v: np.ndarray) -> np.ndarray:
    a = v.copy()
    step = 1
    while step < a.size:
        a = a.reshape(-1, 2 * step)
        a = np.hstack((a[:, :step] + a[:, step:], a[:, :step] - a[:, step:]))
        step *= 2
    return a.ravel()


def is_ab(d: int, ctx: FieldCtx, cap: int = WALSH_CAP_DEFAULT) -> bool:
    """True iff the Walsh spectrum of x -> x^d is {0, +-2^((n+1)/2)}.

    Needs n odd; refuses n above `cap` (the work grows as 2^(2n), so the
    default cap is 11 -- pass a larger cap explicitly to override).
    """
    n = ctx.n
    if n % 2 == 0:
        raise ValueError("the two-valued Walsh criterion is defined for odd n")
    if n > cap:
        raise ValueError(f"n={n} above the Walsh cap {cap}; raise the cap to force")
    table = _power_table(d, ctx)
    parity = _parity_table(ctx.size)
    allowed = {0, 1 << ((n + 1) // 2)}
    for alpha in range(1, ctx.size):
        mask = ctx.linear_form_mask(alpha)
        signs = 1 - 2 * parity[table & mask]
        spectrum = np.unique(np.abs(_wht(signs)))
        if not set(spectrum.tolist()) <= allowed:
            return False
    return True


def algebraic_degree(d: int, n: int) -> int:
    """Weight of d reduced to 1..2^n-1; the degree of x -> x^d on F_{2^n}."""
    if d < 1:
        raise ValueError("exponent must be positive")
    r = d % ((1 << n) - 1)
    if r == 0:
        r = (1 << n) - 1
    return r.bit_count()


def spectrum_report(d: int, ctx: FieldCtx, walsh: bool = False,
                    cap: int = WALSH_CAP_DEFAULT) -> str:
    """key=value report: spectrum histogram, verdicts, degree."""
    hist = differential_spectrum(d, ctx)
    lines = [
        f"n={ctx.n}",
        f"d={d}",
        "spectrum=" + ",".join(f"{s}:{c}" for s, c in sorted(hist.items())),
        f"degree={algebraic_degree(d, ctx.n)}",
        f"apn={'true' if set(hist) == {ctx.size // 2} else 'false'}",
    ]
    if walsh:
        lines.append(f"ab={'true' if is_ab(d, ctx, cap) else 'false'}")
    return "\n".join(lines)
