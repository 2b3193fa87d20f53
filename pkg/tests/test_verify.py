import itertools
import math
import random

import pytest

from mersinv.families import dobbertin_inverse
from mersinv.verify import (IRREDUCIBLE, FieldCtx, algebraic_degree,
                            differential_spectrum, is_ab, is_apn,
                            is_irreducible, spectrum_report)


def minimal_irreducible(n):
    # candidates must have the top bit, the constant term (else divisible
    # by x), and odd weight (even weight is divisible by x + 1)
    for w in range(3, n + 2, 2):
        masks = sorted(
            (1 << n) | 1 | sum(1 << b for b in mid)
            for mid in itertools.combinations(range(1, n), w - 2))
        for mask in masks:
            if is_irreducible(mask, n):
                return mask
    raise AssertionError(f"no irreducible of degree {n}")


class TestReductionPolynomials:
    def test_table_entries_are_irreducible(self):
        for n, poly in IRREDUCIBLE.items():
            assert is_irreducible(poly, n)

    def test_table_is_minimal_weight_then_value(self):
        for n in IRREDUCIBLE:
            assert IRREDUCIBLE[n] == minimal_irreducible(n)

    def test_reducible_rejected(self):
        assert not is_irreducible(0b110, 2)        # x^2 + x = x(x+1)
        assert not is_irreducible(0b111111111, 8)  # weight 9, divisible by x+1
        with pytest.raises(ValueError):
            FieldCtx(4, poly=0b10101)              # (x^2 + x + 1)^2

    def test_ctx_range(self):
        with pytest.raises(ValueError):
            FieldCtx(1)
        with pytest.raises(ValueError):
            FieldCtx(15)


class TestFieldArithmetic:
    def test_axioms_sampled(self):
        for n in range(2, 15):
            ctx = FieldCtx(n)
            rng = random.Random(1000 + n)
            for _ in range(10_000):
                a = rng.randrange(ctx.size)
                b = rng.randrange(ctx.size)
                c = rng.randrange(ctx.size)
                assert ctx.mul(a, b) == ctx.mul(b, a)
                assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
                assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)

    def test_unit_group_order(self):
        for n in range(2, 12):
            ctx = FieldCtx(n)
            for x in range(1, ctx.size):
                assert ctx.pow(x, ctx.size - 1) == 1

    def test_trace_is_linear_and_onto(self):
        for n in (3, 5, 8):
            ctx = FieldCtx(n)
            values = {ctx.trace(y) for y in range(ctx.size)}
            assert values == {0, 1}
            rng = random.Random(7)
            for _ in range(500):
                a, b = rng.randrange(ctx.size), rng.randrange(ctx.size)
                assert ctx.trace(a ^ b) == ctx.trace(a) ^ ctx.trace(b)

    def test_linear_form_mask(self):
        ctx = FieldCtx(6)
        for alpha in range(ctx.size):
            mask = ctx.linear_form_mask(alpha)
            for y in (0, 1, 5, 17, 63):
                assert (mask & y).bit_count() & 1 == ctx.trace(ctx.mul(alpha, y))


class TestDifferential:
    def test_gold_apn(self):
        assert is_apn(3, FieldCtx(5))

    def test_gold_k2_n4_fails(self):
        # gcd(k, n) = 2 breaks the gold condition; exhaustively not APN
        assert not is_apn(5, FieldCtx(4))

    def test_spectrum_histogram(self):
        assert differential_spectrum(3, FieldCtx(5)) == {16: 31}
        hist = differential_spectrum(5, FieldCtx(4))
        assert sum(hist.values()) == 15 and set(hist) != {8}

    def test_doubling_and_inversion_invariance_exhaustive(self):
        for n in range(2, 10):
            ctx = FieldCtx(n)
            m = (1 << n) - 1
            verdicts = {d: is_apn(d, ctx) for d in range(1, m)}
            for d in range(1, m):
                assert verdicts[d] == verdicts[2 * d % m]
            if n not in (5, 7, 9):
                continue
            for d in range(1, m):
                if verdicts[d] and math.gcd(d, m) == 1:
                    assert verdicts[pow(d, -1, m)], (n, d)

    def test_exponent_range_enforced(self):
        with pytest.raises(ValueError):
            differential_spectrum(31, FieldCtx(5))
        with pytest.raises(ValueError):
            is_apn(0, FieldCtx(5))


class TestWalsh:
    def test_gold_is_ab(self):
        assert is_ab(3, FieldCtx(5))

    def test_dobbertin_not_ab(self):
        assert not is_ab(29, FieldCtx(5))

    def test_field_inverse_apn_not_ab(self):
        ctx = FieldCtx(5)
        assert is_apn(15, ctx) and not is_ab(15, ctx)

    def test_ab_implies_apn(self):
        for n in (5, 7):
            ctx = FieldCtx(n)
            m = (1 << n) - 1
            for d in range(1, m):
                if is_ab(d, ctx):
                    assert is_apn(d, ctx)

    def test_ab_degree_bound(self):
        for n in (5, 7, 9):
            ctx = FieldCtx(n)
            m = (1 << n) - 1
            for d in range(1, m):
                if is_ab(d, ctx):
                    assert algebraic_degree(d, n) <= (n + 1) // 2

    def test_even_n_rejected(self):
        with pytest.raises(ValueError):
            is_ab(3, FieldCtx(6))

    def test_cap_enforced_and_overridable(self):
        with pytest.raises(ValueError):
            is_ab(3, FieldCtx(13))               # default cap is 11
        with pytest.raises(ValueError):
            is_ab(3, FieldCtx(7), cap=5)
        assert is_ab(3, FieldCtx(7), cap=7)

    def test_all_degrees_construct(self):
        for n in IRREDUCIBLE:
            FieldCtx(n)


class TestAlgebraicDegree:
    def test_small(self):
        assert algebraic_degree(3, 5) == 2

    def test_dobbertin_inverse_degree(self):
        for k in (1, 3, 5):
            t = dobbertin_inverse(k).value.value
            assert algebraic_degree(t, 5 * k) == (5 * k + 3) // 2

    def test_full_modulus_normalizes_up(self):
        assert algebraic_degree(31, 5) == 5
        assert algebraic_degree(62, 5) == 5

    def test_reduction(self):
        assert algebraic_degree(2**5, 5) == 1


class TestReport:
    def test_shape(self):
        text = spectrum_report(3, FieldCtx(5), walsh=True)
        assert text.splitlines() == [
            "n=5", "d=3", "spectrum=16:31", "degree=2", "apn=true", "ab=true"]

    def test_no_walsh_line_without_flag(self):
        assert "ab=" not in spectrum_report(3, FieldCtx(5))
