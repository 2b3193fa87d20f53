import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mersinv.bitseq import (BitSeq, complement, concat, from_string,
                            mersenne_multiple_decompose, to_seq, weight)

seqs = st.integers(1, 200).flatmap(
    lambda r: st.tuples(st.integers(0, (1 << r) - 1), st.just(r))).map(
    lambda t: BitSeq(*t))


class TestToSeq:
    def test_examples(self):
        assert str(to_seq(5, 4)) == "0101"
        assert str(to_seq(1, 1)) == "1"
        assert str(to_seq(2**7 - 1, 7)) == "1" * 7

    def test_leading_zeros_significant(self):
        assert to_seq(5, 4) != to_seq(5, 5)

    def test_overflow_rejected(self):
        with pytest.raises(ValueError):
            to_seq(16, 4)
        with pytest.raises(ValueError):
            to_seq(-1, 4)
        with pytest.raises(ValueError):
            to_seq(0, 0)

    @given(seqs)
    def test_roundtrip(self, s):
        assert to_seq(s.value, s.length) == s
        assert from_string(str(s)) == s

    def test_very_long(self):
        s = to_seq(1 << (2**20 - 1), 2**20)
        assert weight(s) == 1 and len(s) == 2**20


class TestComplement:
    def test_example(self):
        assert str(complement(from_string("0101"))) == "1010"

    @given(seqs)
    def test_involution(self, s):
        assert complement(complement(s)) == s

    @given(seqs)
    def test_value_identity(self, s):
        assert complement(s).value == (1 << s.length) - 1 - s.value


class TestConcat:
    def test_example(self):
        joined = concat(from_string("1"), from_string("10"))
        assert str(joined) == "110" and joined.value == 6

    def test_zero_padding_shifts(self):
        s = concat(to_seq(13, 4), to_seq(0, 6))
        assert s.value == 13 << 6

    @given(seqs, seqs, seqs)
    def test_associative_and_additive(self, a, b, c):
        assert concat(concat(a, b), c) == concat(a, concat(b, c)) == concat(a, b, c)
        assert len(concat(a, b, c)) == len(a) + len(b) + len(c)

    @given(seqs, seqs)
    def test_value_identity(self, a, b):
        assert concat(a, b).value == a.value * (1 << b.length) + b.value


class TestWeight:
    def test_examples(self):
        assert weight(to_seq(2**3 + 1, 4)) == 2
        assert weight(to_seq(15, 5)) == 4
        assert weight(to_seq(2**9 - 1, 9)) == 9


class TestStrings:
    def test_grouped_display(self):
        s = from_string("11000011" + "1" + "01101001")
        assert s.grouped() == "11000011 10110100 1"

    def test_parse_ignores_separators(self):
        assert from_string("1100 0011").value == 0xC3
        assert from_string("1100_0011").length == 8

    def test_parse_rejects_junk(self):
        with pytest.raises(ValueError):
            from_string("102")
        with pytest.raises(ValueError):
            from_string("")


class TestMersenneMultipleDecompose:
    def test_example(self):
        w, wbar = mersenne_multiple_decompose(4, 3)
        assert str(w) == "0010" and str(wbar) == "1101"
        assert concat(w, wbar).value == 15 * 3 == 45

    def test_unit_multiplier(self):
        w, wbar = mersenne_multiple_decompose(2, 1)
        assert str(w) == "00" and str(wbar) == "11"
        assert concat(w, wbar).value == 3

    def test_exhaustive_small(self):
        for s in range(2, 13):
            for u in range(1, 1 << s):
                w, wbar = mersenne_multiple_decompose(s, u)
                joined = concat(w, wbar)
                assert joined.value == ((1 << s) - 1) * u
                assert weight(joined) == s
                assert wbar == complement(w) and wbar.value == (1 << s) - u

    def test_random_weight_is_block_size(self):
        rng = random.Random(3)
        for _ in range(10_000):
            s = rng.randrange(2, 400)
            u = rng.randrange(1, 1 << s)
            w, wbar = mersenne_multiple_decompose(s, u)
            assert weight(concat(w, wbar)) == s

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            mersenne_multiple_decompose(1, 1)
        with pytest.raises(ValueError):
            mersenne_multiple_decompose(4, 0)
        with pytest.raises(ValueError):
            mersenne_multiple_decompose(4, 16)
