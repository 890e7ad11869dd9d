"""Field construction and exponent bookkeeping.

Covers: bit_weight, table construction and primitivity screening, the
arithmetic helpers on Field, trace properties, cyclotomic cosets and
partitions, and multiplier equivalence of zero sets.
"""

import pytest
from hypothesis import given, strategies as st

from tricode.field import (
    PRIMITIVE_POLY,
    Field,
    bit_weight,
    build_field,
    coset_partition,
    cyclotomic_coset,
    exponent_equivalent,
)


class TestBitWeight:
    def test_known_values(self):
        assert bit_weight(0) == 0
        assert bit_weight(1) == 1
        assert bit_weight(0b10110) == 3
        assert bit_weight((1 << 13) - 1) == 13

    def test_negative_rejected(self):
        with pytest.raises(ValueError, match="non-negative"):
            bit_weight(-1)

    @given(st.integers(min_value=0, max_value=1 << 40), st.integers(min_value=0, max_value=1 << 40))
    def test_xor_inclusion_exclusion(self, a, b):
        assert bit_weight(a ^ b) == bit_weight(a) + bit_weight(b) - 2 * bit_weight(a & b)

    @given(st.integers(min_value=2, max_value=16), st.data())
    def test_complement_identity(self, m, data):
        full = (1 << m) - 1
        a = data.draw(st.integers(min_value=0, max_value=full))
        assert bit_weight(a) + bit_weight(full - a) == m


class TestBuildField:
    def test_basic_shape(self, field5):
        assert field5.m == 5
        assert field5.n == 31
        assert field5.poly == PRIMITIVE_POLY[5]
        assert len(field5.exp) == 62
        assert len(field5.trace) == 32

    def test_exp_log_roundtrip(self, field5):
        for x in range(1, 32):
            assert field5.exp[field5.log[x]] == x
        for i in range(31):
            assert field5.log[field5.exp[i]] == i

    def test_exp_table_doubled(self, field7):
        for i in range(127):
            assert field7.exp[i] == field7.exp[i + 127]

    def test_every_supported_degree_builds(self):
        for m in range(2, 17):
            f = build_field(m)
            assert f.n == (1 << m) - 1
            assert f.exp[f.n] == 1
            for x in range(0, f.n + 1, max(1, f.n // 37)):
                assert f.trace[f.mul(x, x)] == f.trace[x]

    def test_non_primitive_poly_rejected(self):
        # x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5
        with pytest.raises(ValueError, match="not primitive"):
            build_field(4, poly=0b11111)

    def test_reducible_poly_rejected(self):
        with pytest.raises(ValueError, match="not primitive"):
            build_field(4, poly=0b10101)

    def test_wrong_degree_rejected(self):
        with pytest.raises(ValueError, match="degree"):
            build_field(5, poly=0b1011)

    def test_m_out_of_range(self):
        with pytest.raises(ValueError, match="out of supported range"):
            build_field(1)
        with pytest.raises(ValueError, match="out of supported range"):
            build_field(17)


class TestArithmetic:
    def test_mul_by_zero_and_one(self, field5):
        for x in range(32):
            assert field5.mul(0, x) == 0
            assert field5.mul(1, x) == x

    def test_inv(self, field5):
        for x in range(1, 32):
            assert field5.mul(x, field5.inv(x)) == 1

    def test_div(self, field5):
        assert field5.div(field5.mul(7, 9), 9) == 7

    def test_pow_matches_repeated_mul(self, field7):
        x = field7.alpha_power(5)
        acc = 1
        for k in range(1, 10):
            acc = field7.mul(acc, x)
            assert field7.pow(x, k) == acc

    def test_pow_negative_exponent(self, field5):
        x = 13
        assert field5.mul(field5.pow(x, -1), x) == 1

    def test_pow_zero_base(self, field5):
        assert field5.pow(0, 3) == 0
        with pytest.raises(ValueError, match="undefined"):
            field5.pow(0, 0)

    def test_alpha_power_wraps(self, field5):
        assert field5.alpha_power(0) == 1
        assert field5.alpha_power(31) == field5.alpha_power(0)
        assert field5.alpha_power(-1) == field5.alpha_power(30)

    @given(st.integers(min_value=0, max_value=126), st.integers(min_value=0, max_value=126))
    def test_mul_is_log_addition(self, i, j):
        f = _F7
        assert f.mul(f.exp[i], f.exp[j]) == f.exp[(i + j) % 127]


_F7 = build_field(7)


class TestTrace:
    def test_trace_is_binary_and_balanced(self, field5):
        values = list(field5.trace)
        assert set(values) <= {0, 1}
        assert sum(values) == 16

    def test_trace_additive(self, field5):
        for a in range(32):
            for b in range(32):
                assert field5.trace[a ^ b] == field5.trace[a] ^ field5.trace[b]

    def test_trace_frobenius_invariant(self, field7):
        for x in range(128):
            assert field7.trace[field7.mul(x, x)] == field7.trace[x]


class TestCosets:
    def test_singleton_zero(self):
        assert cyclotomic_coset(31, 0) == (0,)

    def test_known_coset(self):
        assert cyclotomic_coset(31, 1) == (1, 2, 4, 8, 16)
        assert cyclotomic_coset(31, 13) == (11, 13, 21, 22, 26)

    def test_coset_closed_under_doubling(self):
        for i in (1, 3, 5, 13, 21):
            c = set(cyclotomic_coset(127, i))
            assert {(2 * x) % 127 for x in c} == c

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            cyclotomic_coset(31, 31)

    def test_partition_covers_everything(self):
        part = coset_partition(31)
        seen = [x for c in part.cosets for x in c]
        assert sorted(seen) == list(range(31))
        assert len(part.cosets) == 7

    def test_coset_sizes_divide_m(self):
        for m in (5, 7, 9):
            for c in coset_partition((1 << m) - 1).cosets:
                assert m % len(c) == 0

    def test_partition_ordered_and_disjoint(self):
        part = coset_partition(127)
        leaders = [c[0] for c in part.cosets]
        assert leaders == sorted(leaders)
        assert sum(len(c) for c in part.cosets) == 127
        assert len({x for c in part.cosets for x in c}) == 127


class TestExponentEquivalent:
    def test_identity(self):
        assert exponent_equivalent(31, (1, 3, 5), (1, 3, 5)) == 1

    def test_maps_across_representatives(self):
        # 13 carries {1, 5, 11} onto the classes of {1, 3, 13} mod 127
        assert exponent_equivalent(127, (1, 5, 11), (1, 3, 13)) == 13

    def test_smallest_multiplier_returned(self):
        d = exponent_equivalent(31, (1, 3, 13), (1, 3, 5))
        assert d == 3

    def test_inequivalent_sets(self):
        assert exponent_equivalent(127, (1, 3, 13), (1, 3, 5)) is None

    def test_rejects_bad_zero_sets(self):
        with pytest.raises(ValueError, match="nonempty"):
            exponent_equivalent(31, (), (1,))
        with pytest.raises(ValueError, match="out of range"):
            exponent_equivalent(31, (0,), (1,))
