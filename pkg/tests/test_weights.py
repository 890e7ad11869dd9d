"""Weight distributions, the bit-sliced enumerator, and screening tools.

Covers: WeightDistribution validation and serialization, subset-sum
weight counting (including thread-count independence), dual trace
distributions, the MacWilliams transform, two-power divisibility, APN
checks across the named exponent families, and the equal-pair harness.
"""

from math import comb

import numpy as np
import pytest

from tricode.field import bit_weight, build_field
from tricode.weights import (
    REPORTED_EQUAL_PAIRS,
    WeightDistribution,
    apn_check,
    apn_family_exponents,
    dual_trace_distribution,
    enumerate_weight_counts,
    macwilliams_transform,
    table_harness,
    trace_word_mask,
    two_power_divisibility,
)

DUAL_COUNTS_M5 = {0: 1, 8: 465, 12: 8680, 16: 18259, 20: 5208, 24: 155}
DUAL_DIGEST_M5 = "2fe940280f26b37a40dde5502571a4594986311c92456e458ee72efd2145e245"


class TestWeightDistribution:
    def test_zero_counts_dropped(self):
        dist = WeightDistribution(length=5, code_size=2, counts={0: 1, 3: 1, 4: 0})
        assert dist.counts == {0: 1, 3: 1}
        assert dist.support == (0, 3)
        assert dist.min_positive_weight == 3

    def test_csv_and_digest(self):
        dist = WeightDistribution(length=5, code_size=2, counts={3: 1, 0: 1})
        assert dist.to_csv() == "0,1\n3,1\n"
        assert len(dist.digest) == 64
        assert dist.digest == WeightDistribution(length=5, code_size=2, counts={0: 1, 3: 1}).digest

    def test_weight_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            WeightDistribution(length=5, code_size=2, counts={0: 1, 6: 1})

    def test_negative_count(self):
        with pytest.raises(ValueError, match="negative count"):
            WeightDistribution(length=5, code_size=0, counts={2: -1, 0: 1})

    def test_sum_mismatch(self):
        with pytest.raises(ValueError, match="sum to code_size"):
            WeightDistribution(length=5, code_size=4, counts={0: 1})

    def test_no_positive_weight(self):
        dist = WeightDistribution(length=5, code_size=1, counts={0: 1})
        with pytest.raises(ValueError, match="no nonzero"):
            dist.min_positive_weight


class TestEnumerateWeightCounts:
    def test_tiny_independent_basis(self):
        counts = enumerate_weight_counts([0b01, 0b10], 2)
        assert counts.tolist() == [1, 2, 1]

    def test_dependent_basis_keeps_multiplicity(self):
        counts = enumerate_weight_counts([0b1, 0b1], 2)
        assert counts.tolist() == [2, 2, 0]

    def test_mask_too_wide(self):
        with pytest.raises(ValueError, match="exceeds"):
            enumerate_weight_counts([0b100], 2)

    def test_matches_direct_enumeration(self):
        rng = np.random.default_rng(5)
        basis = [int(x) for x in rng.integers(0, 1 << 12, size=10)]
        counts = enumerate_weight_counts(basis, 12)
        direct = np.zeros(13, dtype=np.int64)
        for sel in range(1 << 10):
            acc = 0
            for i in range(10):
                if sel >> i & 1:
                    acc ^= basis[i]
            direct[bit_weight(acc)] += 1
        assert counts.tolist() == direct.tolist()

    def test_thread_count_does_not_change_counts(self, field5):
        one = dual_trace_distribution(field5, 3, 13, workers=1)
        three = dual_trace_distribution(field5, 3, 13, workers=3)
        assert one.counts == three.counts


class TestTraceWords:
    def test_trace_word_is_balanced(self, field5):
        word = trace_word_mask(field5, 1, 0)
        assert bit_weight(word) == 16

    def test_offset_by_d_rotates_the_word(self, field5):
        base = trace_word_mask(field5, 3, 0)
        shifted = trace_word_mask(field5, 3, 3)
        n = 31
        rotated = ((base >> 1) | ((base & 1) << (n - 1))) & ((1 << n) - 1)
        assert shifted == rotated


class TestDualTraceDistribution:
    def test_frozen_counts_m5(self, field5):
        dist = dual_trace_distribution(field5, 3, 13)
        assert dist.counts == DUAL_COUNTS_M5
        assert dist.code_size == 1 << 15
        assert dist.digest == DUAL_DIGEST_M5

    def test_matches_reference_pair(self, field5):
        assert dual_trace_distribution(field5, 3, 5).counts == DUAL_COUNTS_M5

    def test_control_pair_differs(self, field5):
        assert dual_trace_distribution(field5, 3, 15).counts != DUAL_COUNTS_M5

    def test_degenerate_exponents_rejected(self, field5):
        with pytest.raises(ValueError, match="distinct conjugacy"):
            dual_trace_distribution(field5, 2, 13)
        with pytest.raises(ValueError, match="distinct conjugacy"):
            dual_trace_distribution(field5, 3, 6)

    def test_independent_of_primitive_polynomial(self, field5):
        # x^5 + x^4 + x^3 + x^2 + 1 is primitive too (any degree-5
        # irreducible is, since 31 is prime)
        other = build_field(5, poly=0b111101)
        assert other.poly != field5.poly
        assert dual_trace_distribution(other, 3, 13).counts == DUAL_COUNTS_M5

    def test_conjugate_exponent_gives_same_distribution(self, field5):
        assert dual_trace_distribution(field5, 6, 13).counts == DUAL_COUNTS_M5

    def test_support_of_reference_dual_is_five_valued(self, field5):
        support = set(dual_trace_distribution(field5, 3, 5).counts)
        assert support <= {0, 16, 12, 20, 8, 24}


class TestMacWilliams:
    def test_trivial_code_gives_binomials(self):
        dist = WeightDistribution(length=5, code_size=1, counts={0: 1})
        dual = macwilliams_transform(dist)
        assert dual.counts == {i: comb(5, i) for i in range(6)}
        assert dual.code_size == 32

    def test_involution(self, field5):
        dist = dual_trace_distribution(field5, 3, 13)
        assert macwilliams_transform(macwilliams_transform(dist)).counts == dist.counts

    def test_non_code_distribution_rejected(self):
        dist = WeightDistribution(length=2, code_size=1, counts={2: 1})
        with pytest.raises(ValueError, match="not integral"):
            macwilliams_transform(dist)


class TestDivisibility:
    def test_m5_dual_exponent(self, field5):
        assert two_power_divisibility(dual_trace_distribution(field5, 3, 13)) == 2

    def test_plain_distribution(self):
        dist = WeightDistribution(length=10, code_size=3, counts={0: 1, 4: 1, 8: 1})
        assert two_power_divisibility(dist) == 2


class TestApn:
    def test_gold_exponent_m5(self, field5):
        report = apn_check(field5, 3)
        assert report.is_apn
        assert report.max_solutions == 2
        assert report.exponent == 3

    def test_kasami_exponent_m5(self, field5):
        assert apn_check(field5, 13).is_apn

    def test_control_not_apn(self):
        report = apn_check(build_field(4), 5)
        assert not report.is_apn
        assert report.max_solutions == 4

    def test_family_tables(self):
        fam5 = apn_family_exponents(5)
        assert fam5["gold"] == (3, 5, 9, 17)
        assert fam5["kasami_welch"] == (13,)
        assert fam5["welch"] == (7,)
        assert fam5["niho"] == (5,)
        assert fam5["inverse"] == (15,)
        assert fam5["dobbertin"] == (29,)
        fam7 = apn_family_exponents(7)
        assert "dobbertin" not in fam7
        assert fam7["kasami_welch"] == (13, 57)
        assert fam7["welch"] == (11,)

    def test_all_families_pass_m5(self, field5):
        for exponents in apn_family_exponents(5).values():
            for d in exponents:
                assert apn_check(field5, d).is_apn


class TestTableHarness:
    def test_reported_pairs_m5(self, field5):
        report = table_harness(field5, REPORTED_EQUAL_PAIRS[5])
        assert report["baseline"] == (3, 5)
        assert report["baseline_digest"] == DUAL_DIGEST_M5
        assert all(report["pairs"].values())
        assert set(report["pairs"]) == {(3, 5), (3, 13), (5, 7), (13, 7)}

    def test_large_field_rejected(self):
        with pytest.raises(ValueError, match="m in"):
            table_harness(build_field(9), ((3, 5),))
