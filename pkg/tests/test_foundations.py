from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polysym.foundations import (
    Block,
    EMPTY_TYPE,
    SplitType,
    check_partition,
    conjugate,
    enumerate_partitions,
    enumerate_types,
    type_scale,
    type_stats,
    type_union,
    z_value,
)
from polysym.serialize import parse_type, type_from_json, type_to_json

from independent import partition_count, type_count_series


def types_strategy(max_weight=8):
    blocks = st.tuples(st.integers(1, 4), st.integers(1, 4))
    return st.lists(blocks, max_size=4).map(SplitType.from_blocks).filter(
        lambda t: t.weight <= max_weight)


class TestPartitions:
    def test_zero(self):
        assert enumerate_partitions(0) == ((),)

    def test_four(self):
        assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))

    def test_ten_count(self):
        assert len(enumerate_partitions(10)) == 42

    def test_counts_match_recurrence(self):
        for n in range(9):
            assert len(enumerate_partitions(n)) == partition_count(n)

    def test_all_distinct_and_valid(self):
        for n in range(9):
            parts = enumerate_partitions(n)
            assert len(set(parts)) == len(parts)
            for p in parts:
                assert check_partition(p) == p
                assert sum(p) == n

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            check_partition((1, 2))
        with pytest.raises(ValueError):
            check_partition((2, 0))
        with pytest.raises(ValueError):
            enumerate_partitions(-1)

    def test_conjugate_involution(self):
        for n in range(8):
            for p in enumerate_partitions(n):
                assert conjugate(conjugate(p)) == p


class TestTypes:
    def test_weight_one(self):
        assert enumerate_types(1) == (SplitType.from_blocks([(1, 1)]),)

    def test_weight_four_count(self):
        assert len(enumerate_types(4)) == 11

    def test_weight_four_labels(self):
        got = {str(t) for t in enumerate_types(4)}
        expected = {"1^4", "1^{3,1}", "1^{2,2}", "1^{2,1,1}", "1^{1,1,1,1}",
                    "2^1 1^2", "2^1 1^{1,1}", "3^1 1^1", "2^2", "2^{1,1}", "4^1"}
        assert got == expected

    def test_counts_match_generating_function(self):
        series = type_count_series(6)
        for n in range(7):
            assert len(enumerate_types(n)) == series[n]

    def test_canonical_descending_order(self):
        for n in range(6):
            types = enumerate_types(n)
            keys = [t.blocks for t in types]
            assert keys == sorted(keys, reverse=True)

    def test_block_order(self):
        assert Block(2, 1) > Block(1, 3)
        assert Block(2, 2) > Block(2, 1)
        assert Block(3, 1) >= Block(3, 1)

    def test_restrictions(self):
        t = parse_type("3^{4,4,2} 2^{3,2,1,1} 1^{4,3,3,1}")
        assert t.weight == 55
        assert t.restriction(3) == (4, 4, 2)
        assert t.restriction(2) == (3, 2, 1, 1)
        assert t.restriction(1) == (4, 3, 3, 1)
        assert t.restriction(5) == ()

    def test_zero_multiplicity_rejected(self):
        with pytest.raises(ValueError):
            SplitType.from_blocks([(1, 0)])
        with pytest.raises(ValueError):
            SplitType.from_blocks([(0, 2)])

    def test_structural_equality(self):
        a = SplitType.from_blocks([(1, 2), (2, 1), (1, 1)])
        b = SplitType.from_restrictions({1: (2, 1), 2: (1,)})
        assert a == b and hash(a) == hash(b)


class TestTypeOps:
    def test_union_identity(self):
        t = parse_type("2^3")
        assert type_union(EMPTY_TYPE, t) == t

    def test_union_merge(self):
        assert type_union(parse_type("1^{2,1}"), parse_type("1^2 2^1")) == parse_type("1^{2,2,1} 2^1")

    def test_union_disjoint_degrees(self):
        assert type_union(parse_type("9^1 6^1"), parse_type("4^1 2^2")) == parse_type("9^1 6^1 4^1 2^2")

    @given(types_strategy(), types_strategy())
    def test_union_commutative_and_additive(self, a, b):
        assert type_union(a, b) == type_union(b, a)
        assert type_union(a, b).weight == a.weight + b.weight

    @given(types_strategy(), types_strategy(), types_strategy())
    def test_union_associative(self, a, b, c):
        assert type_union(type_union(a, b), c) == type_union(a, type_union(b, c))

    def test_scale_one(self):
        t = parse_type("3^{2,1} 1^4")
        assert type_scale(t, 1) == t

    def test_scale_example(self):
        assert type_scale(parse_type("1^{2,1}"), 3) == parse_type("1^{6,3}")

    def test_scale_carries_power_indices(self):
        # the H_{3^2} expansion carries tau = 1^{2,1} into 1^{4,2}
        assert type_scale(parse_type("1^{2,1}"), 2) == parse_type("1^{4,2}")

    @given(types_strategy(max_weight=6), st.integers(1, 3), st.integers(1, 3))
    def test_scale_composition(self, t, a, b):
        assert type_scale(type_scale(t, a), b) == type_scale(t, a * b)
        assert type_scale(t, a).length == t.length
        for d in t.degrees():
            assert sum(type_scale(t, a).restriction(d)) == a * sum(t.restriction(d))

    def test_stats_empty(self):
        s = type_stats(EMPTY_TYPE)
        assert s == (0, 0, 1, 1)

    def test_stats_large_example(self):
        t = parse_type("3^{2,2} 2^{3,2,2} 1^{4,2}")
        assert type_stats(t).z_tensor == 1536

    def test_stats_small(self):
        s = type_stats(parse_type("1^{2,1}"))
        assert s.z_tensor == 2
        assert s.length == 2
        assert s.sign == -1

    def test_z_value(self):
        assert z_value(()) == 1
        assert z_value((2, 1)) == 2
        assert z_value((4, 2)) == 8
        assert z_value((3, 2, 2)) == 24
        assert z_value((1, 1, 1, 1)) == 24


class TestRationals:
    def test_exactness_at_large_magnitude(self):
        big = Fraction(10**40 + 1, 10**40)
        assert big - 1 == Fraction(1, 10**40)
        assert Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2)

    def test_normalized(self):
        f = Fraction(-6, -4)
        assert f.numerator == 3 and f.denominator == 2


class TestSerialization:
    def test_type_json_round_trip(self):
        t = parse_type("1^{3,1} 2^2")
        data = type_to_json(t)
        assert data == [[2, 2], [1, 3], [1, 1]]
        assert type_from_json(data) == t

    def test_label_round_trip(self):
        for n in range(6):
            for t in enumerate_types(n):
                assert parse_type(str(t)) == t
