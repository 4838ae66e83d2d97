import pytest
from hypothesis import given, strategies as st

from hhsym.errors import ResourceCapError
from hhsym.partitions import (
    DEFAULT_ENUMERATION_CAP,
    HARD_ENUMERATION_CAP,
    Partition,
    c_stat,
    c_stat_by_subsets,
    conjugate_part_list,
    e_stat,
    enumerate_partitions,
    g_stat,
    partition_count,
    q_count,
)


class TestPartition:
    def test_from_part_list_run_length_encodes(self):
        p = Partition.from_part_list([1, 4, 2, 2, 1])
        assert p.parts == ((4, 1), (2, 2), (1, 2))
        assert p.n == 10
        assert len(p) == 5
        assert p.to_part_list() == [4, 2, 2, 1, 1]

    def test_empty_partition(self):
        p = Partition()
        assert p.n == 0
        assert len(p) == 0
        assert p.to_part_list() == []

    def test_validation(self):
        with pytest.raises(ValueError):
            Partition(((0, 1),))
        with pytest.raises(ValueError):
            Partition(((2, 0),))
        with pytest.raises(ValueError):
            Partition(((2, 1), (3, 1)))  # lengths must decrease
        with pytest.raises(ValueError):
            Partition(((2, 1), (2, 1)))  # and strictly so

    def test_multiplicity_lookup(self):
        p = Partition.from_part_list([4, 2, 2, 1])
        assert p.multiplicity(2) == 2
        assert p.multiplicity(3) == 0
        with pytest.raises(ValueError):
            p.multiplicity(0)

    def test_part_lengths(self):
        p = Partition.from_part_list([4, 2, 2, 1])
        assert p.part_lengths() == (4, 2, 1)

    def test_immutability_and_hash(self):
        p = Partition.from_part_list([2, 1])
        with pytest.raises(AttributeError):
            p.n = 7
        assert p == Partition(((2, 1), (1, 1)))
        assert hash(p) == hash(Partition.from_part_list([1, 2]))


class TestCounting:
    @pytest.mark.parametrize(
        "n, expected",
        [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (10, 42), (100, 190569292)],
    )
    def test_known_values(self, n, expected):
        assert partition_count(n) == expected

    def test_negative_counts_zero(self):
        assert partition_count(-1) == 0
        assert partition_count(-10) == 0

    def test_large_values_stay_exact(self):
        assert partition_count(200) == 3972999029388
        assert partition_count(500) == 2300165032574323995027


class TestEnumeration:
    def test_order_for_four(self):
        listed = [p.to_part_list() for p in enumerate_partitions(4)]
        assert listed == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]

    def test_zero_yields_empty_partition(self):
        assert list(enumerate_partitions(0)) == [Partition()]

    @pytest.mark.parametrize("n", range(13))
    def test_count_matches_recurrence(self, n):
        assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)

    def test_each_partition_sums_to_n(self):
        for p in enumerate_partitions(11):
            assert p.n == 11
            assert sum(p.to_part_list()) == 11

    def test_decreasing_lexicographic(self):
        previous = None
        for p in enumerate_partitions(9):
            listed = p.to_part_list()
            if previous is not None:
                assert listed < previous
            previous = listed

    def test_default_cap(self):
        with pytest.raises(ResourceCapError):
            next(enumerate_partitions(DEFAULT_ENUMERATION_CAP + 1))

    def test_cap_can_be_raised_within_hard_limit(self):
        first = next(enumerate_partitions(45, enum_cap=45))
        assert first.to_part_list() == [45]

    def test_hard_cap(self):
        with pytest.raises(ValueError):
            next(enumerate_partitions(10, enum_cap=HARD_ENUMERATION_CAP + 1))
        with pytest.raises(ValueError):
            next(enumerate_partitions(10, enum_cap=-1))

    def test_negative_n(self):
        with pytest.raises(ValueError):
            next(enumerate_partitions(-1))


class TestStatistics:
    def test_g_stat_counts_divisible_lengths_with_depth(self):
        p = Partition.from_part_list([4, 2, 2, 1])
        assert g_stat(p, 1, 1) == 3  # distinct lengths
        assert g_stat(p, 2, 1) == 2  # lengths 4 and 2
        assert g_stat(p, 2, 2) == 1  # only 2 is repeated
        assert g_stat(p, 4, 1) == 1
        assert g_stat(p, 3, 1) == 0
        with pytest.raises(ValueError):
            g_stat(p, 0, 1)
        with pytest.raises(ValueError):
            g_stat(p, 1, 0)

    def test_c_stat_is_binomial_of_g(self):
        p = Partition.from_part_list([4, 2, 2, 1])
        assert c_stat(p, 1, 2) == 3  # C(3, 2)
        assert c_stat(p, 2, 2) == 1  # C(2, 2)
        assert c_stat(p, 2, 3) == 0
        assert c_stat(p, 1, 0) == 1
        with pytest.raises(ValueError):
            c_stat(p, 1, -1)

    @pytest.mark.parametrize("n", range(1, 16))
    def test_c_stat_matches_subset_listing(self, n):
        for p in enumerate_partitions(n):
            for k in (1, 2, 3):
                for r in (1, 2, 3):
                    assert c_stat(p, k, r) == c_stat_by_subsets(p, k, r)

    def test_e_stat_examples(self):
        # (2, 2): the only repeated length is even itself, so the pair
        # (repeated, even) always collides and nothing is counted.
        assert e_stat(Partition.from_part_list([2, 2])) == 0
        # (2, 1, 1): repeated length 1, even length 2, distinct.
        assert e_stat(Partition.from_part_list([2, 1, 1])) == 1
        assert e_stat(Partition.from_part_list([4, 2, 2, 1])) == 1
        assert e_stat(Partition()) == 0

    def test_q_count_small_tables(self):
        assert [q_count(n, 2) for n in range(11)] == [0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4]
        assert [q_count(n, 3) for n in range(13)] == [
            0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 5, 7,
        ]
        assert q_count(0, 0) == 1
        assert q_count(-3, 2) == 0
        with pytest.raises(ValueError):
            q_count(5, -1)

    def test_conjugate(self):
        assert conjugate_part_list([4, 2, 2, 1]) == [4, 3, 1, 1]
        assert conjugate_part_list([]) == []
        assert conjugate_part_list([1, 1, 1]) == [3]

    @given(st.integers(min_value=0, max_value=14))
    def test_conjugation_is_an_involution(self, n):
        for p in enumerate_partitions(n):
            parts = p.to_part_list()
            assert conjugate_part_list(conjugate_part_list(parts)) == parts


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=1, max_value=4))
def test_g_stat_sums_count_divisible_parts(n, k):
    # Summing multiplicity-threshold indicators over ell recovers, for
    # each partition, the number of parts (with multiplicity) whose
    # length is divisible by k; totalled over all partitions of n that
    # equals sum over ell and i of p(n - i*k*ell).
    total = sum(
        g_stat(p, k, ell)
        for p in enumerate_partitions(n)
        for ell in range(1, n + 1)
    )
    expected = sum(
        partition_count(n - i * k * ell)
        for ell in range(1, n + 1)
        for i in range(1, n + 1)
    )
    assert total == expected
