import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hhsym.errors import ResourceCapError
from hhsym.rationality import (
    ComponentPartition,
    LabeledGraph,
    WeightSpec,
    distinct_value_tuple_count,
    enumerate_graphs,
    graph_weight,
    signed_component_total,
    signed_graph_total,
    theta,
    tuple_indicator_total_oracle,
)
from hhsym.series import RationalFunction


class TestLabeledGraph:
    def test_edge_bit_order_on_four_vertices(self):
        # Bits: (1,2), (1,3), (1,4), (2,3), (2,4), (3,4); the path
        # 1-2-3-4 therefore sets bits 0, 3 and 5.
        g = LabeledGraph(4, 0b101001)
        assert g.edges() == ((1, 2), (2, 3), (3, 4))
        assert g.has_edge(2, 3)
        assert not g.has_edge(1, 4)
        assert g.edge_count() == 3

    def test_bounds(self):
        with pytest.raises(ValueError):
            LabeledGraph(0)
        with pytest.raises(ValueError):
            LabeledGraph(13)
        with pytest.raises(ValueError):
            LabeledGraph(3, 8)  # three vertices have three edge slots
        with pytest.raises(ValueError):
            LabeledGraph(3, -1)
        with pytest.raises(ValueError):
            LabeledGraph(3).has_edge(2, 2)

    def test_components_of_path(self):
        path = LabeledGraph(4, 0b101001)
        assert path.components() == ComponentPartition(((1, 2, 3, 4),))

    def test_components_of_empty_graph(self):
        empty = LabeledGraph(4)
        assert empty.components().blocks == ((1,), (2,), (3,), (4,))
        assert empty.components().block_count == 4

    def test_components_mixed(self):
        g = LabeledGraph(4, 0b000001)  # just the edge (1, 2)
        assert g.components().blocks == ((1, 2), (3,), (4,))

    def test_enumerate_counts(self):
        for r, expected in ((1, 1), (2, 2), (3, 8), (4, 64)):
            assert sum(1 for _ in enumerate_graphs(r)) == expected
        with pytest.raises(ValueError):
            next(enumerate_graphs(13))


class TestComponentPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            ComponentPartition(((),))
        with pytest.raises(ValueError):
            ComponentPartition(((2, 1),))  # unsorted block
        with pytest.raises(ValueError):
            ComponentPartition(((1,), (3,)))  # not a partition of 1..r
        with pytest.raises(ValueError):
            ComponentPartition(((2,), (1,)))  # blocks out of order
        assert ComponentPartition(((1, 3), (2,))).block_count == 2


class TestWeightSpec:
    def test_basics(self):
        spec = WeightSpec([(2, 3), (1, 1)])
        assert spec.r == 2
        ks, ells = spec.as_arrays()
        assert ks.tolist() == [2, 1]
        assert ells.tolist() == [3, 1]
        assert spec == WeightSpec(((2, 3), (1, 1)))

    def test_validation(self):
        with pytest.raises(ValueError):
            WeightSpec([])
        with pytest.raises(ValueError):
            WeightSpec([(0, 1)])
        with pytest.raises(ValueError):
            WeightSpec([(1, 0)])


class TestGraphWeight:
    def test_empty_graph_multiplies_positions(self):
        spec = WeightSpec([(2, 3), (1, 1)])
        weight = graph_weight(LabeledGraph(2, 0), spec)
        assert weight == RationalFunction.geometric(6) * RationalFunction.geometric(1)

    def test_edge_merges_by_lcm_and_sum(self):
        spec = WeightSpec([(2, 3), (1, 1)])
        weight = graph_weight(LabeledGraph(2, 1), spec)
        # lcm(2, 1) * (3 + 1) = 8.
        assert weight == RationalFunction.geometric(8)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            graph_weight(LabeledGraph(3), WeightSpec([(1, 1)]))


class TestSignedGraphTotal:
    def test_two_identical_positions(self):
        # Pairs of distinct positive integers u_1 != u_2 with u_1 + u_2 = n:
        # n - 1 ordered pairs minus the diagonal when n is even.
        total = signed_graph_total(WeightSpec([(1, 1), (1, 1)]))
        values = total.expand(12)
        for n in range(2, 13):
            expected = (n - 1) - (1 if n % 2 == 0 else 0)
            assert values.coefficient(n) == expected

    def test_expansion_matches_direct_count(self):
        spec = WeightSpec([(2, 1), (1, 2)])
        values = signed_graph_total(spec).expand(12)
        assert [values.coefficient(n) for n in range(13)] == [
            0, 0, 0, 0, 1, 0, 1, 0, 3, 0, 4, 0, 4,
        ]
        for n in range(13):
            assert distinct_value_tuple_count(n, spec) == values.coefficient(n)

    def test_single_position_is_geometric(self):
        assert signed_graph_total(WeightSpec([(3, 2)])) == RationalFunction.geometric(6)

    def test_asymptotics_of_identical_pair(self):
        degree, lead = signed_graph_total(WeightSpec([(1, 1), (1, 1)])).asymptotics()
        assert (degree, lead) == (0, Fraction(2))

    def test_position_cap(self):
        with pytest.raises(ResourceCapError):
            signed_graph_total(WeightSpec([(1, 1)] * 9))


class TestSignedComponentTotal:
    @pytest.mark.parametrize("r", range(1, 7))
    def test_equals_signed_factorial(self, r):
        assert signed_component_total(r) == (-1) ** r * math.factorial(r)

    def test_caps(self):
        with pytest.raises(ResourceCapError):
            signed_component_total(9)
        with pytest.raises(ResourceCapError):
            signed_component_total(0)

    @pytest.mark.parametrize("r", range(1, 6))
    def test_matches_explicit_graph_sweep(self, r):
        total = sum(
            (-1) ** (g.components().block_count + g.edge_count())
            for g in enumerate_graphs(r)
        )
        assert total == signed_component_total(r)


class TestTheta:
    def test_values(self):
        assert theta(2, 2, 4, 2) == 1
        assert theta(2, 2, 4, 1) == 0
        assert theta(2, 2, 3, 5) == 0
        assert theta(1, 0, 7, 0) == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            theta(0, 1, 1, 1)
        with pytest.raises(ValueError):
            theta(1, -1, 1, 1)
        with pytest.raises(ValueError):
            theta(1, 1, 0, 1)
        with pytest.raises(ValueError):
            theta(1, 1, 1, -1)


class TestTupleCounts:
    def test_direct_search_small(self):
        spec = WeightSpec([(1, 1), (1, 1)])
        # u_1 + u_2 = 5 with u_1 != u_2: (1,4), (2,3), (3,2), (4,1).
        assert distinct_value_tuple_count(5, spec) == 4
        assert distinct_value_tuple_count(2, spec) == 0  # only (1,1) collides
        assert distinct_value_tuple_count(-1, spec) == 0

    def test_caps(self):
        spec = WeightSpec([(1, 1), (1, 1)])
        with pytest.raises(ResourceCapError):
            distinct_value_tuple_count(61, spec)
        with pytest.raises(ResourceCapError):
            distinct_value_tuple_count(10, WeightSpec([(1, 1)] * 5))

    def test_indicator_oracle_single_position(self):
        # One position reduces to the divisible-length statistic.
        from hhsym.statistics import divisible_lengths_total

        for n in range(16):
            assert tuple_indicator_total_oracle(
                n, WeightSpec([(2, 2)])
            ) == divisible_lengths_total(2, 2, n)

    def test_indicator_oracle_cap(self):
        with pytest.raises(ResourceCapError):
            tuple_indicator_total_oracle(41, WeightSpec([(1, 1)]))

    @settings(deadline=None, max_examples=40)
    @given(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=3),
                st.integers(min_value=1, max_value=3),
            ),
            min_size=1,
            max_size=3,
        ),
        st.integers(min_value=0, max_value=16),
    )
    def test_signed_sum_counts_tuples(self, pairs, n):
        spec = WeightSpec(pairs)
        expansion = signed_graph_total(spec).expand(max(n, 1))
        assert expansion.coefficient(n) == distinct_value_tuple_count(n, spec)
