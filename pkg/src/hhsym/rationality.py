"""Signed sums over labeled graphs and rationality of tuple statistics.

The counting functions here explain why the summed partition statistics
have rational generating functions against the partition series.  The
central object is a weight specification: an ordered list of pairs
``(k_i, ell_i)``.  Ordered tuples of distinct values ``k_i * u_i`` are
counted by inclusion-exclusion over the graphs recording which positions
collide, each graph contributing a product of geometric terms, one per
connected component.  The same machinery evaluated on partitions gives
the threshold statistics.
"""

import math

import numpy as np

from . import kernels
from .errors import ResourceCapError
from .partitions import DEFAULT_ENUMERATION_CAP, _check_enumeration_cap
from .series import RationalFunction

MAX_GRAPH_VERTICES = 12
MAX_SIGNED_SUM_VERTICES = 8
TUPLE_COUNT_MAX_N = 60
TUPLE_COUNT_MAX_R = 4


class LabeledGraph:
    """A simple graph on vertices 1..r with edges packed into a bitmask.

    The possible edges (i, j) with i < j are numbered lexicographically:
    (1,2), (1,3), ..., (1,r), (2,3), ... and bit b of ``edge_mask`` is
    set when edge number b is present.
    """

    __slots__ = ("vertex_count", "edge_mask")

    def __init__(self, vertex_count, edge_mask=0):
        vertex_count = int(vertex_count)
        edge_mask = int(edge_mask)
        if not 1 <= vertex_count <= MAX_GRAPH_VERTICES:
            raise ValueError(
                "vertex count must lie in 1..%d, got %d"
                % (MAX_GRAPH_VERTICES, vertex_count)
            )
        slots = vertex_count * (vertex_count - 1) // 2
        if not 0 <= edge_mask < (1 << slots):
            raise ValueError(
                "edge mask %d out of range for %d vertices" % (edge_mask, vertex_count)
            )
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edge_mask", edge_mask)

    def __setattr__(self, name, value):
        raise AttributeError("LabeledGraph is immutable")

    def _edge_index(self, i, j):
        if not 1 <= i < j <= self.vertex_count:
            raise ValueError("need 1 <= i < j <= %d" % self.vertex_count)
        before = (i - 1) * self.vertex_count - i * (i - 1) // 2
        return before + (j - i - 1)

    def has_edge(self, i, j):
        return bool((self.edge_mask >> self._edge_index(i, j)) & 1)

    def edges(self):
        """The present edges as pairs (i, j) with i < j, in bit order."""
        out = []
        for i in range(1, self.vertex_count + 1):
            for j in range(i + 1, self.vertex_count + 1):
                if self.has_edge(i, j):
                    out.append((i, j))
        return tuple(out)

    def edge_count(self):
        return self.edge_mask.bit_count()

    def components(self):
        """The partition of the vertex set into connected components."""
        parent = list(range(self.vertex_count + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges():
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
        blocks = {}
        for v in range(1, self.vertex_count + 1):
            blocks.setdefault(find(v), []).append(v)
        return ComponentPartition(
            tuple(tuple(block) for block in sorted(blocks.values()))
        )

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.edge_mask == other.edge_mask
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edge_mask))

    def __repr__(self):
        return "LabeledGraph(%d, %d)" % (self.vertex_count, self.edge_mask)


class ComponentPartition:
    """A set partition of 1..r into blocks, each block sorted, blocks
    ordered by smallest element."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blocks = tuple(tuple(int(v) for v in block) for block in blocks)
        seen = set()
        for block in blocks:
            if not block:
                raise ValueError("blocks must be non-empty")
            if list(block) != sorted(block):
                raise ValueError("each block must be sorted")
            seen.update(block)
        if sorted(seen) != list(range(1, sum(len(b) for b in blocks) + 1)):
            raise ValueError("blocks must partition 1..r without repeats")
        if [b[0] for b in blocks] != sorted(b[0] for b in blocks):
            raise ValueError("blocks must be ordered by smallest element")
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("ComponentPartition is immutable")

    @property
    def block_count(self):
        return len(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, ComponentPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "ComponentPartition(%r)" % (self.blocks,)


def enumerate_graphs(vertex_count):
    """Yield every labeled graph on the given vertices, by edge mask."""
    if not 1 <= vertex_count <= MAX_GRAPH_VERTICES:
        raise ValueError(
            "vertex count must lie in 1..%d, got %d"
            % (MAX_GRAPH_VERTICES, vertex_count)
        )
    slots = vertex_count * (vertex_count - 1) // 2
    for mask in range(1 << slots):
        yield LabeledGraph(vertex_count, mask)


class WeightSpec:
    """An ordered list of positive pairs (k, ell), one per tuple position."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        pairs = tuple((int(k), int(ell)) for k, ell in pairs)
        if not pairs:
            raise ValueError("a weight spec needs at least one pair")
        for k, ell in pairs:
            if k < 1 or ell < 1:
                raise ValueError("weights must be >= 1, got (%d, %d)" % (k, ell))
        object.__setattr__(self, "pairs", pairs)

    def __setattr__(self, name, value):
        raise AttributeError("WeightSpec is immutable")

    @property
    def r(self):
        return len(self.pairs)

    def as_arrays(self):
        ks = np.array([k for k, _ in self.pairs], dtype=np.int64)
        ells = np.array([ell for _, ell in self.pairs], dtype=np.int64)
        return ks, ells

    def __eq__(self, other):
        if not isinstance(other, WeightSpec):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "WeightSpec(%r)" % (list(self.pairs),)


def graph_weight(graph, spec):
    """The product over components of ``t^(k_A * ell_A) / (1 - t^(k_A * ell_A))``.

    For a component A the exponent multiplies the least common multiple
    of its k values by the sum of its ell values: tuples collapsing along
    A take a common value ``k_A * u`` repeated with total weight ell_A.
    """
    if graph.vertex_count != spec.r:
        raise ValueError(
            "graph on %d vertices does not match a spec of length %d"
            % (graph.vertex_count, spec.r)
        )
    weight = RationalFunction(1)
    for block in graph.components().blocks:
        k_block = math.lcm(*(spec.pairs[v - 1][0] for v in block))
        ell_block = sum(spec.pairs[v - 1][1] for v in block)
        weight = weight * RationalFunction.geometric(k_block * ell_block)
    return weight


def signed_graph_total(spec):
    """The inclusion-exclusion sum ``sum_Y (-1)^edges(Y) * weight(Y)``.

    Expanding the result gives, at t^n, the number of ordered tuples
    (u_1, ..., u_r) of positive integers with the values k_i * u_i
    pairwise distinct and total weight ``sum ell_i * k_i * u_i = n``.
    The number of graphs doubles with every edge slot, so the vertex
    count is capped.
    """
    if spec.r > MAX_SIGNED_SUM_VERTICES:
        raise ResourceCapError(
            "signed graph sums are capped at %d positions, got %d"
            % (MAX_SIGNED_SUM_VERTICES, spec.r)
        )
    total = RationalFunction(0)
    for graph in enumerate_graphs(spec.r):
        term = graph_weight(graph, spec)
        if graph.edge_count() % 2:
            term = -term
        total = total + term
    return total


def signed_component_total(vertex_count):
    """Sum of ``(-1)^(components + edges)`` over all graphs on r vertices.

    Equals the chromatic polynomial of the complete graph evaluated at
    -1, i.e. ``(-1)^r * r!``; the verifier checks that equality.
    """
    if not 1 <= vertex_count <= MAX_SIGNED_SUM_VERTICES:
        raise ResourceCapError(
            "signed component sums are capped at %d vertices, got %d"
            % (MAX_SIGNED_SUM_VERTICES, vertex_count)
        )
    return int(kernels.signed_component_sum(vertex_count))


def theta(k, ell, x, y):
    """1 when k divides x and y >= ell, else 0."""
    if k < 1:
        raise ValueError("k must be >= 1, got %d" % k)
    if ell < 0:
        raise ValueError("ell must be >= 0, got %d" % ell)
    if x < 1:
        raise ValueError("x must be >= 1, got %d" % x)
    if y < 0:
        raise ValueError("y must be >= 0, got %d" % y)
    return 1 if x % k == 0 and y >= ell else 0


def distinct_value_tuple_count(n, spec):
    """Count ordered tuples (u_1, ..., u_r) of positive integers with the
    k_i * u_i pairwise distinct and ``sum ell_i * k_i * u_i = n``, by
    direct search."""
    if n < 0:
        return 0
    if n > TUPLE_COUNT_MAX_N:
        raise ResourceCapError(
            "tuple counting is capped at n = %d, got %d" % (TUPLE_COUNT_MAX_N, n)
        )
    if spec.r > TUPLE_COUNT_MAX_R:
        raise ResourceCapError(
            "tuple counting is capped at %d positions, got %d"
            % (TUPLE_COUNT_MAX_R, spec.r)
        )
    ks, ells = spec.as_arrays()
    return int(kernels.weighted_tuple_count(n, ks, ells))


def tuple_indicator_total_oracle(n, spec, enum_cap=DEFAULT_ENUMERATION_CAP):
    """Sum over partitions of n, then over ordered tuples of distinct part
    lengths (m_1, ..., m_r), of the product of indicators
    ``theta(k_i, ell_i, m_i, multiplicity of m_i)``."""
    if n < 0:
        return 0
    _check_enumeration_cap(n, enum_cap)
    ks, ells = spec.as_arrays()
    return int(kernels.theta_tuple_sum(n, ks, ells))
