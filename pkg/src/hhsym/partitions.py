"""Integer partitions: counting, enumeration and per-partition statistics.

A partition is kept sparse, as pairs ``(length, multiplicity)`` with the
distinct part lengths strictly decreasing.  Counting goes through the
pentagonal number recurrence and never enumerates; enumeration is a
generator in decreasing lexicographic order of part lists and is guarded
by an explicit cap, since the number of partitions grows too fast for
exhaustive iteration to make sense much beyond n = 80.
"""

import math
from itertools import combinations

from .errors import ResourceCapError

DEFAULT_ENUMERATION_CAP = 40
HARD_ENUMERATION_CAP = 80


class Partition:
    """A partition of n as ``((length, multiplicity), ...)``.

    Lengths are strictly decreasing and multiplicities positive.  The
    empty tuple is the unique partition of 0.
    """

    __slots__ = ("parts", "n")

    def __init__(self, parts=()):
        parts = tuple((int(length), int(mult)) for length, mult in parts)
        previous = None
        for length, mult in parts:
            if length < 1:
                raise ValueError("part lengths must be >= 1, got %d" % length)
            if mult < 1:
                raise ValueError("multiplicities must be >= 1, got %d" % mult)
            if previous is not None and length >= previous:
                raise ValueError("part lengths must be strictly decreasing")
            previous = length
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(length * mult for length, mult in parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_part_list(cls, lengths):
        """Build from a list of parts, e.g. ``[3, 1, 1]``."""
        lengths = sorted((int(x) for x in lengths), reverse=True)
        parts = []
        for length in lengths:
            if parts and parts[-1][0] == length:
                parts[-1][1] += 1
            else:
                parts.append([length, 1])
        return cls(tuple((length, mult) for length, mult in parts))

    def multiplicity(self, length):
        """How many parts equal ``length``."""
        if length < 1:
            raise ValueError("part length must be >= 1")
        for part_length, mult in self.parts:
            if part_length == length:
                return mult
        return 0

    def part_lengths(self):
        """The distinct part lengths, largest first."""
        return tuple(length for length, _ in self.parts)

    def to_part_list(self):
        """The parts written out, e.g. ``[3, 1, 1]``."""
        out = []
        for length, mult in self.parts:
            out.extend([length] * mult)
        return out

    def __len__(self):
        """Total number of parts, multiplicities included."""
        return sum(mult for _, mult in self.parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition.from_part_list(%r)" % (self.to_part_list(),)


_partition_counts = [1]


def partition_count(n):
    """The number of partitions of n, by the pentagonal recurrence.

    Negative arguments count zero partitions, which keeps convolution
    formulas free of explicit range guards.  Values are cached in a
    module table that is filled strictly left to right.
    """
    if n < 0:
        return 0
    while len(_partition_counts) <= n:
        target = len(_partition_counts)
        total = 0
        j = 1
        while j * (3 * j - 1) // 2 <= target:
            sign = 1 if j % 2 else -1
            total += sign * _partition_counts[target - j * (3 * j - 1) // 2]
            if j * (3 * j + 1) // 2 <= target:
                total += sign * _partition_counts[target - j * (3 * j + 1) // 2]
            j += 1
        _partition_counts.append(total)
    return _partition_counts[n]


def _check_enumeration_cap(n, enum_cap):
    if not 0 <= enum_cap <= HARD_ENUMERATION_CAP:
        raise ValueError(
            "enumeration cap must lie in 0..%d, got %d" % (HARD_ENUMERATION_CAP, enum_cap)
        )
    if n > enum_cap:
        raise ResourceCapError(
            "enumerating partitions of %d exceeds the cap of %d "
            "(raise enum_cap, hard maximum %d)" % (n, enum_cap, HARD_ENUMERATION_CAP)
        )


def enumerate_partitions(n, enum_cap=DEFAULT_ENUMERATION_CAP):
    """Yield every partition of n in decreasing lexicographic order.

    Starts at the single-part partition ``[n]`` and ends at all ones.
    Requests beyond ``enum_cap`` raise :class:`ResourceCapError`; the cap
    itself may be raised up to the hard maximum of 80.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_enumeration_cap(n, enum_cap)
    if n == 0:
        yield Partition()
        return
    parts = [n]
    while True:
        yield Partition.from_part_list(parts)
        # Find the rightmost part above 1, shrink it, then redistribute
        # everything to its right greedily in blocks of the new value.
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        new = parts[k] - 1
        remainder = len(parts) - k - 1 + parts[k]
        parts[k:] = []
        while remainder >= new:
            parts.append(new)
            remainder -= new
        if remainder:
            parts.append(remainder)


def g_stat(partition, k, ell):
    """How many distinct part lengths are divisible by k with multiplicity >= ell."""
    if k < 1 or ell < 1:
        raise ValueError("k and ell must be >= 1")
    return sum(
        1
        for length, mult in partition.parts
        if length % k == 0 and mult >= ell
    )


def c_stat(partition, k, r):
    """Binomial count of r-element subsets of the part lengths divisible by k."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return math.comb(g_stat(partition, k, 1), r)


def e_stat(partition):
    """Ordered pairs (m, m') of distinct part lengths with m repeated and m' even."""
    repeated = sum(1 for _, mult in partition.parts if mult >= 2)
    even = sum(1 for length, _ in partition.parts if length % 2 == 0)
    both = sum(
        1 for length, mult in partition.parts if mult >= 2 and length % 2 == 0
    )
    return repeated * even - both


def q_count(n, r):
    """Partitions of n into exactly r distinct parts, counted exhaustively.

    This walks the tree of strictly increasing part choices rather than
    using a recurrence, so it can serve as an independent check on
    generating-function expansions.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if n < 0:
        return 0

    def walk(remaining, left, smallest):
        if left == 0:
            return 1 if remaining == 0 else 0
        total = 0
        part = smallest
        while left * part + left * (left - 1) // 2 <= remaining:
            total += walk(remaining - part, left - 1, part + 1)
            part += 1
        return total

    return walk(n, r, 1)


def conjugate_part_list(parts):
    """The conjugate of a partition given as a descending part list."""
    parts = list(parts)
    if not parts:
        return []
    return [sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1)]


def c_stat_by_subsets(partition, k, r):
    """Same count as :func:`c_stat` but by listing the subsets."""
    eligible = [length for length, _ in partition.parts if length % k == 0]
    return sum(1 for _ in combinations(eligible, r))
