"""Partition statistics summed over all partitions of n, by three routes.

Each statistic comes as a closed formula (a convolution against the
partition counting function), as a rational multiplier to be expanded
against the partition series, and as a brute-force oracle that enumerates
partitions and adds up the per-partition statistic.  The routes share no
code beyond the pentagonal recurrence, which is what makes agreement
between them meaningful.
"""

from dataclasses import dataclass

from . import kernels
from .errors import SelfCheckError
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    _check_enumeration_cap,
    partition_count,
)
from .series import FactoredDenominator, Polynomial, RationalFunction


def _require_positive(name, value):
    if value < 1:
        raise ValueError("%s must be >= 1, got %d" % (name, value))


def parts_equal_total(k, n):
    """Total number of parts equal to k over all partitions of n.

    Equals ``sum_i p(n - i*k)`` over ``i >= 1``: the i-th summand counts
    the partitions containing at least i parts of length k.
    """
    _require_positive("k", k)
    if n < 0:
        return 0
    return sum(partition_count(n - i * k) for i in range(1, n // k + 1))


def parts_equal_total_oracle(k, n, enum_cap=DEFAULT_ENUMERATION_CAP):
    """Enumeration route for :func:`parts_equal_total`."""
    _require_positive("k", k)
    if n < 0:
        return 0
    _check_enumeration_cap(n, enum_cap)
    return int(kernels.part_count_sum(n, k))


def parts_equal_rational(k):
    """Multiplier ``t^k / (1 - t^k)`` of the partition series."""
    _require_positive("k", k)
    return RationalFunction.geometric(k)


def divisible_lengths_total(k, ell, n):
    """Sum over partitions of n of the number of distinct part lengths
    divisible by k that appear at least ell times.

    Equals ``sum_{i=1}^{floor(n/k)} p(n - i*k*ell)``; the summand for i
    counts the partitions with at least ell copies of the part i*k, and
    the upper bound beyond ``floor(n/(k*ell))`` only adds zeros.
    """
    _require_positive("k", k)
    _require_positive("ell", ell)
    if n < 0:
        return 0
    return sum(partition_count(n - i * k * ell) for i in range(1, n // k + 1))


def divisible_lengths_total_oracle(k, ell, n, enum_cap=DEFAULT_ENUMERATION_CAP):
    """Enumeration route for :func:`divisible_lengths_total`."""
    _require_positive("k", k)
    _require_positive("ell", ell)
    if n < 0:
        return 0
    _check_enumeration_cap(n, enum_cap)
    return int(kernels.distinct_length_sum(n, k, ell))


def distinct_subsets_total(k, r, n):
    """Sum over partitions of n of the r-subsets of distinct part lengths
    divisible by k.

    Computed by the bijective route: choosing a partition together with r
    distinct lengths ``i_1*k < ... < i_r*k`` among its parts is the same
    as choosing the r distinct multiples first and a partition of what
    remains, so the total is ``sum p(n - k*(i_1 + ... + i_r))`` over
    strictly increasing tuples.
    """
    _require_positive("k", k)
    if r < 0:
        raise ValueError("r must be >= 0, got %d" % r)
    if n < 0:
        return 0

    def walk(left, smallest, budget):
        if left == 0:
            return partition_count(budget)
        total = 0
        i = smallest
        while k * (left * i + left * (left - 1) // 2) <= budget:
            total += walk(left - 1, i + 1, budget - k * i)
            i += 1
        return total

    return walk(r, 1, n)


def distinct_subsets_rational(k, r):
    """Multiplier ``prod_{i=1}^{r} t^(i*k) / (1 - t^(i*k))``."""
    _require_positive("k", k)
    if r < 0:
        raise ValueError("r must be >= 0, got %d" % r)
    out = RationalFunction(1)
    for i in range(1, r + 1):
        out = out * RationalFunction.geometric(i * k)
    return out


def subset_pair_totals_oracle(k, r, n, enum_cap=DEFAULT_ENUMERATION_CAP):
    """Enumeration route returning the pair of subset totals.

    The first entry draws r-subsets from the distinct lengths divisible
    by k, the second from the distinct lengths of multiplicity at least
    k; conjugation swaps the two statistics, so the entries agree.
    """
    _require_positive("k", k)
    if r < 0:
        raise ValueError("r must be >= 0, got %d" % r)
    if n < 0:
        return 0, 0
    _check_enumeration_cap(n, enum_cap)
    by_divisor, by_multiplicity = kernels.subset_pair_sums(n, k, r)
    return int(by_divisor), int(by_multiplicity)


def _even_pair_weight(i):
    # Coefficient of t^(2i) in (t^2/(1-t)^2 - t^3/(1-t^3)) at t -> t^2:
    # i - 1 copies from the square term, minus one when 3 divides i.
    return i - 1 - (1 if i % 3 == 0 else 0)


def even_pairs_total(n):
    """Sum over partitions of n of ordered pairs (m, m') of distinct part
    lengths with m repeated and m' even, as a convolution."""
    if n < 0:
        return 0
    return sum(
        _even_pair_weight(i) * partition_count(n - 2 * i) for i in range(2, n // 2 + 1)
    )


def even_pairs_total_oracle(n, enum_cap=DEFAULT_ENUMERATION_CAP):
    """Enumeration route for :func:`even_pairs_total`."""
    if n < 0:
        return 0
    _check_enumeration_cap(n, enum_cap)
    return int(kernels.even_pair_sum(n))


def even_pairs_rational():
    """Multiplier ``(t^4 + 2 t^8) / ((1 - t^2)(1 - t^6))``.

    The pair statistic factors through a two-variable count on (repeated
    length, even length), whose generating function is
    ``t^2/(1-t)^2 - t^3/(1-t^3)`` before doubling the variable; the
    stated closed form is checked against that construction on every
    call.
    """
    stated = RationalFunction(
        Polynomial((0, 0, 0, 0, 1, 0, 0, 0, 2)), FactoredDenominator((2, 6))
    )
    square = RationalFunction(Polynomial.monomial(1, 2), FactoredDenominator((1, 1)))
    triple = RationalFunction(Polynomial.monomial(1, 3), FactoredDenominator((3,)))
    built = (square - triple).substitute_power(2)
    if stated != built:
        raise SelfCheckError(
            "even-pair closed form disagrees with its pair construction"
        )
    return stated


@dataclass(frozen=True)
class StatisticTable:
    """Values of one statistic for n = 0 .. len(values) - 1."""

    label: str
    parameters: tuple
    values: tuple

    def __post_init__(self):
        if not self.label:
            raise ValueError("a table needs a non-empty label")


def tabulate(label, parameters, value_at, n_max):
    """Build a :class:`StatisticTable` by evaluating ``value_at(n)``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values = tuple(value_at(n) for n in range(n_max + 1))
    return StatisticTable(label, tuple(parameters), values)
