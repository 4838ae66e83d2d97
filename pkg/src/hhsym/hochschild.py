"""Hochschild cohomology dimensions of symmetric group algebras over F_p.

The dimension in cohomological degree d of the Hochschild cohomology of
F_p S_n decomposes over partitions of n: each partition contributes the
total-degree-d piece of a tensor product of wreath product cohomologies
``Z/m wr S_(multiplicity of m)``, one factor per part length m.  In
degrees up to two the wreath dimensions are the small tables of
:mod:`hhsym.wreath`, and summing them over all partitions collapses to
the partition statistics of :mod:`hhsym.statistics`.

Three independent routes are exposed: :func:`hh_dimension` evaluates the
closed formulas, :func:`hh_dimension_series` expands a rational multiple
of the partition generating function, and :func:`hh_dimension_oracle`
enumerates partitions and sums wreath dimensions directly.
"""

from math import isqrt

from . import kernels, wreath
from .partitions import DEFAULT_ENUMERATION_CAP, _check_enumeration_cap, partition_count
from .series import (
    FactoredDenominator,
    Polynomial,
    RationalFunction,
    expand_with_partition_series,
)
from .statistics import (
    distinct_subsets_rational,
    distinct_subsets_total,
    even_pairs_rational,
    even_pairs_total,
    parts_equal_rational,
    parts_equal_total,
)

SUPPORTED_DEGREES = (0, 1, 2)


class Prime:
    """A prime number, checked at construction.

    Everything downstream assumes genuine primality (the wreath tables
    distinguish only divisibility by p), so the check is eager and a
    composite or unit argument raises ``ValueError``.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        value = int(value)
        if value < 2:
            raise ValueError("%d is not a prime" % value)
        for d in range(2, isqrt(value) + 1):
            if value % d == 0:
                raise ValueError("%d is not a prime (divisible by %d)" % (value, d))
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Prime is immutable")

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Prime):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "Prime(%d)" % self.value


def _prime_value(p):
    if isinstance(p, Prime):
        return p.value
    return Prime(p).value


def _require_degree(degree):
    if degree not in SUPPORTED_DEGREES:
        raise ValueError(
            "degree must be one of %r, got %r" % (SUPPORTED_DEGREES, degree)
        )


class WreathCohomologyDims:
    """Dimension rule for ``Z/m wr S_ell`` in one degree and characteristic."""

    __slots__ = ("p", "degree")

    def __init__(self, p, degree):
        _require_degree(degree)
        if not isinstance(p, Prime):
            p = Prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "degree", degree)

    def __setattr__(self, name, value):
        raise AttributeError("WreathCohomologyDims is immutable")

    def dim(self, m, ell):
        if m < 1:
            raise ValueError("m must be >= 1, got %d" % m)
        if ell < 0:
            raise ValueError("ell must be >= 0, got %d" % ell)
        if self.degree == 0:
            return 1
        if self.degree == 1:
            return int(wreath.cyclic_wreath_h1(m, ell, self.p.value))
        return int(wreath.cyclic_wreath_h2(m, ell, self.p.value))

    def __repr__(self):
        return "WreathCohomologyDims(%r, %d)" % (self.p, self.degree)


def hh_dimension(degree, n, p):
    """dim of the degree-d Hochschild cohomology of F_p S_n, closed route.

    Degree 0 is the number of partitions of n (the dimension of the
    centre).  In degrees 1 and 2 the answer is a small combination of
    the summed partition statistics; n = 0 gives the group algebra of
    the empty group, with dimension 1 in degree 0 and 0 above.
    """
    _require_degree(degree)
    p = _prime_value(p)
    if n < 0:
        raise ValueError("n must be >= 0, got %d" % n)
    if degree == 0:
        return partition_count(n)
    if p == 2:
        if degree == 1:
            return 2 * parts_equal_total(2, n)
        return (
            2 * parts_equal_total(2, n)
            + 2 * parts_equal_total(4, n)
            + parts_equal_total(6, n)
            + 2 * distinct_subsets_total(2, 2, n)
            + even_pairs_total(n)
        )
    if degree == 1:
        return parts_equal_total(p, n)
    return parts_equal_total(p, n) + distinct_subsets_total(p, 2, n)


def hh_dimension_oracle(degree, n, p, enum_cap=DEFAULT_ENUMERATION_CAP):
    """Enumeration route: sweep partitions, sum wreath cohomology dimensions."""
    _require_degree(degree)
    p = _prime_value(p)
    if n < 0:
        raise ValueError("n must be >= 0, got %d" % n)
    _check_enumeration_cap(n, enum_cap)
    return int(kernels.hochschild_sum(n, degree, p))


def hh_rational(degree, p):
    """The rational multiplier of the partition series for one degree.

    Multiplying the returned function by P(t) and expanding gives the
    dimension sequence; see :func:`hh_dimension_series`.
    """
    _require_degree(degree)
    p = _prime_value(p)
    if degree == 0:
        return RationalFunction(1)
    if p == 2:
        if degree == 1:
            return RationalFunction(Polynomial((0, 0, 2)), FactoredDenominator((2,)))
        return RationalFunction(
            Polynomial((0, 0, 2, 0, 3, 0, -1)), FactoredDenominator((2, 4))
        )
    if degree == 1:
        return RationalFunction.geometric(p)
    return RationalFunction(
        Polynomial.monomial(1, p), FactoredDenominator((p, 2 * p))
    )


def hh_dimension_series(degree, p, order):
    """Generating-function route: the dimension sequence for n = 0..order."""
    return expand_with_partition_series(hh_rational(degree, p), order)


def hh2_mod2_identity_check():
    """Whether the five-term degree-2 sum at p = 2 collapses as stated.

    The statistic-by-statistic multipliers (two copies of the length-2
    and length-4 part counts, one of length 6, two subset pairs and the
    even-pair statistic) must add up to the single fraction returned by
    :func:`hh_rational` for degree 2.  Returns the comparison result;
    the package treats False as a broken build.
    """
    total = (
        2 * parts_equal_rational(2)
        + 2 * parts_equal_rational(4)
        + parts_equal_rational(6)
        + 2 * distinct_subsets_rational(2, 2)
        + even_pairs_rational()
    )
    return total == hh_rational(2, Prime(2))
