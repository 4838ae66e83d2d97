"""Cross-route verification suites.

Every identity the package relies on is checked here by comparing
independent computation routes over explicit ranges.  Checks scan in a
fixed order and report the first counterexample; a suite is a list of
:class:`CheckResult` records, which the command line renders as CSV or
JSON.  Identity names are stable strings, so reports are comparable
across runs.
"""

import math
from dataclasses import dataclass

from . import kernels
from .errors import ResourceCapError, SelfCheckError
from .hochschild import (
    Prime,
    WreathCohomologyDims,
    hh2_mod2_identity_check,
    hh_dimension,
    hh_dimension_oracle,
    hh_dimension_series,
)
from .partitions import HARD_ENUMERATION_CAP, partition_count, q_count
from .rationality import (
    MAX_SIGNED_SUM_VERTICES,
    TUPLE_COUNT_MAX_R,
    WeightSpec,
    distinct_value_tuple_count,
    signed_component_total,
    signed_graph_total,
    tuple_indicator_total_oracle,
)
from .series import (
    TruncatedSeries,
    euler_partition_series,
    expand_with_partition_series,
    pentagonal_series,
)
from .statistics import (
    distinct_subsets_rational,
    distinct_subsets_total,
    divisible_lengths_total,
    divisible_lengths_total_oracle,
    even_pairs_rational,
    even_pairs_total,
    even_pairs_total_oracle,
    parts_equal_rational,
    parts_equal_total,
    parts_equal_total_oracle,
    subset_pair_totals_oracle,
)

SUITE_NAMES = ("euler", "elder", "cd", "e", "hh", "graph", "rational")

VERIFY_PRIMES = (2, 3, 5, 7)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    identity: str
    scope: str
    passed: bool
    detail: str = ""


def _detail(**pairs):
    # Details end up in CSV cells, so keep them comma-free.
    return " ".join(
        "%s=%s" % (key, str(value).replace(",", "")) for key, value in pairs.items()
    )


def _check_enum_scale(n_enum):
    if n_enum > HARD_ENUMERATION_CAP:
        raise ResourceCapError(
            "verification enumeration scale %d exceeds the hard cap %d"
            % (n_enum, HARD_ENUMERATION_CAP)
        )


def euler_suite(n_enum=40, order=500):
    """Partition counting three ways plus structural enumeration checks."""
    _check_enum_scale(n_enum)
    results = []

    failure = ""
    try:
        series = euler_partition_series(order)
    except SelfCheckError as exc:
        series = None
        failure = str(exc)
    if series is not None:
        for n in range(order + 1):
            if series.coefficient(n) != partition_count(n):
                failure = _detail(
                    n=n, lhs=series.coefficient(n), rhs=partition_count(n)
                )
                break
    results.append(
        CheckResult(
            "euler",
            "partition-series-three-routes",
            "n<=%d" % order,
            not failure,
            failure,
        )
    )

    failure = ""
    for n in range(n_enum + 1):
        counted = int(kernels.count_partitions(n))
        if counted != partition_count(n):
            failure = _detail(n=n, lhs=counted, rhs=partition_count(n))
            break
    results.append(
        CheckResult(
            "euler", "count-vs-enumeration", "n<=%d" % n_enum, not failure, failure
        )
    )

    failure = ""
    if series is not None:
        product = TruncatedSeries.one(order)
        for m in range(1, order + 1):
            factor = TruncatedSeries((1,) + (0,) * (m - 1) + (-1,), order)
            product = factor * product
        if product * series != TruncatedSeries.one(order):
            failure = "product of (1 - t^m) times the series is not 1"
    else:
        failure = "series construction failed"
    results.append(
        CheckResult(
            "euler",
            "product-reciprocal-roundtrip",
            "n<=%d" % order,
            not failure,
            failure,
        )
    )

    failure = ""
    for n in range(n_enum + 1):
        by_largest, by_count = kernels.largest_and_length_histograms(n)
        for k in range(n + 1):
            if by_largest[k] != by_count[k]:
                failure = _detail(n=n, k=k, lhs=int(by_largest[k]), rhs=int(by_count[k]))
                break
        if failure:
            break
    results.append(
        CheckResult(
            "euler",
            "largest-part-vs-part-count",
            "n<=%d" % n_enum,
            not failure,
            failure,
        )
    )
    return results


def elder_suite(n_enum=40, kl_max=4, order=200):
    """The part-count statistic and its threshold generalisation."""
    _check_enum_scale(n_enum)
    results = []

    failure = ""
    for k in range(1, 7):
        for n in range(order + 1):
            lhs = parts_equal_total(k, n)
            rhs = parts_equal_total(k, n - k) + partition_count(n - k)
            if lhs != rhs:
                failure = _detail(k=k, n=n, lhs=lhs, rhs=rhs)
                break
        if failure:
            break
    results.append(
        CheckResult(
            "elder",
            "parts-equal-recurrence",
            "k<=6 n<=%d" % order,
            not failure,
            failure,
        )
    )

    failure = ""
    for k in range(1, 11):
        expansion = expand_with_partition_series(parts_equal_rational(k), order)
        for n in range(order + 1):
            if expansion.coefficient(n) != parts_equal_total(k, n):
                failure = _detail(
                    k=k, n=n, lhs=expansion.coefficient(n), rhs=parts_equal_total(k, n)
                )
                break
        if failure:
            break
    results.append(
        CheckResult(
            "elder",
            "parts-equal-generating-function",
            "k<=10 n<=%d" % order,
            not failure,
            failure,
        )
    )

    failure = ""
    for k in range(1, kl_max + 1):
        for n in range(n_enum + 1):
            lhs = parts_equal_total_oracle(k, n, enum_cap=n_enum)
            rhs = parts_equal_total(k, n)
            if lhs != rhs:
                failure = _detail(k=k, n=n, lhs=lhs, rhs=rhs)
                break
        if failure:
            break
    results.append(
        CheckResult(
            "elder",
            "parts-equal-oracle",
            "k<=%d n<=%d" % (kl_max, n_enum),
            not failure,
            failure,
        )
    )

    failure = ""
    for k in range(1, kl_max + 1):
        for ell in range(1, kl_max + 1):
            for n in range(n_enum + 1):
                enumerated = divisible_lengths_total_oracle(k, ell, n, enum_cap=n_enum)
                closed = divisible_lengths_total(k, ell, n)
                collapsed = parts_equal_total(k * ell, n)
                if not enumerated == closed == collapsed:
                    failure = _detail(
                        k=k, ell=ell, n=n, oracle=enumerated, closed=closed,
                        collapsed=collapsed,
                    )
                    break
            if failure:
                break
        if failure:
            break
    results.append(
        CheckResult(
            "elder",
            "elder-stanley",
            "k<=%d ell<=%d n<=%d" % (kl_max, kl_max, n_enum),
            not failure,
            failure,
        )
    )
    return results


def cd_suite(n_enum=40, k_max=3, r_max=3, order=30):
    """Subset statistics drawn by divisibility and by multiplicity."""
    _check_enum_scale(n_enum)
    results = []

    failure = ""
    for r in range(1, 5):
        for n in range(order + 1):
            lhs = q_count(n, r)
            rhs = q_count(n - r, r) + q_count(n - r, r - 1)
            if lhs != rhs:
                failure = _detail(r=r, n=n, lhs=lhs, rhs=rhs)
                break
        if failure:
            break
    results.append(
        CheckResult(
            "cd",
            "distinct-parts-recurrence",
            "r<=4 n<=%d" % order,
            not failure,
            failure,
        )
    )

    failure = ""
    for r in range(1, 5):
        expansion = distinct_subsets_rational(1, r).expand(order)
        for n in range(order + 1):
            if expansion.coefficient(n) != q_count(n, r):
                failure = _detail(
                    r=r, n=n, lhs=expansion.coefficient(n), rhs=q_count(n, r)
                )
                break
        if failure:
            break
    results.append(
        CheckResult(
            "cd",
            "distinct-parts-generating-function",
            "r<=4 n<=%d" % order,
            not failure,
            failure,
        )
    )

    failure = ""
    for k in range(1, k_max + 1):
        for r in range(1, r_max + 1):
            expansion = expand_with_partition_series(
                distinct_subsets_rational(k, r), n_enum
            )
            for n in range(n_enum + 1):
                by_divisor, by_multiplicity = subset_pair_totals_oracle(
                    k, r, n, enum_cap=n_enum
                )
                closed = distinct_subsets_total(k, r, n)
                series_value = expansion.coefficient(n)
                if not by_divisor == by_multiplicity == closed == series_value:
                    failure = _detail(
                        k=k, r=r, n=n, by_divisor=by_divisor,
                        by_multiplicity=by_multiplicity, closed=closed,
                        series=series_value,
                    )
                    break
            if failure:
                break
        if failure:
            break
    results.append(
        CheckResult(
            "cd",
            "subset-duality",
            "k<=%d r<=%d n<=%d" % (k_max, r_max, n_enum),
            not failure,
            failure,
        )
    )
    return results


def e_suite(n_enum=40, order=200):
    """The even-pair statistic by all three routes plus its proof form."""
    _check_enum_scale(n_enum)
    results = []

    failure = ""
    try:
        even_pairs_rational()
    except SelfCheckError as exc:
        failure = str(exc)
    results.append(
        CheckResult("e", "even-pairs-proof-form", "exact", not failure, failure)
    )

    failure = ""
    for n in range(n_enum + 1):
        lhs = even_pairs_total_oracle(n, enum_cap=n_enum)
        rhs = even_pairs_total(n)
        if lhs != rhs:
            failure = _detail(n=n, lhs=lhs, rhs=rhs)
            break
    results.append(
        CheckResult("e", "even-pairs-oracle", "n<=%d" % n_enum, not failure, failure)
    )

    failure = ""
    expansion = expand_with_partition_series(even_pairs_rational(), order)
    for n in range(order + 1):
        if expansion.coefficient(n) != even_pairs_total(n):
            failure = _detail(
                n=n, lhs=expansion.coefficient(n), rhs=even_pairs_total(n)
            )
            break
    results.append(
        CheckResult(
            "e",
            "even-pairs-generating-function",
            "n<=%d" % order,
            not failure,
            failure,
        )
    )
    return results


def hh_suite(n_enum=40, order=200, primes=VERIFY_PRIMES):
    """Hochschild dimensions by three routes, plus the wreath tables."""
    _check_enum_scale(n_enum)
    results = []

    failure = ""
    for p in primes:
        for degree in (1, 2):
            dims = WreathCohomologyDims(Prime(p), degree)
            for m in range(1, 25):
                stable = dims.dim(m, 4)
                for ell in range(5, 10):
                    if dims.dim(m, ell) != stable:
                        failure = _detail(
                            p=p, degree=degree, m=m, ell=ell,
                            lhs=dims.dim(m, ell), rhs=stable,
                        )
                        break
                if failure:
                    break
            if failure:
                break
        if failure:
            break
    results.append(
        CheckResult(
            "hh",
            "wreath-table-stabilisation",
            "m<=24 ell<=9 p in %s" % " ".join(str(p) for p in primes),
            not failure,
            failure,
        )
    )

    failure = ""
    for p in primes:
        if p == 2:
            continue
        one = WreathCohomologyDims(Prime(p), 1)
        two = WreathCohomologyDims(Prime(p), 2)
        for m in range(1, 25):
            for ell in range(9):
                if one.dim(m, ell) != two.dim(m, ell):
                    failure = _detail(
                        p=p, m=m, ell=ell, lhs=one.dim(m, ell), rhs=two.dim(m, ell)
                    )
                    break
            if failure:
                break
        if failure:
            break
    results.append(
        CheckResult(
            "hh",
            "wreath-odd-degree-match",
            "odd p m<=24 ell<=8",
            not failure,
            failure,
        )
    )

    failure = ""
    for p in primes:
        for degree in (0, 1, 2):
            expansion = hh_dimension_series(degree, p, order)
            for n in range(order + 1):
                if expansion.coefficient(n) != hh_dimension(degree, n, p):
                    failure = _detail(
                        p=p, degree=degree, n=n, series=expansion.coefficient(n),
                        formula=hh_dimension(degree, n, p),
                    )
                    break
            if failure:
                break
            for n in range(n_enum + 1):
                enumerated = hh_dimension_oracle(degree, n, p, enum_cap=n_enum)
                if enumerated != hh_dimension(degree, n, p):
                    failure = _detail(
                        p=p, degree=degree, n=n, oracle=enumerated,
                        formula=hh_dimension(degree, n, p),
                    )
                    break
            if failure:
                break
        if failure:
            break
    results.append(
        CheckResult(
            "hh",
            "hochschild-triple-routes",
            "p in %s series n<=%d oracle n<=%d" % (" ".join(str(p) for p in primes), order, n_enum),
            not failure,
            failure,
        )
    )

    failure = ""
    for p in primes:
        for n in range(n_enum + 1):
            if p == 2:
                split = divisible_lengths_total_oracle(
                    2, 1, n, enum_cap=n_enum
                ) + divisible_lengths_total_oracle(1, 2, n, enum_cap=n_enum)
            else:
                split = divisible_lengths_total_oracle(p, 1, n, enum_cap=n_enum)
            if split != hh_dimension(1, n, p):
                failure = _detail(p=p, n=n, lhs=split, rhs=hh_dimension(1, n, p))
                break
        if failure:
            break
    results.append(
        CheckResult(
            "hh",
            "degree-one-split",
            "p in %s n<=%d" % (" ".join(str(p) for p in primes), n_enum),
            not failure,
            failure,
        )
    )

    failure = ""
    for p in primes:
        for n in range(n_enum + 1):
            if p == 2:
                pair = subset_pair_totals_oracle(2, 2, n, enum_cap=n_enum)
                split = (
                    divisible_lengths_total_oracle(2, 1, n, enum_cap=n_enum)
                    + divisible_lengths_total_oracle(2, 2, n, enum_cap=n_enum)
                    + divisible_lengths_total_oracle(2, 3, n, enum_cap=n_enum)
                    + divisible_lengths_total_oracle(1, 2, n, enum_cap=n_enum)
                    + divisible_lengths_total_oracle(1, 4, n, enum_cap=n_enum)
                    + pair[0]
                    + even_pairs_total_oracle(n, enum_cap=n_enum)
                    + pair[1]
                )
            else:
                split = divisible_lengths_total_oracle(
                    p, 1, n, enum_cap=n_enum
                ) + subset_pair_totals_oracle(p, 2, n, enum_cap=n_enum)[0]
            if split != hh_dimension(2, n, p):
                failure = _detail(p=p, n=n, lhs=split, rhs=hh_dimension(2, n, p))
                break
        if failure:
            break
    results.append(
        CheckResult(
            "hh",
            "degree-two-split",
            "p in %s n<=%d" % (" ".join(str(p) for p in primes), n_enum),
            not failure,
            failure,
        )
    )

    passed = hh2_mod2_identity_check()
    results.append(
        CheckResult(
            "hh",
            "degree-two-mod2-multiplier",
            "exact",
            passed,
            "" if passed else "five-term sum does not collapse to the stated fraction",
        )
    )
    return results


def graph_suite(r_max=6):
    """Signed sums over labeled graphs against the factorial closed form."""
    if r_max > MAX_SIGNED_SUM_VERTICES:
        raise ResourceCapError(
            "graph suite is capped at r = %d, got %d"
            % (MAX_SIGNED_SUM_VERTICES, r_max)
        )
    failure = ""
    for r in range(1, r_max + 1):
        lhs = signed_component_total(r)
        rhs = (-1) ** r * math.factorial(r)
        if lhs != rhs:
            failure = _detail(r=r, lhs=lhs, rhs=rhs)
            break
    return [
        CheckResult(
            "graph", "signed-graph-sum", "r<=%d" % r_max, not failure, failure
        )
    ]


def rational_suite(n_max=30, r_max=3, kl_max=3):
    """Tuple counts, their rational forms, and the partition version."""
    _check_enum_scale(n_max)
    if r_max > TUPLE_COUNT_MAX_R:
        raise ResourceCapError(
            "rational suite is capped at r = %d, got %d" % (TUPLE_COUNT_MAX_R, r_max)
        )
    coefficient_failure = ""
    asymptotic_failure = ""
    partition_failure = ""

    def specs():
        for r in range(1, r_max + 1):
            pairs = [(1, 1)] * r
            while True:
                yield WeightSpec(pairs)
                position = r - 1
                while position >= 0:
                    k, ell = pairs[position]
                    if ell < kl_max:
                        pairs[position] = (k, ell + 1)
                        break
                    if k < kl_max:
                        pairs[position] = (k + 1, 1)
                        break
                    pairs[position] = (1, 1)
                    position -= 1
                if position < 0:
                    break

    for spec in specs():
        total = signed_graph_total(spec)
        if not coefficient_failure:
            expansion = total.expand(n_max)
            for n in range(n_max + 1):
                direct = distinct_value_tuple_count(n, spec)
                if expansion.coefficient(n) != direct:
                    coefficient_failure = _detail(
                        spec=spec.pairs, n=n, lhs=expansion.coefficient(n), rhs=direct
                    )
                    break
        if not asymptotic_failure:
            expected = (0, (-1) ** spec.r * math.factorial(spec.r))
            got = total.asymptotics()
            if got != expected:
                asymptotic_failure = _detail(spec=spec.pairs, lhs=got, rhs=expected)
        if not partition_failure:
            weighted = expand_with_partition_series(total, n_max)
            for n in range(n_max + 1):
                enumerated = tuple_indicator_total_oracle(n, spec, enum_cap=n_max)
                if weighted.coefficient(n) != enumerated:
                    partition_failure = _detail(
                        spec=spec.pairs, n=n, lhs=weighted.coefficient(n),
                        rhs=enumerated,
                    )
                    break

    scope = "r<=%d k<=%d ell<=%d n<=%d" % (r_max, kl_max, kl_max, n_max)
    results = [
        CheckResult(
            "rational",
            "tuple-count-coefficients",
            scope,
            not coefficient_failure,
            coefficient_failure,
        ),
        CheckResult(
            "rational",
            "tuple-count-asymptotics",
            "r<=%d k<=%d ell<=%d" % (r_max, kl_max, kl_max),
            not asymptotic_failure,
            asymptotic_failure,
        ),
        CheckResult(
            "rational",
            "partition-tuple-rationality",
            scope,
            not partition_failure,
            partition_failure,
        ),
    ]

    failure = ""
    for k in range(1, kl_max + 1):
        for ell in range(1, kl_max + 1):
            spec = WeightSpec([(k, ell)])
            for n in range(n_max + 1):
                lhs = tuple_indicator_total_oracle(n, spec, enum_cap=n_max)
                rhs = divisible_lengths_total(k, ell, n)
                if lhs != rhs:
                    failure = _detail(k=k, ell=ell, n=n, lhs=lhs, rhs=rhs)
                    break
            if failure:
                break
        if failure:
            break
    results.append(
        CheckResult(
            "rational",
            "single-position-reduction",
            "k<=%d ell<=%d n<=%d" % (kl_max, kl_max, n_max),
            not failure,
            failure,
        )
    )

    failure = ""
    for k in range(1, kl_max + 1):
        for r in range(1, r_max + 1):
            spec = WeightSpec([(k, 1)] * r)
            for n in range(n_max + 1):
                lhs = tuple_indicator_total_oracle(n, spec, enum_cap=n_max)
                rhs = math.factorial(r) * distinct_subsets_total(k, r, n)
                if lhs != rhs:
                    failure = _detail(k=k, r=r, n=n, lhs=lhs, rhs=rhs)
                    break
            if failure:
                break
        if failure:
            break
    results.append(
        CheckResult(
            "rational",
            "ordered-subset-ratio",
            "k<=%d r<=%d n<=%d" % (kl_max, r_max, n_max),
            not failure,
            failure,
        )
    )
    return results


def run_suites(names, n_max=None, r_max=None):
    """Run the named suites (or all of them) with optional scale overrides.

    ``n_max`` replaces each suite's enumeration scale, ``r_max`` the
    graph and rational tuple sizes.  Results concatenate in suite order.
    """
    chosen = SUITE_NAMES if "all" in names else tuple(names)
    for name in chosen:
        if name not in SUITE_NAMES:
            raise ValueError("unknown suite %r" % (name,))
    scaled = {} if n_max is None else {"n_enum": n_max}
    results = []
    for name in chosen:
        if name == "euler":
            results.extend(euler_suite(**scaled))
        elif name == "elder":
            results.extend(elder_suite(**scaled))
        elif name == "cd":
            results.extend(cd_suite(**scaled))
        elif name == "e":
            results.extend(e_suite(**scaled))
        elif name == "hh":
            results.extend(hh_suite(**scaled))
        elif name == "graph":
            results.extend(graph_suite(**({} if r_max is None else {"r_max": r_max})))
        elif name == "rational":
            kwargs = {}
            if n_max is not None:
                kwargs["n_max"] = n_max
            if r_max is not None:
                kwargs["r_max"] = r_max
            results.extend(rational_suite(**kwargs))
    return results
