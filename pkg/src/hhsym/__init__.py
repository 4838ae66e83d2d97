"""Exact partition identities and Hochschild cohomology dimensions of
symmetric group algebras.

Dimensions in cohomological degree 0, 1 and 2 are computed three ways
(closed formulas, generating-function expansion, and a brute-force sweep
over partitions) and the package ships a verifier that checks the routes
against each other.  All arithmetic is exact.
"""

from .errors import OrderMismatchError, ResourceCapError, SelfCheckError
from .hochschild import (
    Prime,
    WreathCohomologyDims,
    hh_dimension,
    hh_dimension_oracle,
    hh_dimension_series,
    hh_rational,
)
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    HARD_ENUMERATION_CAP,
    Partition,
    enumerate_partitions,
    partition_count,
)
from .rationality import (
    LabeledGraph,
    WeightSpec,
    distinct_value_tuple_count,
    signed_component_total,
    signed_graph_total,
)
from .series import (
    FactoredDenominator,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    euler_partition_series,
    expand_with_partition_series,
    geometric_series,
    pentagonal_series,
)
from .statistics import (
    distinct_subsets_total,
    divisible_lengths_total,
    even_pairs_total,
    parts_equal_total,
)
from .verify import run_suites

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "HARD_ENUMERATION_CAP",
    "FactoredDenominator",
    "LabeledGraph",
    "OrderMismatchError",
    "Partition",
    "Polynomial",
    "Prime",
    "RationalFunction",
    "ResourceCapError",
    "SelfCheckError",
    "TruncatedSeries",
    "WeightSpec",
    "WreathCohomologyDims",
    "distinct_subsets_total",
    "distinct_value_tuple_count",
    "divisible_lengths_total",
    "enumerate_partitions",
    "euler_partition_series",
    "even_pairs_total",
    "expand_with_partition_series",
    "geometric_series",
    "hh_dimension",
    "hh_dimension_oracle",
    "hh_dimension_series",
    "hh_rational",
    "parts_equal_total",
    "partition_count",
    "pentagonal_series",
    "run_suites",
    "signed_component_total",
    "signed_graph_total",
    "__version__",
]
