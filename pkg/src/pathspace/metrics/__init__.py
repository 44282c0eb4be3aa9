"""Path metrics and path statistics."""

from pathspace.metrics.moduli import (
    endpoint_statistics,
    lipschitz_gap,
    modulus,
    sparse_modulus_w_prime,
    two_sided_modulus,
    window_sup,
)
from pathspace.metrics.report import MetricReport
from pathspace.metrics.skorokhod import skorokhod_circ_distance, skorokhod_distance, skorokhod_oracle
from pathspace.metrics.uniform import uniform_distance

__all__ = [
    "MetricReport",
    "endpoint_statistics",
    "modulus",
    "skorokhod_circ_distance",
    "skorokhod_distance",
    "skorokhod_oracle",
    "lipschitz_gap",
    "sparse_modulus_w_prime",
    "two_sided_modulus",
    "uniform_distance",
    "window_sup",
]
