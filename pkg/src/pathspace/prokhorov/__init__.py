"""Exact Prokhorov distance between finitely supported measures."""

from pathspace.prokhorov.distance import (
    CouplingCertificate,
    Norm,
    Transport,
    pairwise_distances,
    prokhorov_distance,
    prokhorov_value,
    verify_certificate,
)
from pathspace.prokhorov.measure import (
    DiscreteMeasure,
    project_marginal,
    read_measure_csv,
    write_measure_csv,
)
from pathspace.prokhorov.oracle import prokhorov_oracle

__all__ = [
    "CouplingCertificate",
    "DiscreteMeasure",
    "Norm",
    "Transport",
    "pairwise_distances",
    "project_marginal",
    "prokhorov_distance",
    "prokhorov_oracle",
    "prokhorov_value",
    "read_measure_csv",
    "verify_certificate",
    "write_measure_csv",
]
