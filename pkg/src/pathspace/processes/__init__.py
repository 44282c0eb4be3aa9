"""Process samplers, empirical fdds and fitting of grid laws."""

from pathspace.processes.base import BaseSampler
from pathspace.processes.brownian import BrownianSampler
from pathspace.processes.deterministic import DeterministicSampler
from pathspace.processes.fdd import EmpiricalFdd, read_fdd_csv, write_fdd_csv
from pathspace.processes.fitting import FitSettings, PhiMember, bootstrap_upper, fit_phi
from pathspace.processes.poisson import CompoundPoissonSampler, PoissonSampler
from pathspace.processes.registry import SamplerRegistry
from pathspace.processes.spec import SamplerSpec
from pathspace.processes.statistics import (
    StatisticReport,
    derived_statistic_closeness,
    grid_columns,
    grid_times,
)

__all__ = [
    "BaseSampler",
    "BrownianSampler",
    "CompoundPoissonSampler",
    "DeterministicSampler",
    "EmpiricalFdd",
    "FitSettings",
    "PhiMember",
    "PoissonSampler",
    "SamplerRegistry",
    "SamplerSpec",
    "StatisticReport",
    "bootstrap_upper",
    "derived_statistic_closeness",
    "fit_phi",
    "grid_columns",
    "grid_times",
    "read_fdd_csv",
    "write_fdd_csv",
]
