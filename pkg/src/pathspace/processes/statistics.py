"""Closeness of derived path statistics between a fitted grid law and target draws."""

import logging
from typing import Callable, Literal, Optional

import numpy as np
from pydantic import BaseModel

from pathspace.errors import DomainError
from pathspace.metrics.grid_stats import (
    grid_endpoints,
    grid_modulus,
    grid_pair_increments,
    grid_running_sup,
    grid_running_two_sided_modulus,
    grid_sup,
    grid_two_sided_modulus,
)
from pathspace.processes.fdd import EmpiricalFdd
from pathspace.processes.fitting import PhiMember
from pathspace.prokhorov import DiscreteMeasure, prokhorov_value

logger = logging.getLogger(__name__)

Space = Literal["C01", "D01", "Dinf"]


class StatisticRow(BaseModel):
    """Prokhorov distances of one-dimensional statistic laws at delta = 2**-m."""

    m: int
    delta: float
    modulus_rho: Optional[float] = None
    two_sided_rho: Optional[float] = None
    start_rho: Optional[float] = None
    end_rho: Optional[float] = None


class StatisticReport(BaseModel):
    level: int
    space: Space
    rows: list[StatisticRow]
    sup_rho: float
    increments_rho: Optional[float] = None

    @property
    def max_rho(self) -> float:
        values = [self.sup_rho]
        if self.increments_rho is not None:
            values.append(self.increments_rho)
        for row in self.rows:
            values.extend(
                v for v in (row.modulus_rho, row.two_sided_rho, row.start_rho, row.end_rho) if v is not None
            )
        return max(values)


def grid_columns(level: int, space: Space) -> int:
    d = 2**level
    return level * d + 1 if space == "Dinf" else d + 1


def grid_times(level: int, space: Space) -> np.ndarray:
    return np.arange(grid_columns(level, space)) / 2**level


def _closeness(member: PhiMember, target: EmpiricalFdd, stat: Callable[[np.ndarray], np.ndarray]) -> float:
    fitted = DiscreteMeasure(stat(member.measure.atoms), member.measure.weights)
    return prokhorov_value(fitted, DiscreteMeasure.from_samples(stat(target.samples)))


def _column_closeness(member: PhiMember, target: EmpiricalFdd, stat: Callable[[np.ndarray], np.ndarray]) -> float:
    """Max over columns of the distance between the column laws; `stat` maps draws to a matrix."""
    fitted, drawn = stat(member.measure.atoms), stat(target.samples)
    best = 0.0
    for k in range(fitted.shape[1]):
        a, b = fitted[:, k], drawn[:, k]
        if np.all(a == a[0]) and np.all(b == a[0]):
            continue
        rho = prokhorov_value(DiscreteMeasure(a[:, None], member.measure.weights), DiscreteMeasure.from_samples(b))
        best = max(best, rho)
    return best


def derived_statistic_closeness(member: PhiMember, target: EmpiricalFdd, level: int, space: Space) -> StatisticReport:
    """
    Distances between the laws of the path statistics of the interpolants under the
    fitted law and under the target draws, for delta = 2**-m, 1 <= m < level.

    C01 uses the modulus of continuity; D01 the two-sided modulus, the endpoint
    statistics and the sup. Dinf takes the two-sided modulus and the sup on every
    grid window [0, k 2**-level], k <= level 2**level, and the increments
    |z_j - z_i| over every pair of grid times.
    """
    if level < 1:
        raise DomainError(f"level must be >= 1, got {level}")
    if not np.array_equal(member.times, target.times):
        raise DomainError("fitted law and target are observed at different times")
    cols = grid_columns(level, space)
    if target.samples.shape[1] != cols:
        raise DomainError(f"{space} level {level} needs {cols} grid values, got {target.samples.shape[1]}")
    halfline = space == "Dinf"
    rows = []
    for m in range(1, level):
        lag = 2 ** (level - m)
        row = StatisticRow(m=m, delta=2.0**-m)
        if space == "C01":
            row.modulus_rho = _closeness(member, target, lambda z: grid_modulus(z, lag))
        elif halfline:
            row.two_sided_rho = _column_closeness(member, target, lambda z: grid_running_two_sided_modulus(z, lag))
        else:
            row.two_sided_rho = _closeness(member, target, lambda z: grid_two_sided_modulus(z, lag))
        if space == "D01":
            row.start_rho = _closeness(member, target, lambda z: grid_endpoints(z, lag)[0])
            row.end_rho = _closeness(member, target, lambda z: grid_endpoints(z, lag)[1])
        rows.append(row)
    increments = None
    if halfline:
        sup_rho = _column_closeness(member, target, grid_running_sup)
        increments = _column_closeness(member, target, lambda z: grid_pair_increments(z)[0])
    else:
        sup_rho = _closeness(member, target, grid_sup)
    report = StatisticReport(level=level, space=space, rows=rows, sup_rho=sup_rho, increments_rho=increments)
    logger.debug("derived statistics at level %d (%s): max %.4f", level, space, report.max_rho)
    return report
