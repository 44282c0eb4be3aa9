"""Dyadic interpolants built from grid vectors."""

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from pathspace.errors import DomainError
from pathspace.paths import DyadicGrid, PiecewiseLinearPath, StepPath

logger = logging.getLogger(__name__)

Scheme = Literal["pl", "step", "halfline"]


@dataclass(frozen=True)
class InterpolationWeights:
    """t = a * p_k + b * p_{k+1} for the level-n grid cell [p_k, p_{k+1}) containing t."""

    t: float
    level: int
    index: int
    a: float
    b: float

    @property
    def cells(self) -> int:
        return 2**self.level


def interpolation_weights(t: float, level: int) -> InterpolationWeights:
    """
    Weights of t in its level-n dyadic cell of [0, 1].

    At t = 1 the cell index is 2**n and b = 0, so the combination degenerates to z_1.
    """
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"t must lie in [0, 1], got {t}")
    if level < 0:
        raise DomainError(f"level must be >= 0, got {level}")
    d = 2**level
    k = math.floor(t * d)
    a = d * ((k + 1) / d - t)
    b = d * (t - k / d)
    return InterpolationWeights(t=t, level=level, index=k, a=a, b=b)


def _vector(z) -> np.ndarray:
    arr = np.asarray(z, dtype=float).reshape(-1)
    if arr.size == 0:
        raise DomainError("need at least one grid value")
    if not np.all(np.isfinite(arr)):
        raise DomainError("grid values must be finite")
    return arr


def _level_of(cells: int) -> int | None:
    level = cells.bit_length() - 1
    return level if cells > 0 and 1 << level == cells else None


def linear_interpolant(z, horizon: float = 1.0) -> PiecewiseLinearPath:
    """Continuous path through (k T / d, z_k), d = len(z) - 1; a constant path when d = 0."""
    arr = _vector(z)
    d = arr.size - 1
    if d == 0:
        return PiecewiseLinearPath([0.0, horizon], [arr[0], arr[0]])
    knots = np.arange(d + 1) * (horizon / d)
    knots[-1] = horizon
    level = _level_of(d)
    grid = DyadicGrid(level, horizon) if level is not None and horizon == 1.0 else None
    return PiecewiseLinearPath(knots, arr, grid)


def step_interpolant(z, horizon: float = 1.0) -> StepPath:
    """Right-continuous path equal to z_k on [k T / d, (k+1) T / d)."""
    arr = _vector(z)
    d = arr.size - 1
    if d == 0:
        return StepPath([0.0], arr, horizon)
    bp = np.arange(d + 1) * (horizon / d)
    bp[-1] = horizon
    level = _level_of(d)
    grid = DyadicGrid(level, horizon) if level is not None and horizon == 1.0 else None
    return StepPath(bp, arr, horizon, grid)


def halfline_step_interpolant(z, level: int) -> StepPath:
    """Step path on [0, inf) through z_k at k / 2**n for k <= n 2**n, frozen afterwards."""
    arr = _vector(z)
    if level < 0 or arr.size != level * 2**level + 1:
        raise DomainError(f"level {level} needs {level * 2**level + 1} values, got {arr.size}")
    bp = np.arange(arr.size) / 2**level
    grid = DyadicGrid(level, float(level)) if level > 0 else None
    return StepPath(bp, arr, math.inf, grid)


def interpolate_many(z, times, scheme: Scheme, level: int) -> np.ndarray:
    """
    Values at the given times of the interpolants of every row of z.

    Row-wise equal to building each interpolant and evaluating it; used on atom
    matrices, where building paths one by one is wasteful.
    """
    arr = np.asarray(z, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    ts = np.asarray(times, dtype=float)
    d = 2**level
    expected = level * d + 1 if scheme == "halfline" else d + 1
    if arr.shape[1] != expected:
        raise DomainError(f"{scheme} interpolant of level {level} needs {expected} values, got {arr.shape[1]}")
    if np.any(ts < 0):
        raise DomainError("times must be >= 0")
    if scheme == "halfline":
        idx = np.minimum(np.floor(ts * d).astype(int), arr.shape[1] - 1)
        return arr[:, idx]
    if np.any(ts > 1.0):
        raise DomainError("times must lie in [0, 1]")
    k = np.floor(ts * d).astype(int)
    if scheme == "step":
        return arr[:, k]
    b = d * (ts - k / d)
    upper = np.minimum(k + 1, d)
    return arr[:, k] * (1.0 - b) + arr[:, upper] * b
