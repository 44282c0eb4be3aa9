"""Continuous piecewise-linear paths."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from pathspace.errors import DomainError
from pathspace.paths.grid import DyadicGrid
from pathspace.paths.step import _frozen


@dataclass(frozen=True, eq=False)
class PiecewiseLinearPath:
    """Path interpolating linearly between (knots[i], values[i]); horizon is the last knot."""

    times: np.ndarray
    values: np.ndarray
    grid: Optional[DyadicGrid] = field(default=None)

    kind = "pl"

    def __post_init__(self) -> None:
        kn = _frozen(self.times, "knots")
        vals = _frozen(self.values, "values")
        if kn.size < 2 or kn.size != vals.size:
            raise DomainError("piecewise-linear path needs equally many (>= 2) knots and values")
        if kn[0] != 0.0:
            raise DomainError(f"first knot must be 0, got {kn[0]}")
        if not np.all(np.diff(kn) > 0):
            raise DomainError("knots must be strictly increasing")
        object.__setattr__(self, "times", kn)
        object.__setattr__(self, "values", vals)

    @property
    def horizon(self) -> float:
        return float(self.times[-1])

    is_halfline = False

    def knots(self) -> np.ndarray:
        return self.times

    def eval_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        if ts.size and (np.any(ts < 0) or np.any(ts > self.horizon) or np.any(np.isnan(ts))):
            raise DomainError(f"times must lie in [0, {self.horizon}]")
        j = np.clip(np.searchsorted(self.times, ts, side="right") - 1, 0, self.times.size - 2)
        left = self.times[j]
        w = (ts - left) / (self.times[j + 1] - left)
        return self.values[j] * (1.0 - w) + self.values[j + 1] * w

    def left_limit_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        if ts.size and np.any(ts <= 0):
            raise DomainError("left limit is only defined for t > 0")
        return self.eval_many(ts)

    def eval(self, t: float) -> float:
        return float(self.eval_many(np.array([t]))[0])

    def left_limit(self, t: float) -> float:
        return float(self.left_limit_many(np.array([t]))[0])

    def sup_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def normalize(self) -> "PiecewiseLinearPath":
        """Drop interior knots where the path is locally affine."""
        if self.times.size < 3:
            return self
        slopes = np.diff(self.values) / np.diff(self.times)
        keep = np.concatenate([[True], slopes[1:] != slopes[:-1], [True]])
        return PiecewiseLinearPath(self.times[keep], self.values[keep], self.grid)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiecewiseLinearPath):
            return NotImplemented
        return np.array_equal(self.times, other.times) and np.array_equal(self.values, other.values)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PiecewiseLinearPath(knots={self.times.tolist()}, values={self.values.tolist()})"
