"""Right-continuous piecewise-constant paths."""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from pathspace.errors import DomainError
from pathspace.paths.grid import DyadicGrid


def _frozen(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float).reshape(-1)
    if arr.size and not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class StepPath:
    """
    Step path x(t) = values[i] for breakpoints[i] <= t < breakpoints[i+1].

    The horizon may be math.inf for paths on the half-line. A breakpoint equal
    to a finite horizon holds the value at the horizon itself.
    """

    breakpoints: np.ndarray
    values: np.ndarray
    horizon: float
    grid: Optional[DyadicGrid] = field(default=None)

    kind = "step"

    def __post_init__(self) -> None:
        bp = _frozen(self.breakpoints, "breakpoints")
        vals = _frozen(self.values, "values")
        if bp.size == 0 or bp.size != vals.size:
            raise DomainError("step path needs equally many (>= 1) breakpoints and values")
        if bp[0] != 0.0:
            raise DomainError(f"first breakpoint must be 0, got {bp[0]}")
        if bp.size > 1 and not np.all(np.diff(bp) > 0):
            raise DomainError("breakpoints must be strictly increasing")
        if not self.horizon > 0:
            raise DomainError(f"horizon must be positive, got {self.horizon}")
        if bp[-1] > self.horizon:
            raise DomainError(f"breakpoint {bp[-1]} beyond horizon {self.horizon}")
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "horizon", float(self.horizon))

    @property
    def is_halfline(self) -> bool:
        return math.isinf(self.horizon)

    def _check_times(self, ts: np.ndarray) -> None:
        if ts.size and (np.any(ts < 0) or np.any(ts > self.horizon) or np.any(np.isnan(ts))):
            raise DomainError(f"times must lie in [0, {self.horizon}]")

    def eval_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        self._check_times(ts)
        idx = np.searchsorted(self.breakpoints, ts, side="right") - 1
        return self.values[idx]

    def left_limit_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        self._check_times(ts)
        if ts.size and np.any(ts <= 0):
            raise DomainError("left limit is only defined for t > 0")
        idx = np.searchsorted(self.breakpoints, ts, side="left") - 1
        return self.values[idx]

    def eval(self, t: float) -> float:
        return float(self.eval_many(np.array([t]))[0])

    def left_limit(self, t: float) -> float:
        return float(self.left_limit_many(np.array([t]))[0])

    def knots(self) -> np.ndarray:
        """Breakpoints plus the finite horizon."""
        if self.is_halfline or self.breakpoints[-1] == self.horizon:
            return self.breakpoints
        return np.append(self.breakpoints, self.horizon)

    def sup_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def jump_times(self) -> np.ndarray:
        """Breakpoints where the value actually changes."""
        if self.values.size < 2:
            return np.empty(0)
        changed = self.values[1:] != self.values[:-1]
        return self.breakpoints[1:][changed]

    def normalize(self) -> "StepPath":
        """Merge consecutive equal values; the result has no redundant breakpoints."""
        if self.values.size < 2:
            return self
        keep = np.concatenate([[True], self.values[1:] != self.values[:-1]])
        return StepPath(self.breakpoints[keep], self.values[keep], self.horizon, self.grid)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StepPath):
            return NotImplemented
        return (
            self.horizon == other.horizon
            and np.array_equal(self.breakpoints, other.breakpoints)
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"StepPath(breakpoints={self.breakpoints.tolist()}, values={self.values.tolist()}, horizon={self.horizon})"
