"""Dyadic time grids."""

import math
from dataclasses import dataclass

import numpy as np

from pathspace.errors import DomainError


@dataclass(frozen=True)
class DyadicGrid:
    """Points k * 2**-level on [0, horizon]; the last cell may be shorter than the spacing."""

    level: int
    horizon: float

    def __post_init__(self) -> None:
        if self.level < 0:
            raise DomainError(f"grid level must be >= 0, got {self.level}")
        if not (self.horizon > 0 and math.isfinite(self.horizon)):
            raise DomainError(f"grid horizon must be positive and finite, got {self.horizon}")

    @property
    def spacing(self) -> float:
        return 2.0 ** -self.level

    @property
    def cells(self) -> int:
        return math.ceil(self.horizon * 2**self.level)

    def points(self) -> np.ndarray:
        """Grid points; the final point is clipped to the horizon."""
        pts = np.arange(self.cells + 1, dtype=float) * self.spacing
        pts[-1] = self.horizon
        pts.setflags(write=False)
        return pts

    def contains(self, t: float) -> bool:
        """True if t is a grid point."""
        if t < 0 or t > self.horizon:
            return False
        if t == self.horizon:
            return True
        scaled = t * 2**self.level
        return scaled == math.floor(scaled)

    def index_of(self, t: float) -> int:
        """Index of the grid cell containing t (cells are [p_k, p_{k+1}))."""
        if t < 0 or t > self.horizon:
            raise DomainError(f"time {t} outside grid [0, {self.horizon}]")
        return min(int(math.floor(t * 2**self.level)), self.cells)
