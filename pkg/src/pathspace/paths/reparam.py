"""Strictly increasing piecewise-linear time changes."""

import math
from dataclasses import dataclass

import numpy as np

from pathspace.errors import DomainError
from pathspace.paths.step import _frozen


@dataclass(frozen=True, eq=False)
class Reparametrization:
    """Homeomorphism of [0, T] through (knots[i] -> images[i])."""

    knots: np.ndarray
    images: np.ndarray

    def __post_init__(self) -> None:
        kn = _frozen(self.knots, "knots")
        im = _frozen(self.images, "images")
        if kn.size < 2 or kn.size != im.size:
            raise DomainError("reparametrization needs equally many (>= 2) knots and images")
        if kn[0] != 0.0 or im[0] != 0.0:
            raise DomainError("reparametrization must fix 0")
        if kn[-1] != im[-1]:
            raise DomainError("reparametrization must fix the horizon")
        if not (np.all(np.diff(kn) > 0) and np.all(np.diff(im) > 0)):
            raise DomainError("reparametrization must be strictly increasing")
        object.__setattr__(self, "knots", kn)
        object.__setattr__(self, "images", im)

    @classmethod
    def identity(cls, horizon: float) -> "Reparametrization":
        if not (horizon > 0 and math.isfinite(horizon)):
            raise DomainError(f"horizon must be positive and finite, got {horizon}")
        return cls(np.array([0.0, horizon]), np.array([0.0, horizon]))

    @property
    def horizon(self) -> float:
        return float(self.knots[-1])

    def __call__(self, ts):
        arr = np.asarray(ts, dtype=float)
        if arr.size and (np.any(arr < 0) or np.any(arr > self.horizon)):
            raise DomainError(f"times must lie in [0, {self.horizon}]")
        j = np.clip(np.searchsorted(self.knots, arr, side="right") - 1, 0, self.knots.size - 2)
        slope = (self.images[j + 1] - self.images[j]) / (self.knots[j + 1] - self.knots[j])
        out = self.images[j] + (arr - self.knots[j]) * slope
        out = np.clip(out, 0.0, self.horizon)
        return float(out) if np.ndim(ts) == 0 else out

    def inverse(self) -> "Reparametrization":
        return Reparametrization(self.images, self.knots)

    def time_distortion(self) -> float:
        """sup |lambda(t) - t|, attained at a knot."""
        return float(np.max(np.abs(self.images - self.knots)))

    def log_slope_norm(self) -> float:
        """max |log slope| over the linear pieces."""
        slopes = np.diff(self.images) / np.diff(self.knots)
        return float(np.max(np.abs(np.log(slopes))))

    def __repr__(self) -> str:
        return f"Reparametrization(knots={self.knots.tolist()}, images={self.images.tolist()})"
