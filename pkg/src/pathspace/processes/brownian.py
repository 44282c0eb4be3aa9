"""Brownian motion sampler."""

from typing import Any, Optional

import numpy as np

from pathspace.errors import DomainError
from pathspace.processes.base import BaseSampler


class BrownianSampler(BaseSampler):
    """sigma * W_t + drift * t, synthesised from independent Gaussian increments."""

    kind = "brownian"

    def __init__(self, seed: Optional[int] = None, stream_id: int = 0, sigma: float = 1.0, drift: float = 0.0):
        super().__init__(seed, stream_id)
        if sigma < 0:
            raise DomainError(f"sigma must be >= 0, got {sigma}")
        self.sigma = float(sigma)
        self.drift = float(drift)

    def params(self) -> dict[str, Any]:
        return {"sigma": self.sigma, "drift": self.drift}

    def sample_paths(self, times: np.ndarray, n: int) -> np.ndarray:
        dt = np.diff(times, prepend=0.0)
        steps = self.rng.standard_normal((n, times.size)) * np.sqrt(dt)
        return self.sigma * np.cumsum(steps, axis=1) + self.drift * times
