"""Poisson and compound Poisson samplers."""

from typing import Any, Literal, Optional

import numpy as np

from pathspace.errors import DomainError
from pathspace.processes.base import BaseSampler


class PoissonSampler(BaseSampler):
    """Counting process N_t with independent Poisson(rate * dt) increments."""

    kind = "poisson"

    def __init__(self, seed: Optional[int] = None, stream_id: int = 0, rate: float = 1.0):
        super().__init__(seed, stream_id)
        if rate <= 0:
            raise DomainError(f"rate must be positive, got {rate}")
        self.rate = float(rate)

    def params(self) -> dict[str, Any]:
        return {"rate": self.rate}

    def counts(self, times: np.ndarray, n: int) -> np.ndarray:
        dt = np.diff(times, prepend=0.0)
        return self.rng.poisson(self.rate * dt, size=(n, times.size))

    def sample_paths(self, times: np.ndarray, n: int) -> np.ndarray:
        return np.cumsum(self.counts(times, n), axis=1).astype(float)


class CompoundPoissonSampler(PoissonSampler):
    """
    Sum of i.i.d. jumps at Poisson times.

    Jump laws: "normal" (mean, std) or "two-point" (+-size with probability p of +size).
    Sums of k jumps are drawn in closed form, so cost does not grow with the rate.
    """

    kind = "compound-poisson"

    def __init__(
        self,
        seed: Optional[int] = None,
        stream_id: int = 0,
        rate: float = 1.0,
        jump_law: Literal["normal", "two-point"] = "normal",
        jump_mean: float = 0.0,
        jump_std: float = 1.0,
        jump_size: float = 1.0,
        jump_prob: float = 0.5,
    ):
        super().__init__(seed, stream_id, rate)
        if jump_law not in ("normal", "two-point"):
            raise DomainError(f"unknown jump law: {jump_law}")
        if jump_std < 0 or not (0.0 <= jump_prob <= 1.0):
            raise DomainError("jump_std must be >= 0 and jump_prob in [0, 1]")
        self.jump_law = jump_law
        self.jump_mean = float(jump_mean)
        self.jump_std = float(jump_std)
        self.jump_size = float(jump_size)
        self.jump_prob = float(jump_prob)

    def params(self) -> dict[str, Any]:
        return {
            **super().params(),
            "jump_law": self.jump_law,
            "jump_mean": self.jump_mean,
            "jump_std": self.jump_std,
            "jump_size": self.jump_size,
            "jump_prob": self.jump_prob,
        }

    def sample_paths(self, times: np.ndarray, n: int) -> np.ndarray:
        k = self.counts(times, n)
        if self.jump_law == "normal":
            sums = self.jump_mean * k + self.jump_std * np.sqrt(k) * self.rng.standard_normal(k.shape)
        else:
            ups = self.rng.binomial(k, self.jump_prob)
            sums = self.jump_size * (2 * ups - k)
        return np.cumsum(sums, axis=1)
