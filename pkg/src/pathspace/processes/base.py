"""Abstract base class for process samplers."""

import math
from abc import ABC, abstractmethod
from typing import Any, Optional

import numpy as np

from pathspace.errors import DomainError
from pathspace.processes.fdd import EmpiricalFdd, check_times


class BaseSampler(ABC):
    """
    Standard interface for samplers of a real-valued process.
    Implementations draw joint values at sorted times; the base class handles
    seeding, validation and stream derivation.
    """

    kind: str = ""

    def __init__(self, seed: Optional[int] = None, stream_id: int = 0):
        self.seed = seed
        self.stream_id = stream_id
        entropy = [seed, stream_id] if seed is not None else None
        self.rng = np.random.default_rng(np.random.SeedSequence(entropy))

    @property
    def horizon(self) -> float:
        return math.inf

    @abstractmethod
    def sample_paths(self, times: np.ndarray, n: int) -> np.ndarray:
        """
        n joint draws at the given (validated, strictly increasing) times; shape (n, len(times)).
        """
        pass

    @abstractmethod
    def params(self) -> dict[str, Any]:
        """Constructor parameters other than seed and stream id."""
        pass

    def sample_fdd(self, times, n: int) -> EmpiricalFdd:
        ts = check_times(times)
        if n < 1:
            raise DomainError(f"sample size must be >= 1, got {n}")
        if ts[-1] > self.horizon:
            raise DomainError(f"time {ts[-1]} beyond horizon {self.horizon}")
        return EmpiricalFdd(ts, self.sample_paths(ts, n), source=self.kind)

    def spawn(self, stream_id: int) -> "BaseSampler":
        """Independent sampler of the same law, seeded from (seed, stream id)."""
        return type(self)(seed=self.seed, stream_id=stream_id, **self.params())

    def __repr__(self) -> str:
        return f"{type(self).__name__}(seed={self.seed}, stream_id={self.stream_id}, {self.params()})"
