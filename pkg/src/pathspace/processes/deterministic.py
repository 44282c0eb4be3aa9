"""Deterministic process: every draw is the same path."""

from typing import Any, Optional

import numpy as np

from pathspace.errors import DomainError
from pathspace.paths import Path, path_from_json
from pathspace.processes.base import BaseSampler


class DeterministicSampler(BaseSampler):
    """Repeats a fixed path; accepts the path or its JSON text."""

    kind = "deterministic"

    def __init__(self, seed: Optional[int] = None, stream_id: int = 0, path: Path | str | None = None):
        super().__init__(seed, stream_id)
        if path is None:
            raise DomainError("deterministic sampler needs a path")
        self.path: Path = path_from_json(path) if isinstance(path, str) else path

    @property
    def horizon(self) -> float:
        return self.path.horizon

    def params(self) -> dict[str, Any]:
        return {"path": self.path}

    def sample_paths(self, times: np.ndarray, n: int) -> np.ndarray:
        return np.tile(self.path.eval_many(times), (n, 1))
