"""Zero-padded views of finite time series."""

from dataclasses import dataclass

import numpy as np

from pathspace.errors import DomainError


@dataclass(frozen=True, eq=False)
class PaddedSeries:
    """y_1..y_n followed by zeros; indices start at 1."""

    values: np.ndarray

    def __getitem__(self, index: int) -> float:
        if index < 1:
            raise DomainError(f"series indices start at 1, got {index}")
        return float(self.values[index - 1]) if index <= self.values.size else 0.0

    def head(self, k: int) -> np.ndarray:
        """First k entries as an array."""
        if k < 0:
            raise DomainError(f"negative length {k}")
        out = np.zeros(k)
        n = min(k, self.values.size)
        out[:n] = self.values[:n]
        return out

    @property
    def horizon_index(self) -> int:
        return int(self.values.size)


def pad_time_series(y, horizon_index: int) -> PaddedSeries:
    arr = np.asarray(y, dtype=float).reshape(-1)
    if horizon_index < 0 or arr.size != horizon_index:
        raise DomainError(f"expected {horizon_index} values, got {arr.size}")
    arr = arr.copy()
    arr.setflags(write=False)
    return PaddedSeries(arr)
