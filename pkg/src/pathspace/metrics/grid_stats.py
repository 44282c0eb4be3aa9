"""
Vectorized path statistics for many grid paths at once.

Rows of Z are grid vectors z_0..z_d of interpolants on a uniform grid; lags are
counted in grid steps. For the step and piecewise-linear interpolants and
delta = lag * spacing, these agree with the path-level functions in moduli.
"""

from typing import Optional

import numpy as np

from pathspace.errors import DomainError


def _as_rows(z) -> np.ndarray:
    arr = np.asarray(z, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] < 2:
        raise DomainError("grid statistics need rows of at least two grid values")
    return arr


def _window(arr: np.ndarray, upto: Optional[int]) -> np.ndarray:
    if upto is None:
        return arr
    if not (1 <= upto < arr.shape[1]):
        raise DomainError(f"window index {upto} outside [1, {arr.shape[1] - 1}]")
    return arr[:, : upto + 1]


def grid_modulus(z, lag: int, upto: Optional[int] = None) -> np.ndarray:
    """Per row: max |z_j - z_i| over 0 < j - i <= lag."""
    arr = _window(_as_rows(z), upto)
    if lag < 1:
        raise DomainError(f"lag must be >= 1, got {lag}")
    best = np.zeros(arr.shape[0])
    for step in range(1, min(lag, arr.shape[1] - 1) + 1):
        best = np.maximum(best, np.max(np.abs(arr[:, step:] - arr[:, :-step]), axis=1))
    return best


def grid_two_sided_modulus(z, lag: int, upto: Optional[int] = None) -> np.ndarray:
    """Per row: max of min(|z_l - z_j|, |z_j - z_i|) over i < j < l, l - i <= lag (step interpolant)."""
    arr = _window(_as_rows(z), upto)
    if lag < 1:
        raise DomainError(f"lag must be >= 1, got {lag}")
    n = arr.shape[1]
    best = np.zeros(arr.shape[0])
    for gap in range(2, min(lag, n - 1) + 1):
        left = arr[:, : n - gap]
        right = arr[:, gap:]
        for offset in range(1, gap):
            mid = arr[:, offset : n - gap + offset]
            both = np.minimum(np.abs(right - mid), np.abs(mid - left))
            best = np.maximum(best, both.max(axis=1))
    return best


def grid_endpoints(z, lag: int) -> tuple[np.ndarray, np.ndarray]:
    """Per row: (|z_lag - z_0|, |z_{d-1} - z_{d-lag}|)."""
    arr = _as_rows(z)
    d = arr.shape[1] - 1
    if not (1 <= lag < d):
        raise DomainError(f"lag must lie in [1, {d - 1}], got {lag}")
    return np.abs(arr[:, lag] - arr[:, 0]), np.abs(arr[:, d - 1] - arr[:, d - lag])


def grid_sup(z, upto: Optional[int] = None) -> np.ndarray:
    return np.max(np.abs(_window(_as_rows(z), upto)), axis=1)


def grid_running_sup(z) -> np.ndarray:
    """Column k: max |z_i| over i <= k, i.e. the sup on every grid window [0, k spacing] at once."""
    return np.maximum.accumulate(np.abs(_as_rows(z)), axis=1)


def grid_running_two_sided_modulus(z, lag: int) -> np.ndarray:
    """Column k equals grid_two_sided_modulus(z, lag, upto=k); columns 0 and 1 are zero."""
    arr = _as_rows(z)
    if lag < 1:
        raise DomainError(f"lag must be >= 1, got {lag}")
    n = arr.shape[1]
    ends = np.zeros_like(arr)
    for gap in range(2, min(lag, n - 1) + 1):
        left = arr[:, : n - gap]
        right = arr[:, gap:]
        for offset in range(1, gap):
            mid = arr[:, offset : n - gap + offset]
            ends[:, gap:] = np.maximum(ends[:, gap:], np.minimum(np.abs(right - mid), np.abs(mid - left)))
    return np.maximum.accumulate(ends, axis=1)


def grid_pair_increments(z) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """|z_j - z_i| for every grid pair i < j, one column per pair, with the pairs in column order."""
    arr = _as_rows(z)
    i, j = np.triu_indices(arr.shape[1], k=1)
    return np.abs(arr[:, j] - arr[:, i]), list(zip(i.tolist(), j.tolist()))
