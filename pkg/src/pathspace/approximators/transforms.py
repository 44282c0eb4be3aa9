"""Restriction, tapering and the grid-snapping identity for step interpolants."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from pathspace.errors import DomainError
from pathspace.metrics.moduli import two_sided_modulus, window_sup
from pathspace.paths import Path, StepPath, TaperedPath, restrict_path

logger = logging.getLogger(__name__)


def restrict(x: Path, t: float) -> Path:
    """r_t: the restriction of x to [0, t]; truncation of a half-line path at an integer time."""
    return restrict_path(x, t)


def taper(x: Path, m: int) -> TaperedPath:
    """
    g_m x: the step path x kept up to m-1 and scaled linearly to 0 on [m-1, m].

    Only step paths are tapered; the result is continuous at m and vanishes there.
    """
    if not isinstance(x, StepPath):
        raise DomainError(f"taper needs a step path, got {type(x).__name__}")
    return TaperedPath(x, m)


@dataclass(frozen=True)
class SnapIdentity:
    """Windowed (two-sided modulus, sup) on [0, T] and on the snapped window [0, floor(T d) / d]."""

    full: tuple[float, float]
    snapped: tuple[float, float]

    @property
    def holds(self) -> bool:
        return all(math.isclose(a, b, rel_tol=0.0, abs_tol=1e-12) for a, b in zip(self.full, self.snapped))


def _windowed(x: StepPath, window: float, delta: float) -> tuple[float, float]:
    if window == 0:
        return 0.0, abs(x.eval(0.0))
    return two_sided_modulus(x, delta, window=(0.0, window)), window_sup(x, window=(0.0, window))


def grid_snap_sup_identity_check(z, horizon: float, delta: float, level: int) -> SnapIdentity:
    """
    Both sides of the snapping identity for the step interpolant of z on the level grid:
    windowed statistics on [0, T] with delta, and on [0, T'] with min(delta, T'),
    where T' = floor(T 2**level) / 2**level.
    """
    arr = np.asarray(z, dtype=float).reshape(-1)
    d = 2**level
    if not (0 < delta < horizon):
        raise DomainError(f"delta must lie in (0, {horizon}), got {delta}")
    if horizon > (arr.size - 1) / d:
        raise DomainError(f"T={horizon} beyond the grid end {(arr.size - 1) / d}")
    snapped_t = math.floor(horizon * d) / d
    path = StepPath(np.arange(arr.size) / d, arr, math.inf)
    full = _windowed(path, horizon, delta)
    snapped = _windowed(path, snapped_t, min(delta, snapped_t) if snapped_t > 0 else delta)
    logger.debug("snap identity: T=%s T'=%s full=%s snapped=%s", horizon, snapped_t, full, snapped)
    return SnapIdentity(full=full, snapped=snapped)
