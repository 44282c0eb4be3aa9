"""Shared builders for tests."""

import numpy as np

from pathspace.paths import StepPath


def random_step_path(rng: np.random.Generator, jumps: int, horizon: float = 1.0, levels: int = 3) -> StepPath:
    """Step path with `jumps` breakpoints on a 1/64 lattice of (0, horizon) and small integer values."""
    times = np.sort(rng.choice(np.arange(1, 64), size=jumps, replace=False)) / 64 * horizon
    values = rng.integers(0, levels, size=jumps + 1).astype(float)
    return StepPath(np.concatenate([[0.0], times]), values, horizon)
