"""Uniform distance between paths."""

import logging

import numpy as np

from pathspace.errors import DomainError
from pathspace.paths import Path

logger = logging.getLogger(__name__)


def union_knots(x: Path, y: Path) -> np.ndarray:
    return np.unique(np.concatenate([x.knots(), y.knots()]))


def uniform_distance(x: Path, y: Path) -> float:
    """sup_t |x(t) - y(t)|, exact for paths that are affine between knots."""
    if x.horizon != y.horizon:
        raise DomainError(f"horizon mismatch: {x.horizon} vs {y.horizon}")
    ts = union_knots(x, y)
    gap = float(np.max(np.abs(x.eval_many(ts) - y.eval_many(ts))))
    inner = ts[ts > 0]
    if inner.size:
        gap = max(gap, float(np.max(np.abs(x.left_limit_many(inner) - y.left_limit_many(inner)))))
    return gap
