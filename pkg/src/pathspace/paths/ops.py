"""Operations combining paths and time changes."""

import math

import numpy as np

from pathspace.errors import DomainError
from pathspace.paths.grid import DyadicGrid
from pathspace.paths.linear import PiecewiseLinearPath
from pathspace.paths.reparam import Reparametrization
from pathspace.paths.step import StepPath
from pathspace.paths.taper import TaperedPath

Path = StepPath | PiecewiseLinearPath | TaperedPath


def apply_reparam(x: Path, lam: Reparametrization) -> Path:
    """Return x composed with lam, i.e. t -> x(lam(t)), as a path of the same family."""
    if x.horizon != lam.horizon:
        raise DomainError(f"horizon mismatch: path {x.horizon}, reparametrization {lam.horizon}")
    inv = lam.inverse()
    if isinstance(x, StepPath):
        moved = np.asarray(inv(x.breakpoints), dtype=float)
        moved[0] = 0.0
        if moved.size > 1 and not np.all(np.diff(moved) > 0):
            raise DomainError("reparametrization collapsed two breakpoints")
        return StepPath(moved, x.values, x.horizon)
    if isinstance(x, PiecewiseLinearPath):
        knots = np.unique(np.concatenate([np.asarray(inv(x.knots()), dtype=float), lam.knots]))
        return PiecewiseLinearPath(knots, x.eval_many(lam(knots)))
    raise DomainError(f"cannot reparametrize a {type(x).__name__}")


def restrict_path(x: Path, t: float) -> Path:
    """Restriction of x to [0, t]."""
    if not (t > 0) or t > x.horizon:
        raise DomainError(f"restriction time {t} outside (0, {x.horizon}]")
    if isinstance(x, StepPath):
        keep = x.breakpoints <= t
        grid = DyadicGrid(x.grid.level, t) if x.grid is not None and not math.isinf(t) else None
        return StepPath(x.breakpoints[keep], x.values[keep], t, grid)
    if isinstance(x, PiecewiseLinearPath):
        kn = x.knots()
        inner = kn[kn < t]
        knots = np.append(inner, t)
        return PiecewiseLinearPath(knots, np.append(x.values[: inner.size], x.eval(t)))
    raise DomainError(f"cannot restrict a {type(x).__name__}")
