"""Half-line step paths multiplied by a linear cut-off on [m-1, m]."""

from dataclasses import dataclass

import numpy as np

from pathspace.errors import DomainError
from pathspace.paths.step import StepPath


@dataclass(frozen=True, eq=False)
class TaperedPath:
    """g_m(t) * base(t) on [0, m], where g_m is 1 up to m-1, then falls linearly to 0 at m."""

    base: StepPath
    m: int

    kind = "taper"
    is_halfline = False
    grid = None

    def __post_init__(self) -> None:
        if not isinstance(self.base, StepPath):
            raise DomainError(f"taper needs a step path, got {type(self.base).__name__}")
        if int(self.m) != self.m or self.m < 1:
            raise DomainError(f"taper index must be an integer >= 1, got {self.m}")
        if self.base.horizon < self.m:
            raise DomainError(f"base horizon {self.base.horizon} shorter than taper end {self.m}")
        object.__setattr__(self, "m", int(self.m))

    @property
    def horizon(self) -> float:
        return float(self.m)

    def weight(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        return np.clip(self.m - ts, 0.0, 1.0)

    def _check(self, ts: np.ndarray) -> None:
        if ts.size and (np.any(ts < 0) or np.any(ts > self.m)):
            raise DomainError(f"times must lie in [0, {self.m}]")

    def eval_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        self._check(ts)
        return self.weight(ts) * self.base.eval_many(ts)

    def left_limit_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        self._check(ts)
        return self.weight(ts) * self.base.left_limit_many(ts)

    def eval(self, t: float) -> float:
        return float(self.eval_many(np.array([t]))[0])

    def left_limit(self, t: float) -> float:
        return float(self.left_limit_many(np.array([t]))[0])

    def knots(self) -> np.ndarray:
        bp = self.base.breakpoints[self.base.breakpoints <= self.m]
        return np.unique(np.concatenate([bp, [self.m - 1.0, float(self.m)]]))

    def sup_abs(self) -> float:
        kn = self.knots()
        vals = np.abs(self.eval_many(kn))
        lefts = np.abs(self.left_limit_many(kn[kn > 0]))
        return float(max(vals.max(), lefts.max(initial=0.0)))

    def normalize(self) -> "TaperedPath":
        return TaperedPath(self.base.normalize(), self.m)

    def __repr__(self) -> str:
        return f"TaperedPath(m={self.m}, base={self.base!r})"
