"""
Skorokhod J1 distance between step paths.

d_T(x, y) = inf over time changes lam of max(sup |lam(t) - t|, sup |x(t) - y(lam(t))|).

The exact routine decides feasibility at a level eps with a forward sweep over the
jumps of y: S_j is the set of admissible images of the j-th jump of y in x-time, a
union of intervals. The infimum is one of finitely many critical levels (value
gaps and time gaps), found by bisection.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from pathspace.errors import DomainError, OracleRefusedError
from pathspace.metrics.report import MetricReport
from pathspace.metrics.uniform import uniform_distance
from pathspace.paths import Path, Reparametrization, StepPath, apply_reparam

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
ORACLE_MAX_JUMPS = 4
_TIME_SLACK = 1e-12


@dataclass(frozen=True)
class _Span:
    """Interval with open/closed ends."""

    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    @property
    def empty(self) -> bool:
        return self.lo > self.hi or (self.lo == self.hi and (self.lo_open or self.hi_open))

    def __and__(self, other: "_Span") -> "_Span":
        if self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif other.lo > self.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open
        if self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif other.hi < self.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open
        return _Span(lo, hi, lo_open, hi_open)

    def contains(self, t: float) -> bool:
        above = t > self.lo if self.lo_open else t >= self.lo
        below = t < self.hi if self.hi_open else t <= self.hi
        return above and below

    def nearest(self, target: float) -> float:
        """Point of the span closest to target; open ends are approached from inside."""
        if self.contains(target):
            return target
        width = self.hi - self.lo
        nudge = min(width / 2.0, 1e-12 * max(1.0, abs(self.hi)))
        if target <= self.lo:
            return self.lo + nudge if self.lo_open else self.lo
        return self.hi - nudge if self.hi_open else self.hi


@dataclass(frozen=True)
class _Prepared:
    """Normalized jump data of a pair of step paths on a common horizon."""

    sigma: np.ndarray
    a: np.ndarray
    tau: np.ndarray
    b: np.ndarray
    horizon: float
    terminal: float


def _strip_horizon(x: StepPath) -> tuple[np.ndarray, np.ndarray, float]:
    bp, vals = x.breakpoints, x.values
    at_end = float(x.eval(x.horizon))
    if bp.size > 1 and bp[-1] == x.horizon:
        bp, vals = bp[:-1], vals[:-1]
    return bp, vals, at_end


def _prepare(x: Path, y: Path) -> _Prepared:
    if not isinstance(x, StepPath) or not isinstance(y, StepPath):
        raise DomainError("the Skorokhod routines need step paths")
    if x.horizon != y.horizon:
        raise DomainError(f"horizon mismatch: {x.horizon} vs {y.horizon}")
    if math.isinf(x.horizon):
        raise DomainError("restrict half-line paths to a finite horizon first")
    sigma, a, x_end = _strip_horizon(x.normalize())
    tau, b, y_end = _strip_horizon(y.normalize())
    sx = StepPath(sigma, a, x.horizon).normalize()
    sy = StepPath(tau, b, y.horizon).normalize()
    return _Prepared(sx.breakpoints, sx.values, sy.breakpoints, sy.values, x.horizon, abs(x_end - y_end))


class _Sweep:
    """Forward reachable-set sweep at a fixed eps."""

    def __init__(self, p: _Prepared, eps: float):
        self.p = p
        self.eps = eps
        ends = np.append(p.sigma[1:], p.horizon)
        self.components: list[list[_Span]] = []
        for level in p.b:
            good = np.abs(p.a - level) <= eps
            comps: list[_Span] = []
            i = 0
            while i < good.size:
                if not good[i]:
                    i += 1
                    continue
                k = i
                while k + 1 < good.size and good[k + 1]:
                    k += 1
                closed = k == good.size - 1
                comps.append(_Span(float(p.sigma[i]), float(ends[k]), False, not closed))
                i = k + 1
            self.components.append(comps)
        self.levels: list[list[_Span]] = []

    def window(self, j: int) -> _Span:
        tau = float(self.p.tau[j])
        # time gaps are critical levels; absorb the rounding of tau +- |sigma - tau|
        slack = _TIME_SLACK * max(1.0, abs(tau))
        span = _Span(tau - self.eps - slack, tau + self.eps + slack)
        return span & _Span(0.0, self.p.horizon, True, True)

    def run(self) -> bool:
        p = self.p
        current = [_Span(0.0, 0.0)]
        self.levels = [current]
        for j in range(p.tau.size - 1):
            grouped: dict[int, float] = {}
            for span in current:
                for c, comp in enumerate(self.components[j]):
                    meet = span & comp
                    if not meet.empty:
                        grouped[c] = min(grouped.get(c, math.inf), meet.lo)
            nxt = []
            win = self.window(j + 1)
            for c, lo in sorted(grouped.items()):
                comp = self.components[j][c]
                reach = _Span(lo, comp.hi, True, False) & win
                if not reach.empty:
                    nxt.append(reach)
            if not nxt:
                return False
            current = nxt
            self.levels.append(current)
        return self._finish(current) is not None

    def _finish(self, current: list[_Span]) -> Optional[_Span]:
        last = self.components[-1]
        for span in current:
            for comp in last:
                if not comp.hi_open:
                    meet = span & comp
                    if not meet.empty:
                        return meet
        return None

    def witness(self) -> Reparametrization:
        """Backtrack one admissible choice of jump images, each as close to its own time as allowed."""
        p = self.p
        m = p.tau.size - 1
        if m == 0:
            return Reparametrization.identity(p.horizon)
        final = self._finish(self.levels[m])
        if final is None:
            raise DomainError(f"no witness at eps={self.eps}")
        s = [0.0] * (m + 1)
        s[m] = final.nearest(float(p.tau[m]))
        for j in range(m - 1, 0, -1):
            best: Optional[float] = None
            below = _Span(-math.inf, s[j + 1], False, True)
            for span in self.levels[j]:
                for comp in self.components[j]:
                    if comp.hi < s[j + 1]:
                        continue
                    meet = span & comp & below
                    if meet.empty:
                        continue
                    pick = meet.nearest(float(p.tau[j]))
                    if best is None or abs(pick - p.tau[j]) < abs(best - p.tau[j]):
                        best = pick
            if best is None:
                raise DomainError(f"witness backtrack failed at jump {j}")
            s[j] = best
        knots = np.array(s + [p.horizon])
        images = np.append(p.tau, p.horizon)
        return Reparametrization(knots, images)


def _feasible(p: _Prepared, eps: float) -> bool:
    return _Sweep(p, eps).run()


def _critical_levels(p: _Prepared) -> np.ndarray:
    values = np.abs(p.a[:, None] - p.b[None, :]).ravel()
    times = np.abs(p.sigma[1:, None] - p.tau[None, 1:]).ravel()
    return np.unique(np.concatenate([[0.0], values, times]))


def _stripped_distance(p: _Prepared, tol: float) -> tuple[float, Reparametrization]:
    cands = _critical_levels(p)
    lo, hi = 0, cands.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(p, float(cands[mid])):
            hi = mid
        else:
            lo = mid + 1
    k = lo
    value = float(cands[k])
    if k > 0:
        between = (float(cands[k - 1]) + value) / 2.0
        if _feasible(p, between):
            # infimum not attained: every level above cands[k-1] works
            value = float(cands[k - 1])
    sweep = _Sweep(p, value)
    if not sweep.run():
        upper = float(cands[k])
        sweep = _Sweep(p, min(value + tol, (value + upper) / 2.0))
        if not sweep.run():
            sweep = _Sweep(p, upper)
            sweep.run()
    logger.debug("Skorokhod sweep: %d critical levels, value %s", cands.size, value)
    return value, sweep.witness()


def skorokhod_distance(x: Path, y: Path, tol: float = DEFAULT_TOL) -> MetricReport:
    """
    Exact J1 distance on [0, T] between step paths, with a witnessing time change.

    When the infimum is not attained the witness comes within tol of it.
    """
    p = _prepare(x, y)
    value, lam = _stripped_distance(p, tol)
    return MetricReport.exact(max(value, p.terminal), lam)


def skorokhod_circ_distance(x: Path, y: Path, tol: float = DEFAULT_TOL) -> MetricReport:
    """
    The complete variant d°: inf over lam of max(sup |log slope of lam|, sup |x - y o lam|).

    Reported as bounds: the lower bound is log(1 + d_T), the upper bound the best
    objective found over the witnesses of the critical levels and the identity.
    """
    p = _prepare(x, y)
    base, _ = _stripped_distance(p, tol)
    d = max(base, p.terminal)
    lower = math.log1p(d)
    upper = uniform_distance(x, y)
    best_lam = Reparametrization.identity(p.horizon)
    for eps in _critical_levels(p):
        if eps < base:
            continue
        sweep = _Sweep(p, float(eps))
        if not sweep.run():
            continue
        lam = sweep.witness()
        score = max(lam.log_slope_norm(), uniform_distance(x, apply_reparam(y, lam)))
        if score < upper:
            upper, best_lam = score, lam
    upper = max(upper, lower)
    return MetricReport(value=upper, lower_bound=lower, upper_bound=upper, witness=best_lam)


def _oracle_candidates(cuts: list[float], tau: float, m: int, pitch: float) -> list[float]:
    """Per cell of x: lattice points around tau and piles of up to m points at each cell end."""
    out = set(cuts[1:-1])
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        near = (math.floor(tau / pitch) * pitch, math.ceil(tau / pitch) * pitch)
        out.update(t for t in near if lo < t < hi)
        for k in range(1, m + 1):
            out.update(t for t in (lo + k * pitch / (m + 1), hi - k * pitch / (m + 1)) if lo < t < hi)
    return sorted((t for t in out if cuts[0] < t < cuts[-1]), key=lambda t: abs(t - tau))


def _lag_cost(x: StepPath, start: float, stop: float, level: float) -> float:
    """sup |x - level| over [start, stop)."""
    xb = x.breakpoints
    ts = np.concatenate([[start], xb[(xb > start) & (xb < stop)]])
    return float(np.max(np.abs(x.eval_many(ts) - level)))


def skorokhod_oracle(x: Path, y: Path, pitch: float = 1e-3) -> float:
    """
    Brute-force J1 distance: enumerate images of the jumps of y among the jump
    times of x, lattice points of the given pitch and piles at cell ends, and
    score each piecewise-linear time change by evaluating x - y(lambda) directly.
    Accurate to within the pitch; refuses paths with many jumps.
    """
    if not isinstance(x, StepPath) or not isinstance(y, StepPath):
        raise DomainError("the Skorokhod routines need step paths")
    if x.horizon != y.horizon:
        raise DomainError(f"horizon mismatch: {x.horizon} vs {y.horizon}")
    horizon = x.horizon
    if math.isinf(horizon):
        raise DomainError("restrict half-line paths to a finite horizon first")
    tau = [float(t) for t in y.jump_times() if t < horizon]
    m = len(tau)
    if m > ORACLE_MAX_JUMPS:
        raise OracleRefusedError(f"oracle refuses {m} jumps (limit {ORACLE_MAX_JUMPS})")
    best = uniform_distance(x, y)
    if m == 0:
        return best
    cuts = [0.0, *(float(t) for t in x.jump_times() if t < horizon), horizon]
    cands = [_oracle_candidates(cuts, t, m, pitch) for t in tau]
    levels = y.eval_many([0.0, *tau])

    def score(images: list[float]) -> float:
        lam = Reparametrization(np.array([0.0, *images, horizon]), np.array([0.0, *tau, horizon]))
        return max(lam.time_distortion(), uniform_distance(x, apply_reparam(y, lam)))

    def search(j: int, images: list[float], cost: float) -> None:
        nonlocal best
        if cost >= best:
            return
        if j == m:
            best = min(best, score(images))
            return
        prev = images[-1] if images else 0.0
        for s in cands[j]:
            if abs(s - tau[j]) >= best:
                break
            if s <= prev:
                continue
            step = max(cost, abs(s - tau[j]), _lag_cost(x, prev, s, float(levels[j])))
            search(j + 1, [*images, s], step)

    search(0, [], 0.0)
    return best
