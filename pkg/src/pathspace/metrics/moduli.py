"""Moduli of continuity, endpoint statistics and the sparse-partition modulus w'."""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from pathspace.errors import DomainError
from pathspace.metrics.uniform import uniform_distance
from pathspace.paths import Path, StepPath, TaperedPath

logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION = 2.0**-8


@dataclass(frozen=True)
class Cells:
    """
    Decomposition of a path into cells [start, end) on which it is affine.

    start_values is the value at the cell start, end_values the left limit at the
    cell end. The last cell is closed at the horizon.
    """

    start: np.ndarray
    end: np.ndarray
    start_values: np.ndarray
    end_values: np.ndarray

    def __len__(self) -> int:
        return self.start.size

    def at(self, k: int, t: float) -> float:
        """Affine extension of cell k evaluated at t."""
        a, b = self.start[k], self.end[k]
        if b == a:
            return float(self.start_values[k])
        w = (t - a) / (b - a)
        return float(self.start_values[k] * (1.0 - w) + self.end_values[k] * w)


def path_cells(x: Path, upto: Optional[float] = None) -> Cells:
    """Cells of x over [0, upto] (default: the horizon)."""
    horizon = x.horizon if upto is None else upto
    if math.isinf(horizon):
        raise DomainError("cells need a finite window")
    kn = x.knots()
    kn = kn[kn < horizon]
    ends = np.append(kn[1:], horizon)
    if isinstance(x, StepPath):
        vals = x.eval_many(kn)
        start, end, sv, ev = kn, ends, vals, vals
        if x.eval(horizon) != x.left_limit(horizon):
            start, end = np.append(kn, horizon), np.append(ends, horizon)
            sv = ev = np.append(vals, x.eval(horizon))
    else:
        start, end = kn, ends
        sv = x.eval_many(kn)
        ev = x.left_limit_many(ends)
        if x.eval(horizon) != x.left_limit(horizon):
            start, end = np.append(start, horizon), np.append(end, horizon)
            sv, ev = np.append(sv, x.eval(horizon)), np.append(ev, x.eval(horizon))
    return Cells(np.asarray(start, float), np.asarray(end, float), np.asarray(sv, float), np.asarray(ev, float))


def _check_delta(x: Path, delta: float, horizon: Optional[float] = None) -> float:
    horizon = x.horizon if horizon is None else horizon
    if not (0 < delta < horizon):
        raise DomainError(f"delta must lie in (0, {horizon}), got {delta}")
    return horizon


def _pair_sup(cells: Cells, i: int, j: int, delta: float) -> float:
    """sup |f_j(t) - f_i(s)| over s in cell i, t in cell j, 0 <= t - s <= delta (closure)."""
    a_i, b_i = cells.start[i], cells.end[i]
    a_j, b_j = cells.start[j], cells.end[j]
    tol = 1e-15 * max(1.0, b_j)
    candidates = [(s, t) for s in (a_i, b_i) for t in (a_j, b_j)]
    for c in (0.0, delta):
        for s in (a_i, b_i):
            candidates.append((s, s + c))
        for t in (a_j, b_j):
            candidates.append((t - c, t))
    best = 0.0
    for s, t in candidates:
        if not (a_i - tol <= s <= b_i + tol and a_j - tol <= t <= b_j + tol):
            continue
        if not (-tol <= t - s <= delta + tol):
            continue
        best = max(best, abs(cells.at(j, min(max(t, a_j), b_j)) - cells.at(i, min(max(s, a_i), b_i))))
    return best


def modulus(x: Path, delta: float) -> float:
    """
    w(x, delta) = sup |x(t) - x(s)| over |t - s| <= delta, with the closed constraint.

    Exact for step and piecewise-linear paths: on each pair of reachable cells the
    supremum of an affine function sits at a vertex of the feasible polygon.
    """
    _check_delta(x, delta)
    cells = path_cells(x)
    best = 0.0
    for i in range(len(cells)):
        for j in range(i, len(cells)):
            if j > i and cells.start[j] - cells.end[i] >= delta:
                break
            best = max(best, _pair_sup(cells, i, j, delta))
    return best


def _best_middle(lo: float, hi: float, left: float, right: float) -> float:
    """max over v in [lo, hi] of min(|right - v|, |v - left|)."""
    mid = min(max((left + right) / 2.0, lo), hi)
    return max(min(abs(right - v), abs(v - left)) for v in (lo, hi, mid))


def _window(x: Path, window: Optional[tuple[float, float]]) -> tuple[float, float]:
    if window is None:
        if math.isinf(x.horizon):
            raise DomainError("a window is required for half-line paths")
        return 0.0, x.horizon
    w0, w1 = window
    if not (0 <= w0 < w1 <= x.horizon):
        raise DomainError(f"window {window} outside [0, {x.horizon}]")
    return float(w0), float(w1)


def _step_window_cells(x: StepPath, w0: float, w1: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    bp = x.breakpoints
    inner = bp[(bp > w0) & (bp <= w1)]
    start = np.concatenate([[w0], inner])
    end = np.append(inner, w1)
    return start, end, x.eval_many(start)


def _resolution_points(x: Path, w0: float, w1: float, resolution: float) -> np.ndarray:
    n = max(1, math.ceil((w1 - w0) / resolution))
    lattice = w0 + np.arange(n + 1) * resolution
    lattice[-1] = w1
    kn = x.knots()
    kn = kn[(kn > w0) & (kn < w1)]
    return np.unique(np.concatenate([lattice[lattice <= w1], kn]))


def two_sided_modulus(
    x: Path,
    delta: float,
    window: Optional[tuple[float, float]] = None,
    resolution: float = DEFAULT_RESOLUTION,
) -> float:
    """
    sup of min(|x(t2) - x(t)|, |x(t) - x(t1)|) over t1 <= t <= t2 in the window, t2 - t1 <= delta.

    Exact for step paths. Other paths are scanned on a lattice of the given
    resolution plus their knots; for continuous paths the middle value is optimised exactly.
    """
    w0, w1 = _window(x, window)
    if not (0 < delta < x.horizon if window is None else delta > 0):
        raise DomainError(f"delta must lie in (0, {x.horizon}), got {delta}")
    if isinstance(x, TaperedPath):
        raise DomainError("two-sided modulus is defined here for step and piecewise-linear paths")
    if isinstance(x, StepPath):
        start, end, vals = _step_window_cells(x, w0, w1)
        k = start.size
        best = 0.0
        for i in range(k):
            for l in range(i + 2, k):
                if start[l] - end[i] >= delta:
                    break
                a, c = vals[i], vals[l]
                mids = vals[i + 1 : l]
                best = max(best, float(np.max(np.minimum(np.abs(c - mids), np.abs(mids - a)))))
        return best
    pts = _resolution_points(x, w0, w1, resolution)
    vals = x.eval_many(pts)
    lefts = np.concatenate([[vals[0]], x.left_limit_many(pts[1:])])
    best = 0.0
    for i in range(pts.size):
        lo = hi = vals[i]
        for l in range(i + 1, pts.size):
            if pts[l] - pts[i] > delta:
                break
            lo, hi = min(lo, lefts[l]), max(hi, lefts[l])
            best = max(best, _best_middle(lo, hi, vals[i], vals[l]))
            lo, hi = min(lo, vals[l]), max(hi, vals[l])
    return best


def window_sup(x: Path, window: Optional[tuple[float, float]] = None) -> float:
    """sup |x(t)| over a closed window."""
    w0, w1 = _window(x, window)
    kn = x.knots()
    ts = np.unique(np.concatenate([[w0, w1], kn[(kn > w0) & (kn < w1)]]))
    best = float(np.max(np.abs(x.eval_many(ts))))
    inner = ts[ts > w0]
    if inner.size:
        best = max(best, float(np.max(np.abs(x.left_limit_many(inner)))))
    return best


def endpoint_statistics(x: Path, delta: float) -> tuple[float, float, float]:
    """
    (|x(delta) - x(0)|, |x(p) - x(T - delta)|, sup |x|) where p is the penultimate
    grid point, or the penultimate knot for paths without grid metadata.
    """
    horizon = _check_delta(x, delta)
    if x.grid is not None:
        pen = float(x.grid.points()[-2])
    else:
        kn = x.knots()
        pen = float(kn[-2]) if kn.size >= 2 else 0.0
    start = abs(x.eval(delta) - x.eval(0.0))
    end = abs(x.eval(pen) - x.eval(horizon - delta))
    return start, end, x.sup_abs()


def _step_wprime_cells(x: StepPath) -> tuple[np.ndarray, np.ndarray]:
    bp = x.breakpoints
    keep = bp < x.horizon
    return bp[keep], x.values[keep]


def _range_reach(values: np.ndarray, eta: float) -> np.ndarray:
    """reach[i] = first k > i with range(values[i..k]) > eta, or len(values)."""
    n = values.size
    reach = np.full(n, n, dtype=int)
    for i in range(n):
        lo = hi = values[i]
        for k in range(i + 1, n):
            lo, hi = min(lo, values[k]), max(hi, values[k])
            if hi - lo > eta:
                reach[i] = k
                break
    return reach


def _step_wprime_feasible(starts: np.ndarray, values: np.ndarray, horizon: float, delta: float, eta: float) -> bool:
    """Can [0, T) be cut into cells longer than delta, each oscillating at most eta?"""
    n = starts.size
    ends = np.append(starts[1:], horizon)
    right = np.append(starts, horizon)[_range_reach(values, eta)]
    # reachable cut points: {0} first, then unions of (low, up]
    frontier: list[tuple[float, float]] = []
    if delta < right[0]:
        if right[0] == horizon:
            return True
        frontier.append((delta, float(right[0])))
    while frontier:
        nxt: dict[float, float] = {}
        for low, up in frontier:
            for i in range(n):
                if starts[i] > low:
                    if starts[i] > up:
                        break
                    first = float(starts[i])
                elif low < up and low < ends[i]:
                    first = low
                else:
                    continue
                if first + delta >= right[i]:
                    continue
                if right[i] == horizon:
                    return True
                key = float(right[i])
                nxt[key] = min(nxt.get(key, math.inf), first + delta)
        frontier = sorted((low, up) for up, low in nxt.items())
    return False


def _lattice_wprime(x: Path, delta: float, resolution: float) -> float:
    horizon = x.horizon
    n = max(1, math.ceil(horizon / resolution))
    bounds = np.arange(n + 1) * resolution
    bounds[-1] = horizon
    fine = np.unique(np.concatenate([bounds, x.knots()]))
    vals = x.eval_many(fine)
    lefts = np.concatenate([[vals[0]], x.left_limit_many(fine[1:])])
    pos = np.searchsorted(fine, bounds)
    # oscillation data of the stretch [bounds[j], bounds[j+1])
    seg_lo = np.empty(n)
    seg_hi = np.empty(n)
    for j in range(n):
        chunk = np.concatenate([vals[pos[j] : pos[j + 1]], lefts[pos[j] + 1 : pos[j + 1] + 1]])
        seg_lo[j], seg_hi[j] = chunk.min(), chunk.max()
    best = np.full(n + 1, math.inf)
    best[0] = 0.0
    for k in range(1, n + 1):
        lo, hi = math.inf, -math.inf
        for j in range(k - 1, -1, -1):
            lo, hi = min(lo, seg_lo[j]), max(hi, seg_hi[j])
            if bounds[k] - bounds[j] > delta and best[j] < math.inf:
                best[k] = min(best[k], max(best[j], hi - lo))
    return float(best[-1])



def sparse_modulus_w_prime(x: Path, delta: float, resolution: float = DEFAULT_RESOLUTION) -> float:
    """
    w'(x, delta): inf over partitions 0 = t0 < ... < tr = T with gaps > delta of the
    largest oscillation over a cell [t_{i-1}, t_i).

    Exact for step paths (bisection over the differences of values); other paths
    use partitions on a lattice of the given resolution.
    """
    horizon = _check_delta(x, delta)
    if not isinstance(x, StepPath):
        return _lattice_wprime(x, delta, resolution)
    starts, values = _step_wprime_cells(x.normalize())
    candidates = np.unique(np.abs(values[:, None] - values[None, :]))
    lo, hi = 0, candidates.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _step_wprime_feasible(starts, values, horizon, delta, float(candidates[mid])):
            hi = mid
        else:
            lo = mid + 1
    logger.debug("w' bisection settled on %s of %d candidates", candidates[lo], candidates.size)
    return float(candidates[lo])


def lipschitz_gap(statistic: Callable[[Path], float], x: Path, y: Path) -> float:
    """|g(x) - g(y)| - 2 sup|x - y|; non-positive for the statistics in this module."""
    return abs(statistic(x) - statistic(y)) - 2.0 * uniform_distance(x, y)
