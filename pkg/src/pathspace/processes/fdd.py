"""Empirical finite-dimensional distributions."""

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from pathspace.errors import DomainError
from pathspace.prokhorov.measure import DiscreteMeasure


def check_times(times) -> np.ndarray:
    ts = np.asarray(times, dtype=float).reshape(-1)
    if ts.size == 0:
        raise DomainError("need at least one time")
    if np.any(~np.isfinite(ts)) or np.any(ts < 0):
        raise DomainError("times must be finite and >= 0")
    if ts.size > 1 and not np.all(np.diff(ts) > 0):
        raise DomainError("times must be strictly increasing")
    return ts


@dataclass(frozen=True, eq=False)
class EmpiricalFdd:
    """N draws (rows) of a process observed at k times (columns)."""

    times: np.ndarray
    samples: np.ndarray
    source: str = ""

    def __post_init__(self) -> None:
        ts = check_times(self.times)
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim == 1:
            samples = samples[:, None]
        if samples.ndim != 2 or samples.shape[0] == 0 or samples.shape[1] != ts.size:
            raise DomainError(f"samples must be N x {ts.size} with N >= 1")
        if not np.all(np.isfinite(samples)):
            raise DomainError("samples must be finite")
        ts.setflags(write=False)
        samples.setflags(write=False)
        object.__setattr__(self, "times", ts)
        object.__setattr__(self, "samples", samples)

    @property
    def size(self) -> int:
        return int(self.samples.shape[0])

    def to_measure(self) -> DiscreteMeasure:
        return DiscreteMeasure.from_samples(self.samples)

    def columns(self, times: Sequence[float]) -> "EmpiricalFdd":
        """Sub-fdd at a subset of the observation times."""
        idx = []
        for t in times:
            hits = np.nonzero(self.times == t)[0]
            if hits.size == 0:
                raise DomainError(f"time {t} not observed")
            idx.append(int(hits[0]))
        return EmpiricalFdd(self.times[idx], self.samples[:, idx], self.source)

    def split(self, first: int) -> tuple["EmpiricalFdd", "EmpiricalFdd"]:
        """First rows and the rest, as two disjoint fdds."""
        if not (0 < first < self.size):
            raise DomainError(f"cannot split {self.size} draws at {first}")
        return (
            EmpiricalFdd(self.times, self.samples[:first], self.source),
            EmpiricalFdd(self.times, self.samples[first:], self.source),
        )


def _header(t: float) -> str:
    return f"t_{float(t)!r}"


def write_fdd_csv(fdd: EmpiricalFdd, path: str | Path) -> Path:
    """One column per time (header t_<time>), one row per draw."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow([_header(t) for t in fdd.times])
        for row in fdd.samples:
            writer.writerow([repr(float(v)) for v in row])
    return out


def read_fdd_csv(path: str | Path) -> EmpiricalFdd:
    try:
        with open(path, newline="") as f:
            rows = [r for r in csv.reader(f) if r]
    except OSError as e:
        raise DomainError(f"cannot read fdd {path}: {e}") from e
    if len(rows) < 2 or not all(h.startswith("t_") for h in rows[0]):
        raise DomainError(f"{path}: expected header t_<time>,... and at least one row")
    try:
        times = [float(h[2:]) for h in rows[0]]
        samples = np.array([[float(v) for v in r] for r in rows[1:]])
    except ValueError as e:
        raise DomainError(f"{path}: non-numeric entry ({e})") from e
    return EmpiricalFdd(np.array(times), samples, source=str(path))
