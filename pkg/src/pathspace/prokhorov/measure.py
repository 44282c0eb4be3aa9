"""Finitely supported probability measures on R^k."""

import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from pathspace.errors import DomainError

logger = logging.getLogger(__name__)

WEIGHT_TOL = 1e-12
WEIGHT_COLUMNS = ("w", "weight")


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """
    Atoms (rows of an n x k matrix) with positive weights summing to 1.

    Duplicate atoms are merged on construction, so atoms are pairwise distinct.
    """

    atoms: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        atoms = np.asarray(self.atoms, dtype=float)
        if atoms.ndim == 1:
            atoms = atoms[:, None]
        weights = np.asarray(self.weights, dtype=float).reshape(-1)
        if atoms.ndim != 2 or atoms.shape[0] == 0 or atoms.shape[1] == 0:
            raise DomainError("a measure needs a non-empty n x k atom matrix")
        if atoms.shape[0] != weights.size:
            raise DomainError(f"{atoms.shape[0]} atoms but {weights.size} weights")
        if not np.all(np.isfinite(atoms)):
            raise DomainError("atoms must be finite")
        if np.any(weights <= 0) or not np.all(np.isfinite(weights)):
            raise DomainError("weights must be positive")
        total = float(weights.sum())
        if abs(total - 1.0) > WEIGHT_TOL * max(1, weights.size):
            raise DomainError(f"weights sum to {total}, not 1")
        uniq, inverse = np.unique(atoms, axis=0, return_inverse=True)
        if uniq.shape[0] != atoms.shape[0]:
            merged = np.zeros(uniq.shape[0])
            np.add.at(merged, inverse.reshape(-1), weights)
            atoms, weights = uniq, merged
        atoms.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def dirac(cls, point) -> "DiscreteMeasure":
        return cls(np.atleast_1d(np.asarray(point, dtype=float))[None, :], np.ones(1))

    @classmethod
    def from_samples(cls, samples) -> "DiscreteMeasure":
        """Empirical measure of the rows of a sample matrix."""
        arr = np.asarray(samples, dtype=float)
        if arr.ndim == 1:
            arr = arr[:, None]
        if arr.shape[0] == 0:
            raise DomainError("empirical measure of zero samples")
        uniq, counts = np.unique(arr, axis=0, return_counts=True)
        return cls(uniq, counts / arr.shape[0])

    @property
    def dim(self) -> int:
        return int(self.atoms.shape[1])

    @property
    def support_size(self) -> int:
        return int(self.atoms.shape[0])

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        idx = rng.choice(self.support_size, size=n, p=self.weights)
        return self.atoms[idx]

    def pushforward(self, fn) -> "DiscreteMeasure":
        """Image measure under a row-wise map (atoms -> rows of fn(atoms))."""
        return DiscreteMeasure(np.asarray(fn(self.atoms), dtype=float), self.weights)

    def __repr__(self) -> str:
        return f"DiscreteMeasure(support={self.support_size}, dim={self.dim})"


def project_marginal(mu: DiscreteMeasure, coords: Sequence[int]) -> DiscreteMeasure:
    """Marginal on the given (0-based) coordinates; atoms that coincide are merged."""
    coords = list(coords)
    if not coords:
        raise DomainError("projection needs at least one coordinate")
    if any(c < 0 or c >= mu.dim for c in coords):
        raise DomainError(f"coordinates {coords} outside [0, {mu.dim})")
    return DiscreteMeasure(mu.atoms[:, coords], mu.weights)


def read_measure_csv(path: str | Path) -> DiscreteMeasure:
    """CSV with header w,x1..xk (or weight,x_1..x_k) and one atom per row."""
    try:
        with open(path, newline="") as f:
            rows = list(csv.reader(f))
    except OSError as e:
        raise DomainError(f"cannot read measure {path}: {e}") from e
    if len(rows) < 2 or not rows[0] or rows[0][0].strip() not in WEIGHT_COLUMNS:
        raise DomainError(f"{path}: expected header 'w,x1,...'")
    try:
        data = np.array([[float(v) for v in row] for row in rows[1:] if row], dtype=float)
    except ValueError as e:
        raise DomainError(f"{path}: non-numeric entry ({e})") from e
    return DiscreteMeasure(data[:, 1:], data[:, 0])


def write_measure_csv(mu: DiscreteMeasure, path: str | Path) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["w", *[f"x{i + 1}" for i in range(mu.dim)]])
        for w, atom in zip(mu.weights, mu.atoms):
            writer.writerow([format(float(w), ".17g"), *[format(float(v), ".17g") for v in atom]])
    return out
