"""Subset-enumeration oracle for the Prokhorov distance of tiny measures."""

import logging

import numpy as np

from pathspace.errors import DomainError, OracleRefusedError
from pathspace.prokhorov.distance import Norm, pairwise_distances
from pathspace.prokhorov.measure import DiscreteMeasure

logger = logging.getLogger(__name__)

MAX_SUPPORT = 14


def _deficit(weights_a: np.ndarray, weights_b: np.ndarray, close: np.ndarray) -> float:
    """max over subsets A of atoms of a: a(A) - b(A^eps), where close[i, j] says atom j is within eps of atom i."""
    n = weights_a.size
    members = (np.arange(1 << n)[:, None] >> np.arange(n)) & 1
    mass = members @ weights_a
    covered = ((members @ close.astype(int)) > 0) @ weights_b
    return float(max(0.0, np.max(mass - covered)))


def prokhorov_oracle(mu: DiscreteMeasure, nu: DiscreteMeasure, norm: Norm = Norm.SUP) -> float:
    """
    Prokhorov distance straight from the definition: for every critical level c,
    the smallest eps >= c with mu(A) <= nu(A^c) + eps for all A (and symmetrically).
    """
    if mu.dim != nu.dim:
        raise DomainError(f"dimension mismatch: {mu.dim} vs {nu.dim}")
    total = mu.support_size + nu.support_size
    if total > MAX_SUPPORT:
        raise OracleRefusedError(f"oracle refuses combined support {total} (limit {MAX_SUPPORT})")
    dist = pairwise_distances(mu.atoms, nu.atoms, norm)
    levels = np.unique(np.concatenate([[0.0, 1.0], dist[dist < 1.0]]))
    best = 1.0
    for level in levels:
        close = dist <= level
        deficit = max(
            _deficit(mu.weights, nu.weights, close),
            _deficit(nu.weights, mu.weights, close.T),
        )
        best = min(best, max(float(level), deficit))
    logger.debug("Prokhorov oracle over %d levels: %s", levels.size, best)
    return best
