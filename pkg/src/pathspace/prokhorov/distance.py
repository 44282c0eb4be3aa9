"""
Exact Prokhorov distance between finitely supported measures.

For eps >= 0 let F(eps) be the largest mass transportable along pairs of atoms at
distance <= eps (a bipartite max-flow). F is a nondecreasing step function with
jumps at pairwise distances, and

    rho(mu, nu) = inf { eps : F(eps) >= 1 - eps }

so rho is either a critical distance or 1 - F at the critical distance just below.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from pathspace.errors import DomainError
from pathspace.prokhorov.measure import DiscreteMeasure

logger = logging.getLogger(__name__)

FLOAT_SLACK = 1e-12
_MAX_SCALE = 1 << 30
_CHUNK_ELEMENTS = 4_000_000


class Norm(str, Enum):
    SUP = "sup"
    EUCLIDEAN = "euclidean"


@dataclass(frozen=True, eq=False)
class CouplingCertificate:
    """
    A coupling of mu and nu (rows: atoms of mu, columns: atoms of nu) putting at
    most epsilon mass on pairs farther apart than epsilon.
    """

    coupling: np.ndarray
    epsilon: float

    def outside_mass(self, distances: np.ndarray) -> float:
        return float(self.coupling[distances > self.epsilon + FLOAT_SLACK].sum())


def pairwise_distances(a: np.ndarray, b: np.ndarray, norm: Norm = Norm.SUP) -> np.ndarray:
    """Distance matrix between the rows of a and b, computed in row chunks."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[1] != b.shape[1]:
        raise DomainError(f"dimension mismatch: {a.shape[1]} vs {b.shape[1]}")
    out = np.empty((a.shape[0], b.shape[0]))
    rows = max(1, _CHUNK_ELEMENTS // max(1, b.shape[0] * b.shape[1]))
    for start in range(0, a.shape[0], rows):
        diff = np.abs(a[start : start + rows, None, :] - b[None, :, :])
        if Norm(norm) is Norm.SUP:
            out[start : start + rows] = diff.max(axis=2)
        else:
            out[start : start + rows] = np.sqrt((diff**2).sum(axis=2))
    return out


def _integer_weights(mu_w: np.ndarray, nu_w: np.ndarray) -> Optional[tuple[np.ndarray, np.ndarray, int]]:
    """Common-denominator integer capacities, or None if the weights are not (small) rationals."""
    fracs = [Fraction(float(w)).limit_denominator(1 << 20) for w in np.concatenate([mu_w, nu_w])]
    if any(abs(float(f) - float(w)) > 1e-15 for f, w in zip(fracs, np.concatenate([mu_w, nu_w]))):
        return None
    scale = math.lcm(*{f.denominator for f in fracs})
    if scale > _MAX_SCALE:
        return None
    ints = np.array([f.numerator * (scale // f.denominator) for f in fracs], dtype=np.int64)
    left, right = ints[: mu_w.size], ints[mu_w.size :]
    if left.sum() != scale or right.sum() != scale:
        return None
    return left, right, scale


class Transport:
    """
    Max-flow oracle F(eps) for a fixed pair of measures.

    One-dimensional pairs use a greedy sweep over the sorted atoms; rational
    weights go through scipy's integer Dinic solver; anything else through networkx.
    """

    SOLVERS = ("greedy", "dinic", "networkx")

    def __init__(
        self,
        mu: DiscreteMeasure,
        nu: DiscreteMeasure,
        norm: Norm = Norm.SUP,
        solver: Optional[str] = None,
    ):
        if mu.dim != nu.dim:
            raise DomainError(f"dimension mismatch: {mu.dim} vs {nu.dim}")
        self.mu = mu
        self.nu = nu
        self.norm = Norm(norm)
        self.distances = pairwise_distances(mu.atoms, nu.atoms, self.norm)
        self.integer = _integer_weights(mu.weights, nu.weights)
        if mu.dim == 1:
            self.solver = "greedy"
        elif self.integer is not None:
            self.solver = "dinic"
        else:
            self.solver = "networkx"
        if solver is not None:
            if solver not in self.SOLVERS:
                raise DomainError(f"unknown solver {solver!r}; choose from {self.SOLVERS}")
            if solver == "greedy" and mu.dim != 1:
                raise DomainError("the greedy solver needs one-dimensional measures")
            if solver == "dinic" and self.integer is None:
                raise DomainError("the integer solver needs rational weights")
            self.solver = solver

    def critical_levels(self) -> np.ndarray:
        below = self.distances[self.distances < 1.0]
        return np.unique(np.concatenate([[0.0, 1.0], below]))

    def mass(self, eps: float, with_flow: bool = False) -> tuple[float, Optional[np.ndarray]]:
        if self.solver == "greedy":
            return self._greedy(eps, with_flow)
        if self.solver == "dinic":
            return self._dinic(eps, with_flow)
        return self._networkx(eps, with_flow)

    def _greedy(self, eps: float, with_flow: bool) -> tuple[float, Optional[np.ndarray]]:
        xo = np.argsort(self.mu.atoms[:, 0], kind="stable")
        yo = np.argsort(self.nu.atoms[:, 0], kind="stable")
        xs, ys = self.mu.atoms[xo, 0], self.nu.atoms[yo, 0]
        supply = self.mu.weights[xo].astype(float)
        capacity = self.nu.weights[yo].astype(float).copy()
        flow = np.zeros(self.distances.shape) if with_flow else None
        total = 0.0
        lo = 0
        for i in range(xs.size):
            while lo < ys.size and (xs[i] - ys[lo] > eps or capacity[lo] <= 0.0):
                lo += 1
            need = supply[i]
            j = lo
            while need > 0.0 and j < ys.size and ys[j] - xs[i] <= eps:
                take = min(need, capacity[j])
                if take > 0.0:
                    capacity[j] -= take
                    need -= take
                    total += take
                    if flow is not None:
                        flow[xo[i], yo[j]] += take
                j += 1
        return min(total, 1.0), flow

    def _dinic(self, eps: float, with_flow: bool) -> tuple[float, Optional[np.ndarray]]:
        left, right, scale = self.integer  # type: ignore[misc]
        n, m = self.distances.shape
        ii, jj = np.nonzero(self.distances <= eps)
        if ii.size == 0:
            return 0.0, (np.zeros((n, m)) if with_flow else None)
        source, sink = 0, n + m + 1
        rows = np.concatenate([np.zeros(n, dtype=np.int64), 1 + ii, 1 + n + np.arange(m)])
        cols = np.concatenate([1 + np.arange(n), 1 + n + jj, np.full(m, sink)])
        caps = np.concatenate([left, np.full(ii.size, scale), right]).astype(np.int32)
        graph = csr_matrix((caps, (rows, cols)), shape=(n + m + 2, n + m + 2))
        result = maximum_flow(graph, source, sink, method="dinic")
        flow = None
        if with_flow:
            block = result.flow[1 : n + 1, n + 1 : n + m + 1].toarray()
            flow = np.clip(block, 0, None) / scale
        return result.flow_value / scale, flow

    def _networkx(self, eps: float, with_flow: bool) -> tuple[float, Optional[np.ndarray]]:
        n, m = self.distances.shape
        graph = nx.DiGraph()
        for i, w in enumerate(self.mu.weights):
            graph.add_edge("source", ("mu", i), capacity=float(w))
        for j, w in enumerate(self.nu.weights):
            graph.add_edge(("nu", j), "sink", capacity=float(w))
        for i, j in zip(*np.nonzero(self.distances <= eps)):
            graph.add_edge(("mu", int(i)), ("nu", int(j)))
        value, flow_dict = nx.maximum_flow(graph, "source", "sink")
        flow = None
        if with_flow:
            flow = np.zeros((n, m))
            for i in range(n):
                for node, amount in flow_dict.get(("mu", i), {}).items():
                    if node != "source" and amount > 0:
                        flow[i, node[1]] = amount
        return min(float(value), 1.0), flow


def _feasible(transport: Transport, eps: float) -> bool:
    value, _ = transport.mass(eps)
    return value >= 1.0 - eps - FLOAT_SLACK


def _solve(transport: Transport) -> tuple[float, float]:
    """Return (rho, eps at which the certifying flow lives)."""
    levels = transport.critical_levels()
    lo, hi = 0, levels.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(transport, float(levels[mid])):
            hi = mid
        else:
            lo = mid + 1
    rho, flow_eps = float(levels[lo]), float(levels[lo])
    if lo > 0:
        below = float(levels[lo - 1])
        value, _ = transport.mass(below)
        if 1.0 - value < rho:
            rho, flow_eps = max(1.0 - value, below), below
    logger.debug("Prokhorov (%s): %d levels, rho=%s", transport.solver, levels.size, rho)
    return min(rho, 1.0), flow_eps


def prokhorov_value(
    mu: DiscreteMeasure, nu: DiscreteMeasure, norm: Norm = Norm.SUP, solver: Optional[str] = None
) -> float:
    """Exact Prokhorov distance without building a certificate."""
    rho, _ = _solve(Transport(mu, nu, norm, solver))
    return rho


def prokhorov_distance(
    mu: DiscreteMeasure, nu: DiscreteMeasure, norm: Norm = Norm.SUP, solver: Optional[str] = None
) -> tuple[float, CouplingCertificate]:
    """Exact Prokhorov distance and a coupling certifying it."""
    transport = Transport(mu, nu, norm, solver)
    rho, flow_eps = _solve(transport)
    _, flow = transport.mass(flow_eps, with_flow=True)
    assert flow is not None
    rest_mu = np.clip(mu.weights - flow.sum(axis=1), 0.0, None)
    rest_nu = np.clip(nu.weights - flow.sum(axis=0), 0.0, None)
    residual = float(rest_mu.sum())
    coupling = flow
    if residual > FLOAT_SLACK:
        coupling = flow + np.outer(rest_mu, rest_nu) / residual
    return rho, CouplingCertificate(coupling, rho)


def verify_certificate(
    mu: DiscreteMeasure,
    nu: DiscreteMeasure,
    certificate: CouplingCertificate,
    norm: Norm = Norm.SUP,
    tol: float = 1e-9,
) -> bool:
    """Re-check marginals and the outside mass of a certificate."""
    coupling = certificate.coupling
    if coupling.shape != (mu.support_size, nu.support_size) or np.any(coupling < -tol):
        return False
    if not np.allclose(coupling.sum(axis=1), mu.weights, atol=tol):
        return False
    if not np.allclose(coupling.sum(axis=0), nu.weights, atol=tol):
        return False
    distances = pairwise_distances(mu.atoms, nu.atoms, norm)
    return certificate.outside_mass(distances) <= certificate.epsilon + tol
