"""Tests for the Skorokhod J1 distance, its witness and the brute-force oracle."""

import math

import numpy as np
import pytest

from pathspace.approximators import step_interpolant
from pathspace.errors import DomainError, OracleRefusedError
from pathspace.metrics import (
    skorokhod_circ_distance,
    skorokhod_distance,
    skorokhod_oracle,
    sparse_modulus_w_prime,
    uniform_distance,
)
from pathspace.paths import PiecewiseLinearPath, StepPath, apply_reparam

from tests.helpers import random_step_path


def _assert_witness(x: StepPath, y: StepPath, value: float, tol: float = 1e-9) -> None:
    lam = skorokhod_distance(x, y).witness
    assert lam is not None
    assert lam.time_distortion() <= value + tol
    assert uniform_distance(x, apply_reparam(y, lam)) <= value + tol


class TestSkorokhodDistance:
    """Tests for skorokhod_distance on hand-checked pairs."""

    def test_equal_paths(self, jump_at_half: StepPath) -> None:
        """d(x, x) = 0 with the identity as witness."""
        report = skorokhod_distance(jump_at_half, jump_at_half)
        assert report.value == 0.0
        assert report.is_exact

    def test_shifted_jump(self, jump_at_half: StepPath, jump_at_six_tenths: StepPath) -> None:
        """Moving a jump by 0.1 costs 0.1, not the jump height."""
        report = skorokhod_distance(jump_at_half, jump_at_six_tenths)
        assert report.value == pytest.approx(0.1)
        assert report.witness is not None
        assert report.witness(0.5) == pytest.approx(0.6)
        _assert_witness(jump_at_half, jump_at_six_tenths, report.value)

    def test_different_heights(self, jump_at_half: StepPath) -> None:
        """Same jump time, different heights: the value gap remains."""
        y = StepPath([0.0, 0.5], [0.0, 1.2], 1.0)
        assert skorokhod_distance(jump_at_half, y).value == pytest.approx(0.2)

    def test_jump_at_horizon_cannot_move(self, jump_at_half: StepPath) -> None:
        """A jump exactly at T stays there, so the earlier jump of x is not matched."""
        y = StepPath([0.0, 1.0], [0.0, 1.0], 1.0)
        assert skorokhod_distance(jump_at_half, y).value == 1.0

    def test_terminal_value(self) -> None:
        """Different values at T always count."""
        x = StepPath([0.0], [0.0], 1.0)
        y = StepPath([0.0, 1.0], [0.0, 0.4], 1.0)
        assert skorokhod_distance(x, y).value == pytest.approx(0.4)

    def test_extra_jump_costs_its_height(self) -> None:
        """A jump of y with no partner in x cannot be hidden by time change."""
        x = StepPath([0.0], [0.0], 1.0)
        y = StepPath([0.0, 0.3, 0.4], [0.0, 0.7, 0.0], 1.0)
        assert skorokhod_distance(x, y).value == pytest.approx(0.7)

    def test_requires_step_paths(self, jump_at_half: StepPath) -> None:
        """Continuous paths are rejected."""
        with pytest.raises(DomainError, match="step paths"):
            skorokhod_distance(jump_at_half, PiecewiseLinearPath([0.0, 1.0], [0.0, 1.0]))

    def test_requires_finite_common_horizon(self, jump_at_half: StepPath) -> None:
        """Horizons must agree and be finite."""
        with pytest.raises(DomainError, match="horizon mismatch"):
            skorokhod_distance(jump_at_half, StepPath([0.0], [0.0], 2.0))
        halfline = StepPath([0.0, 0.5], [0.0, 1.0], math.inf)
        with pytest.raises(DomainError, match="finite"):
            skorokhod_distance(halfline, halfline)


class TestSkorokhodProperties:
    """Metric properties and agreement with the oracle on random step paths."""

    def test_agrees_with_oracle(self, rng: np.random.Generator) -> None:
        """Exact value is at most the oracle's and within its pitch."""
        for _ in range(200):
            x = random_step_path(rng, int(rng.integers(0, 4)))
            y = random_step_path(rng, int(rng.integers(0, 4)))
            exact = skorokhod_distance(x, y).value
            approx = skorokhod_oracle(x, y)
            assert exact <= approx + 1e-9
            assert approx <= exact + 2e-3

    def test_witness_attains_value(self, rng: np.random.Generator) -> None:
        """The returned time change achieves the distance up to tol."""
        for _ in range(25):
            x = random_step_path(rng, int(rng.integers(0, 4)))
            y = random_step_path(rng, int(rng.integers(0, 4)))
            _assert_witness(x, y, skorokhod_distance(x, y).value)

    def test_symmetric_and_below_uniform(self, rng: np.random.Generator) -> None:
        """d(x, y) = d(y, x) <= sup |x - y|."""
        for _ in range(25):
            x = random_step_path(rng, int(rng.integers(0, 4)))
            y = random_step_path(rng, int(rng.integers(0, 4)))
            forward = skorokhod_distance(x, y).value
            assert forward == pytest.approx(skorokhod_distance(y, x).value, abs=1e-12)
            assert forward <= uniform_distance(x, y) + 1e-12

    def test_triangle_inequality(self, rng: np.random.Generator) -> None:
        """d(x, z) <= d(x, y) + d(y, z)."""
        for _ in range(15):
            x, y, z = (random_step_path(rng, int(rng.integers(0, 4))) for _ in range(3))
            lhs = skorokhod_distance(x, z).value
            rhs = skorokhod_distance(x, y).value + skorokhod_distance(y, z).value
            assert lhs <= rhs + 1e-9


class TestStepApproximation:
    """Grid step approximations of step targets."""

    @pytest.mark.parametrize("level", [2, 3, 4, 5])
    def test_distance_bounded_by_w_prime(self, rng: np.random.Generator, level: int) -> None:
        """d(x_n, x) <= max(2^-n, w'(x, 2^-n)) for the level-n step interpolant x_n."""
        delta = 2.0**-level
        grid = np.arange(2**level + 1) * delta
        for _ in range(100):
            x = random_step_path(rng, int(rng.integers(1, 5)))
            approx = step_interpolant(x.eval_many(grid))
            bound = max(delta, sparse_modulus_w_prime(x, delta))
            assert skorokhod_distance(approx, x).value <= bound + 1e-9


class TestSkorokhodCirc:
    """Tests for skorokhod_circ_distance."""

    def test_bounds_bracket(self, jump_at_half: StepPath, jump_at_six_tenths: StepPath) -> None:
        """log(1 + d) <= d_circ <= best witness objective."""
        report = skorokhod_circ_distance(jump_at_half, jump_at_six_tenths)
        d = skorokhod_distance(jump_at_half, jump_at_six_tenths).value
        assert report.lower_bound == pytest.approx(math.log1p(d))
        assert report.lower_bound <= report.upper_bound
        assert report.upper_bound <= uniform_distance(jump_at_half, jump_at_six_tenths)
        assert report.upper_bound == pytest.approx(abs(math.log(0.8)))

    def test_equal_paths(self, jump_at_half: StepPath) -> None:
        """Zero distance gives zero bounds."""
        report = skorokhod_circ_distance(jump_at_half, jump_at_half)
        assert report.lower_bound == 0.0
        assert report.upper_bound == 0.0


class TestSkorokhodOracle:
    """Tests for skorokhod_oracle."""

    def test_refuses_many_jumps(self) -> None:
        """More than four jumps in y is beyond the oracle."""
        x = StepPath([0.0], [0.0], 1.0)
        y = StepPath(np.arange(6) / 6, np.arange(6) % 2, 1.0)
        with pytest.raises(OracleRefusedError, match="refuses"):
            skorokhod_oracle(x, y)

    def test_shifted_jump(self, jump_at_half: StepPath, jump_at_six_tenths: StepPath) -> None:
        """Oracle finds the shift within its pitch."""
        assert skorokhod_oracle(jump_at_half, jump_at_six_tenths) == pytest.approx(0.1, abs=1e-3)
