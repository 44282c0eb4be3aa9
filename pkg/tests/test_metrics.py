"""Unit tests for the uniform distance, moduli and grid statistics."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathspace.approximators import linear_interpolant, step_interpolant
from pathspace.errors import DomainError
from pathspace.metrics import (
    MetricReport,
    endpoint_statistics,
    lipschitz_gap,
    modulus,
    sparse_modulus_w_prime,
    two_sided_modulus,
    uniform_distance,
    window_sup,
)
from pathspace.metrics.grid_stats import (
    grid_endpoints,
    grid_modulus,
    grid_pair_increments,
    grid_running_sup,
    grid_running_two_sided_modulus,
    grid_sup,
    grid_two_sided_modulus,
)
from pathspace.paths import PiecewiseLinearPath, StepPath, TaperedPath

grid_vectors = st.lists(st.integers(min_value=-3, max_value=3), min_size=9, max_size=9)


class TestUniformDistance:
    """Tests for uniform_distance."""

    def test_shifted_jump(self, jump_at_half: StepPath, jump_at_six_tenths: StepPath) -> None:
        """A jump moved in time costs its full height."""
        assert uniform_distance(jump_at_half, jump_at_six_tenths) == 1.0
        assert uniform_distance(jump_at_half, jump_at_half) == 0.0

    def test_step_against_pl(self) -> None:
        """Gap between a jump and a ramp is seen at the jump's left limit."""
        x = StepPath([0.0, 0.5], [0.0, 1.0], 1.0)
        y = PiecewiseLinearPath([0.0, 1.0], [0.0, 1.0])
        assert uniform_distance(x, y) == pytest.approx(0.5)

    def test_horizon_mismatch(self, jump_at_half: StepPath) -> None:
        """Paths must share the horizon."""
        with pytest.raises(DomainError, match="horizon mismatch"):
            uniform_distance(jump_at_half, StepPath([0.0], [0.0], 2.0))


class TestModulus:
    """Tests for modulus (closed constraint |t - s| <= delta)."""

    def test_single_jump(self, jump_at_half: StepPath) -> None:
        """Any delta sees the jump."""
        assert modulus(jump_at_half, 0.1) == 1.0

    def test_linear_ramp(self) -> None:
        """Slope times delta for a straight line."""
        x = PiecewiseLinearPath([0.0, 1.0], [0.0, 1.0])
        assert modulus(x, 0.25) == pytest.approx(0.25)

    def test_closed_constraint_boundary(self) -> None:
        """Cells exactly delta apart are not reachable; slightly wider delta reaches them."""
        x = StepPath([0.0, 0.25, 0.5], [0.0, 1.0, 3.0], 1.0)
        assert modulus(x, 0.25) == 2.0
        assert modulus(x, 0.26) == 3.0

    def test_delta_range(self, jump_at_half: StepPath) -> None:
        """delta must lie in (0, T)."""
        with pytest.raises(DomainError, match="delta"):
            modulus(jump_at_half, 1.0)
        with pytest.raises(DomainError, match="delta"):
            modulus(jump_at_half, 0.0)


class TestTwoSidedModulus:
    """Tests for two_sided_modulus and window_sup."""

    def test_single_jump_is_free(self, jump_at_half: StepPath) -> None:
        """One jump never counts from both sides."""
        assert two_sided_modulus(jump_at_half, 0.5) == 0.0

    def test_spike(self) -> None:
        """A spike of width 0.2 is seen by delta = 0.3 but not by delta = 0.2."""
        x = StepPath([0.0, 0.4, 0.6], [0.0, 1.0, 0.0], 1.0)
        assert two_sided_modulus(x, 0.3) == 1.0
        assert two_sided_modulus(x, 0.2) == 0.0

    def test_linear_ramp(self) -> None:
        """Monotone line: best middle point splits the window in half."""
        x = PiecewiseLinearPath([0.0, 1.0], [0.0, 1.0])
        assert two_sided_modulus(x, 0.25) == pytest.approx(0.125)

    def test_window(self) -> None:
        """A window that cuts the spike off sees nothing."""
        x = StepPath([0.0, 0.4, 0.6], [0.0, 1.0, 0.0], 1.0)
        assert two_sided_modulus(x, 0.3, window=(0.0, 0.5)) == 0.0
        assert window_sup(x, (0.0, 0.3)) == 0.0
        assert window_sup(x, (0.0, 0.5)) == 1.0

    def test_tapered_path_refused(self) -> None:
        """Tapered paths are outside the supported families."""
        x = TaperedPath(StepPath([0.0], [1.0], float("inf")), 2)
        with pytest.raises(DomainError, match="two-sided"):
            two_sided_modulus(x, 0.5)


class TestEndpointStatistics:
    """Tests for endpoint_statistics."""

    def test_uses_penultimate_grid_point(self) -> None:
        """End statistic compares x(p) with x(T - delta), p the last grid point before T."""
        x = step_interpolant([0.0, 1.0, 2.0, 3.0, 4.0])
        start, end, sup = endpoint_statistics(x, 0.25)
        assert start == 1.0
        assert end == 0.0
        assert sup == 4.0
        assert endpoint_statistics(x, 0.5)[1] == 1.0


class TestSparseModulus:
    """Tests for sparse_modulus_w_prime."""

    def test_jump_can_be_cut(self) -> None:
        """A partition point at the jump removes it when cells may be short enough."""
        x = StepPath([0.0, 0.5], [1.0, 0.0], 1.0)
        assert sparse_modulus_w_prime(x, 0.2) == 0.0

    def test_jump_cannot_be_cut(self) -> None:
        """With delta beyond both sides of the jump the whole range counts."""
        x = StepPath([0.0, 0.5], [1.0, 0.0], 1.0)
        assert sparse_modulus_w_prime(x, 0.6) == 1.0

    def test_value_at_horizon_ignored(self) -> None:
        """Cells are half-open; a jump exactly at T never enters an oscillation."""
        x = StepPath([0.0, 1.0], [0.0, 5.0], 1.0)
        assert sparse_modulus_w_prime(x, 0.5) == 0.0

    def test_linear_ramp_lattice(self) -> None:
        """x(t) = t with delta = 0.4: best is one cut at 1/2."""
        x = PiecewiseLinearPath([0.0, 1.0], [0.0, 1.0])
        assert sparse_modulus_w_prime(x, 0.4) == pytest.approx(0.5)

    def test_never_exceeds_modulus_bound(self, rng: np.random.Generator) -> None:
        """w'(x, delta) <= w(x, 2 delta) for step paths."""
        for _ in range(20):
            x = step_interpolant(rng.integers(-2, 3, size=17).astype(float))
            assert sparse_modulus_w_prime(x, 0.2) <= modulus(x, 0.4) + 1e-12

    def test_below_oscillation(self, rng: np.random.Generator) -> None:
        """w'(x, delta) never exceeds max x - min x over [0, 1]."""
        for _ in range(100):
            x = step_interpolant(rng.normal(size=17))
            spread = float(x.values.max() - x.values.min())
            for delta in (0.05, 0.3, 0.9):
                assert sparse_modulus_w_prime(x, delta) <= spread + 1e-12

    def test_nonincreasing_as_delta_shrinks(self, rng: np.random.Generator) -> None:
        """Smaller delta admits more partitions, so w' can only drop."""
        deltas = (0.8, 0.4, 0.2, 0.1, 0.05, 0.01)
        for _ in range(100):
            x = step_interpolant(rng.integers(-3, 4, size=33).astype(float))
            values = [sparse_modulus_w_prime(x, d) for d in deltas]
            assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))


class TestLipschitz:
    """The statistics move at most 2 sup|x - y| when the path moves."""

    @settings(max_examples=40, deadline=None)
    @given(zx=grid_vectors, zy=grid_vectors)
    def test_modulus(self, zx: list[int], zy: list[int]) -> None:
        """modulus is 2-Lipschitz in the uniform norm."""
        x, y = step_interpolant(zx), step_interpolant(zy)
        assert lipschitz_gap(lambda p: modulus(p, 0.25), x, y) <= 1e-12

    @settings(max_examples=40, deadline=None)
    @given(zx=grid_vectors, zy=grid_vectors)
    def test_two_sided_and_endpoints(self, zx: list[int], zy: list[int]) -> None:
        """Two-sided modulus and endpoint statistics are 2-Lipschitz as well."""
        x, y = step_interpolant(zx), step_interpolant(zy)
        assert lipschitz_gap(lambda p: two_sided_modulus(p, 0.375), x, y) <= 1e-12
        assert lipschitz_gap(lambda p: endpoint_statistics(p, 0.25)[1], x, y) <= 1e-12


class TestGridStatistics:
    """Vectorized statistics agree with the path-level functions."""

    def test_modulus_matches_paths(self, rng: np.random.Generator) -> None:
        """Lag k on a level-4 grid is delta = k / 16 for both interpolants."""
        z = rng.normal(size=(6, 17))
        batch = grid_modulus(z, 4)
        for row, value in zip(z, batch):
            assert value == pytest.approx(modulus(step_interpolant(row), 0.25))
            assert value == pytest.approx(modulus(linear_interpolant(row), 0.25))

    def test_two_sided_matches_step_path(self, rng: np.random.Generator) -> None:
        """Two-sided grid modulus is the step interpolant's."""
        z = rng.normal(size=(6, 17))
        batch = grid_two_sided_modulus(z, 4)
        for row, value in zip(z, batch):
            assert value == pytest.approx(two_sided_modulus(step_interpolant(row), 0.25))

    def test_endpoints_and_sup(self, rng: np.random.Generator) -> None:
        """Endpoint statistics and sup agree row by row."""
        z = rng.normal(size=(4, 17))
        starts, ends = grid_endpoints(z, 4)
        sups = grid_sup(z)
        for k, row in enumerate(z):
            s, e, m = endpoint_statistics(step_interpolant(row), 0.25)
            assert (starts[k], ends[k], sups[k]) == pytest.approx((s, e, m))

    def test_pair_increments(self) -> None:
        """One column |z_j - z_i| per grid pair i < j."""
        z = np.array([[0.0, 5.0, 1.0]])
        values, pairs = grid_pair_increments(z)
        assert pairs == [(0, 1), (0, 2), (1, 2)]
        assert values.tolist() == [[5.0, 1.0, 4.0]]

    def test_running_windows_match_single_windows(self, rng: np.random.Generator) -> None:
        """Column k of the running statistics is the statistic on the window up to index k."""
        z = rng.normal(size=(5, 13))
        sups = grid_running_sup(z)
        two_sided = grid_running_two_sided_modulus(z, 3)
        assert np.array_equal(sups[:, 0], np.abs(z[:, 0]))
        assert np.all(two_sided[:, :2] == 0.0)
        for k in range(1, 13):
            assert np.array_equal(sups[:, k], grid_sup(z, upto=k))
            assert np.allclose(two_sided[:, k], grid_two_sided_modulus(z, 3, upto=k))

    def test_bad_lag(self) -> None:
        """Lags start at one."""
        with pytest.raises(DomainError, match="lag"):
            grid_modulus(np.zeros((1, 5)), 0)


class TestMetricReport:
    """Tests for MetricReport."""

    def test_exact(self) -> None:
        """Exact reports have equal bounds."""
        report = MetricReport.exact(0.3)
        assert report.is_exact
        assert report.to_dict() == {"value": 0.3, "lower_bound": 0.3, "upper_bound": 0.3}

    def test_bounds_out_of_order(self) -> None:
        """Validator rejects a value outside its bounds."""
        with pytest.raises(ValueError, match="bounds"):
            MetricReport(value=1.0, lower_bound=0.0, upper_bound=0.5)
