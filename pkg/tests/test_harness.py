"""Tests for experiment configs, the runner and report emission."""

import math
from pathlib import Path

import pytest
from pydantic import ValidationError

from pathspace.errors import DomainError, ReportError
from pathspace.harness import (
    CSV_HEADER,
    ConvergenceReport,
    ExperimentConfig,
    emit_report,
    read_report_json,
    render_report,
    run_experiment,
)


def _make_config(**kwargs) -> ExperimentConfig:
    """Small Brownian C01 experiment."""
    defaults = {
        "name": "bm",
        "target": {"kind": "brownian", "params": {"sigma": 1.0}},
        "space": "C01",
        "levels": [1, 2],
        "fdd_times": [[0.5, 1.0]],
        "seed": 3,
        "reference_size": 100,
        "fit": {"initial_support": 4, "budget": 8, "bootstrap_resamples": 3},
    }
    defaults.update(kwargs)
    return ExperimentConfig.model_validate(defaults)


class TestExperimentConfig:
    """Tests for ExperimentConfig validation and probe handling."""

    def test_levels_must_increase(self) -> None:
        """Levels are strictly increasing and >= 1."""
        with pytest.raises(ValidationError, match="levels"):
            _make_config(levels=[2, 1])
        with pytest.raises(ValidationError, match="levels"):
            _make_config(levels=[0, 1])

    def test_eps_schedule_length(self) -> None:
        """An explicit schedule has one eps per level."""
        with pytest.raises(ValidationError, match="eps_schedule"):
            _make_config(eps_schedule=[0.5])
        cfg = _make_config(eps_schedule=[0.5, 0.25])
        assert cfg.eps_for(2) == 0.25

    def test_inverse_schedule(self) -> None:
        """Default eps_n is 1/n."""
        assert _make_config().eps_for(2) == 0.5

    def test_probe_outside_space(self) -> None:
        """Probes in [0, 1] for the unit interval spaces."""
        with pytest.raises(ValidationError, match="outside"):
            _make_config(fdd_times=[[0.5, 1.2]])

    def test_single_probe_set_is_nested(self) -> None:
        """A flat list of times means one probe set."""
        assert _make_config(fdd_times=[0.25, 0.75]).fdd_times == [[0.25, 0.75]]

    def test_probes_snap_off_grid(self) -> None:
        """In D01 probes on the finest grid move right by the offset."""
        cfg = _make_config(space="D01", levels=[1, 3], fdd_times=[[0.3, 0.5]])
        assert cfg.probe_sets() == [[0.3, 0.5 + 2.0**-20]]

    def test_probe_snap_capped_at_restriction(self) -> None:
        """Dinf probes never pass the restriction time."""
        cfg = _make_config(space="Dinf", levels=[1, 2], fdd_times=[[1.0, 1.5]], restrict_at=1.5)
        assert cfg.probe_sets() == [[1.0 + 2.0**-20, 1.5]]

    def test_snap_disabled(self) -> None:
        """Without snapping a grid probe is an error."""
        cfg = _make_config(space="D01", fdd_times=[[0.5]], snap_probes=False)
        with pytest.raises(DomainError, match="dyadic grid"):
            cfg.probe_sets()

    def test_continuous_space_keeps_probes(self) -> None:
        """C01 probes are used as given."""
        assert _make_config(fdd_times=[[0.5, 1.0]]).probe_sets() == [[0.5, 1.0]]

    def test_reference_draws_default(self) -> None:
        """Default reference sample is max(10 * budget, 10^4)."""
        assert _make_config(reference_size=None).reference_draws == 10_000

    def test_from_yaml_with_probes_section(self, tmp_path: Path) -> None:
        """YAML configs may group probe settings."""
        path = tmp_path / "exp.yaml"
        path.write_text(
            "name: demo\n"
            "target:\n"
            "  kind: poisson\n"
            "  params: {rate: 2.0}\n"
            "space: D01\n"
            "levels: [1, 2]\n"
            "probes:\n"
            "  times: [0.5]\n"
            "  offset: 0.001\n"
        )
        cfg = ExperimentConfig.from_file(path)
        assert cfg.target.kind == "poisson"
        assert cfg.fdd_times == [[0.5]]
        assert cfg.probe_sets()[0][0] == pytest.approx(0.501)


class TestRunExperiment:
    """End-to-end runs on tiny configurations."""

    def test_constant_target_is_exact(self, constant_config: Path) -> None:
        """A deterministic path is reproduced exactly at every level."""
        report = run_experiment(ExperimentConfig.from_file(constant_config))
        assert [lr.level for lr in report.levels] == [1, 2]
        assert not report.flagged
        for lr in report.levels:
            assert lr.fit_support == 1
            assert all(p.rho_hat == 0.0 and p.rho_boot_hi == 0.0 for p in lr.probes)
            assert lr.sup_rho == 0.0

    def test_constant_target_csv(self, constant_config: Path) -> None:
        """CSV has the fixed header and one row per probe set and delta."""
        report = run_experiment(ExperimentConfig.from_file(constant_config))
        lines = render_report(report, "csv").splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[1] == "1,0.3;0.7,0.0,0.0,,,,0.0,1,0"
        assert lines[2] == "2,0.3;0.7,0.0,0.0,0.5,,0.0,0.0,1,0"
        assert len(lines) == 3

    def test_reruns_are_byte_identical(self, tmp_path: Path) -> None:
        """Same seed, same report file."""
        cfg = _make_config(replicas=2)
        first = emit_report(run_experiment(cfg), "csv", tmp_path / "a.csv")
        second = emit_report(run_experiment(cfg), "csv", tmp_path / "b.csv")
        assert first.read_bytes() == second.read_bytes()

    def test_workers_do_not_change_results(self) -> None:
        """Parallel levels merge back in order with identical numbers."""
        cfg = _make_config()
        serial = render_report(run_experiment(cfg), "json")
        parallel = render_report(run_experiment(cfg.model_copy(update={"workers": 2})), "json")
        assert serial == parallel

    def test_unreachable_eps_flags_level(self) -> None:
        """Budget exhaustion is recorded, not raised."""
        report = run_experiment(_make_config(levels=[1], eps_schedule=[0.001]))
        assert report.flagged
        assert "eps=0.001" in report.levels[0].note
        assert report.levels[0].fit_support <= 8


class TestConvergence:
    """Brownian C01 benchmark at reduced size: rho_hat decays up to bootstrap noise."""

    @pytest.fixture(scope="class")
    def report(self) -> ConvergenceReport:
        cfg = ExperimentConfig.model_validate(
            {
                "name": "bm-convergence",
                "target": {"kind": "brownian", "params": {"sigma": 1.0}},
                "space": "C01",
                "levels": [2, 3, 4, 5, 6],
                "fdd_times": [[0.3, 0.7]],
                "seed": 20240611,
                "replicas": 2,
                "reference_size": 800,
                "check_statistics": False,
                "fit": {"initial_support": 96, "budget": 96, "bootstrap_resamples": 10},
            }
        )
        return run_experiment(cfg)

    @staticmethod
    def _rho(report: ConvergenceReport) -> dict[int, tuple[float, float]]:
        """level -> (rho_hat, bootstrap margin) for the single probe set."""
        probes = {lr.level: lr.probes[0] for lr in report.levels}
        return {n: (p.rho_hat, p.rho_boot_hi - p.rho_hat) for n, p in probes.items()}

    def test_nonincreasing_within_margin(self, report: ConvergenceReport) -> None:
        """rho_hat(n) <= rho_hat(n - 1) + 2 * margin."""
        rho = self._rho(report)
        for n in range(3, 7):
            margin = max(rho[n][1], rho[n - 1][1])
            assert rho[n][0] <= rho[n - 1][0] + 2 * margin

    def test_half_level_bound(self, report: ConvergenceReport) -> None:
        """rho_hat(n) <= rho_hat(ceil(n / 2)) + 2 * margin."""
        rho = self._rho(report)
        for n in (4, 5, 6):
            half = math.ceil(n / 2)
            margin = max(rho[n][1], rho[half][1])
            assert rho[n][0] <= rho[half][0] + 2 * margin

    def test_levels_fitted_and_bounded(self, report: ConvergenceReport) -> None:
        """Every level fits a law and reports a distance below 1."""
        assert [lr.level for lr in report.levels] == [2, 3, 4, 5, 6]
        for lr in report.levels:
            assert lr.fit_support <= 96
            assert 0.0 < lr.probes[0].rho_hat < 1.0
            assert lr.probes[0].rho_boot_hi >= lr.probes[0].rho_hat


class TestReports:
    """Tests for render_report and emit_report."""

    def test_empty_report(self) -> None:
        """A report without levels is an error."""
        with pytest.raises(ReportError, match="no rows"):
            render_report(ConvergenceReport(name="x", space="C01", seed=0))

    def test_unwritable_path(self, tmp_path: Path, constant_config: Path) -> None:
        """IO failures carry the path."""
        report = run_experiment(ExperimentConfig.from_file(constant_config))
        with pytest.raises(ReportError, match="cannot write") as exc:
            emit_report(report, "csv", tmp_path)
        assert exc.value.path == str(tmp_path)

    def test_json_round_trip(self, tmp_path: Path, constant_config: Path) -> None:
        """JSON reports read back into the same model."""
        report = run_experiment(ExperimentConfig.from_file(constant_config))
        out = emit_report(report, "json", tmp_path / "r.json")
        assert read_report_json(out) == report


class TestShippedConfigs:
    """The example configs in configs/ stay valid."""

    @pytest.mark.parametrize(
        "name",
        [
            "brownian-c01.yaml",
            "poisson-d01.yaml",
            "compound-dinf.yaml",
            "brownian-c01-benchmark.yaml",
            "poisson-d01-benchmark.yaml",
            "compound-dinf-benchmark.yaml",
        ],
    )
    def test_loads(self, name: str) -> None:
        """Each shipped config validates and yields probe sets."""
        cfg = ExperimentConfig.from_file(Path(__file__).parent.parent / "configs" / name)
        assert cfg.probe_sets()
        assert all(p[-1] <= cfg.probe_horizon for p in cfg.probe_sets())
