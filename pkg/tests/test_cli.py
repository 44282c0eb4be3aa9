"""Tests for the pathspace command line."""

import json
from pathlib import Path

import pytest

from pathspace.cli.main import main
from pathspace.paths import StepPath


class TestMetricCommand:
    """Tests for `pathspace metric`."""

    def test_skorokhod_with_witness(
        self, capsys, write_path_file, jump_at_half: StepPath, jump_at_six_tenths: StepPath
    ) -> None:
        """d prints value, bounds and witness as JSON."""
        x = write_path_file("x.json", jump_at_half)
        y = write_path_file("y.json", jump_at_six_tenths)
        main(["metric", "--kind", "d", "--x", str(x), "--y", str(y), "--oracle"])
        out = capsys.readouterr().out
        assert len(out.splitlines()) == 1
        payload = json.loads(out)
        assert payload["value"] == pytest.approx(0.1)
        assert payload["witness"]["images"] == pytest.approx([0.0, 0.6, 1.0])
        assert payload["oracle"] == pytest.approx(0.1, abs=1e-3)

    def test_modulus(self, capsys, write_path_file, jump_at_half: StepPath) -> None:
        """Single-path statistics take --delta."""
        x = write_path_file("x.json", jump_at_half)
        main(["metric", "--kind", "modulus", "--x", str(x), "--delta", "0.25"])
        assert json.loads(capsys.readouterr().out)["value"] == 1.0

    def test_missing_delta_exits_1(self, capsys, write_path_file, jump_at_half: StepPath) -> None:
        """Domain errors print to stderr and exit with status 1."""
        x = write_path_file("x.json", jump_at_half)
        with pytest.raises(SystemExit) as exc:
            main(["metric", "--kind", "wprime", "--x", str(x)])
        assert exc.value.code == 1
        assert "needs --delta" in capsys.readouterr().err


class TestProkhorovCommand:
    """Tests for `pathspace prokhorov`."""

    def test_diracs(self, capsys, write_measure_file) -> None:
        """Two Diracs 0.3 apart."""
        mu = write_measure_file("mu.csv", [[1.0, 0.0]])
        nu = write_measure_file("nu.csv", [[1.0, 0.3]])
        main(["prokhorov", "--mu", str(mu), "--nu", str(nu), "--oracle"])
        out = capsys.readouterr().out
        assert len(out.splitlines()) == 1
        payload = json.loads(out)
        assert payload["rho"] == pytest.approx(0.3)
        assert payload["certificate_ok"] is True
        assert payload["oracle"] == pytest.approx(0.3)


class TestApproxCommand:
    """Tests for `pathspace approx`."""

    def test_restrict_then_taper(self, capsys, tmp_path: Path) -> None:
        """Operations apply in command-line order."""
        values = tmp_path / "z.txt"
        values.write_text("0 1 2 3 4 5 6 7 8\n")
        main(["approx", "--kind", "halfline", "--level", "2", "--values", str(values), "--restrict", "3", "--taper", "2"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["kind"] == "taper"
        assert payload["m"] == 2
        assert payload["base"]["horizon"] == 3.0

    def test_taper_then_restrict_fails(self, capsys, tmp_path: Path) -> None:
        """A tapered path cannot be restricted further."""
        values = tmp_path / "z.txt"
        values.write_text("0,1,2,3,4,5,6,7,8")
        with pytest.raises(SystemExit) as exc:
            main(["approx", "--kind", "halfline", "--level", "2", "--values", str(values), "--taper", "2", "--restrict", "1"])
        assert exc.value.code == 1
        assert "restrict" in capsys.readouterr().err

    def test_wrong_length(self, capsys, tmp_path: Path) -> None:
        """Unit-interval interpolants need 2^n + 1 values."""
        values = tmp_path / "z.txt"
        values.write_text("0 1 2 3")
        with pytest.raises(SystemExit) as exc:
            main(["approx", "--kind", "pl", "--level", "2", "--values", str(values)])
        assert exc.value.code == 1
        assert "needs 5 values" in capsys.readouterr().err


class TestSampleAndFit:
    """Tests for `pathspace sample` and `pathspace fit`."""

    def test_sample_then_fit(self, capsys, tmp_path: Path) -> None:
        """Sampled fdd feeds the fitter; eps > 1 gives a single atom."""
        fdd = tmp_path / "fdd.csv"
        main(["sample", "--process", "poisson", "--times", "0.5,1.0", "--n", "20", "--seed", "1", "--param", "rate=3", "--output", str(fdd)])
        lines = fdd.read_text().splitlines()
        assert lines[0] == "t_0.5,t_1.0"
        assert len(lines) == 21

        law = tmp_path / "law.csv"
        main(["fit", "--fdd", str(fdd), "--eps", "2", "--seed", "1", "--output", str(law)])
        assert law.read_text().splitlines()[0] == "w,x1,x2"
        assert len(law.read_text().splitlines()) == 2
        assert "1 atoms" in capsys.readouterr().out

    def test_bad_param(self, tmp_path: Path) -> None:
        """Parameters are KEY=VALUE."""
        with pytest.raises(SystemExit) as exc:
            main(["sample", "--process", "brownian", "--times", "1", "--n", "2", "--param", "sigma", "--output", str(tmp_path / "o.csv")])
        assert exc.value.code == 1


class TestExperimentCommand:
    """Tests for `pathspace experiment`."""

    def test_clean_run(self, capsys, constant_config: Path, tmp_path: Path) -> None:
        """Exact target: report written, exit status 0."""
        out = tmp_path / "report.csv"
        main(["experiment", "--config", str(constant_config), "--out", str(out)])
        assert out.read_text().startswith("level,probe_set,rho_hat")
        assert "flagged" not in capsys.readouterr().out

    def test_flagged_run_exits_2(self, tmp_path: Path) -> None:
        """Levels that miss eps give exit status 2."""
        cfg = tmp_path / "bm.yaml"
        cfg.write_text(
            "target: {kind: brownian}\n"
            "space: C01\n"
            "levels: [1]\n"
            "fdd_times: [0.5]\n"
            "eps_schedule: [0.001]\n"
            "reference_size: 50\n"
            "fit: {initial_support: 2, budget: 4, bootstrap_resamples: 0}\n"
        )
        out = tmp_path / "report.json"
        with pytest.raises(SystemExit) as exc:
            main(["experiment", "--config", str(cfg), "--out", str(out), "--format", "json"])
        assert exc.value.code == 2
        assert json.loads(out.read_text())["levels"][0]["flagged"] is True
