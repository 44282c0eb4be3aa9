"""Pytest fixtures for pathspace tests."""

import json
from pathlib import Path

import numpy as np
import pytest

from pathspace.paths import StepPath, path_to_json


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so failures reproduce."""
    return np.random.default_rng(20240611)


@pytest.fixture
def jump_at_half() -> StepPath:
    """0 on [0, 0.5), 1 on [0.5, 1]."""
    return StepPath([0.0, 0.5], [0.0, 1.0], 1.0)


@pytest.fixture
def jump_at_six_tenths() -> StepPath:
    """0 on [0, 0.6), 1 on [0.6, 1]."""
    return StepPath([0.0, 0.6], [0.0, 1.0], 1.0)


@pytest.fixture
def write_path_file(tmp_path: Path):
    """Write a path as JSON under tmp_path and return the file."""

    def _write(name: str, path) -> Path:
        out = tmp_path / name
        out.write_text(path_to_json(path))
        return out

    return _write


@pytest.fixture
def write_measure_file(tmp_path: Path):
    """Write w,x1.. rows as a measure CSV under tmp_path."""

    def _write(name: str, rows: list[list[float]]) -> Path:
        out = tmp_path / name
        dim = len(rows[0]) - 1
        lines = ["w," + ",".join(f"x{i + 1}" for i in range(dim))]
        lines += [",".join(repr(float(v)) for v in row) for row in rows]
        out.write_text("\n".join(lines) + "\n")
        return out

    return _write


@pytest.fixture
def constant_config(tmp_path: Path) -> Path:
    """Tiny D01 experiment on a constant path, written as JSON."""
    cfg = {
        "name": "constant",
        "target": {
            "kind": "deterministic",
            "params": {"path": {"kind": "step", "breakpoints": [0.0], "values": [1.0], "horizon": 1.0}},
        },
        "space": "D01",
        "levels": [1, 2],
        "fdd_times": [[0.3, 0.7]],
        "seed": 7,
        "reference_size": 50,
        "fit": {"initial_support": 4, "budget": 8, "bootstrap_resamples": 0},
    }
    out = tmp_path / "constant.json"
    out.write_text(json.dumps(cfg))
    return out
