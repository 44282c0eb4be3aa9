"""Convergence experiments: configuration, runner and reports."""

from pathspace.harness.config import ExperimentConfig
from pathspace.harness.models import (
    CSV_HEADER,
    ConvergenceReport,
    LevelResult,
    ProbeResult,
    TightnessResult,
)
from pathspace.harness.report import emit_report, read_report_json, render_report
from pathspace.harness.runner import run_experiment, run_level

__all__ = [
    "CSV_HEADER",
    "ConvergenceReport",
    "ExperimentConfig",
    "LevelResult",
    "ProbeResult",
    "TightnessResult",
    "emit_report",
    "read_report_json",
    "render_report",
    "run_experiment",
    "run_level",
]
