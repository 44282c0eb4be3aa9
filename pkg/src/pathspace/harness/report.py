"""Writing convergence reports as CSV or JSON."""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Literal

from pathspace.errors import ReportError
from pathspace.harness.models import CSV_HEADER, ConvergenceReport

logger = logging.getLogger(__name__)

Format = Literal["csv", "json"]


def render_report(report: ConvergenceReport, fmt: Format = "csv") -> str:
    if not report.levels:
        raise ReportError("report has no rows")
    if fmt == "json":
        return json.dumps(report.model_dump(mode="json"), indent=2) + "\n"
    if fmt != "csv":
        raise ReportError(f"unknown report format: {fmt}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(report.csv_rows())
    return buf.getvalue()


def emit_report(report: ConvergenceReport, fmt: Format, path: str | Path) -> Path:
    """Write the report; the file is byte-identical for identical reports."""
    text = render_report(report, fmt)
    out = Path(path)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    except OSError as e:
        raise ReportError(f"cannot write report: {e}", path=str(out)) from e
    logger.info("wrote %s report with %d levels to %s", fmt, len(report.levels), out)
    return out


def read_report_json(path: str | Path) -> ConvergenceReport:
    try:
        return ConvergenceReport.model_validate_json(Path(path).read_text())
    except OSError as e:
        raise ReportError(f"cannot read report: {e}", path=str(path)) from e
