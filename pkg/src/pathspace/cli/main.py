"""Main CLI entry point."""

import argparse
import json
import logging
import os
import re
import sys
from pathlib import Path
from typing import Optional

from pathspace.errors import PathspaceError


# Load .env into os.environ before any commands run (PATHSPACE_LOG_LEVEL etc.)
def _load_env() -> None:
    try:
        from dotenv import load_dotenv
        load_dotenv()
    except ImportError:
        pass


class _OrderedOp(argparse.Action):
    """Collects --taper / --restrict in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        ops = list(getattr(namespace, "ops", None) or [])
        ops.append((self.dest, values))
        namespace.ops = ops


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathspace", description="Path-space metrics and dyadic approximants")
    parser.add_argument(
        "--log-level",
        default=None,
        help="Logging level (default: $PATHSPACE_LOG_LEVEL or WARNING)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # metric
    metric_parser = subparsers.add_parser("metric", help="Distance or statistic of step/PL paths")
    metric_parser.add_argument(
        "--kind",
        required=True,
        choices=["uniform", "d", "dcirc", "wprime", "modulus", "two-sided", "endpoints"],
        help="Metric (two paths) or statistic (one path, needs --delta)",
    )
    metric_parser.add_argument("--x", type=Path, required=True, help="Path JSON file")
    metric_parser.add_argument("--y", type=Path, default=None, help="Second path JSON file")
    metric_parser.add_argument("--delta", type=float, default=None)
    metric_parser.add_argument("--tol", type=float, default=1e-9)
    metric_parser.add_argument(
        "--oracle",
        action="store_true",
        help="[d] Also run the brute-force oracle",
    )

    # prokhorov
    prok_parser = subparsers.add_parser("prokhorov", help="Prokhorov distance of two discrete measures")
    prok_parser.add_argument("--mu", type=Path, required=True, help="Measure CSV (w,x1..xk)")
    prok_parser.add_argument("--nu", type=Path, required=True, help="Measure CSV (w,x1..xk)")
    prok_parser.add_argument("--norm", choices=["sup", "euclidean"], default="sup")
    prok_parser.add_argument("--oracle", action="store_true", help="Also run the subset oracle")

    # approx
    approx_parser = subparsers.add_parser("approx", help="Build an interpolant from grid values")
    approx_parser.add_argument("--kind", required=True, choices=["pl", "step", "halfline"])
    approx_parser.add_argument("--level", type=int, required=True)
    approx_parser.add_argument("--values", type=Path, required=True, help="Grid values (comma/space separated)")
    approx_parser.add_argument("--taper", type=int, action=_OrderedOp, metavar="M")
    approx_parser.add_argument("--restrict", type=float, action=_OrderedOp, metavar="T")
    approx_parser.add_argument("--output", "--out", dest="output", type=Path, default=None, help="Write path JSON to file")

    # sample
    sample_parser = subparsers.add_parser("sample", help="Draw an empirical fdd from a process")
    sample_parser.add_argument(
        "--process",
        required=True,
        choices=["brownian", "poisson", "compound-poisson"],
    )
    sample_parser.add_argument("--times", required=True, help="Comma-separated increasing times")
    sample_parser.add_argument("--n", type=int, required=True)
    sample_parser.add_argument("--seed", type=int, default=None)
    sample_parser.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Sampler parameter, e.g. rate=2.0 (repeatable)",
    )
    sample_parser.add_argument("--output", "--out", dest="output", type=Path, required=True, help="Fdd CSV")

    # fit
    fit_parser = subparsers.add_parser("fit", help="Fit a finitely supported law to an fdd sample")
    fit_parser.add_argument("--fdd", type=Path, required=True)
    fit_parser.add_argument("--eps", type=float, required=True)
    fit_parser.add_argument("--budget", type=int, default=512)
    fit_parser.add_argument("--bootstrap", type=int, default=200, help="Bootstrap resamples")
    fit_parser.add_argument("--seed", type=int, default=None)
    fit_parser.add_argument("--output", "--out", dest="output", type=Path, required=True, help="Measure CSV")

    # experiment
    exp_parser = subparsers.add_parser("experiment", help="Run a convergence experiment")
    exp_parser.add_argument("--config", type=Path, required=True, help="YAML or JSON config")
    exp_parser.add_argument("--out", type=Path, required=True, help="Report path")
    exp_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    exp_parser.add_argument("--workers", type=int, default=None, help="Override config workers")
    exp_parser.add_argument("--timing", action="store_true", help="Record wall time per level")
    return parser


def _configure_logging(level: Optional[str]) -> None:
    name = (level or os.environ.get("PATHSPACE_LOG_LEVEL") or "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[list[str]] = None) -> None:
    """Parse args and dispatch to subcommands."""
    _load_env()
    args = _build_parser().parse_args(argv)
    _configure_logging(args.log_level)
    try:
        if args.command == "metric":
            code = _run_metric(args)
        elif args.command == "prokhorov":
            code = _run_prokhorov(args)
        elif args.command == "approx":
            code = _run_approx(args)
        elif args.command == "sample":
            code = _run_sample(args)
        elif args.command == "fit":
            code = _run_fit(args)
        elif args.command == "experiment":
            code = _run_experiment(args)
        else:
            code = 1
    except PathspaceError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(1)
    if code:
        sys.exit(code)


def _emit(payload: dict) -> None:
    print(json.dumps(payload))


def _run_metric(args: argparse.Namespace) -> int:
    from pathspace.errors import DomainError
    from pathspace.metrics import (
        MetricReport,
        endpoint_statistics,
        modulus,
        skorokhod_circ_distance,
        skorokhod_distance,
        skorokhod_oracle,
        sparse_modulus_w_prime,
        two_sided_modulus,
        uniform_distance,
    )
    from pathspace.paths import read_path

    x = read_path(args.x)
    if args.kind in ("uniform", "d", "dcirc"):
        if args.y is None:
            raise DomainError(f"--kind {args.kind} needs --y")
        y = read_path(args.y)
        if args.kind == "uniform":
            report = MetricReport.exact(uniform_distance(x, y))
        elif args.kind == "d":
            report = skorokhod_distance(x, y, tol=args.tol)
        else:
            report = skorokhod_circ_distance(x, y, tol=args.tol)
        payload = report.to_dict()
        if args.oracle and args.kind == "d":
            payload["oracle"] = skorokhod_oracle(x, y)
        _emit(payload)
        return 0
    if args.delta is None:
        raise DomainError(f"--kind {args.kind} needs --delta")
    if args.kind == "endpoints":
        start, end, sup = endpoint_statistics(x, args.delta)
        _emit({"start": start, "end": end, "sup": sup})
        return 0
    statistic = {"wprime": sparse_modulus_w_prime, "modulus": modulus, "two-sided": two_sided_modulus}[args.kind]
    _emit(MetricReport.exact(statistic(x, args.delta)).to_dict())
    return 0


def _run_prokhorov(args: argparse.Namespace) -> int:
    from pathspace.prokhorov import (
        prokhorov_distance,
        prokhorov_oracle,
        read_measure_csv,
        verify_certificate,
    )

    mu = read_measure_csv(args.mu)
    nu = read_measure_csv(args.nu)
    rho, cert = prokhorov_distance(mu, nu, args.norm)
    payload = {
        "rho": rho,
        "epsilon_certificate": cert.epsilon,
        "certificate_ok": verify_certificate(mu, nu, cert, args.norm),
    }
    if args.oracle:
        payload["oracle"] = prokhorov_oracle(mu, nu, args.norm)
    _emit(payload)
    return 0


def _read_values(path: Path) -> list[float]:
    from pathspace.errors import DomainError

    try:
        text = path.read_text()
    except OSError as e:
        raise DomainError(f"cannot read values {path}: {e}") from e
    tokens = [tok for tok in re.split(r"[,\s]+", text) if tok]
    try:
        return [float(tok) for tok in tokens]
    except ValueError as e:
        raise DomainError(f"{path}: non-numeric value ({e})") from e


def _run_approx(args: argparse.Namespace) -> int:
    from pathspace.approximators import (
        halfline_step_interpolant,
        linear_interpolant,
        restrict,
        step_interpolant,
        taper,
    )
    from pathspace.errors import DomainError
    from pathspace.paths import path_to_json, write_path

    values = _read_values(args.values)
    if args.kind == "halfline":
        path = halfline_step_interpolant(values, args.level)
    else:
        if len(values) != 2**args.level + 1:
            raise DomainError(f"level {args.level} needs {2**args.level + 1} values, got {len(values)}")
        path = linear_interpolant(values) if args.kind == "pl" else step_interpolant(values)
    for op, arg in getattr(args, "ops", None) or []:
        if op == "restrict":
            path = restrict(path, arg)
        else:
            path = taper(path, arg)
    if args.output:
        write_path(path, args.output)
        print(f"Wrote {path.kind} path to {args.output}")
    else:
        print(path_to_json(path))
    return 0


def _parse_param(raw: str) -> tuple[str, object]:
    from pathspace.errors import DomainError

    key, sep, value = raw.partition("=")
    if not sep or not key:
        raise DomainError(f"expected KEY=VALUE, got {raw!r}")
    try:
        return key, float(value)
    except ValueError:
        return key, value


def _run_sample(args: argparse.Namespace) -> int:
    from pathspace.processes import SamplerRegistry, write_fdd_csv

    times = [float(t) for t in args.times.split(",") if t.strip()]
    params = dict(_parse_param(p) for p in args.param)
    sampler = SamplerRegistry.get(args.process, seed=args.seed, **params)
    fdd = sampler.sample_fdd(times, args.n)
    write_fdd_csv(fdd, args.output)
    print(f"Wrote {fdd.size} draws at {len(times)} times to {args.output}")
    return 0


def _run_fit(args: argparse.Namespace) -> int:
    import numpy as np

    from pathspace.processes import FitSettings, fit_phi, read_fdd_csv
    from pathspace.prokhorov import write_measure_csv

    fdd = read_fdd_csv(args.fdd)
    settings = FitSettings(budget=args.budget, bootstrap_resamples=args.bootstrap)
    rng = np.random.default_rng(np.random.SeedSequence(args.seed))
    member = fit_phi(fdd, args.eps, settings=settings, rng=rng)
    write_measure_csv(member.measure, args.output)
    print(
        f"Wrote law with {member.support_size} atoms to {args.output} "
        f"(estimate {member.estimate:.4f}, margin {member.margin:.4f})"
    )
    return 0


def _run_experiment(args: argparse.Namespace) -> int:
    from pathspace.harness import ExperimentConfig, emit_report, run_experiment

    cfg = ExperimentConfig.from_file(args.config)
    updates = {}
    workers = args.workers if args.workers is not None else os.environ.get("PATHSPACE_WORKERS")
    if workers is not None:
        updates["workers"] = int(workers)
    if args.timing:
        updates["record_timing"] = True
    if updates:
        cfg = cfg.model_copy(update=updates)
    report = run_experiment(cfg)
    emit_report(report, args.format, args.out)
    flagged = [lr.level for lr in report.levels if lr.flagged]
    print(f"Wrote {len(report.levels)} levels to {args.out}" + (f" (flagged levels: {flagged})" if flagged else ""))
    return 2 if flagged else 0


if __name__ == "__main__":
    main()
