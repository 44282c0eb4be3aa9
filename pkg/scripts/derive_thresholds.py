#!/usr/bin/env python3
"""Derive top-level rho_hat thresholds for the benchmark configs.

For each config the level-n approximant is sampled straight from independent
increments of the target (no fitting, no samplers from the package): `--draws`
atoms of the interpolant values at the probes against `--reference` exact draws.
The threshold is the upper quantile of that distance over `--replicas` runs.

Run:
  python scripts/derive_thresholds.py                         # all benchmark configs
  python scripts/derive_thresholds.py configs/poisson-d01-benchmark.yaml --replicas 200
"""

import argparse
import logging
from pathlib import Path

import numpy as np
import yaml

from pathspace.harness import ExperimentConfig
from pathspace.prokhorov import DiscreteMeasure, prokhorov_value

logger = logging.getLogger("derive_thresholds")

ROOT = Path(__file__).resolve().parent.parent
BENCHMARKS = [
    ROOT / "configs" / "brownian-c01-benchmark.yaml",
    ROOT / "configs" / "poisson-d01-benchmark.yaml",
    ROOT / "configs" / "compound-dinf-benchmark.yaml",
]


def _increments(kind: str, params: dict, dt: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray:
    if kind == "brownian":
        sigma, drift = params.get("sigma", 1.0), params.get("drift", 0.0)
        return drift * dt + sigma * np.sqrt(dt) * rng.standard_normal((n, dt.size))
    counts = rng.poisson(params.get("rate", 1.0) * dt, size=(n, dt.size))
    if kind == "poisson":
        return counts.astype(float)
    if kind != "compound-poisson":
        raise SystemExit(f"no straight-line simulation for target kind {kind!r}")
    jumps = np.zeros(counts.shape)
    for i, j in zip(*np.nonzero(counts)):
        k = counts[i, j]
        if params.get("jump_law", "normal") == "two-point":
            ups = rng.binomial(k, params.get("jump_prob", 0.5))
            jumps[i, j] = params.get("jump_size", 1.0) * (2 * ups - k)
        else:
            jumps[i, j] = rng.normal(params.get("jump_mean", 0.0), params.get("jump_std", 1.0), size=k).sum()
    return jumps


def _simulate(cfg: ExperimentConfig, times: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray:
    """Values at sorted times (times[0] == 0) of n independent target paths."""
    steps = _increments(cfg.target.kind, cfg.target.params, np.diff(times), n, rng)
    return np.hstack([np.zeros((n, 1)), np.cumsum(steps, axis=1)])


def _approximant_at(cfg: ExperimentConfig, probes: np.ndarray, level: int, n: int, rng) -> np.ndarray:
    d = 2**level
    left = np.floor(probes * d) / d
    right = np.minimum(left + 1.0 / d, 1.0) if cfg.space == "C01" else left
    times = np.unique(np.concatenate([[0.0], left, right]))
    paths = _simulate(cfg, times, n, rng)
    lo = paths[:, np.searchsorted(times, left)]
    if cfg.space != "C01":
        return lo
    hi = paths[:, np.searchsorted(times, right)]
    frac = (probes - left) * d
    return lo + frac * (hi - lo)


def _exact_at(cfg: ExperimentConfig, probes: np.ndarray, n: int, rng) -> np.ndarray:
    times = np.unique(np.concatenate([[0.0], probes]))
    return _simulate(cfg, times, n, rng)[:, np.searchsorted(times, probes)]


def derive(cfg: ExperimentConfig, replicas: int, reference: int, draws: int, quantile: float, seed: int) -> dict:
    rng = np.random.default_rng(np.random.SeedSequence([seed, cfg.seed]))
    level = max(cfg.levels)
    out = {}
    for probes in cfg.probe_sets():
        ts = np.asarray(probes, dtype=float)
        exact = DiscreteMeasure.from_samples(_exact_at(cfg, ts, reference, rng))
        values = []
        for r in range(replicas):
            approx = DiscreteMeasure.from_samples(_approximant_at(cfg, ts, level, draws, rng))
            values.append(prokhorov_value(approx, exact))
            if (r + 1) % 100 == 0:
                logger.info("%s %s: %d/%d replicas", cfg.name, probes, r + 1, replicas)
        label = ";".join(repr(t) for t in probes)
        out[label] = float(np.quantile(values, quantile))
        logger.info("%s level %d probes %s: threshold %.4f", cfg.name, level, label, out[label])
    return {"level": level, "thresholds": out}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("configs", nargs="*", type=Path, default=BENCHMARKS)
    parser.add_argument("--replicas", type=int, default=2000)
    parser.add_argument("--reference", type=int, default=10_000)
    parser.add_argument("--draws", type=int, default=None, help="atoms per replica (default: the config's fit budget)")
    parser.add_argument("--quantile", type=float, default=0.95)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", type=Path, default=ROOT / "configs" / "thresholds.yaml")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    results = {}
    for path in args.configs:
        cfg = ExperimentConfig.from_file(path)
        draws = args.draws or cfg.fit.budget
        results[cfg.name] = derive(cfg, args.replicas, args.reference, draws, args.quantile, args.seed)
    results["_settings"] = {
        "replicas": args.replicas,
        "reference": args.reference,
        "quantile": args.quantile,
        "seed": args.seed,
    }
    args.out.write_text(yaml.safe_dump(results, sort_keys=False))
    print(f"Wrote thresholds for {len(args.configs)} configs to {args.out}")


if __name__ == "__main__":
    main()
