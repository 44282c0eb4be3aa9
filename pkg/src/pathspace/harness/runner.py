"""Monte-Carlo convergence experiments for dyadic approximants."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

import numpy as np

from pathspace.approximators import interpolate_many
from pathspace.errors import FitBudgetExhausted
from pathspace.harness.config import ExperimentConfig
from pathspace.harness.models import ConvergenceReport, LevelResult, ProbeResult, TightnessResult
from pathspace.processes import (
    EmpiricalFdd,
    PhiMember,
    bootstrap_upper,
    derived_statistic_closeness,
    fit_phi,
    grid_times,
)
from pathspace.processes.statistics import StatisticReport
from pathspace.prokhorov import DiscreteMeasure, prokhorov_value

logger = logging.getLogger(__name__)

_SCHEME = {"C01": "pl", "D01": "step", "Dinf": "halfline"}

# stream ids within one (seed, level, replica)
_POOL, _STATS, _PROBES = 0, 1, 2


def _replica_seed(cfg: ExperimentConfig, level: int, replica: int) -> int:
    return int(np.random.SeedSequence([cfg.seed, level, replica]).generate_state(1)[0])


def _fit(cfg: ExperimentConfig, level: int, pool: EmpiricalFdd, stats_ref: EmpiricalFdd, rng) -> tuple[PhiMember, str]:
    extra = (
        (lambda member: derived_statistic_closeness(member, stats_ref, level, cfg.space).max_rho)
        if cfg.check_statistics
        else None
    )
    try:
        return fit_phi(pool, cfg.eps_for(level), settings=cfg.fit, rng=rng, extra_check=extra), ""
    except FitBudgetExhausted as e:
        logger.warning("level %d: %s (best estimate %.4f + %.4f)", level, e, e.best_estimate, e.best_margin)
        return e.member, str(e)


def _probe(cfg: ExperimentConfig, level: int, member: PhiMember, probes: list[float], sampler, rng) -> ProbeResult:
    values = interpolate_many(member.measure.atoms, probes, _SCHEME[cfg.space], level)
    fitted = DiscreteMeasure(values, member.measure.weights)
    reference = sampler.sample_fdd(probes, cfg.reference_draws)
    rho_hat = prokhorov_value(fitted, reference.to_measure())
    hi = bootstrap_upper(
        fitted, reference.samples, rho_hat, cfg.fit.bootstrap_resamples, cfg.fit.bootstrap_quantile, rng
    )
    return ProbeResult(probe_set=probes, rho_hat=rho_hat, rho_boot_hi=hi)


def _replica(cfg: ExperimentConfig, level: int, replica: int) -> tuple[PhiMember, str, StatisticReport, list[ProbeResult]]:
    seed = _replica_seed(cfg, level, replica)
    rng = np.random.default_rng(np.random.SeedSequence([seed, 99]))
    times = grid_times(level, cfg.space)
    pool = cfg.target.build(seed, _POOL).sample_fdd(times, cfg.fit.pool_size())
    stats_ref = cfg.target.build(seed, _STATS).sample_fdd(times, cfg.fit.reference_factor * cfg.fit.budget)
    member, note = _fit(cfg, level, pool, stats_ref, rng)
    stats = derived_statistic_closeness(member, stats_ref, level, cfg.space)
    probes = [
        _probe(cfg, level, member, p, cfg.target.build(seed, _PROBES + k), rng)
        for k, p in enumerate(cfg.probe_sets())
    ]
    return member, note, stats, probes


def _max_opt(values) -> Optional[float]:
    kept = [v for v in values if v is not None]
    return max(kept) if kept else None


def run_level(cfg: ExperimentConfig, level: int) -> LevelResult:
    """All replicas of one level, aggregated: mean rho_hat, worst bootstrap bound and statistics."""
    started = time.perf_counter()
    runs = [_replica(cfg, level, r) for r in range(cfg.replicas)]
    members = [r[0] for r in runs]
    notes = [r[1] for r in runs if r[1]]
    stats = [r[2] for r in runs]
    probes = []
    for k, p in enumerate(cfg.probe_sets()):
        per = [r[3][k] for r in runs]
        probes.append(
            ProbeResult(
                probe_set=p,
                rho_hat=float(np.mean([x.rho_hat for x in per])),
                rho_boot_hi=max(x.rho_boot_hi for x in per),
            )
        )
    tightness = []
    for i, row in enumerate(stats[0].rows):
        rows = [s.rows[i] for s in stats]
        tightness.append(
            TightnessResult(
                m=row.m,
                delta=row.delta,
                modulus_rho=_max_opt(r.modulus_rho for r in rows),
                two_sided_rho=_max_opt(r.two_sided_rho for r in rows),
                start_rho=_max_opt(r.start_rho for r in rows),
                end_rho=_max_opt(r.end_rho for r in rows),
            )
        )
    millis = int((time.perf_counter() - started) * 1000) if cfg.record_timing else 0
    result = LevelResult(
        level=level,
        eps=cfg.eps_for(level),
        fit_support=max(m.support_size for m in members),
        fit_estimate=max(m.estimate for m in members),
        fit_margin=max(m.margin for m in members),
        probes=probes,
        tightness=tightness,
        sup_rho=max(s.sup_rho for s in stats),
        increments_rho=_max_opt(s.increments_rho for s in stats),
        millis=millis,
        flagged=bool(notes),
        note="; ".join(notes),
    )
    logger.info(
        "level %d: support %d, rho_hat %s%s",
        level,
        result.fit_support,
        [round(p.rho_hat, 4) for p in probes],
        " (flagged)" if result.flagged else "",
    )
    return result


def run_experiment(cfg: ExperimentConfig) -> ConvergenceReport:
    """Run every level (in parallel when workers > 1) and merge the results in level order."""
    logger.info("experiment %s: %s target on %s, levels %s", cfg.name, cfg.target.kind, cfg.space, cfg.levels)
    if cfg.workers > 1 and len(cfg.levels) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(run_level, [cfg] * len(cfg.levels), cfg.levels))
    else:
        results = [run_level(cfg, level) for level in cfg.levels]
    return ConvergenceReport(name=cfg.name, space=cfg.space, seed=cfg.seed, levels=results)
