"""
Adaptive fitting of finitely supported grid laws to a target sample.

A candidate is the empirical measure of M target draws. Its Prokhorov distance to
the target law is estimated against a disjoint reference sample of the target,
with a bootstrap upper quantile as margin; M doubles until the upper quantile
falls below eps or the support budget is spent.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, Field

from pathspace.errors import DomainError, FitBudgetExhausted
from pathspace.processes.fdd import EmpiricalFdd
from pathspace.prokhorov import DiscreteMeasure, prokhorov_value

logger = logging.getLogger(__name__)


class FitSettings(BaseModel):
    """Sizes of the adaptive fit."""

    initial_support: int = Field(default=32, ge=1)
    budget: int = Field(default=512, ge=1)
    reference_factor: int = Field(default=4, ge=1)
    bootstrap_resamples: int = Field(default=200, ge=0)
    bootstrap_quantile: float = Field(default=0.95, gt=0.0, lt=1.0)
    growth: int = Field(default=2, ge=2)

    def pool_size(self) -> int:
        """Target draws needed for the largest candidate plus its reference sample."""
        return self.budget * (1 + self.reference_factor)


@dataclass(frozen=True, eq=False)
class PhiMember:
    """A fitted grid law: atoms are grid vectors observed at `times`."""

    measure: DiscreteMeasure
    times: np.ndarray
    estimate: float = 0.0
    margin: float = 0.0

    @property
    def support_size(self) -> int:
        return self.measure.support_size

    @property
    def upper(self) -> float:
        return self.estimate + self.margin


def bootstrap_upper(
    candidate: DiscreteMeasure,
    reference: np.ndarray,
    estimate: float,
    resamples: int,
    quantile: float,
    rng: np.random.Generator,
) -> float:
    """Upper bootstrap quantile of the distance from candidate to resampled references."""
    if resamples == 0:
        return estimate
    n = reference.shape[0]
    draws = [
        prokhorov_value(candidate, DiscreteMeasure.from_samples(reference[rng.integers(0, n, n)]))
        for _ in range(resamples)
    ]
    return max(estimate, float(np.quantile(draws, quantile)))


def fit_phi(
    target: EmpiricalFdd,
    eps: float,
    budget: Optional[int] = None,
    settings: Optional[FitSettings] = None,
    rng: Optional[np.random.Generator] = None,
    extra_check: Optional[Callable[[PhiMember], float]] = None,
) -> PhiMember:
    """
    Fit a law with support <= budget whose estimated distance to the target is below eps.

    A target sample with at most `budget` distinct rows is returned as is. extra_check,
    when given, must also come out below eps (used for the derived path statistics).
    Raises FitBudgetExhausted carrying the best candidate when the budget runs out.
    """
    settings = settings or FitSettings()
    budget = budget if budget is not None else settings.budget
    rng = rng if rng is not None else np.random.default_rng()
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    if budget < 1:
        raise DomainError(f"budget must be >= 1, got {budget}")

    if eps > 1.0:
        # every law is within distance 1
        return PhiMember(DiscreteMeasure.dirac(target.samples[0]), target.times, 1.0, 0.0)
    law = target.to_measure()
    if law.support_size <= budget:
        logger.info("target sample has %d distinct draws; using it as is", law.support_size)
        return PhiMember(law, target.times)

    order = rng.permutation(target.size)
    support = min(settings.initial_support, budget)
    best: Optional[PhiMember] = None
    while True:
        ref_n = min(settings.reference_factor * support, target.size - support)
        if ref_n < 1:
            raise DomainError(f"target sample of {target.size} draws too small for support {support}")
        candidate = DiscreteMeasure.from_samples(target.samples[order[:support]])
        reference = target.samples[order[support : support + ref_n]]
        estimate = prokhorov_value(candidate, DiscreteMeasure.from_samples(reference))
        upper = bootstrap_upper(
            candidate, reference, estimate, settings.bootstrap_resamples, settings.bootstrap_quantile, rng
        )
        member = PhiMember(candidate, target.times, estimate, upper - estimate)
        extra = extra_check(member) if extra_check is not None and upper < eps else None
        logger.info(
            "fit support=%d estimate=%.4f upper=%.4f extra=%s eps=%.4f",
            support,
            estimate,
            upper,
            "-" if extra is None else f"{extra:.4f}",
            eps,
        )
        if best is None or member.upper < best.upper:
            best = member
        if upper < eps and (extra is None or extra < eps):
            return member
        if support >= budget:
            break
        support = min(budget, support * settings.growth)
    raise FitBudgetExhausted(
        f"no candidate within eps={eps} up to support {budget}",
        best_estimate=best.estimate,
        best_margin=best.margin,
        member=best,
    )
