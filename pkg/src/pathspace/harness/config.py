"""Experiment configuration."""

import math
from pathlib import Path
from typing import Literal, Optional

try:
    import yaml
except ModuleNotFoundError as e:
    raise ModuleNotFoundError(
        "PyYAML is required for config loading. Run: pip install -e ."
    ) from e
from pydantic import BaseModel, Field, field_validator, model_validator

from pathspace.errors import DomainError
from pathspace.processes.fitting import FitSettings
from pathspace.processes.spec import SamplerSpec
from pathspace.processes.statistics import Space

DEFAULT_OFFSET = 2.0**-20


class ExperimentConfig(BaseModel):
    """Convergence experiment: target process, path space, levels and probe sets."""

    name: str = Field(default="experiment")
    target: SamplerSpec
    space: Space
    levels: list[int] = Field(..., min_length=1)
    fdd_times: list[list[float]] = Field(..., min_length=1, description="Probe sets")
    replicas: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0)
    eps_schedule: Literal["inverse"] | list[float] = Field(
        default="inverse",
        description="'inverse' for eps_n = 1/n, or one eps per level",
    )
    fit: FitSettings = Field(default_factory=FitSettings)
    reference_size: Optional[int] = Field(default=None, ge=1, description="default max(10 * budget, 10000)")
    probe_offset: float = Field(default=DEFAULT_OFFSET, gt=0.0)
    snap_probes: bool = True
    restrict_at: float = Field(default=1.5 + DEFAULT_OFFSET, gt=0.0)
    check_statistics: bool = True
    workers: int = Field(default=1, ge=1)
    record_timing: bool = False

    @field_validator("fdd_times", mode="before")
    @classmethod
    def _nest_single_set(cls, v):
        if isinstance(v, list) and v and not isinstance(v[0], list):
            return [v]
        return v

    @field_validator("levels")
    @classmethod
    def _increasing_levels(cls, v: list[int]) -> list[int]:
        if any(n < 1 for n in v) or any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("levels must be >= 1 and strictly increasing")
        return v

    @model_validator(mode="after")
    def _consistent(self) -> "ExperimentConfig":
        if isinstance(self.eps_schedule, list):
            if len(self.eps_schedule) != len(self.levels) or any(e <= 0 for e in self.eps_schedule):
                raise ValueError("eps_schedule needs one positive eps per level")
        upper = self.probe_horizon
        for probes in self.fdd_times:
            if not probes or any(b <= a for a, b in zip(probes, probes[1:])):
                raise ValueError(f"probe set {probes} must be non-empty and strictly increasing")
            if probes[0] < 0 or probes[-1] > upper:
                raise ValueError(f"probe set {probes} outside [0, {upper}]")
        return self

    @property
    def probe_horizon(self) -> float:
        return self.restrict_at if self.space == "Dinf" else 1.0

    @property
    def reference_draws(self) -> int:
        return self.reference_size or max(10 * self.fit.budget, 10_000)

    def eps_for(self, level: int) -> float:
        if self.eps_schedule == "inverse":
            return 1.0 / level
        return float(self.eps_schedule[self.levels.index(level)])

    def probe_sets(self) -> list[list[float]]:
        """
        Probe sets used for the fdd comparison. In D01 and Dinf, probes on the finest
        dyadic grid are shifted right by probe_offset (continuity points of the limit).
        """
        if self.space == "C01":
            return [list(p) for p in self.fdd_times]
        scale = 2 ** max(self.levels)
        out = []
        for probes in self.fdd_times:
            shifted = []
            for t in probes:
                on_grid = t * scale == math.floor(t * scale)
                if on_grid and t > 0:
                    if not self.snap_probes:
                        raise DomainError(f"probe {t} lies on the dyadic grid; enable snap_probes or move it")
                    t = min(t + self.probe_offset, self.probe_horizon)
                shifted.append(t)
            out.append(shifted)
        return out

    @classmethod
    def from_file(cls, path: str | Path) -> "ExperimentConfig":
        """Load from YAML or JSON. Probe settings may sit under a `probes` section."""
        data = yaml.safe_load(Path(path).read_text()) or {}
        probes = data.pop("probes", {}) or {}

        def _get(key: str, nested: dict, top: dict, default=None):
            return nested.get(key, top.get(key, default))

        flat = dict(data)
        for key, alias in (("fdd_times", "times"), ("probe_offset", "offset"), ("snap_probes", "snap")):
            value = _get(alias, probes, data, _get(key, probes, data))
            if value is not None:
                flat[key] = value
        return cls.model_validate(flat)
