"""Result records of convergence experiments."""

from typing import Optional

from pydantic import BaseModel, Field

CSV_HEADER = [
    "level",
    "probe_set",
    "rho_hat",
    "rho_boot_hi",
    "delta_m",
    "modulus_rho",
    "two_sided_rho",
    "sup_rho",
    "fit_support",
    "millis",
]


class ProbeResult(BaseModel):
    """Fdd distance between approximant and target at one probe set."""

    probe_set: list[float]
    rho_hat: float
    rho_boot_hi: float

    @property
    def label(self) -> str:
        return ";".join(repr(t) for t in self.probe_set)


class TightnessResult(BaseModel):
    """Statistic-law distances at delta = 2**-m."""

    m: int
    delta: float
    modulus_rho: Optional[float] = None
    two_sided_rho: Optional[float] = None
    start_rho: Optional[float] = None
    end_rho: Optional[float] = None


class LevelResult(BaseModel):
    level: int
    eps: float
    fit_support: int
    fit_estimate: float
    fit_margin: float
    probes: list[ProbeResult]
    tightness: list[TightnessResult] = Field(default_factory=list)
    sup_rho: Optional[float] = None
    increments_rho: Optional[float] = None
    millis: int = 0
    flagged: bool = False
    note: str = ""


class ConvergenceReport(BaseModel):
    """Per-level results of an experiment, in level order."""

    name: str
    space: str
    seed: int
    levels: list[LevelResult] = Field(default_factory=list)

    @property
    def flagged(self) -> bool:
        return any(level.flagged for level in self.levels)

    def csv_rows(self) -> list[list[str]]:
        """One row per (level, probe set, delta_m); delta columns stay empty at level 1."""

        def fmt(v) -> str:
            return "" if v is None else repr(float(v))

        rows = []
        for lr in self.levels:
            tight = lr.tightness or [None]
            for probe in lr.probes:
                for t in tight:
                    rows.append(
                        [
                            str(lr.level),
                            probe.label,
                            fmt(probe.rho_hat),
                            fmt(probe.rho_boot_hi),
                            fmt(t.delta if t else None),
                            fmt(t.modulus_rho if t else None),
                            fmt(t.two_sided_rho if t else None),
                            fmt(lr.sup_rho),
                            str(lr.fit_support),
                            str(lr.millis),
                        ]
                    )
        return rows
