"""Result record shared by the path metrics."""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from pathspace.paths.reparam import Reparametrization

_SLACK = 1e-12


class MetricReport(BaseModel):
    """A metric value with certified bounds and, where available, a witnessing time change."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    value: float
    lower_bound: float
    upper_bound: float
    witness: Optional[Reparametrization] = None

    @model_validator(mode="after")
    def _ordered(self) -> "MetricReport":
        if not (self.lower_bound - _SLACK <= self.value <= self.upper_bound + _SLACK):
            raise ValueError(
                f"bounds out of order: {self.lower_bound} <= {self.value} <= {self.upper_bound}"
            )
        return self

    @classmethod
    def exact(cls, value: float, witness: Optional[Reparametrization] = None) -> "MetricReport":
        return cls(value=value, lower_bound=value, upper_bound=value, witness=witness)

    @property
    def is_exact(self) -> bool:
        return self.lower_bound == self.upper_bound

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "value": self.value,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
        }
        if self.witness is not None:
            out["witness"] = {
                "knots": self.witness.knots.tolist(),
                "images": self.witness.images.tolist(),
            }
        return out
