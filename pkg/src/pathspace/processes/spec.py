"""Declarative sampler description used by experiment configs."""

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from pathspace.paths.io import path_from_dict
from pathspace.processes.base import BaseSampler
from pathspace.processes.registry import SamplerRegistry


class SamplerSpec(BaseModel):
    """Process kind plus its parameters, e.g. {kind: poisson, params: {rate: 2.0}}."""

    kind: Literal["brownian", "poisson", "compound-poisson", "deterministic"]
    params: dict[str, Any] = Field(default_factory=dict)

    def build(self, seed: Optional[int] = None, stream_id: int = 0) -> BaseSampler:
        params = dict(self.params)
        if self.kind == "deterministic" and isinstance(params.get("path"), dict):
            params["path"] = path_from_dict(params["path"])
        return SamplerRegistry.get(self.kind, seed=seed, stream_id=stream_id, **params)
