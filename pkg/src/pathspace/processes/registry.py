"""Registry for discovering and instantiating samplers."""

from typing import Type

from pathspace.errors import DomainError
from pathspace.processes.base import BaseSampler
from pathspace.processes.brownian import BrownianSampler
from pathspace.processes.deterministic import DeterministicSampler
from pathspace.processes.poisson import CompoundPoissonSampler, PoissonSampler


class SamplerRegistry:
    """Discovers and provides process samplers."""

    _samplers: dict[str, Type[BaseSampler]] = {
        "brownian": BrownianSampler,
        "poisson": PoissonSampler,
        "compound-poisson": CompoundPoissonSampler,
        "deterministic": DeterministicSampler,
    }

    @classmethod
    def get(cls, kind: str, **kwargs) -> BaseSampler:
        """Get a sampler for the given process kind. kwargs passed to the sampler __init__."""
        sampler_cls = cls._samplers.get(kind.lower())
        if not sampler_cls:
            raise DomainError(f"Unknown process: {kind}. Available: {list(cls._samplers.keys())}")
        return sampler_cls(**kwargs)

    @classmethod
    def available_kinds(cls) -> list[str]:
        """Return list of available process kinds."""
        return list(cls._samplers.keys())
