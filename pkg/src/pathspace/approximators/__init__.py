"""Dyadic interpolants and the operations applied to them."""

from pathspace.approximators.interpolants import (
    InterpolationWeights,
    halfline_step_interpolant,
    interpolate_many,
    interpolation_weights,
    linear_interpolant,
    step_interpolant,
)
from pathspace.approximators.series import PaddedSeries, pad_time_series
from pathspace.approximators.transforms import (
    SnapIdentity,
    grid_snap_sup_identity_check,
    restrict,
    taper,
)

__all__ = [
    "InterpolationWeights",
    "PaddedSeries",
    "SnapIdentity",
    "grid_snap_sup_identity_check",
    "halfline_step_interpolant",
    "interpolate_many",
    "interpolation_weights",
    "linear_interpolant",
    "pad_time_series",
    "restrict",
    "step_interpolant",
    "taper",
]
