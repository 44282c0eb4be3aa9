"""Step, piecewise-linear and tapered paths plus time changes."""

from pathspace.paths.grid import DyadicGrid
from pathspace.paths.io import path_from_json, path_to_json, read_path, write_path
from pathspace.paths.linear import PiecewiseLinearPath
from pathspace.paths.ops import Path, apply_reparam, restrict_path
from pathspace.paths.reparam import Reparametrization
from pathspace.paths.step import StepPath
from pathspace.paths.taper import TaperedPath

__all__ = [
    "DyadicGrid",
    "Path",
    "PiecewiseLinearPath",
    "Reparametrization",
    "StepPath",
    "TaperedPath",
    "apply_reparam",
    "path_from_json",
    "path_to_json",
    "read_path",
    "restrict_path",
    "write_path",
]
