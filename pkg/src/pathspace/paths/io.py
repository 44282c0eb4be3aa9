"""JSON encoding of paths: {"kind", "horizon", "knots", "values"} with 17 significant digits."""

import json
import math
from pathlib import Path as FsPath
from typing import Any

from pathspace.errors import DomainError
from pathspace.paths.grid import DyadicGrid
from pathspace.paths.linear import PiecewiseLinearPath
from pathspace.paths.ops import Path
from pathspace.paths.step import StepPath
from pathspace.paths.taper import TaperedPath


def format_number(v: float) -> str:
    """Decimal text with 17 significant digits; infinities as the JSON strings "Infinity" / "-Infinity"."""
    v = float(v)
    if math.isinf(v):
        return '"Infinity"' if v > 0 else '"-Infinity"'
    if math.isnan(v):
        raise DomainError("cannot encode NaN")
    return format(v, ".17g")


def _parse_num(v: Any) -> float:
    if isinstance(v, str):
        return float(v.replace("Infinity", "inf"))
    return float(v)


def _dumps(obj: Any) -> str:
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_dumps(v) for v in obj) + "]"
    if isinstance(obj, float):
        return format_number(obj)
    return json.dumps(obj)


def path_to_dict(x: Path) -> dict[str, Any]:
    """Plain dict form; floats stay floats until `path_to_json` formats them."""
    if isinstance(x, StepPath):
        out: dict[str, Any] = {
            "kind": "step",
            "horizon": float(x.horizon),
            "knots": [float(v) for v in x.breakpoints],
            "values": [float(v) for v in x.values],
        }
    elif isinstance(x, PiecewiseLinearPath):
        out = {
            "kind": "pl",
            "horizon": float(x.horizon),
            "knots": [float(v) for v in x.knots()],
            "values": [float(v) for v in x.values],
        }
    elif isinstance(x, TaperedPath):
        return {"kind": "taper", "horizon": float(x.horizon), "m": x.m, "base": path_to_dict(x.base)}
    else:
        raise DomainError(f"cannot encode {type(x).__name__}")
    if x.grid is not None:
        out["grid_level"] = x.grid.level
    return out


def path_from_dict(data: dict[str, Any]) -> Path:
    """Inverse of `path_to_dict`; step paths also accept "breakpoints" for "knots"."""
    kind = data.get("kind")
    try:
        if kind == "step":
            horizon = _parse_num(data["horizon"])
            knots = data["knots"] if "knots" in data else data["breakpoints"]
            grid = (
                DyadicGrid(int(data["grid_level"]), horizon)
                if "grid_level" in data and math.isfinite(horizon)
                else None
            )
            return StepPath([_parse_num(v) for v in knots], [_parse_num(v) for v in data["values"]], horizon, grid)
        if kind == "pl":
            knots = [_parse_num(v) for v in data["knots"]]
            if "horizon" in data and knots and _parse_num(data["horizon"]) != knots[-1]:
                raise DomainError(f"pl horizon {data['horizon']} differs from last knot {knots[-1]}")
            grid = DyadicGrid(int(data["grid_level"]), knots[-1]) if "grid_level" in data else None
            return PiecewiseLinearPath(knots, [_parse_num(v) for v in data["values"]], grid)
        if kind == "taper":
            base = path_from_dict(data["base"])
            return TaperedPath(base, int(data["m"]))  # type: ignore[arg-type]
    except KeyError as e:
        raise DomainError(f"path JSON missing field {e}") from e
    raise DomainError(f"unknown path kind: {kind!r}")


def path_to_json(x: Path) -> str:
    return _dumps(path_to_dict(x))


def path_from_json(text: str) -> Path:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DomainError(f"invalid path JSON: {e}") from e
    return path_from_dict(data)


def read_path(path: str | FsPath) -> Path:
    return path_from_json(FsPath(path).read_text())


def write_path(x: Path, path: str | FsPath) -> FsPath:
    out = FsPath(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(path_to_json(x))
    return out
