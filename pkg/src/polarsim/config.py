"""Experiment configuration and the flat ``key = value`` config format."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

RESAMPLE_MODES = ("opinions-only", "full")


def _grid(start: float, stop: float, n: int) -> tuple[float, ...]:
    step = (stop - start) / (n - 1)
    return tuple(round(start + i * step, 10) for i in range(n))


@dataclass(frozen=True)
class ExperimentConfig:
    n_nodes: int = 10
    ba_m: int = 2
    window_length: float = 2.0
    p_grid: tuple[float, ...] = field(default_factory=lambda: _grid(0.0, 1.0, 11))
    k_grid: tuple[float, ...] = field(default_factory=lambda: _grid(1.0, 10.0, 10))
    c: float = 0.05
    runs_per_cell: int = 10
    n_classes: int = 10
    theta: float = 0.5
    seed: int = 0
    resample_mode: str = "opinions-only"
    initial_low: float = -1.0
    initial_high: float = 1.0
    # region classifier thresholds
    consensus_index: float = 0.05
    consensus_spread: float = 0.1
    polarized_index: float = 0.3
    frozen_change: float = 0.05
    max_events: int = 1_000_000

    def __post_init__(self):
        if not self.p_grid or not self.k_grid:
            raise ValueError("p_grid and k_grid must be nonempty")
        if any(not 0.0 <= p <= 1.0 for p in self.p_grid):
            raise ValueError("every p must lie in [0, 1]")
        if any(k <= 0 for k in self.k_grid):
            raise ValueError("every k must be positive")
        if self.c <= 0 or self.c * max(self.k_grid) > 1.0:
            raise ValueError(f"c*k must be <= 1 across the k grid (c={self.c}, max k={max(self.k_grid)})")
        if self.runs_per_cell < 1:
            raise ValueError("runs_per_cell must be >= 1")
        if self.resample_mode not in RESAMPLE_MODES:
            raise ValueError(f"resample_mode must be one of {RESAMPLE_MODES}")
        if not -1.0 <= self.initial_low <= self.initial_high <= 1.0:
            raise ValueError("initial opinion range must be a subinterval of [-1, 1]")
        if self.n_nodes <= self.ba_m or self.ba_m < 1:
            raise ValueError("need ba_m >= 1 and n_nodes > ba_m")
        if self.window_length <= 0:
            raise ValueError("window_length must be positive")
        if self.n_classes < 2:
            raise ValueError("n_classes must be >= 2")

    def replace(self, **changes: Any) -> "ExperimentConfig":
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict[str, Any]:
        d = dataclasses.asdict(self)
        d["p_grid"] = list(self.p_grid)
        d["k_grid"] = list(self.k_grid)
        return d


def _coerce(name: str, raw: str) -> Any:
    kind = {f.name: f.type for f in fields(ExperimentConfig)}[name]
    if name in ("p_grid", "k_grid"):
        return tuple(float(x) for x in raw.replace(",", " ").split())
    if kind == "int":
        return int(raw)
    if kind == "float":
        return float(raw)
    return raw


def parse_config_text(text: str) -> dict[str, Any]:
    known = {f.name for f in fields(ExperimentConfig)}
    values: dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, raw = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        values[key] = _coerce(key, raw)
    return values


def load_config(
    path: str | Path | None = None,
    base: dict[str, Any] | None = None,
    **overrides: Any,
) -> ExperimentConfig:
    """Defaults, then ``base``, then the file (if any), then non-None ``overrides``."""
    values = dict(base or {})
    if path:
        values.update(parse_config_text(Path(path).read_text()))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig(**values)


def dump_config(config: ExperimentConfig) -> str:
    lines = []
    for k, v in config.as_dict().items():
        if isinstance(v, list):
            v = ", ".join(repr(x) for x in v)
        lines.append(f"{k} = {v}")
    return "\n".join(lines) + "\n"
