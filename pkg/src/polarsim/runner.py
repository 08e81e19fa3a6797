"""Experiment orchestration: single runs, (p, k) sweeps, region labels, comparison.

Every random stream comes from ``SeedSequence(master_seed, spawn_key=key)``
with a tagged integer key, so results do not depend on execution order or
worker count.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from . import baseline
from .config import ExperimentConfig
from .dynamics import DynamicsParams, Trajectory, run_replay
from .hawkes import EventSequence, HawkesParams, generate_events, sample_params
from .metrics import polarization, two_cluster
from .network import SocialGraph, generate_ba

log = logging.getLogger(__name__)

CONSENSUS, POLARIZED, FROZEN, MIXED = "consensus", "polarized", "frozen", "mixed"
REGIONS = (CONSENSUS, POLARIZED, FROZEN, MIXED)

_WORLD, _RUN, _RUN_WORLD = 0, 1, 2


def stream(master_seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=key))


@dataclass(frozen=True)
class World:
    graph: SocialGraph
    params: HawkesParams
    events: EventSequence


def build_world(config: ExperimentConfig, rng: np.random.Generator) -> World:
    graph = generate_ba(config.n_nodes, config.ba_m, rng)
    params = sample_params(graph, rng)
    events = generate_events(params, graph, config.window_length, rng, max_events=config.max_events)
    return World(graph, params, events)


def draw_initial(config: ExperimentConfig, rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(config.initial_low, config.initial_high, config.n_nodes)


def simulate(config: ExperimentConfig, p: float, k: float) -> tuple[World, Trajectory]:
    """One trajectory with world and run streams taken from ``config.seed``."""
    world = build_world(config, stream(config.seed, _WORLD))
    rng = stream(config.seed, _RUN)
    initial = draw_initial(config, rng)
    traj = run_replay(world.graph, world.events, initial, DynamicsParams(p, k, config.c), rng)
    return world, traj


@dataclass(frozen=True)
class RunRecord:
    index: float
    spread: float
    mean_change: float
    n_events: int
    two_cluster: bool


@dataclass
class CellResult:
    p: float
    k: float
    runs: list[RunRecord]
    region: str = MIXED

    @property
    def indices(self) -> np.ndarray:
        return np.array([r.index for r in self.runs])

    @property
    def mean_index(self) -> float:
        return float(np.mean(self.indices))

    @property
    def std_index(self) -> float:
        return float(np.std(self.indices))

    @property
    def mean_spread(self) -> float:
        return float(np.mean([r.spread for r in self.runs]))

    @property
    def mean_change(self) -> float:
        return float(np.mean([r.mean_change for r in self.runs]))

    def as_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "k": self.k,
            "mean_index": self.mean_index,
            "std_index": self.std_index,
            "mean_spread": self.mean_spread,
            "mean_change": self.mean_change,
            "region": self.region,
            "runs": [r.__dict__ for r in self.runs],
        }


def classify_region(
    mean_index: float,
    mean_spread: float,
    mean_change: float,
    config: ExperimentConfig = ExperimentConfig(),
) -> str:
    """First match wins: consensus, polarized, frozen, else mixed."""
    if mean_index < config.consensus_index and mean_spread < config.consensus_spread:
        return CONSENSUS
    if mean_index > config.polarized_index:
        return POLARIZED
    if mean_change < config.frozen_change:
        return FROZEN
    return MIXED


def _record(config: ExperimentConfig, traj: Trajectory, n_events: int) -> RunRecord:
    final = traj.final
    return RunRecord(
        index=polarization(final, config.n_classes, config.theta),
        spread=float(np.ptp(final)),
        mean_change=float(np.mean(np.abs(final - traj.initial))),
        n_events=n_events,
        two_cluster=two_cluster(final),
    )


def run_cell(config: ExperimentConfig, p: float, k: float, p_idx: int = 0, k_idx: int = 0) -> CellResult:
    """All runs of one (p, k) cell.

    In ``opinions-only`` mode the graph and post stream are drawn once per
    cell and only the initial opinions (and reaction draws) vary per run;
    ``full`` mode redraws everything per run.
    """
    dyn = DynamicsParams(p, k, config.c)
    shared = None
    if config.resample_mode == "opinions-only":
        shared = build_world(config, stream(config.seed, _WORLD, p_idx, k_idx))
    runs = []
    for r in range(config.runs_per_cell):
        world = shared or build_world(config, stream(config.seed, _RUN_WORLD, p_idx, k_idx, r))
        rng = stream(config.seed, _RUN, p_idx, k_idx, r)
        initial = draw_initial(config, rng)
        traj = run_replay(world.graph, world.events, initial, dyn, rng, log_reactions=False)
        runs.append(_record(config, traj, len(world.events)))
    cell = CellResult(p, k, runs)
    cell.region = classify_region(cell.mean_index, cell.mean_spread, cell.mean_change, config)
    return cell


def _cell_task(args: tuple[ExperimentConfig, int, int]) -> CellResult:
    config, i, j = args
    return run_cell(config, config.p_grid[i], config.k_grid[j], i, j)


@dataclass
class SweepResult:
    config: ExperimentConfig
    cells: list[CellResult] = field(default_factory=list)

    def cell(self, p: float, k: float) -> CellResult:
        for c in self.cells:
            if np.isclose(c.p, p) and np.isclose(c.k, k):
                return c
        raise KeyError((p, k))

    def region_means(self) -> dict[str, float]:
        out = {}
        for region in REGIONS:
            vals = [c.mean_index for c in self.cells if c.region == region]
            if vals:
                out[region] = float(np.mean(vals))
        return out

    def to_csv(self) -> str:
        lines = ["p,k,mean_index,std_index,region"]
        lines += [f"{c.p:.6f},{c.k:.6f},{c.mean_index:.6f},{c.std_index:.6f},{c.region}" for c in self.cells]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "seed": self.config.seed,
            "config": self.config.as_dict(),
            "cells": [c.as_dict() for c in self.cells],
        }
        return json.dumps(doc, indent=2) + "\n"


def run_sweep(config: ExperimentConfig, workers: int = 1) -> SweepResult:
    """Evaluate every (p, k) cell; output order is ascending p, then k."""
    tasks = [(config, i, j) for i in range(len(config.p_grid)) for j in range(len(config.k_grid))]
    log.info("sweep: %d cells x %d runs, %d worker(s)", len(tasks), config.runs_per_cell, workers)
    if workers <= 1:
        cells = [_cell_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_cell_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    return SweepResult(config, cells)


@dataclass
class Comparison:
    graph: SocialGraph
    initial: np.ndarray
    baseline_states: np.ndarray
    proposed: Trajectory
    p: float
    k: float

    def summary(self, config: ExperimentConfig) -> dict[str, Any]:
        def entry(label: str, final: np.ndarray) -> dict[str, Any]:
            return {
                "label": label,
                "final_index": polarization(final, config.n_classes, config.theta),
                "final_spread": float(np.ptp(final)),
                "final_min": float(final.min()),
                "final_max": float(final.max()),
            }

        return {
            "seed": config.seed,
            "initial_range": [config.initial_low, config.initial_high],
            "baseline": entry(baseline.LABEL, self.baseline_states[-1]),
            "proposed": {**entry("proposed", self.proposed.final), "p": self.p, "k": self.k},
        }


def compare_models(
    config: ExperimentConfig,
    p: float = 0.1,
    k: float = 2.0,
    baseline_params: baseline.BaselineParams | None = None,
) -> Comparison:
    """Run the baseline and the proposed model from one shared initial state.

    Callers wanting the same-sign setup pass a config with
    ``initial_low=0, initial_high=1``.
    """
    world = build_world(config, stream(config.seed, _WORLD))
    rng = stream(config.seed, _RUN)
    initial = draw_initial(config, rng)
    bparams = baseline_params or baseline.BaselineParams.default_for(world.graph)
    states = baseline.run_baseline(world.graph, initial, bparams)
    traj = run_replay(world.graph, world.events, initial, DynamicsParams(p, k, config.c), rng)
    return Comparison(world.graph, initial, states, traj, p, k)


def baseline_csv(states: np.ndarray) -> str:
    lines = ["time,user,opinion"]
    for t, row in enumerate(states):
        lines += [f"{t:.6f},{u},{o:.6f}" for u, o in enumerate(row)]
    return "\n".join(lines) + "\n"


def write_text(out_dir: Path, name: str, text: str) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    path.write_text(text)
    return path
