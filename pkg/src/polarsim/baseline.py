"""Sign-conditioned baseline: a DeGroot-style model where 0 is absolute neutral.

Same-sign neighbors pull each other together (biased assimilation) and
opposite-sign neighbors push each other apart (backfire). This is the
minimal model with that behavior, not a port of any published update rule.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import SocialGraph

LABEL = "sign-conditioned baseline"


@dataclass(frozen=True)
class BaselineParams:
    eta: float
    backfire_gain: float = 1.0
    iterations: int = 100

    def __post_init__(self):
        if not self.eta > 0:
            raise ValueError(f"eta must be positive, got {self.eta}")
        if self.backfire_gain < 0:
            raise ValueError(f"backfire_gain must be >= 0, got {self.backfire_gain}")
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")

    @classmethod
    def default_for(cls, graph: SocialGraph, **overrides) -> "BaselineParams":
        eta = overrides.pop("eta", 0.5 / max(graph.max_degree, 1))
        return cls(eta=eta, **overrides)


def _edge_arrays(graph: SocialGraph) -> tuple[np.ndarray, np.ndarray]:
    rows = np.array([i for i in range(graph.n_nodes) for _ in graph.neighbors[i]], dtype=int)
    cols = np.array([j for i in range(graph.n_nodes) for j in graph.neighbors[i]], dtype=int)
    return rows, cols


def baseline_step(y: np.ndarray, graph: SocialGraph, params: BaselineParams, _edges=None) -> np.ndarray:
    """One synchronous update from the pre-step state, clamped to [-1, 1]."""
    y = np.asarray(y, dtype=float)
    rows, cols = _edges if _edges is not None else _edge_arrays(graph)
    yi, yj = y[rows], y[cols]
    weight = np.where(yi * yj >= 0, 1.0, -params.backfire_gain)
    drive = np.bincount(rows, weights=weight * (yj - yi), minlength=graph.n_nodes)
    return np.clip(y + params.eta * drive, -1.0, 1.0)


def run_baseline(graph: SocialGraph, initial: np.ndarray, params: BaselineParams) -> np.ndarray:
    """States as rows: row 0 is ``initial``, then one row per iteration."""
    initial = np.asarray(initial, dtype=float)
    if initial.shape != (graph.n_nodes,):
        raise ValueError(f"expected {graph.n_nodes} opinions, got shape {initial.shape}")
    edges = _edge_arrays(graph)
    states = np.empty((params.iterations + 1, graph.n_nodes))
    states[0] = np.clip(initial, -1.0, 1.0)
    for t in range(params.iterations):
        states[t + 1] = baseline_step(states[t], graph, params, edges)
    return states
