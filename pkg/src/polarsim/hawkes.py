"""Multivariate Hawkes post streams on a social graph.

Intensity of node ``i`` at time ``t``::

    lambda_i(t) = mu_i + sum_{j in nbrs(i)} sum_{t_h in H_j, t_h < t} alpha_ji * exp(-beta_ji * (t - t_h))

Excitation lives on ordered neighbor pairs ``(j, i)``: a post by ``j`` raises
the rate of ``i``. A node's own posts never raise its own rate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .network import SocialGraph


class DegenerateProcessError(ValueError):
    """The process can never produce a first event (all base rates zero)."""


@dataclass(frozen=True)
class HawkesParams:
    """Base rates per node and (alpha, beta) per ordered neighbor pair.

    Pair ``e`` means posts by ``sources[e]`` excite ``targets[e]``.
    """

    base_rates: np.ndarray
    sources: np.ndarray
    targets: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray

    @property
    def n_nodes(self) -> int:
        return len(self.base_rates)

    @property
    def n_pairs(self) -> int:
        return len(self.sources)

    def pair(self, j: int, i: int) -> tuple[float, float]:
        """``(alpha_ji, beta_ji)``; ``(0.0, 1.0)`` for non-neighbors."""
        hit = np.flatnonzero((self.sources == j) & (self.targets == i))
        if len(hit) == 0:
            return 0.0, 1.0
        e = hit[0]
        return float(self.alpha[e]), float(self.beta[e])

    def with_alpha(self, alpha: float | np.ndarray) -> "HawkesParams":
        return HawkesParams(
            self.base_rates,
            self.sources,
            self.targets,
            np.broadcast_to(np.asarray(alpha, dtype=float), self.alpha.shape).copy(),
            self.beta,
        )


@dataclass(frozen=True)
class PostEvent:
    time: float
    author: int


@dataclass(frozen=True)
class EventSequence:
    """Posts inside ``[t_start, t_end]``, ordered by time then generation.

    ``intensities`` optionally holds the incrementally tracked intensity
    vector at each accepted event (row per event), for verification.
    """

    events: tuple[PostEvent, ...]
    t_start: float
    t_end: float
    intensities: np.ndarray | None = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[PostEvent]:
        return iter(self.events)

    @property
    def times(self) -> np.ndarray:
        return np.array([e.time for e in self.events], dtype=float)

    @property
    def authors(self) -> np.ndarray:
        return np.array([e.author for e in self.events], dtype=int)

    def to_csv(self) -> str:
        lines = ["time,author"]
        lines += [f"{e.time:.9f},{e.author}" for e in self.events]
        return "\n".join(lines) + "\n"


def sample_params(graph: SocialGraph, rng: np.random.Generator) -> HawkesParams:
    """Draw mu_i, alpha_ji, beta_ji independently from U[0, 1].

    Ordered pairs are enumerated by source then target, so the draw is a
    pure function of the graph and the stream.
    """
    if graph.n_nodes == 0:
        raise ValueError("graph has no nodes")
    mu = rng.uniform(0.0, 1.0, graph.n_nodes)
    sources = np.array([j for j in range(graph.n_nodes) for _ in graph.neighbors[j]], dtype=int)
    targets = np.array([i for j in range(graph.n_nodes) for i in graph.neighbors[j]], dtype=int)
    ab = rng.uniform(0.0, 1.0, (len(sources), 2))
    return HawkesParams(mu, sources, targets, ab[:, 0].copy(), ab[:, 1].copy())


def intensity(
    params: HawkesParams,
    graph: SocialGraph,
    history: EventSequence | list[PostEvent],
    i: int,
    t: float,
) -> float:
    """Evaluate lambda_i(t) from scratch; only events strictly before ``t`` count."""
    if not 0 <= i < graph.n_nodes:
        raise ValueError(f"node {i} out of range")
    nbrs = set(graph.neighbors[i])
    lam = float(params.base_rates[i])
    for ev in history:
        if ev.time < t and ev.author in nbrs:
            a, b = params.pair(ev.author, i)
            lam += a * np.exp(-b * (t - ev.time))
    return lam


def _thinning(
    params: HawkesParams,
    n_nodes: int,
    window_length: float,
    rng: np.random.Generator,
    max_events: int,
) -> Iterator[tuple[float, int, np.ndarray]]:
    # Between events every intensity is non-increasing, so the total
    # intensity at the current time bounds it until the next acceptance.
    mu = params.base_rates
    src, dst = params.sources, params.targets
    alpha, beta = params.alpha, params.beta
    out_pairs = [np.flatnonzero(src == a) for a in range(n_nodes)]
    excitation = np.zeros(len(src))
    t = 0.0
    t_stop = None
    n = 0
    while True:
        lam = mu + np.bincount(dst, weights=excitation, minlength=n_nodes)
        bound = lam.sum()
        t_cand = t + rng.exponential(1.0 / bound)
        if t_stop is not None and t_cand > t_stop:
            return
        excitation *= np.exp(-beta * (t_cand - t))
        t = t_cand
        lam = mu + np.bincount(dst, weights=excitation, minlength=n_nodes)
        total = lam.sum()
        if rng.random() * bound >= total:
            continue
        cdf = np.cumsum(lam)
        author = min(int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right")), n_nodes - 1)
        yield t, author, lam
        n += 1
        if n >= max_events:
            raise RuntimeError(f"event cap of {max_events} reached; process looks explosive")
        if t_stop is None:
            t_stop = t + window_length
        hit = out_pairs[author]
        excitation[hit] += alpha[hit]


def generate_events(
    params: HawkesParams,
    graph: SocialGraph,
    window_length: float,
    rng: np.random.Generator,
    *,
    record_intensity: bool = False,
    max_events: int = 1_000_000,
) -> EventSequence:
    """Simulate by Ogata thinning and keep posts in ``[t1, t1 + window_length]``.

    ``t1`` is the first accepted event, so nothing precedes the window.
    """
    if window_length <= 0:
        raise ValueError(f"window_length must be positive, got {window_length}")
    if params.n_nodes != graph.n_nodes:
        raise ValueError("params and graph disagree on node count")
    if not params.base_rates.sum() > 0:
        raise DegenerateProcessError("total base rate is zero; no first event can occur")

    events: list[PostEvent] = []
    lams: list[np.ndarray] = []
    for t, author, lam in _thinning(params, graph.n_nodes, window_length, rng, max_events):
        events.append(PostEvent(t, author))
        if record_intensity:
            lams.append(lam.copy())
    t1 = events[0].time
    return EventSequence(
        tuple(events),
        t1,
        t1 + window_length,
        np.array(lams) if record_intensity else None,
    )
