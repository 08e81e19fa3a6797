"""Empathy/repulsion opinion updates and post-stream replay.

An observer at ``o_i`` who sees a post carrying ``o_p`` either empathizes
(probability ``p``) or is repelled. With ``d = o_p - o_i``:

* empathy moves ``o_i`` by ``d * c * k * exp(-k |d|)``;
* repulsion pushes toward the extreme on the far side of the post, with
  strength ``c * k * exp(-k (2 - |d|))`` scaled by the distance to that
  extreme. Distance ``2 - |d|`` wraps the opinion axis at +/-1, so far-away
  posts repel hardest. ``d == 0`` pushes toward +1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .hawkes import EventSequence
from .network import SocialGraph

EMPATHY = "empathy"
REPULSION = "repulsion"


@dataclass(frozen=True)
class DynamicsParams:
    p: float
    k: float
    c: float = 0.05

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if self.c * self.k > 1.0:
            raise ValueError(f"c*k must be <= 1 to keep opinions in [-1, 1], got {self.c * self.k}")


@dataclass(frozen=True)
class Reaction:
    time: float
    author: int
    observer: int
    kind: str
    delta: float


@dataclass
class Trajectory:
    """Opinion snapshots: row 0 is the initial state at the window start,
    row ``r`` the state right after the ``r``-th post."""

    times: np.ndarray
    opinions: np.ndarray
    reactions: list[Reaction] = field(default_factory=list)

    @property
    def initial(self) -> np.ndarray:
        return self.opinions[0]

    @property
    def final(self) -> np.ndarray:
        return self.opinions[-1]

    def to_csv(self) -> str:
        lines = ["time,user,opinion"]
        for t, row in zip(self.times, self.opinions):
            lines += [f"{t:.6f},{u},{o:.6f}" for u, o in enumerate(row)]
        return "\n".join(lines) + "\n"


def _check(o_i: float, o_p: float, k: float, c: float) -> None:
    if not (-1.0 <= o_i <= 1.0 and -1.0 <= o_p <= 1.0):
        raise ValueError(f"opinions must lie in [-1, 1], got o_i={o_i}, o_p={o_p}")
    if not k > 0 or not c > 0 or c * k > 1.0:
        raise ValueError(f"need k > 0, c > 0, c*k <= 1; got k={k}, c={c}")


def _empathy(o_i: float, o_p: float, ck: float, k: float) -> float:
    d = o_p - o_i
    return d * ck * math.exp(-k * abs(d))


def _repulsion(o_i: float, o_p: float, ck: float, k: float) -> float:
    d = o_p - o_i
    strength = ck * math.exp(-k * (2.0 - abs(d)))
    if d <= 0:
        return (1.0 - o_i) * strength
    return -(1.0 + o_i) * strength


def empathy_delta(o_i: float, o_p: float, k: float, c: float) -> float:
    _check(o_i, o_p, k, c)
    return _empathy(o_i, o_p, c * k, k)


def repulsion_delta(o_i: float, o_p: float, k: float, c: float) -> float:
    _check(o_i, o_p, k, c)
    return _repulsion(o_i, o_p, c * k, k)


def _clip(x: float) -> float:
    # guards last-ulp rounding only; the update rules are already closed on [-1, 1]
    return -1.0 if x < -1.0 else 1.0 if x > 1.0 else x


def _react(
    opinions: list[float],
    observers: Sequence[int],
    o_p: float,
    p: Sequence[float],
    k: float,
    ck: float,
    draws: np.ndarray,
) -> list[tuple[int, str, float]]:
    out = []
    for i, u in zip(observers, draws):
        o_i = opinions[i]
        if u < p[i]:
            kind, d = EMPATHY, _empathy(o_i, o_p, ck, k)
        else:
            kind, d = REPULSION, _repulsion(o_i, o_p, ck, k)
        opinions[i] = _clip(o_i + d)
        out.append((i, kind, d))
    return out


def _empathy_probs(params: DynamicsParams, n: int, per_user_p: Sequence[float] | None) -> list[float]:
    if per_user_p is None:
        return [params.p] * n
    probs = [float(x) for x in per_user_p]
    if len(probs) != n or not all(0.0 <= x <= 1.0 for x in probs):
        raise ValueError("per_user_p needs one probability in [0, 1] per node")
    return probs


def _validate_state(opinions: np.ndarray, n: int) -> None:
    if opinions.shape != (n,):
        raise ValueError(f"expected {n} opinions, got shape {opinions.shape}")
    if np.any(opinions < -1.0) or np.any(opinions > 1.0):
        raise ValueError("opinions must lie in [-1, 1]")


def apply_post(
    opinions: np.ndarray,
    graph: SocialGraph,
    author: int,
    params: DynamicsParams,
    rng: np.random.Generator,
    *,
    time: float = 0.0,
    per_user_p: Sequence[float] | None = None,
) -> tuple[np.ndarray, list[Reaction]]:
    """Let every neighbor of ``author`` react to one post.

    Observers are visited in ascending id order, one ``U[0, 1)`` draw each,
    all reacting to the author's opinion snapshot. Returns a new array.
    """
    opinions = np.asarray(opinions, dtype=float)
    _validate_state(opinions, graph.n_nodes)
    if not 0 <= author < graph.n_nodes:
        raise ValueError(f"author {author} not in graph")
    state = opinions.tolist()
    observers = graph.neighbors[author]
    records = _react(
        state,
        observers,
        state[author],
        _empathy_probs(params, graph.n_nodes, per_user_p),
        params.k,
        params.c * params.k,
        rng.random(len(observers)),
    )
    reactions = [Reaction(time, author, i, kind, d) for i, kind, d in records]
    return np.array(state), reactions


def run_replay(
    graph: SocialGraph,
    events: EventSequence,
    initial: np.ndarray,
    params: DynamicsParams,
    rng: np.random.Generator,
    *,
    per_user_p: Sequence[float] | None = None,
    log_reactions: bool = True,
) -> Trajectory:
    initial = np.asarray(initial, dtype=float)
    _validate_state(initial, graph.n_nodes)
    probs = _empathy_probs(params, graph.n_nodes, per_user_p)
    k, ck = params.k, params.c * params.k

    state = initial.tolist()
    snapshots = np.empty((len(events) + 1, graph.n_nodes))
    snapshots[0] = initial
    times = np.empty(len(events) + 1)
    times[0] = events.t_start
    reactions: list[Reaction] = []
    for r, ev in enumerate(events, start=1):
        if not 0 <= ev.author < graph.n_nodes:
            raise ValueError(f"event author {ev.author} not in graph")
        observers = graph.neighbors[ev.author]
        records = _react(state, observers, state[ev.author], probs, k, ck, rng.random(len(observers)))
        if log_reactions:
            reactions += [Reaction(ev.time, ev.author, i, kind, d) for i, kind, d in records]
        snapshots[r] = state
        times[r] = ev.time
    return Trajectory(times, snapshots, reactions)
