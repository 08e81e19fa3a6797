"""Barabasi-Albert follower graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np


@dataclass(frozen=True)
class SocialGraph:
    """Undirected simple graph on nodes ``0..n_nodes-1``.

    ``neighbors[i]`` is the sorted tuple of nodes adjacent to ``i``.
    """

    n_nodes: int
    neighbors: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n_nodes: int, edges: Iterable[tuple[int, int]]) -> "SocialGraph":
        adj: list[set[int]] = [set() for _ in range(n_nodes)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at node {a}")
            if not (0 <= a < n_nodes and 0 <= b < n_nodes):
                raise ValueError(f"edge ({a}, {b}) out of range for {n_nodes} nodes")
            adj[a].add(b)
            adj[b].add(a)
        return cls(n_nodes, tuple(tuple(sorted(s)) for s in adj))

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as ``(i, j)`` with ``i < j``, sorted."""
        return [(i, j) for i in range(self.n_nodes) for j in self.neighbors[i] if i < j]

    @property
    def n_edges(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def degree(self, i: int) -> int:
        return len(self.neighbors[i])

    @property
    def max_degree(self) -> int:
        return max((len(nb) for nb in self.neighbors), default=0)

    def is_connected(self) -> bool:
        if self.n_nodes == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for j in self.neighbors[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n_nodes

    def to_edgelist(self) -> str:
        return "".join(f"{i} {j}\n" for i, j in self.edges())

    @classmethod
    def from_edgelist(cls, text: str, n_nodes: int | None = None) -> "SocialGraph":
        edges = []
        for line in text.splitlines():
            line = line.strip()
            if line:
                a, b = line.split()
                edges.append((int(a), int(b)))
        if n_nodes is None:
            n_nodes = 1 + max((max(e) for e in edges), default=-1)
        return cls.from_edges(n_nodes, edges)


def generate_ba(n_nodes: int, m: int, rng: np.random.Generator) -> SocialGraph:
    """Preferential-attachment graph grown from a clique of ``m + 1`` nodes.

    Each arriving node links to ``m`` distinct existing nodes. Targets are
    drawn one at a time with probability proportional to current degree;
    a draw that repeats an already chosen target is rejected and redrawn.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n_nodes <= m:
        raise ValueError(f"n_nodes must exceed m (got n_nodes={n_nodes}, m={m})")

    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    degree = np.zeros(n_nodes)
    degree[: m + 1] = m
    for new in range(m + 1, n_nodes):
        cumulative = np.cumsum(degree[:new])
        total = cumulative[-1]
        targets: list[int] = []
        while len(targets) < m:
            t = int(np.searchsorted(cumulative, rng.random() * total, side="right"))
            if t not in targets:
                targets.append(t)
        for t in targets:
            edges.append((t, new))
            degree[t] += 1
        degree[new] = m
    return SocialGraph.from_edges(n_nodes, edges)
