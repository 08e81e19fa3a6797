"""Opinion histograms and the Esteban-Ray polarization index."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

THETA_MAX = 1.6


class EmptyHistogramError(ValueError):
    pass


@dataclass(frozen=True)
class OpinionHistogram:
    """Counts per equal-width class of [-1, 1], with class midpoints."""

    counts: np.ndarray
    class_values: np.ndarray

    @property
    def n_classes(self) -> int:
        return len(self.counts)

    @classmethod
    def from_counts(cls, counts) -> "OpinionHistogram":
        counts = np.asarray(counts, dtype=float)
        return cls(counts, class_midpoints(len(counts)))


@dataclass(frozen=True)
class PolarizationConfig:
    theta: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.theta < THETA_MAX:
            raise ValueError(f"theta must lie in (0, {THETA_MAX}), got {self.theta}")


def class_midpoints(n_classes: int) -> np.ndarray:
    i = np.arange(1, n_classes + 1)
    return -1.0 + (2 * i - 1) / n_classes


def bin_index(opinions, n_classes: int) -> np.ndarray:
    """Zero-based class of each opinion; bins are half-open except the top one."""
    o = np.asarray(opinions, dtype=float)
    return np.minimum(np.floor((o + 1.0) * n_classes / 2.0).astype(int), n_classes - 1)


def bin_opinions(opinions, n_classes: int = 10) -> OpinionHistogram:
    if n_classes < 2:
        raise ValueError(f"need at least 2 classes, got {n_classes}")
    o = np.asarray(opinions, dtype=float)
    if np.any(o < -1.0) or np.any(o > 1.0):
        raise ValueError("opinions must lie in [-1, 1]")
    counts = np.bincount(bin_index(o, n_classes), minlength=n_classes).astype(float)
    return OpinionHistogram(counts, class_midpoints(n_classes))


def er_index(hist: OpinionHistogram, config: PolarizationConfig = PolarizationConfig()) -> float:
    """``K * sum_ij pi_i^(1+theta) pi_j |y_i - y_j|`` with ``K = (sum pi)^-(2+theta)``."""
    pi = hist.counts
    total = pi.sum()
    if total <= 0:
        raise EmptyHistogramError("histogram has no members")
    y = hist.class_values
    dist = np.abs(y[:, None] - y[None, :])
    return float(total ** -(2.0 + config.theta) * (pi ** (1.0 + config.theta)) @ dist @ pi)


def polarization(opinions, n_classes: int = 10, theta: float = 0.5) -> float:
    """Bin then score, the usual end-of-run measurement."""
    return er_index(bin_opinions(opinions, n_classes), PolarizationConfig(theta))


def two_cluster(opinions, min_gap: float = 0.5, max_cluster_spread: float = 0.5) -> bool:
    """True if splitting at the widest gap leaves two tight groups of 2+ users."""
    o = np.sort(np.asarray(opinions, dtype=float))
    if len(o) < 4:
        return False
    gaps = np.diff(o)
    cut = int(np.argmax(gaps)) + 1
    lo, hi = o[:cut], o[cut:]
    if len(lo) < 2 or len(hi) < 2:
        return False
    return bool(gaps[cut - 1] >= min_gap and np.ptp(lo) < max_cluster_spread and np.ptp(hi) < max_cluster_spread)
