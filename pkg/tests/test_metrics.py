import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polarsim.metrics import (
    EmptyHistogramError,
    OpinionHistogram,
    PolarizationConfig,
    bin_opinions,
    class_midpoints,
    er_index,
    two_cluster,
)


def naive_er(counts, theta):
    n = len(counts)
    y = [-1 + (2 * (i + 1) - 1) / n for i in range(n)]
    total = sum(counts)
    s = 0.0
    for i in range(n):
        for j in range(n):
            s += counts[i] ** (1 + theta) * counts[j] * abs(y[i] - y[j])
    return s * total ** -(2 + theta)


def compositions(total, parts):
    """All count vectors of ``parts`` nonnegative ints summing to ``total``."""
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 1 - prev - 1)
        yield out


def test_midpoints():
    assert np.allclose(class_midpoints(10), np.arange(-0.9, 1.0, 0.2))
    assert np.all(np.diff(class_midpoints(7)) > 0)


@pytest.mark.parametrize("o, cls", [(-1.0, 1), (1.0, 10), (0.0, 6), (-0.05, 5), (0.999, 10)])
def test_binning_boundaries(o, cls):
    h = bin_opinions([o], 10)
    assert np.flatnonzero(h.counts).tolist() == [cls - 1]


def test_bin_counts_sum(rng):
    o = rng.uniform(-1, 1, 1000)
    assert bin_opinions(o, 7).counts.sum() == 1000


def test_bin_errors():
    with pytest.raises(ValueError):
        bin_opinions([0.0], 1)
    with pytest.raises(ValueError):
        bin_opinions([1.2], 10)


def test_single_class_zero():
    assert er_index(OpinionHistogram.from_counts([0, 0, 10] + [0] * 7), PolarizationConfig(0.5)) == 0.0


def test_five_five_value():
    h = OpinionHistogram.from_counts([5] + [0] * 8 + [5])
    expected = 2 * 10**-2.5 * 5**1.5 * 5 * 1.8
    assert expected == pytest.approx(0.636396, abs=1e-6)
    assert er_index(h, PolarizationConfig(0.5)) == pytest.approx(expected, rel=1e-12)
    assert er_index(h) == pytest.approx(naive_er([5] + [0] * 8 + [5], 0.5), abs=1e-6)


def test_empty_histogram():
    with pytest.raises(EmptyHistogramError):
        er_index(OpinionHistogram.from_counts([0] * 10))


def test_theta_range():
    with pytest.raises(ValueError):
        PolarizationConfig(0.0)
    with pytest.raises(ValueError):
        PolarizationConfig(1.6)


@settings(max_examples=300)
@given(
    counts=st.lists(st.integers(0, 50), min_size=2, max_size=15).filter(lambda c: sum(c) > 0),
    theta=st.floats(0.01, 1.59),
)
def test_matches_naive_and_reflection(counts, theta):
    cfg = PolarizationConfig(theta)
    p = er_index(OpinionHistogram.from_counts(counts), cfg)
    assert p == pytest.approx(naive_er(counts, theta), rel=1e-12, abs=1e-300)
    assert er_index(OpinionHistogram.from_counts(counts[::-1]), cfg) == pytest.approx(p, rel=1e-12, abs=1e-300)
    assert p >= 0
    assert (p == 0) == (sum(c > 0 for c in counts) == 1)


def test_exhaustive_maximizer():
    comps = np.array(list(compositions(10, 10)), dtype=float)
    assert len(comps) == 92378
    y = class_midpoints(10)
    dist = np.abs(y[:, None] - y[None, :])
    vals = np.einsum("ci,ij,cj->c", comps**1.5, dist, comps) * 10**-2.5
    best = comps[np.argmax(vals)]
    assert best.tolist() == [5] + [0] * 8 + [5]
    assert vals.max() == pytest.approx(0.636396, abs=1e-6)
    assert np.sum(vals >= vals.max() - 1e-12) == 1


def test_two_cluster():
    assert two_cluster([-0.9, -0.8, -0.95, 0.8, 0.9, 0.85])
    assert not two_cluster(np.linspace(-1, 1, 10))
    assert not two_cluster([0.1] * 10)
    assert not two_cluster([-1.0, 0.9, 0.95, 0.8, 0.85])
