import numpy as np
import pytest

from polarsim.baseline import BaselineParams, baseline_step, run_baseline
from polarsim.network import SocialGraph, generate_ba

PAIR = SocialGraph.from_edges(2, [(0, 1)])


def test_fixed_point(ba10):
    y = np.full(10, 0.37)
    assert np.array_equal(baseline_step(y, ba10, BaselineParams(0.05)), y)


def test_same_sign_pair_converges():
    out = baseline_step(np.array([0.2, 0.8]), PAIR, BaselineParams(0.1, 1.0))
    assert out == pytest.approx([0.26, 0.74], abs=1e-12)


def test_opposite_sign_pair_diverges():
    out = baseline_step(np.array([-0.2, 0.2]), PAIR, BaselineParams(0.1, 1.0))
    assert out == pytest.approx([-0.24, 0.24], abs=1e-12)


def test_zero_iterations(ba10):
    init = np.linspace(0, 1, 10)
    states = run_baseline(ba10, init, BaselineParams(0.05, iterations=0))
    assert states.shape == (1, 10) and np.array_equal(states[0], init)


@pytest.mark.parametrize("seed", range(20))
def test_same_sign_contracts(seed):
    rng = np.random.default_rng(seed)
    g = generate_ba(10, 2, rng)
    params = BaselineParams.default_for(g, iterations=300)
    assert params.eta * g.max_degree <= 1
    states = run_baseline(g, rng.uniform(0, 1, 10), params)
    lo, hi = states.min(axis=1), states.max(axis=1)
    assert np.all(np.diff(lo) >= -1e-12)
    assert np.all(np.diff(hi) <= 1e-12)
    spread = hi - lo
    assert np.all(np.diff(spread) <= 1e-12)
    assert spread[-1] < 0.01


def test_mixed_sign_saturates():
    rng = np.random.default_rng(0)
    g = generate_ba(10, 2, rng)
    init = np.array([-0.3, 0.3] * 5)
    states = run_baseline(g, init, BaselineParams(0.1, backfire_gain=5.0, iterations=100))
    assert np.any(np.abs(states[-1]) == 1.0)
    assert np.all(np.abs(states) <= 1.0)


def test_deterministic(ba10):
    init = np.linspace(-1, 1, 10)
    p = BaselineParams(0.05)
    assert np.array_equal(run_baseline(ba10, init, p), run_baseline(ba10, init, p))


def test_param_validation():
    for kw in ({"eta": 0}, {"eta": 0.1, "backfire_gain": -1}, {"eta": 0.1, "iterations": -1}):
        with pytest.raises(ValueError):
            BaselineParams(**kw)
