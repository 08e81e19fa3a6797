"""Single trajectories for the three typical (p, k) settings.

    python scripts/regimes.py --seed 0 --out results/regimes
"""

import argparse
from pathlib import Path

import numpy as np

from polarsim import runner
from polarsim.config import ExperimentConfig

SETTINGS = [(0.9, 2.0), (0.1, 2.0), (0.9, 10.0)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--window", type=float, default=2.0)
    ap.add_argument("--out", default="results/regimes")
    args = ap.parse_args()

    cfg = ExperimentConfig(seed=args.seed, window_length=args.window)
    for p, k in SETTINGS:
        world, traj = runner.simulate(cfg, p, k)
        name = f"trajectory_p{p:g}_k{k:g}.csv"
        runner.write_text(Path(args.out), name, traj.to_csv())
        final = traj.final
        print(
            f"p={p:<4g} k={k:<4g} posts={len(world.events):5d} "
            f"spread={np.ptp(final):.3f} mean|change|={np.mean(np.abs(final - traj.initial)):.3f} -> {name}"
        )


if __name__ == "__main__":
    main()
