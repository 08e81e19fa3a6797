"""How the three regimes depend on the observation window length.

At the default window of 2 a 10-node network sees only tens of posts, too
few for the small c*k steps to form a consensus or two clusters. This
prints the regime statistics for several window lengths.

    python scripts/window_study.py --windows 2 3 4
"""

import argparse

import numpy as np

from polarsim import runner
from polarsim.config import ExperimentConfig


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--windows", type=float, nargs="+", default=[2.0, 3.0, 4.0])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--max-events", type=int, default=200_000)
    args = ap.parse_args()

    print("window seed  posts  idx(0.9,2) tight  idx(0.1,2) two  chg(0.9,10)  min<-0.5(same-sign)")
    for window in args.windows:
        for seed in range(args.seeds):
            cfg = ExperimentConfig(window_length=window, seed=seed, max_events=args.max_events)
            try:
                cons = runner.run_cell(cfg, 0.9, 2.0)
                pol = runner.run_cell(cfg, 0.1, 2.0)
                frz = runner.run_cell(cfg, 0.9, 10.0)
                same = runner.compare_models(cfg.replace(initial_low=0.0, initial_high=1.0))
            except RuntimeError:
                print(f"{window:6g} {seed:4d}  explosive (event cap hit)")
                continue
            print(
                f"{window:6g} {seed:4d} {cons.runs[0].n_events:6d} "
                f"{cons.mean_index:11.3f} {sum(r.spread < 0.1 for r in cons.runs):5d} "
                f"{pol.mean_index:11.3f} {sum(r.two_cluster for r in pol.runs):4d} "
                f"{frz.mean_change:12.3f} {str(bool(np.min(same.proposed.final) < -0.5)):>12}"
            )


if __name__ == "__main__":
    main()
