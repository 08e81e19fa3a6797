"""Run the default (p, k) sweep and print the mean-index grid with region letters.

    python scripts/sweep_table.py --seed 0 --workers 4
"""

import argparse
import time
from pathlib import Path

from polarsim import runner
from polarsim.config import load_config


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--config")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--window", type=float)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="results/sweep")
    args = ap.parse_args()

    cfg = load_config(args.config, seed=args.seed, window_length=args.window)
    start = time.perf_counter()
    res = runner.run_sweep(cfg, workers=args.workers)
    print(f"{len(res.cells)} cells in {time.perf_counter() - start:.2f}s\n")

    print("p \\ k " + "".join(f"{k:>8g}" for k in cfg.k_grid))
    for p in cfg.p_grid:
        row = [res.cell(p, k) for k in cfg.k_grid]
        print(f"{p:<5g} " + "".join(f"{c.mean_index:7.3f}{c.region[0]}" for c in row))
    print("\nregion means:", {k: round(v, 4) for k, v in res.region_means().items()})

    out = Path(args.out)
    runner.write_text(out, "sweep.csv", res.to_csv())
    runner.write_text(out, "sweep.json", res.to_json())


if __name__ == "__main__":
    main()
