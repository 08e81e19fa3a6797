"""Command line entry point: ``polarsim {graph,events,simulate,sweep,compare}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import baseline, runner
from .config import ExperimentConfig, load_config

log = logging.getLogger("polarsim")

# flag -> ExperimentConfig field
CONFIG_FLAGS = {
    "seed": ("--seed", int),
    "n_nodes": ("--nodes", int),
    "ba_m": ("--m", int),
    "window_length": ("--window", float),
    "c": ("--c", float),
    "runs_per_cell": ("--runs", int),
    "n_classes": ("--classes", int),
    "theta": ("--theta", float),
    "resample_mode": ("--resample", str),
    "initial_low": ("--init-low", float),
    "initial_high": ("--init-high", float),
}


def _grid(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.replace(",", " ").split())


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="flat key = value config file")
    common.add_argument("--out", help="output directory")
    common.add_argument("-v", "--verbose", action="store_true")
    for name, (flag, kind) in CONFIG_FLAGS.items():
        common.add_argument(flag, dest=name, type=kind)
    common.add_argument("--p-grid", dest="p_grid", type=_grid, help="comma separated p values")
    common.add_argument("--k-grid", dest="k_grid", type=_grid, help="comma separated k values")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="polarsim", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("graph", parents=[common], help="emit the BA graph as an edge list")
    sub.add_parser("events", parents=[common], help="emit the Hawkes post stream as CSV")

    sim = sub.add_parser("simulate", parents=[common], help="replay one opinion trajectory")
    sim.add_argument("--p", type=float, default=0.9)
    sim.add_argument("--k", type=float, default=2.0)

    sw = sub.add_parser("sweep", parents=[common], help="full (p, k) grid sweep")
    sw.add_argument("--workers", type=int, default=1)

    cmp_ = sub.add_parser("compare", parents=[common], help="baseline vs proposed from a same-sign start")
    cmp_.add_argument("--p", type=float, default=0.1)
    cmp_.add_argument("--k", type=float, default=2.0)
    cmp_.add_argument("--eta", type=float, default=None, help="baseline step (default 0.5 / max degree)")
    cmp_.add_argument("--backfire-gain", type=float, default=1.0)
    cmp_.add_argument("--iterations", type=int, default=100)
    return parser


def _config(args: argparse.Namespace, base: dict | None = None) -> ExperimentConfig:
    overrides = {name: getattr(args, name, None) for name in (*CONFIG_FLAGS, "p_grid", "k_grid")}
    return load_config(getattr(args, "config", None), base=base, **overrides)


def _emit(args: argparse.Namespace, name: str, text: str) -> None:
    out = getattr(args, "out", None)
    if out is None:
        sys.stdout.write(text)
    else:
        path = runner.write_text(Path(out), name, text)
        log.info("wrote %s", path)


def cmd_graph(args) -> None:
    config = _config(args)
    world = runner.build_world(config, runner.stream(config.seed, runner._WORLD))
    _emit(args, "graph.txt", world.graph.to_edgelist())


def cmd_events(args) -> None:
    config = _config(args)
    world = runner.build_world(config, runner.stream(config.seed, runner._WORLD))
    _emit(args, "events.csv", world.events.to_csv())


def cmd_simulate(args) -> None:
    config = _config(args)
    _, traj = runner.simulate(config, args.p, args.k)
    _emit(args, "trajectory.csv", traj.to_csv())


def cmd_sweep(args) -> None:
    config = _config(args)
    out = Path(getattr(args, "out", None) or "results")
    start = time.perf_counter()
    result = runner.run_sweep(config, workers=args.workers)
    log.info("sweep finished in %.2fs", time.perf_counter() - start)
    runner.write_text(out, "sweep.csv", result.to_csv())
    runner.write_text(out, "sweep.json", result.to_json())
    log.info("region means: %s", result.region_means())


def cmd_compare(args) -> None:
    config = _config(args, base={"initial_low": 0.0, "initial_high": 1.0})
    out = Path(getattr(args, "out", None) or "results")
    world = runner.build_world(config, runner.stream(config.seed, runner._WORLD))
    kw = {"backfire_gain": args.backfire_gain, "iterations": args.iterations}
    if args.eta is not None:
        kw["eta"] = args.eta
    bparams = baseline.BaselineParams.default_for(world.graph, **kw)
    comparison = runner.compare_models(config, args.p, args.k, bparams)
    summary = comparison.summary(config)
    summary["baseline"]["params"] = bparams.__dict__
    runner.write_text(out, "baseline_trajectory.csv", runner.baseline_csv(comparison.baseline_states))
    runner.write_text(out, "proposed_trajectory.csv", comparison.proposed.to_csv())
    runner.write_text(out, "compare.json", json.dumps(summary, indent=2) + "\n")
    print(json.dumps({k: summary[k]["final_index"] for k in ("baseline", "proposed")}))


COMMANDS = {
    "graph": cmd_graph,
    "events": cmd_events,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"polarsim: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
