import json

import pytest

from polarsim.cli import main
from polarsim.network import SocialGraph


def test_graph_stdout(capsys):
    assert main(["--seed", "3", "graph"]) == 0
    text = capsys.readouterr().out
    g = SocialGraph.from_edgelist(text, 10)
    assert g.n_edges == 17 and g.is_connected()


def test_flags_after_subcommand(capsys):
    main(["graph", "--seed", "3", "--nodes", "12"])
    assert len(capsys.readouterr().out.splitlines()) == 3 + 9 * 2


def test_events_match_simulate_world(tmp_path, capsys):
    main(["events", "--seed", "5", "--out", str(tmp_path)])
    lines = (tmp_path / "events.csv").read_text().splitlines()
    assert lines[0] == "time,author"
    main(["simulate", "--seed", "5", "--out", str(tmp_path)])
    traj = (tmp_path / "trajectory.csv").read_text().splitlines()
    assert traj[0] == "time,user,opinion"
    assert len(traj) == 1 + 10 * len(lines)  # initial row block + one per post
    t1 = float(lines[1].split(",")[0])
    assert float(traj[1].split(",")[0]) == pytest.approx(t1, abs=1e-6)


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "a.cfg"
    cfg.write_text("n_nodes = 6\nba_m = 1\n")
    main(["--config", str(cfg), "graph"])
    assert len(capsys.readouterr().out.splitlines()) == 5


def test_sweep_and_compare(tmp_path):
    out = tmp_path / "r"
    args = ["--p-grid", "0.2,0.8", "--k-grid", "2,9", "--runs", "2", "--out", str(out)]
    assert main(["sweep", *args]) == 0
    assert (out / "sweep.csv").read_text().count("\n") == 5
    assert json.loads((out / "sweep.json").read_text())["config"]["runs_per_cell"] == 2
    assert main(["compare", "--out", str(out)]) == 0
    doc = json.loads((out / "compare.json").read_text())
    assert doc["initial_range"] == [0.0, 1.0]
    assert set(doc) >= {"baseline", "proposed"}
    assert (out / "baseline_trajectory.csv").exists() and (out / "proposed_trajectory.csv").exists()


def test_bad_config_exit_code(capsys):
    assert main(["simulate", "--k", "30"]) == 2
    assert "c*k" in capsys.readouterr().err
