"""End-to-end checks of the command line tool.

The binary path comes from the THERMOISO_CLI environment variable (set by
ctest); falls back to build/thermoiso for direct pytest runs.
"""

import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get(
    "THERMOISO_CLI",
    str(Path(__file__).resolve().parents[2] / "build" / "thermoiso"),
)


def run(*args, expect=0):
    result = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert result.returncode == expect, result.stderr
    return result


def test_yield_both_matches_paper_value():
    result = run("yield", "--def", "both", "--p", "0.7", "--lambda", "0.2",
                 "--e1", "2.48", "--delta-e", "1.39", "--beta", "1")
    payload = json.loads(result.stdout)
    assert payload["definition"] == "both"
    assert abs(payload["value"] - 0.4069) < 5e-3
    assert len(payload["achiever"]) == 9
    assert abs(sum(payload["achiever"]) - 1.0) < 1e-9


def test_yield_any_progression():
    low = json.loads(run("yield", "--def", "any", "--p", "0.7", "--lambda", "0.02").stdout)
    high = json.loads(run("yield", "--def", "any", "--p", "0.7", "--lambda", "0.2").stdout)
    assert low["value"] == high["value"]
    assert abs(high["value"] - 0.830) < 5e-3


def test_yield_single():
    payload = json.loads(run("yield", "--def", "single", "--p", "0.7").stdout)
    assert abs(payload["value"] - 0.7496) < 5e-3
    assert len(payload["achiever"]) == 3


def test_oracle_flag_tracks_the_analytic_value():
    exact = json.loads(run("yield", "--def", "both", "--p", "0.7", "--lambda", "0.2").stdout)
    grid = json.loads(run("yield", "--def", "both", "--p", "0.7", "--lambda", "0.2",
                          "--oracle", "--resolution", "0.1").stdout)
    assert grid["value"] <= exact["value"] + 0.1  # one grid step above at most
    assert exact["value"] - grid["value"] <= 0.9 + 1e-9  # coarse grid, loose bound


def test_gibbs_two_molecule_normalization():
    payload = json.loads(run("gibbs", "--two-molecule").stdout)
    assert len(payload) == 9
    assert abs(sum(payload) - 1.0) < 1e-9
    csv = run("gibbs", "--two-molecule", "--format", "csv").stdout
    lines = csv.strip().splitlines()
    assert lines[0] == "label,p"
    assert len(lines) == 10


def test_check_reflexive_and_gibbs(tmp_path):
    state = tmp_path / "state.json"
    state.write_text("[0.3, 0.7, 0.0]")
    result = run("check", "--initial", str(state), "--final", str(state))
    assert result.stdout.strip() == "true"

    gibbs = json.loads(run("gibbs").stdout)
    final = tmp_path / "gibbs.json"
    final.write_text(json.dumps(gibbs))
    assert run("check", "--initial", str(state), "--final", str(final)).stdout.strip() == "true"
    assert run("check", "--initial", str(final), "--final", str(state)).stdout.strip() == "false"


def test_lorenz_knots_csv(tmp_path):
    state = tmp_path / "state.json"
    state.write_text(json.dumps({
        "diag": [0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0],
        "blocks": [{"i": 1, "j": 2, "re": 0.2, "im": 0.0}],
    }))
    result = run("lorenz", "--state", str(state))
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "x,y"
    assert len(lines) == 11  # 9 levels + origin + header
    x1, y1 = map(float, lines[2].split(","))
    assert abs(x1 - 0.0837432255922) < 1e-9
    assert abs(y1 - 0.55) < 1e-12


def test_positivity_error_names_the_block(tmp_path):
    state = tmp_path / "bad.json"
    state.write_text(json.dumps({
        "diag": [0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0],
        "blocks": [{"i": 1, "j": 2, "re": 0.6, "im": 0.0}],
    }))
    result = run("lorenz", "--state", str(state), expect=1)
    assert "positivity" in result.stderr
    assert result.stdout == ""


def test_length_mismatch_is_reported(tmp_path):
    state = tmp_path / "short.json"
    state.write_text("[0.5, 0.5, 0, 0, 0, 0, 0, 0]")  # 8 entries
    result = run("lorenz", "--state", str(state), expect=1)
    assert "8" in result.stderr


def test_usage_errors_exit_2():
    run("yield", "--def", "nonsense", expect=2)
    run("unknown-command", expect=2)
    run("fit-ridge", expect=2)  # missing required --map


def test_sweep_gap_csv_shape():
    result = run("sweep-gap", "--gap-min", "0", "--gap-max", "2", "--gap-step", "0.5")
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "beta_delta_e,qy_any_hi,qy_any_lo,qy_both_hi,qy_both_lo,qy_single"
    assert len(lines) == 6
    first = list(map(float, lines[1].split(",")))
    assert first[1] == 1.0  # zero gap saturates QY_any


def test_map2d_and_fit_ridge_pipeline(tmp_path):
    map_path = tmp_path / "map.csv"
    run("map2d", "--p-min", "0.1", "--p-max", "0.9", "--p-step", "0.1",
        "--gap-min", "0", "--gap-max", "5", "--gap-step", "0.25",
        "--out", str(map_path))
    ridge_path = tmp_path / "ridge.csv"
    result = run("fit-ridge", "--map", str(map_path), "--ridge-out", str(ridge_path))
    payload = json.loads(result.stdout)
    assert payload["p0"] > 0.0
    assert payload["residual"] >= 0.0
    ridge_lines = ridge_path.read_text().strip().splitlines()
    assert ridge_lines[0] == "p,beta_delta_e_star"
    assert len(ridge_lines) > 1


def test_byte_identical_reruns(tmp_path):
    args = ("sweep-gap", "--gap-min", "0", "--gap-max", "3", "--gap-step", "0.1")
    first = run(*args).stdout
    second = run(*args).stdout
    assert first == second

    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    run(*args, "--out", str(out_a))
    run(*args, "--out", str(out_b))
    assert out_a.read_bytes() == out_b.read_bytes()


def test_domain_error_exits_1():
    result = run("yield", "--def", "both", "--p", "0.7", "--lambda", "0.5", expect=1)
    assert "lam" in result.stderr


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
