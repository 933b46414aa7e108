import csv
import io
import json

import pytest

from censorgame.cli import (
    EXIT_FAULT,
    EXIT_GOLDEN,
    EXIT_OK,
    EXIT_USAGE,
    ConfigError,
    RunConfig,
    main,
    parse_values,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_reports_budgets(capsys):
    code, out, _ = run(capsys, "solve", "-T", "50000", "-N", "60", "-s", "1000", "-k", "60",
                       "-A", "1e10", "--unit", "USD")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["required_defender_budget"] == pytest.approx(5.6e6, rel=0.01)
    assert rep["required_defender_budget_no_specials"] == pytest.approx(1.2e7, rel=0.01)
    assert rep["unit"] == "USD"
    assert {"lower_bound", "upper_bound", "asymptotic_gap"} <= set(rep)


def test_solve_exact(capsys):
    code, out, _ = run(capsys, "solve", "-T", "3", "-N", "2", "-s", "1", "-k", "2", "--exact")
    assert json.loads(out)["coefficient_exact"] == "5/4"


def test_bids_paths(capsys):
    code, out, _ = run(capsys, "bids", "-T", "3", "-N", "2", "--schedule", "SRR", "-k", "2",
                       "-D", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    first = rows[0]
    assert first["round_type"] == "S"
    assert float(first["other_type_bid"]) == pytest.approx(7 / 12)
    assert {r["path"] for r in rows} == {"defender_wins", "attacker_censors"}


def test_bids_single_win_spends_everything(capsys):
    code, out, _ = run(capsys, "bids", "-T", "4", "-N", "1", "-D", "2")
    rows = json.loads(out)["rows"]
    assert all(r["fraction"] == 1.0 for r in rows)


def test_bids_all_rounds_needed(capsys):
    code, out, _ = run(capsys, "bids", "-T", "2", "-N", "2", "-A", "0.4", "-D", "1")
    rows = [r for r in json.loads(out)["rows"] if r["path"] == "defender_wins"]
    assert rows[0]["bid"] == pytest.approx(0.4, abs=1e-8) and rows[0]["bid"] > 0.4
    assert rows[1]["bid"] > 0.4


def test_bids_paging(capsys):
    code, _, err = run(capsys, "bids", "-T", "20000", "-N", "10", "-D", "1")
    assert code == EXIT_USAGE and "--limit" in err
    code, out, _ = run(capsys, "bids", "-T", "20000", "-N", "10", "-D", "1", "--limit", "3",
                       "--offset", "2")
    assert [r["round"] for r in json.loads(out)["rows"]] == [2, 3, 4]


def test_simulate_games(capsys):
    code, out, _ = run(capsys, "simulate", "--game", "G1", "-T", "2", "-N", "1", "-D", "1",
                       "-A", "2")
    assert json.loads(out)["outcome"] == "attacker_won"
    args = ("simulate", "--game", "G1KP", "-T", "100", "-N", "5", "-k", "60", "-p", "0.02",
            "-D", "1", "-A", "1", "--trials", "30", "--seed", "4")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]
    code, out, _ = run(capsys, "simulate", "--game", "GM", "-T", "1000", "-N", "20", "-m", "4",
                       "-D", "1", "-A", "184", "--trials", "500",
                       "--attacker", '{"kind": "proportional", "ratio": 0.9}')
    assert json.loads(out)["estimated_win_rate"] == 1.0


def test_strategy_fault_exit(capsys):
    # the conditional rule needs b < B, so this offer aborts the run
    code, _, err = run(capsys, "simulate", "--game", "GM", "-T", "10", "-N", "2", "-m", "3",
                       "-D", "1", "-A", "1", "--mechanism", "conditional", "--trials", "5",
                       "--defender", '{"kind": "constant", "B": 0.1, "b": 0.2}')
    assert code == EXIT_FAULT and "strategy fault" in err


def test_config_errors(capsys):
    assert run(capsys, "solve", "-T", "5", "-N", "9")[0] == EXIT_USAGE
    assert run(capsys, "solve", "-T", "5")[0] == EXIT_USAGE
    assert run(capsys, "simulate", "--game", "G1KP", "-T", "5", "-N", "2", "-D", "1",
               "-A", "1")[0] == EXIT_USAGE
    assert run(capsys, "solve", "--config", "/nonexistent.json")[0] == EXIT_USAGE


def test_config_file(tmp_path, capsys):
    cfg = {"schema_version": 1, "game": "G1K",
           "params": {"total_rounds": 3, "required_wins": 2, "special_factor": 2,
                      "defender_budget": 1, "attacker_budget": 1.3},
           "schedule": {"string": "SRR"}, "output": {"format": "json"}}
    path = tmp_path / "run.json"
    path.write_text(json.dumps(cfg))
    code, out, _ = run(capsys, "simulate", "--config", str(path))
    assert json.loads(out)["outcome"] == "attacker_won"
    # flags override the file
    code, out, _ = run(capsys, "simulate", "--config", str(path), "-A", "1.2")
    assert json.loads(out)["outcome"] == "defender_won"


def test_config_validation():
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"schema_version": 2})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"schedule": {"string": "SR", "specials": 1}})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"colour": "blue"})


def test_parse_values():
    assert parse_values("100:1000:100", int) == list(range(100, 1001, 100))
    assert parse_values("1,2,5") == [1.0, 2.0, 5.0]
    assert parse_values([3, 4], int) == [3, 4]
    assert parse_values("0.1:0.3:0.1") == pytest.approx([0.1, 0.2, 0.3])
    with pytest.raises(ConfigError):
        parse_values("1:2")


def test_sweep_threshold_grid(capsys):
    code, out, _ = run(capsys, "sweep", "--t-values", "100:1000:100", "--n-values", "10",
                       "--s-per-t", "0.02", "--k-values", "60")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 10
    code, out, _ = run(capsys, "sweep", "--t-values", "5:40:5", "--n-values", "1,3,5",
                       "--s-values", "0,2", "--k-values", "1")
    for r in csv.DictReader(io.StringIO(out)):
        t, n = int(r["t"]), int(r["n"])
        assert float(r["coefficient"]) == pytest.approx((t - n + 1) / n, rel=1e-12)


def test_sweep_equilibria(capsys):
    code, out, _ = run(capsys, "sweep", "--m-values", "2:8:1", "--B-values", "1",
                       "--c-values", "0.6")
    ps = [float(r["p"]) for r in csv.DictReader(io.StringIO(out))]
    assert len(ps) == 7 and ps == sorted(ps, reverse=True)


def test_sweep_too_large(capsys):
    code, _, err = run(capsys, "sweep", "--t-values", "1:100000:1", "--n-values", "1:200:1",
                       "--k-values", "1")
    assert code == EXIT_USAGE and "limit" in err


def test_eval_exit_code(capsys):
    code, out, _ = run(capsys, "eval")
    lines = out.strip().splitlines()
    assert len(lines) == 9
    expected = EXIT_OK if all(l.startswith("PASS") for l in lines) else EXIT_GOLDEN
    assert code == expected


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--schedule", "RRR", "-N", "2", "-D", "4", "-A", "4")
    rep = json.loads(out)
    assert rep["winner"] == "attacker" and rep["threshold"] == 4
    assert rep["solver_prediction"] == "attacker"
    assert run(capsys, "oracle", "--schedule", "RRR", "-N", "2")[0] == EXIT_USAGE


def test_out_file_and_no_color(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    path = tmp_path / "s.json"
    code, out, _ = run(capsys, "solve", "-T", "10", "-N", "3", "--out", str(path))
    assert code == EXIT_OK and out == ""
    text = path.read_text()
    assert "\x1b[" not in text and json.loads(text)["coefficient"] == pytest.approx(8 / 3)
