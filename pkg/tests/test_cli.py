import json

import pytest

import cegis_lab
import run as entry
from utils.run_config import RunConfig, dump_run_config, load_run_config


def _lines(path):
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]


def test_run_writes_log_and_summary(tmp_path, capsys) -> None:
    code = cegis_lab.main(["run", "--family", "chain", "--target", "5", "--engine", "cegis", "--out", str(tmp_path)])
    assert code == cegis_lab.EXIT_OK
    lines = _lines(tmp_path / "chain-5-cegis-seed0.jsonl")
    assert len(lines) == 8
    assert lines[0] == {"iter": 1, "event": "conjecture", "trace_entry": 0, "trace_entry_decoded": None,
                        "candidate": "L_0", "verdict": "bottom", "cex": None, "cex_decoded": None}
    assert lines[6]["cex"] == 6 and lines[7]["event"] == "freeze"

    summary = json.loads((tmp_path / "chain-5-cegis-seed0.summary.json").read_text(encoding="utf-8"))
    assert summary["verdict"] == "converged(7)"
    assert summary["queries"] == sum(1 for line in lines if line["verdict"] is not None) == 7
    assert json.loads(capsys.readouterr().out.strip().splitlines()[-1]) == summary
    saved = load_run_config(tmp_path / "chain-5-cegis-seed0.toml")
    assert saved.target == "5" and saved.engine == "cegis"


@pytest.mark.parametrize("argv, expected", [
    (["--family", "chain", "--target", "5", "--engine", "hcegis"], cegis_lab.EXIT_STALLED),
    (["--family", "nosuch", "--target", "5"], cegis_lab.EXIT_FAILURE),
    (["--family", "chain", "--target", "99"], cegis_lab.EXIT_FAILURE),
    (["--family", "chain", "--target", "5", "--budget", "3"], cegis_lab.EXIT_BUDGET_EXHAUSTED),
    (["--family", "chain", "--target", "5", "--engine", "hcegis", "--initial", "bottom"], cegis_lab.EXIT_WRONG_LIMIT),
    (["--family", "chain", "--target", "5", "--strategy", "nosuch"], cegis_lab.EXIT_FAILURE),
    (["--family", "diagonal", "--target", "3", "--engine", "cegis", "--generalizer", "diag"], cegis_lab.EXIT_FAILURE),
    (["--family", "gold", "--target", "17", "--generalizer", "chain"], cegis_lab.EXIT_FAILURE),
    (["--family", "gold", "--target", "17", "--engine", "simulated-mincegis"], cegis_lab.EXIT_OK),
    (["--family", "diagonal", "--target", "[[0,2],[0,5],[1,7]]", "--engine", "hcegis"], cegis_lab.EXIT_OK),
    (["--family", "rectangle", "--target", "-1,1,-1,1", "--engine", "mincegis", "--budget", "300"], cegis_lab.EXIT_OK),
])
def test_run_exit_codes(tmp_path, argv, expected) -> None:
    assert cegis_lab.main(["run", *argv, "--out", str(tmp_path)]) == expected


def test_argument_errors_exit_with_failure(tmp_path) -> None:
    assert cegis_lab.main([]) == cegis_lab.EXIT_FAILURE
    assert cegis_lab.main(["run", "--budget", "many"]) == cegis_lab.EXIT_FAILURE
    assert cegis_lab.main(["run", "--config", str(tmp_path / "missing.toml")]) == cegis_lab.EXIT_FAILURE


def test_replay_is_byte_identical(tmp_path) -> None:
    argv = ["run", "--family", "chain", "--target", "7", "--schedule", "padded-seeded", "--seed", "3",
            "--strategy", "seeded-random", "--engine", "simulated-mincegis"]
    assert cegis_lab.main([*argv, "--out", str(tmp_path / "a")]) == cegis_lab.EXIT_OK
    assert cegis_lab.main([*argv, "--out", str(tmp_path / "b")]) == cegis_lab.EXIT_OK
    name = "chain-7-simulated-mincegis-seed3.jsonl"
    first, second = (tmp_path / "a" / name).read_bytes(), (tmp_path / "b" / name).read_bytes()
    assert first == second
    assert any(line.get("state", {}).get("case") == "2.1" for line in _lines(tmp_path / "a" / name))


def test_config_files_and_overrides(tmp_path) -> None:
    run_config = RunConfig(family="gold", target="17", engine="mincegis", seed=4, budget=30)
    path = dump_run_config(run_config, tmp_path / "gold.toml")
    assert load_run_config(path) == run_config
    assert cegis_lab.main(["run", "--config", str(path), "--out", str(tmp_path)]) == cegis_lab.EXIT_OK
    assert cegis_lab.main(["run", "--config", str(path), "--budget", "0", "--out", str(tmp_path)]) \
        == cegis_lab.EXIT_BUDGET_EXHAUSTED

    json_path = tmp_path / "fin.json"
    json_path.write_text(json.dumps({"family": "diagonal", "target": [[0, 2], [1, 7]], "engine": "hcegis"}),
                         encoding="utf-8")
    loaded = load_run_config(json_path)
    assert loaded.target == "[[0, 2], [1, 7]]"
    assert cegis_lab.main(["run", "--config", str(json_path), "--out", str(tmp_path)]) == cegis_lab.EXIT_OK

    bad = tmp_path / "bad.toml"
    bad.write_text('family = "chain"\ncolour = "blue"\n', encoding="utf-8")
    assert cegis_lab.main(["run", "--config", str(bad)]) == cegis_lab.EXIT_FAILURE


def test_output_dir_from_environment(tmp_path, monkeypatch) -> None:
    monkeypatch.setenv("CEGIS_LAB_LOG_DIR", str(tmp_path / "env"))
    assert cegis_lab.main(["run", "--family", "gold", "--target", "full"]) == cegis_lab.EXIT_OK
    assert (tmp_path / "env" / "gold-full-cegis-seed0.jsonl").is_file()


def test_demos_and_table(tmp_path) -> None:
    out = str(tmp_path)
    assert cegis_lab.main(["table", "--out", out]) == cegis_lab.EXIT_FAILURE
    assert cegis_lab.main(["demo", "lemma1", "--imax", "4", "--out", out]) == cegis_lab.EXIT_OK
    assert cegis_lab.main(["demo", "gold", "--out", out]) == cegis_lab.EXIT_OK
    assert cegis_lab.main(["demo", "rectangle", "--budget", "600", "--out", out]) == cegis_lab.EXIT_OK
    assert cegis_lab.main(["demo", "nosuch", "--out", out]) == cegis_lab.EXIT_FAILURE
    assert cegis_lab.main(["demo", "lemma1", "--imax", "30", "--out", str(tmp_path / "x")]) == cegis_lab.EXIT_FAILURE
    for name in ("lemma1", "gold", "rectangle"):
        assert (tmp_path / f"{name}.json").is_file()
        assert (tmp_path / f"{name}.md").is_file()
        assert _lines(tmp_path / f"{name}.jsonl")

    assert cegis_lab.main(["table", "--out", out]) == cegis_lab.EXIT_OK
    table = (tmp_path / "table.md").read_text(encoding="utf-8")
    assert all(f"| {name} |" in table for name in ("lemma1", "gold", "rectangle"))


def test_demo_logs_are_byte_identical_across_runs(tmp_path) -> None:
    demos = (["lemma1", "--imax", "4"], ["gold"], ["rectangle", "--budget", "600"])
    for name in ("first", "second"):
        for argv in demos:
            assert cegis_lab.main(["demo", *argv, "--out", str(tmp_path / name)]) == cegis_lab.EXIT_OK
    for demo in ("lemma1", "gold", "rectangle"):
        first = (tmp_path / "first" / f"{demo}.jsonl").read_bytes()
        assert first
        assert first == (tmp_path / "second" / f"{demo}.jsonl").read_bytes()
        assert (tmp_path / "first" / f"{demo}.json").read_bytes() == (tmp_path / "second" / f"{demo}.json").read_bytes()


def test_entry_point(tmp_path, monkeypatch) -> None:
    monkeypatch.chdir(tmp_path)
    assert entry.main(["run", "--family", "chain", "--target", "2", "--out", str(tmp_path)]) == cegis_lab.EXIT_OK
    assert entry.main(["table", "--out", str(tmp_path / "empty")]) == cegis_lab.EXIT_FAILURE
