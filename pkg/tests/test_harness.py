import json
import time

import pytest

import config
from core.errors import ConfigError
from core.pairing import encode_point, pair_encode
from core.trace import Trace, trace_generate
from engines import chain_generalizer, gold_generalizer, rectangle_generalizer, run_engine
from families import GOLD_FULL
from harness import (
    RunStatus, convergence_verdict, default_budget, default_window, demo_gold, demo_lemma1, demo_lemma2,
    demo_rectangle, demo_theorem1, indistinguishability_demo, write_report,
)
from harness.report import (
    IndistinguishabilityRow, JsonlSink, RunRow, SeparationReport, render_table, run_log_text,
)
from utils import logger


def test_convergence_verdict_examples(chain, gold) -> None:
    target = chain.chain_language(5)
    trace = trace_generate(target, "canonical", length=100)
    run = run_engine("cegis", chain, target, trace, chain_generalizer(chain), budget=100)
    verdict = convergence_verdict(run, target)
    assert verdict.label() == "converged(7)"

    stalled = run_engine("hcegis", chain, target, trace, chain_generalizer(chain, "top"), budget=100)
    assert convergence_verdict(stalled, target).label() == "stalled"

    empty = run_engine("cegis", chain, target, trace, chain_generalizer(chain), budget=0)
    assert convergence_verdict(empty, target).label() == "budget-exhausted"

    with pytest.raises(ConfigError):
        convergence_verdict(run, target, stability_window=0)

    assert default_window(target) == 12
    assert default_window(gold.gold_language(GOLD_FULL)) == 82
    assert default_budget(chain) == 260


def test_full_target_converges_through_the_window(gold) -> None:
    target = gold.gold_language(GOLD_FULL)
    trace = trace_generate(target, "canonical", length=100)
    run = run_engine("cegis", gold, target, trace, gold_generalizer(gold), budget=100)
    assert not run.halted and run.settled
    verdict = convergence_verdict(run, target)
    assert verdict.status == RunStatus.CONVERGED
    assert verdict.converged_at == 1
    short = run_engine("cegis", gold, target, trace, gold_generalizer(gold), budget=50)
    assert convergence_verdict(short, target).status == RunStatus.BUDGET_EXHAUSTED


def test_demo_lemma1() -> None:
    report = demo_lemma1(i_max=8)
    assert report.passed
    assert report.identified("cegis") and not report.identified("hcegis")
    cegis_rows = [row for row in report.rows if row.variant == "cegis"]
    assert [row.queries for row in cegis_rows] == [i + 2 for i in range(9)]
    assert all(row.status == "stalled" for row in report.rows if row.variant == "hcegis")
    with pytest.raises(ConfigError):
        demo_lemma1(i_max=30)


def test_demo_gold() -> None:
    report = demo_gold(indices=[17])
    assert report.passed
    minus = [row for row in report.rows if row.target == "V*-{17}"]
    cegis_row = next(row for row in minus if row.variant == "cegis")
    assert cegis_row.detail["distinct_conjectures"] == 2
    ablation_row = next(row for row in minus if row.variant == "positive-only")
    assert ablation_row.status == "stalled" and not ablation_row.semantic_match


def test_indistinguishability_demo() -> None:
    row = indistinguishability_demo([pair_encode(0, 2)], 7, 9)
    assert row.skipped is None
    assert row.logs_identical and row.targets_differ
    assert row.match_d and not row.match_d_prime
    assert row.ok

    idle = indistinguishability_demo([pair_encode(0, 2)], 7, 9, budget=0)
    assert idle.logs_identical and idle.ok

    with pytest.raises(ConfigError):
        indistinguishability_demo([pair_encode(0, 9)], 7, 9)


def test_crafted_pairs_identify_the_smaller_target() -> None:
    for pairs, z1, z2 in config.LEMMA2_CRAFTED:
        row = indistinguishability_demo([pair_encode(j, n) for j, n in pairs], z1, z2)
        assert row.skipped is None
        assert row.logs_identical and row.targets_differ
        assert row.match_d and not row.match_d_prime
        assert row.final_d == row.target_d


def test_demo_lemma2(tmp_path) -> None:
    sink = JsonlSink(tmp_path / "lemma2.jsonl")
    report = demo_lemma2(sink=sink)
    assert report.passed
    assert report.identified("hcegis") and not report.identified("cegis")
    assert all(pair.ok for pair in report.pairs)
    lines = (tmp_path / "lemma2.jsonl").read_text(encoding="utf-8").splitlines()
    assert len(lines) == sink.lines > 0
    assert {"run", "iter", "event", "candidate", "verdict", "cex"} <= set(json.loads(lines[0]))


def test_separation_report_needs_enough_completed_pairs() -> None:
    rows = [RunRow(family="diagonal", target="diag_1", variant="hcegis", status="converged",
                   converged_at=1, semantic_match=True, queries=1, counterexamples=0, final="diag_1")]

    def pair(skipped=None):
        return IndistinguishabilityRow(base=[5], z1=7, z2=9, target_d="a", target_d_prime="b",
                                       logs_identical=True, targets_differ=True, match_d=True, skipped=skipped)

    report = SeparationReport(name="lemma2", family="diagonal", rows=rows, expected={"hcegis": True},
                              pairs=[pair() for _ in range(4)] + [pair("无可用反例")], min_pairs=5)
    assert report.completed_pairs == 4
    assert not report.passed
    assert report.to_dict()["completed_pairs"] == 4

    report.pairs.append(pair())
    assert report.passed

    skipped = SeparationReport(name="lemma2", family="diagonal", rows=rows, expected={"hcegis": True},
                               pairs=[pair("无可用反例")], min_pairs=1)
    assert not skipped.passed


def test_demo_theorem1_on_chain_and_gold() -> None:
    report = demo_theorem1(families=("chain", "gold"), seeds=[0, 1])
    assert report.passed
    assert len(report.pairs) == 2 * (21 + 3)
    with pytest.raises(ConfigError):
        demo_theorem1(families=("diagonal",))


def test_default_theorem1_matrix_within_a_minute(tmp_path) -> None:
    logger.reset_logging()
    logger.setup_logging(log_level=logger.LOG_LEVEL_INFO, log_dir=str(tmp_path / "logs"), console_output=False)
    started = time.perf_counter()
    report = demo_theorem1()
    elapsed = time.perf_counter() - started
    assert report.passed
    assert len(report.pairs) == (21 + 1 + config.THEOREM1_RANDOM_RECTS + 3) * len(config.THEOREM1_SEEDS)
    assert elapsed < 60


def test_demo_rectangle(tmp_path) -> None:
    report = demo_rectangle(budget=600)
    assert report.passed
    assert report.notes["first_counterexample"] == [-2, 0]
    assert report.notes["first_radial_key"] == 4
    assert report.notes["counterexamples"] == [[-2, 0], [0, -2], [0, 2], [2, 0]]

    json_path, md_path = write_report(report, tmp_path)
    data = json.loads(json_path.read_text(encoding="utf-8"))
    assert data["kind"] == "equivalence" and data["passed"]
    assert "rectangle" in md_path.read_text(encoding="utf-8")
    assert "| rectangle | equivalence | 是 |" in render_table([data])


def test_run_log_text_is_deterministic(rect) -> None:
    target = rect.rectangle_language(0, 2, 0, 1)
    trace = Trace(tuple(encode_point(x, y) for x in range(3) for y in range(2)))
    texts = set()
    for _ in range(2):
        run = run_engine("mincegis", rect, target, trace, rectangle_generalizer(rect), budget=40)
        texts.add(run_log_text(run))
    assert len(texts) == 1
