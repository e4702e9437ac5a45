import pytest

from core.errors import ConfigError, EngineFaultError, InvalidExampleError
from core.pairing import decode_point, pair_encode
from core.trace import Trace, trace_generate
from engines import (
    EngineVariant, Event, Generalizer, chain_generalizer, diag_generalizer, gold_generalizer, rectangle_generalizer,
    run_engine,
)
from families import CHAIN_TOP, GOLD_FULL
from harness.verdict import RunStatus, convergence_verdict


def _canonical(language, length):
    return trace_generate(language, "canonical", length=length)


def test_cegis_identifies_chain_target(chain) -> None:
    target = chain.chain_language(5)
    run = run_engine("cegis", chain, target, _canonical(target, 100), chain_generalizer(chain), budget=100)
    proposals = [record.program.index for record in run.records if record.event == Event.CONJECTURE]
    assert proposals == [0, 1, 2, 3, 4, 5, 6]
    assert run.counterexamples == [6]
    assert run.final.index == 5 and run.halted
    assert run.queries == 7
    assert [record.event for record in run.records][-1] == Event.FREEZE
    assert len(run.records) == 8
    verdict = convergence_verdict(run, target)
    assert verdict.status == RunStatus.CONVERGED
    assert verdict.converged_at == 7
    assert verdict.semantic_match


def test_chain_query_count_is_index_plus_two(chain) -> None:
    for i in range(21):
        target = chain.chain_language(i)
        run = run_engine(EngineVariant.CEGIS, chain, target, _canonical(target, 100), chain_generalizer(chain),
                         budget=100)
        assert run.queries == i + 2
        assert chain.language_of(run.final).same_as(target)


@pytest.mark.parametrize("initial", ["top", "bottom"])
@pytest.mark.parametrize("schedule", ["canonical", "padded-seeded"])
def test_hcegis_never_sees_a_chain_counterexample(chain, initial, schedule) -> None:
    for i in (0, 5, 13, 20):
        target = chain.chain_language(i)
        trace = trace_generate(target, schedule, seed=i, length=80)
        run = run_engine("hcegis", chain, target, trace, chain_generalizer(chain, initial), budget=80)
        assert run.counterexamples == []
        assert all(record.verdict.is_bottom for record in run.records)


def test_hcegis_stalls_on_chain_from_top(chain) -> None:
    target = chain.chain_language(5)
    run = run_engine("hcegis", chain, target, _canonical(target, 100), chain_generalizer(chain, "top"), budget=100)
    assert run.final.index == CHAIN_TOP
    verdict = convergence_verdict(run, target)
    assert verdict.status == RunStatus.STALLED
    assert not verdict.semantic_match


def test_mincegis_learns_the_rectangle(rect) -> None:
    target = rect.rectangle_language(-1, 1, -1, 1)
    run = run_engine("mincegis", rect, target, _canonical(target, 500), rectangle_generalizer(rect), budget=500)
    assert [decode_point(c) for c in run.counterexamples] == [(-2, 0), (0, -2), (0, 2), (2, 0)]
    assert run.final.index == (-1, 1, -1, 1)
    verdict = convergence_verdict(run, target)
    assert verdict.status == RunStatus.CONVERGED and verdict.semantic_match
    # 最小反例同样满足任意反例验证器的约定
    for record in run.records:
        if record.verdict.refutes:
            candidate = rect.language_of(record.program)
            assert candidate.contains(record.verdict.counterexample)
            assert not target.contains(record.verdict.counterexample)


def test_hcegis_learns_diag_targets(diag) -> None:
    target = diag.diag_language(3)
    trace = Trace((pair_encode(0, 5), pair_encode(0, 3)))
    run = run_engine("hcegis", diag, target, trace, diag_generalizer(diag), budget=100)
    assert [program.index for program in run.conjectures[:3]] == [("diag", 0), ("diag", 5), ("diag", 3)]
    verdict = convergence_verdict(run, target)
    assert verdict.status == RunStatus.CONVERGED and verdict.semantic_match


def test_hcegis_learns_fin_targets_with_probes(diag) -> None:
    target = diag.fin_language({(0, 2), (0, 5), (1, 7)})
    run = run_engine("hcegis", diag, target, _canonical(target, 100), diag_generalizer(diag), budget=100)
    probes = [record for record in run.records if record.event == Event.PROBE]
    assert len(probes) == pair_encode(1, 7)
    assert {record.iteration for record in probes} == {3}
    assert diag.language_of(run.final).same_as(target)
    assert convergence_verdict(run, target).converged


def test_positive_only_gold_never_moves(gold) -> None:
    target = gold.gold_language(17)
    run = run_engine("cegis", gold, target, _canonical(target, 50), gold_generalizer(gold), budget=50,
                     positive_only=True)
    assert run.final.index == GOLD_FULL
    assert run.counterexamples == []
    assert convergence_verdict(run, target).status == RunStatus.STALLED


def test_gold_cegis_converges_in_two_conjectures(gold) -> None:
    target = gold.gold_language(17)
    run = run_engine("cegis", gold, target, _canonical(target, 50), gold_generalizer(gold), budget=50)
    assert [program.index for program in run.conjectures] == [GOLD_FULL, ("minus", 17)]
    assert run.halted


def test_budget_zero_and_bad_inputs(chain, diag) -> None:
    target = chain.chain_language(2)
    run = run_engine("cegis", chain, target, _canonical(target, 5), chain_generalizer(chain), budget=0)
    assert run.records == [] and run.final == chain.program(0)
    assert convergence_verdict(run, target).status == RunStatus.BUDGET_EXHAUSTED

    with pytest.raises(InvalidExampleError):
        run_engine("cegis", chain, target, Trace((0, 9)), chain_generalizer(chain), budget=5)
    with pytest.raises(ConfigError):
        run_engine("cegis", diag, diag.diag_language(1), Trace(()), diag_generalizer(diag), budget=5)
    with pytest.raises(ValueError):
        run_engine("nosuch", chain, target, Trace(()), chain_generalizer(chain), budget=5)


class EscapingGeneralizer(Generalizer):
    name = "escaping"

    @property
    def initial(self):
        return self.family.program(0)

    def step(self, previous, entry, verdict, probe=None):
        return self.family.program(99)


def test_unrepresentable_conjecture_is_an_engine_fault(chain) -> None:
    target = chain.chain_language(2)
    with pytest.raises(EngineFaultError):
        run_engine("cegis", chain, target, _canonical(target, 5), EscapingGeneralizer(chain), budget=5)
