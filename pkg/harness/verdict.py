"""
有限运行上的收敛判定：稳定窗口 + 最后一次回答为 ⊥，语义匹配单独报告
"""
from dataclasses import dataclass
from enum import Enum

import config
from core.errors import ConfigError
from core.family import IndexedFamily
from core.language import Language
from engines.records import EngineRun


class RunStatus(str, Enum):
    CONVERGED = "converged"
    STALLED = "stalled"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class RunVerdict:
    status: RunStatus
    semantic_match: bool
    converged_at: int | None = None

    @property
    def converged(self) -> bool:
        return self.status == RunStatus.CONVERGED

    def label(self) -> str:
        if self.converged:
            return f"converged({self.converged_at})"
        return self.status.value


def default_budget(family: IndexedFamily) -> int:
    return config.BUDGET_FACTOR * family.universe_bound


def default_window(target: Language) -> int:
    return max(1, 2 * min(len(target.member_set), config.STABILITY_WINDOW_CAP))


def _settled_since(run: EngineRun) -> int:
    """最终猜测从哪次迭代起保持不变（语义上）"""
    family, final = run.family, run.final
    k = len(run.conjectures) - 1
    while k > 0 and family.equivalent(run.conjectures[k - 1], final):
        k -= 1
    return max(k, 1)


def convergence_verdict(run: EngineRun, target: Language, stability_window: int | None = None) -> RunVerdict:
    """
    判定一次运行的结果
    Args:
        run: 引擎运行
        target: 目标语言，只用于计算语义匹配
        stability_window: 稳定窗口，缺省为 2 * min(目标成员数, 50)

    Returns:
        RunVerdict
    """
    window = default_window(target) if stability_window is None else stability_window
    if window < 1:
        raise ConfigError(f"稳定窗口必须 >= 1，实际为 {window}")
    family = run.family
    semantic_match = family.language_of(run.final).same_as(target)
    if run.iterations == 0:
        return RunVerdict(RunStatus.BUDGET_EXHAUSTED, semantic_match)

    first = run.conjectures[0]
    constant = all(family.equivalent(first, program) for program in run.conjectures[1:])
    if constant and not run.counterexamples and not semantic_match:
        return RunVerdict(RunStatus.STALLED, semantic_match)

    if run.halted:
        return RunVerdict(RunStatus.CONVERGED, semantic_match, _settled_since(run))

    if run.iterations >= window and run.settled:
        tail = run.conjectures[-window:]
        if all(family.equivalent(program, run.final) for program in tail):
            return RunVerdict(RunStatus.CONVERGED, semantic_match, _settled_since(run))
    return RunVerdict(RunStatus.BUDGET_EXHAUSTED, semantic_match)
