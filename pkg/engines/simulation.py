"""
只用任意反例验证器模拟 MinCEGIS

维护最小反例表 lce：对当前猜测先问一次 CHECK；有反例但最小反例未知时，
依次用 L(P_last) ∩ {u_μ} 探测（u 是按候选语言序排列的全集），第一个被反驳的探测
就是最小反例。迹元素每个微步进入 backlog，已知最小反例的前缀用 F 重放
"""
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from core.errors import ConfigError, InconsistentOracleError
from core.family import IndexedFamily
from core.language import Language
from core.program import Program
from core.trace import Trace, TraceEntry
from engines.generalizers import Generalizer
from engines.records import EngineRun, EngineVariant, Event, IterationRecord
from utils import logger
from verifiers.oracle import check
from verifiers.strategy import FIRST_FOUND, CexStrategy
from verifiers.verdict import BOTTOM, Verdict


class LceBottom(Enum):
    """lce 表里的 ⊥：已确认没有反例"""
    BOTTOM = "bottom"


LCE_BOTTOM = LceBottom.BOTTOM


class LceMap(dict):
    """
    Program -> 最小反例 | LCE_BOTTOM；缺省即 ⊤（未知）
    """

    def knows(self, program: Program) -> bool:
        return program in self

    def verdict_for(self, program: Program) -> Verdict:
        value = self[program]
        return BOTTOM if value is LCE_BOTTOM else Verdict(value)


@dataclass(frozen=True)
class Undefined:
    """重放在 at 处遇到 ⊤"""
    at: Program


@dataclass
class SimState:
    lce: LceMap
    p_sim: Program
    p_last: Program
    mu: int = 0
    backlog: deque = field(default_factory=deque)
    done_len: int = 0

    @property
    def probing(self) -> bool:
        return self.p_sim != self.p_last

    def snapshot(self) -> dict:
        return {"done_len": self.done_len, "mu": self.mu, "backlog_len": len(self.backlog)}


def replay_longest(lce: LceMap, start: Program, entries, generalizer: Generalizer) -> tuple[Program, int]:
    """
    从 start 出发尽量重放，返回 (停下的程序, 消费的元素个数)
    """
    program = start
    consumed = 0
    for entry in entries:
        if not lce.knows(program):
            break
        program = generalizer.step(program, entry, lce.verdict_for(program))
        consumed += 1
    return program, consumed


def t_lce_replay(lce: LceMap, p0: Program, prefix, generalizer: Generalizer) -> Program | Undefined:
    """
    T_lce(P0, τ[n])：用表中的最小反例代替验证器重放 MinCEGIS 递归
    Args:
        lce: 最小反例表
        p0: 起点程序
        prefix: 迹前缀
        generalizer: 归纳泛化器 F

    Returns:
        重放终点；中途某个程序的 lce 为 ⊤ 时返回 Undefined(at=该程序)
    """
    entries = tuple(prefix)
    program, consumed = replay_longest(lce, p0, entries, generalizer)
    if consumed < len(entries):
        return Undefined(at=program)
    return program


def _replay_backlog(state: SimState, generalizer: Generalizer) -> int:
    program, consumed = replay_longest(state.lce, state.p_last, state.backlog, generalizer)
    for _ in range(consumed):
        state.backlog.popleft()
    state.done_len += consumed
    state.p_last = program
    state.p_sim = program
    state.mu = 0
    return consumed


def simulate_min_via_arbitrary(family: IndexedFamily, target: Language, trace: Trace, generalizer: Generalizer,
                               strategy: CexStrategy = FIRST_FOUND, budget: int = 0) -> EngineRun:
    """
    用 CHECK 模拟 MinCEGIS，每个微步恰好一次 CHECK、消费一个迹元素
    Args:
        family: 候选程序所在的族
        target: 目标语言
        trace: 正例迹
        generalizer: 与直接 MinCEGIS 相同的 F
        strategy: CHECK 的反例选择策略，任意策略都不影响结果
        budget: 微步上限

    Returns:
        EngineRun，conjectures 记录每个微步之后的 P_last，state 是最终的 SimState
    """
    if generalizer.needs_probe:
        raise ConfigError(f"泛化器 {generalizer.name} 依赖历史有界探测，不能用于模拟")
    initial = generalizer.initial
    family.ensure_representable(initial)
    universe = family.ordered_universe()
    state = SimState(lce=LceMap(), p_sim=initial, p_last=initial)
    run = EngineRun(variant=EngineVariant.SIMULATED_MINCEGIS, family=family, initial=initial,
                    budget=budget, conjectures=[initial], state=state)
    logger.info(f"模拟MinCEGIS开始: 族 {family.name}, 目标 {target.descriptor}, "
                f"策略 {strategy.describe()}, 预算 {budget}")

    for m in range(1, budget + 1):
        entry: TraceEntry = trace.entry_at(m)
        queried = state.p_sim
        verdict = check(family.language_of(queried), target, strategy)
        state.backlog.append(entry)

        replayed = 0
        if not state.probing:
            if verdict.refutes and state.lce.knows(queried):
                case = "1.1.1"
                replayed = _replay_backlog(state, generalizer)
            elif verdict.refutes:
                case = "1.1.2"
                state.mu = 0
                state.p_sim = state.p_last.restricted_to(universe[0])
            else:
                case = "1.2"
                state.lce[queried] = LCE_BOTTOM
                replayed = _replay_backlog(state, generalizer)
        elif verdict.refutes:
            case = "2.1"
            expected = universe[state.mu]
            if verdict.counterexample != expected:
                raise InconsistentOracleError(f"探测 {family.describe(queried)} 的反例 {verdict.counterexample} "
                                              f"不是唯一元素 {expected}")
            state.lce[state.p_last] = expected
            replayed = _replay_backlog(state, generalizer)
        else:
            case = "2.2"
            state.mu += 1
            if state.mu >= len(universe):
                raise InconsistentOracleError(f"{family.describe(state.p_last)} 被反驳但全集内找不到最小反例")
            state.p_sim = state.p_last.restricted_to(universe[state.mu])

        run.records.append(IterationRecord(
            iteration=m, trace_entry=entry, candidate=family.describe(queried), verdict=verdict,
            event=Event.PROBE if queried.is_probe else Event.CONJECTURE, program=queried,
            note={"case": case, **state.snapshot()},
        ))
        if replayed:
            run.records.append(IterationRecord(
                iteration=m, trace_entry=None, candidate=family.describe(state.p_last), verdict=None,
                event=Event.REPLAY, program=state.p_last, note={"consumed": replayed, **state.snapshot()},
            ))
        logger.debug(f"微步 {m}: case {case} 查询 {family.describe(queried)} -> {verdict.label()}, "
                     f"P_last={family.describe(state.p_last)} μ={state.mu} done={state.done_len}")
        run.conjectures.append(state.p_last)

        if not state.probing and generalizer.is_terminal(state.p_last):
            run.records.append(IterationRecord(
                iteration=m, trace_entry=None, candidate=family.describe(state.p_last),
                verdict=None, event=Event.FREEZE, program=state.p_last,
            ))
            run.halted = True
            break

    run.settled = not state.probing and state.lce.get(state.p_last) is LCE_BOTTOM
    logger.info(f"模拟MinCEGIS结束: {run.iterations} 个微步, 已确认前缀 {state.done_len}, "
                f"lce 表 {len(state.lce)} 项, 最终 {family.describe(run.final)}")
    return run
