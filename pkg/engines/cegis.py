"""
通用CEGIS递归 P_n = F(P_{n-1}, τ(n), cex(n))，三种变体只差在验证器
"""
from core.errors import ConfigError, InvalidExampleError
from core.family import IndexedFamily
from core.language import Language
from core.trace import Trace
from engines.generalizers import Generalizer
from engines.records import EngineRun, EngineVariant, Event, IterationRecord
from utils import logger
from verifiers.oracle import check, hcheck, mincheck
from verifiers.strategy import FIRST_FOUND, CexStrategy
from verifiers.verdict import BOTTOM, Verdict


def _query(variant: EngineVariant, candidate: Language, target: Language,
           strategy: CexStrategy, trace: Trace, consumed: int) -> Verdict:
    if variant == EngineVariant.CEGIS:
        return check(candidate, target, strategy)
    if variant == EngineVariant.MINCEGIS:
        return mincheck(candidate, target)
    return hcheck(candidate, target, trace.prefix(consumed))


def run_engine(variant: EngineVariant | str, family: IndexedFamily, target: Language, trace: Trace,
               generalizer: Generalizer, strategy: CexStrategy = FIRST_FOUND, budget: int = 0,
               positive_only: bool = False) -> EngineRun:
    """
    执行最多 budget 次迭代
    Args:
        variant: cegis / mincegis / hcegis；simulated-mincegis 转交 simulate_min_via_arbitrary
        family: 候选程序所在的族
        target: 目标语言，引擎本身只通过验证器接触它
        trace: 正例迹，超出长度的部分读作 ⊥
        generalizer: 归纳泛化器 F
        strategy: 任意反例验证器的选择策略，其余变体忽略
        budget: 迭代次数上限
        positive_only: 消融开关，验证器恒返回 ⊥

    Returns:
        EngineRun
    """
    variant = EngineVariant(variant)
    if variant == EngineVariant.SIMULATED_MINCEGIS:
        from engines.simulation import simulate_min_via_arbitrary
        return simulate_min_via_arbitrary(family, target, trace, generalizer, strategy, budget)
    if generalizer.needs_probe and variant != EngineVariant.HCEGIS:
        raise ConfigError(f"泛化器 {generalizer.name} 依赖历史有界探测，只能用于 hcegis")

    current = generalizer.initial
    family.ensure_representable(current)
    run = EngineRun(variant=variant, family=family, initial=current, budget=budget, conjectures=[current])
    logger.info(f"{variant.value} 开始: 族 {family.name}, 目标 {target.descriptor}, "
                f"初始猜测 {family.describe(current)}, 预算 {budget}")

    for n in range(1, budget + 1):
        entry = trace.entry_at(n)
        if entry is not None and not target.contains(entry):
            raise InvalidExampleError(f"迹的第 {n} 个元素 {entry} 不属于目标 {target.descriptor}")

        if positive_only:
            verdict = BOTTOM
        else:
            verdict = _query(variant, family.language_of(current), target, strategy, trace, n - 1)
        run.records.append(IterationRecord(
            iteration=n, trace_entry=entry, candidate=family.describe(current),
            verdict=verdict, event=Event.CONJECTURE, program=current,
        ))

        def probe(language: Language, _n=n) -> Verdict:
            answer = hcheck(language, target, trace.prefix(_n))
            run.records.append(IterationRecord(
                iteration=_n, trace_entry=None, candidate=language.descriptor,
                verdict=answer, event=Event.PROBE,
            ))
            return answer

        following = generalizer.step(current, entry, verdict, probe if generalizer.needs_probe else None)
        family.ensure_representable(following)
        run.settled = verdict.is_bottom and family.equivalent(current, following)
        logger.debug(f"迭代 {n}: τ={entry} 候选 {family.describe(current)} -> {verdict.label()} "
                     f"{'' if verdict.is_bottom else verdict.counterexample} 下一个 {family.describe(following)}")
        current = following
        run.conjectures.append(current)

        if generalizer.is_terminal(current):
            run.records.append(IterationRecord(
                iteration=n, trace_entry=None, candidate=family.describe(current),
                verdict=None, event=Event.FREEZE, program=current,
            ))
            run.halted = True
            break

    logger.info(f"{variant.value} 结束: {run.iterations} 次迭代, {run.queries} 次查询, "
                f"最终 {family.describe(run.final)}{' (冻结)' if run.halted else ''}")
    return run
