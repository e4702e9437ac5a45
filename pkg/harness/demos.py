"""
实验演示：MinCEGIS 与 CEGIS 等价、两个方向的分离、Gold 族和矩形的例子
"""
import random
from typing import Callable, Iterable

import config
from core.errors import ConfigError, StrategyInfeasibleError
from core.language import Language
from core.pairing import decode_point, pair_decode, pair_encode
from core.trace import Schedule, Trace, trace_generate
from engines.cegis import run_engine
from engines.generalizers import (
    chain_generalizer, diag_cegis_generalizer, diag_generalizer, gold_generalizer, rectangle_generalizer,
)
from engines.records import EngineRun, EngineVariant
from engines.simulation import simulate_min_via_arbitrary
from families.chain import ChainFamily
from families.diagonal import DiagonalFamily
from families.gold import GOLD_FULL, GoldFamily
from families.rectangle import RectangleFamily, radial_key
from harness.report import (
    EquivalenceReport, IndistinguishabilityRow, PairRow, RunRow, SeparationReport, run_log_text,
)
from harness.verdict import RunStatus, convergence_verdict, default_budget
from utils import logger
from verifiers.strategy import CexStrategy, StrategyKind

LogSink = Callable[[str, EngineRun], None]

THEOREM1_FAMILIES = ("chain", "rectangle", "gold")


def _emit(sink: LogSink | None, run_id: str, run: EngineRun):
    if sink is not None:
        sink(run_id, run)


def random_rectangles(count: int = config.THEOREM1_RANDOM_RECTS, span: int = config.THEOREM1_RANDOM_RECT_SPAN,
                      seed: int = config.THEOREM1_RANDOM_RECT_SEED) -> list[tuple]:
    rng = random.Random(seed)
    rectangles = []
    for _ in range(count):
        ax, bx = sorted(rng.randint(-span, span) for _ in range(2))
        ay, by = sorted(rng.randint(-span, span) for _ in range(2))
        rectangles.append((ax, bx, ay, by))
    return rectangles


def theorem1_matrix(families: Iterable[str] = THEOREM1_FAMILIES) -> list[tuple]:
    """
    (族, 目标下标, 泛化器工厂, 预算) 列表
    """
    matrix = []
    for name in families:
        if name == "chain":
            family = ChainFamily()
            for i in config.THEOREM1_CHAIN_TARGETS:
                matrix.append((family, i, chain_generalizer, default_budget(family)))
        elif name == "rectangle":
            family = RectangleFamily()
            for rect in list(config.THEOREM1_RECT_TARGETS) + random_rectangles():
                matrix.append((family, tuple(rect), rectangle_generalizer, config.THEOREM1_RECT_BUDGET))
        elif name == "gold":
            family = GoldFamily()
            for variant in config.THEOREM1_GOLD_TARGETS:
                index = GOLD_FULL if variant == GOLD_FULL else family.minus_index(variant)
                matrix.append((family, index, gold_generalizer, default_budget(family)))
        else:
            raise ConfigError(f"等价演示不支持族 {name!r}，可选 {', '.join(THEOREM1_FAMILIES)}")
    return matrix


def _min_and_simulation(family, target: Language, trace: Trace, generalizer, seed: int | None,
                        budget: int, sink: LogSink | None, run_id: str) -> tuple[EngineRun, EngineRun]:
    direct = run_engine(EngineVariant.MINCEGIS, family, target, trace, generalizer, budget=budget)
    strategy = CexStrategy(StrategyKind.SEEDED_RANDOM, seed=seed or 0)
    simulated = simulate_min_via_arbitrary(family, target, trace, generalizer, strategy, budget)
    _emit(sink, f"{run_id}/mincegis", direct)
    _emit(sink, f"{run_id}/simulated-mincegis", simulated)
    return direct, simulated


def compare_min_and_simulation(family, target: Language, trace: Trace, generalizer, seed: int | None,
                               budget: int, sink: LogSink | None = None, run_id: str = "") -> PairRow:
    """同一条迹上分别跑直接 MinCEGIS 和模拟，比较最终程序与判定"""
    direct, simulated = _min_and_simulation(family, target, trace, generalizer, seed, budget, sink, run_id)
    return _pair_row(family, target, seed, direct, simulated)


def _pair_row(family, target: Language, seed: int | None, direct: EngineRun, simulated: EngineRun) -> PairRow:
    direct_verdict = convergence_verdict(direct, target)
    simulated_verdict = convergence_verdict(simulated, target)
    return PairRow(
        family=family.name, target=target.descriptor, seed=seed,
        direct=RunRow.of(direct, target.descriptor, direct_verdict, seed=seed),
        simulated=RunRow.of(simulated, target.descriptor, simulated_verdict, seed=seed,
                            lce_entries=len(simulated.state.lce), done_len=simulated.state.done_len),
        finals_equal=family.equivalent(direct.final, simulated.final),
    )


@logger.log_function_call()
def demo_theorem1(families: Iterable[str] = THEOREM1_FAMILIES, seeds: Iterable[int] = tuple(config.THEOREM1_SEEDS),
                  budget: int | None = None, schedule: str = config.THEOREM1_SCHEDULE,
                  sink: LogSink | None = None) -> EquivalenceReport:
    """
    MinCEGIS = CEGIS：每个 (族, 目标, 种子) 上直接 MinCEGIS 与只用 CHECK 的模拟给出语义相同的最终程序

    Args:
        families: 参与的族
        seeds: 迹与反例策略的种子
        budget: 覆盖每个族的默认预算
        schedule: 迹的生成方式
        sink: 可选的日志汇，接收每次运行

    Returns:
        EquivalenceReport
    """
    report = EquivalenceReport(name="theorem1")
    seeds = list(seeds)
    for family, index, factory, family_budget in theorem1_matrix(families):
        target = family.language(index)
        run_budget = budget if budget is not None else family_budget
        for seed in seeds:
            trace = trace_generate(target, schedule, seed=seed, length=run_budget)
            pair = compare_min_and_simulation(family, target, trace, factory(family), seed, run_budget,
                                              sink, f"{family.name}:{target.descriptor}:seed{seed}")
            report.pairs.append(pair)
            if not pair.ok:
                logger.warning(f"等价演示不一致: {family.name} {target.descriptor} 种子 {seed}: "
                               f"{pair.direct.final}/{pair.direct.status} vs "
                               f"{pair.simulated.final}/{pair.simulated.status}")
    logger.info(f"等价演示: {report.conclusion}")
    return report


@logger.log_function_call()
def demo_lemma1(i_max: int = config.LEMMA1_IMAX, budget: int | None = None,
                sink: LogSink | None = None) -> SeparationReport:
    """
    CEGIS ⊄ HCEGIS：链族上 CEGIS 用 i+2 次查询识别 L_i，HCEGIS 从 ℕ 出发永远得不到反例

    Args:
        i_max: 目标 L_0..L_imax
        budget: 每次运行的迭代上限，缺省 10 * 全集上界
        sink: 可选的日志汇

    Returns:
        SeparationReport
    """
    family = ChainFamily()
    if not 0 <= i_max <= family.max_index:
        raise ConfigError(f"i_max={i_max} 超出链族上限 {family.max_index}")
    budget = default_budget(family) if budget is None else budget
    report = SeparationReport(name="lemma1", family=family.name, expected={"cegis": True, "hcegis": False})

    for i in range(i_max + 1):
        target = family.chain_language(i)
        trace = trace_generate(target, Schedule.CANONICAL, length=budget)

        cegis_run = run_engine(EngineVariant.CEGIS, family, target, trace, chain_generalizer(family), budget=budget)
        cegis_verdict = convergence_verdict(cegis_run, target)
        cegis_row = RunRow.of(cegis_run, target.descriptor, cegis_verdict)
        cegis_row.ok = cegis_row.identified and cegis_run.queries == i + 2
        report.rows.append(cegis_row)

        hcegis_run = run_engine(EngineVariant.HCEGIS, family, target, trace,
                                chain_generalizer(family, initial="top"), budget=budget)
        hcegis_verdict = convergence_verdict(hcegis_run, target)
        hcegis_row = RunRow.of(hcegis_run, target.descriptor, hcegis_verdict)
        hcegis_row.ok = hcegis_verdict.status == RunStatus.STALLED and not hcegis_run.counterexamples
        report.rows.append(hcegis_row)

        _emit(sink, f"chain:L_{i}/cegis", cegis_run)
        _emit(sink, f"chain:L_{i}/hcegis", hcegis_run)
        logger.info(f"链族分离演示 L_{i}: cegis {cegis_verdict.label()} 查询 {cegis_run.queries}, "
                    f"hcegis {hcegis_verdict.label()}")
    logger.info(f"链族分离演示: {report.conclusion}")
    return report


def random_fin_instances(family: DiagonalFamily, count: int = config.LEMMA2_FIN_INSTANCES,
                         max_size: int = config.LEMMA2_FIN_MAX_SIZE, seed: int = config.LEMMA2_FIN_SEED) -> list[tuple]:
    """随机的 fin 成员下标，每个至少含一个 <1, k>"""
    rng = random.Random(seed)
    codes = [c for c in range(family.universe_bound + 1) if pair_decode(c)[0] in (0, 1)]
    ones = [c for c in codes if pair_decode(c)[0] == 1]
    instances = []
    for _ in range(count):
        size = rng.randint(1, max_size)
        chosen = {rng.choice(ones)}
        while len(chosen) < size:
            chosen.add(rng.choice(codes))
        instances.append(family.fin_index(chosen))
    return instances


def lemma2_instances(family: DiagonalFamily) -> list[tuple]:
    return [family.diag_index(i) for i in config.LEMMA2_DIAG_TARGETS] + random_fin_instances(family)


def indistinguishability_demo(base_prefix: Iterable[int], z1: int, z2: int, generalizer=None,
                              budget: int = config.LEMMA2_BUDGET,
                              family: DiagonalFamily | None = None,
                              sink: LogSink | None = None) -> IndistinguishabilityRow:
    """
    同一个 CEGIS 引擎分别面对 L^d = SMPL(base) ∪ {<1,z1>} 和 L^d' = L^d ∪ {<0,z2>}，
    迹是 base 之后一直重复 <1,z1>，验证器避开 <0,z2>；两条迭代日志必须逐字节一致

    Args:
        base_prefix: 迹前缀（配对编码）
        z1: <1, z1> 是两种目标共有的元素
        z2: <0, z2> 只属于 L^d'
        generalizer: 缺省为 diag_cegis_generalizer
        budget: 迭代上限
        family: 对角族实例
        sink: 可选的日志汇

    Returns:
        IndistinguishabilityRow
    """
    family = family or DiagonalFamily()
    generalizer = generalizer or diag_cegis_generalizer(family)
    base = list(base_prefix)
    one, zero = pair_encode(1, z1), pair_encode(0, z2)
    if zero in base:
        raise ConfigError(f"<0,{z2}> 已经出现在迹前缀里，无法构造不可区分的一对目标")
    target_d = family.language(family.fin_index(base + [one]))
    target_d_prime = family.language(family.fin_index(base + [one, zero]))
    row = IndistinguishabilityRow(base=base, z1=z1, z2=z2, target_d=target_d.descriptor,
                                  target_d_prime=target_d_prime.descriptor)

    entries = tuple(base[:budget]) + (one,) * max(budget - len(base), 0)
    trace = Trace(entries)
    strategy = CexStrategy(StrategyKind.CONSISTENT_AVOIDING, avoid=frozenset([zero]))
    try:
        run_d = run_engine(EngineVariant.CEGIS, family, target_d, trace, generalizer, strategy, budget)
        run_d_prime = run_engine(EngineVariant.CEGIS, family, target_d_prime, trace, generalizer, strategy, budget)
    except StrategyInfeasibleError as e:
        logger.warning(f"不可区分演示跳过 base={base} z1={z1} z2={z2}: {e}")
        row.skipped = str(e)
        return row

    _emit(sink, f"indistinguishability:{z1}:{z2}/L^d", run_d)
    _emit(sink, f"indistinguishability:{z1}:{z2}/L^d'", run_d_prime)
    row.logs_identical = run_log_text(run_d) == run_log_text(run_d_prime)
    row.targets_differ = target_d_prime.contains(zero) and not target_d.contains(zero)
    row.match_d = family.language_of(run_d.final).same_as(target_d)
    row.match_d_prime = family.language_of(run_d_prime.final).same_as(target_d_prime)
    row.final_d = family.describe(run_d.final)
    row.final_d_prime = family.describe(run_d_prime.final)
    logger.info(f"不可区分演示 {target_d.descriptor} / {target_d_prime.descriptor}: "
                f"日志一致={row.logs_identical} 最终 {row.final_d}")
    return row


@logger.log_function_call()
def demo_lemma2(instances: Iterable[tuple] | None = None, budget: int = config.LEMMA2_BUDGET,
                crafted: Iterable[tuple] = tuple(config.LEMMA2_CRAFTED),
                min_pairs: int = config.LEMMA2_MIN_PAIRS,
                sink: LogSink | None = None) -> SeparationReport:
    """
    HCEGIS ⊄ CEGIS：HCEGIS 识别对角族的每个实例；CEGIS 在构造的目标对上行为完全一致，至少错一个

    Args:
        instances: 对角族下标，缺省为 diag_1..diag_10 加 10 个随机 fin 实例
        budget: 每次运行的迭代上限
        crafted: (base 的 (j, n) 对, z1, z2) 列表
        min_pairs: 没被跳过的目标对少于这个数时演示不通过
        sink: 可选的日志汇

    Returns:
        SeparationReport
    """
    family = DiagonalFamily()
    instances = lemma2_instances(family) if instances is None else list(instances)
    report = SeparationReport(name="lemma2", family=family.name, expected={"hcegis": True, "cegis": False},
                              min_pairs=min_pairs)

    for index in instances:
        target = family.language(index)
        trace = trace_generate(target, Schedule.CANONICAL, length=budget)
        run = run_engine(EngineVariant.HCEGIS, family, target, trace, diag_generalizer(family), budget=budget)
        verdict = convergence_verdict(run, target)
        row = RunRow.of(run, target.descriptor, verdict, probes=run.queries - run.iterations)
        row.ok = row.identified
        report.rows.append(row)
        _emit(sink, f"diagonal:{target.descriptor}/hcegis", run)
        logger.info(f"对角族分离演示 HCEGIS {target.descriptor}: {verdict.label()} 匹配={verdict.semantic_match}")

    for pairs, z1, z2 in crafted:
        base = [pair_encode(j, n) for j, n in pairs]
        pair = indistinguishability_demo(base, z1, z2, budget=budget, family=family, sink=sink)
        report.pairs.append(pair)
        if pair.skipped is not None:
            continue
        for descriptor, final, matched in ((pair.target_d, pair.final_d, pair.match_d),
                                           (pair.target_d_prime, pair.final_d_prime, pair.match_d_prime)):
            report.rows.append(RunRow(
                family=family.name, target=descriptor, variant="cegis",
                status=RunStatus.CONVERGED.value if matched else "indistinguishable",
                converged_at=None, semantic_match=matched, queries=0, counterexamples=0, final=final,
                detail={"z1": z1, "z2": z2},
            ))
    logger.info(f"对角族分离演示: {report.conclusion}")
    return report


@logger.log_function_call()
def demo_gold(budget: int | None = None, indices: Iterable[int] = tuple(config.GOLD_SAMPLE_INDICES),
              sink: LogSink | None = None) -> SeparationReport:
    """
    Gold族：有反例时最多两次猜测就对；只有正例（验证器恒为 ⊥）时分不开 V* 和 V* − {i}

    Args:
        budget: 迭代上限，缺省 10 * 全集上界
        indices: 被去掉的点
        sink: 可选的日志汇

    Returns:
        SeparationReport
    """
    family = GoldFamily()
    budget = default_budget(family) if budget is None else budget
    report = SeparationReport(name="gold", family=family.name, expected={"cegis": True, "positive-only": False})
    targets = [GOLD_FULL] + [family.minus_index(i) for i in indices]

    for index in targets:
        target = family.language(index)
        trace = trace_generate(target, Schedule.CANONICAL, length=budget)

        run = run_engine(EngineVariant.CEGIS, family, target, trace, gold_generalizer(family), budget=budget)
        verdict = convergence_verdict(run, target)
        distinct = len({program.index for program in run.conjectures})
        row = RunRow.of(run, target.descriptor, verdict, distinct_conjectures=distinct)
        row.ok = row.identified and distinct <= 2
        report.rows.append(row)

        ablation = run_engine(EngineVariant.CEGIS, family, target, trace, gold_generalizer(family),
                              budget=budget, positive_only=True)
        ablation_verdict = convergence_verdict(ablation, target)
        ablation_row = RunRow.of(ablation, target.descriptor, ablation_verdict, variant="positive-only")
        ablation_row.ok = family.equivalent(ablation.final, family.program(GOLD_FULL))
        report.rows.append(ablation_row)

        _emit(sink, f"gold:{target.descriptor}/cegis", run)
        _emit(sink, f"gold:{target.descriptor}/positive-only", ablation)
    logger.info(f"Gold 演示: {report.conclusion}")
    return report


@logger.log_function_call()
def demo_rectangle(target_bounds: tuple = (-1, 1, -1, 1), budget: int = config.THEOREM1_RECT_BUDGET,
                   seed: int = 0, sink: LogSink | None = None) -> EquivalenceReport:
    """
    矩形例子：从全平面出发的 MinCEGIS，第一个最小反例在半径平方为 4 的圆上；
    再用只有 CHECK 的模拟学同一个矩形
    """
    family = RectangleFamily()
    target = family.rectangle_language(*target_bounds)
    trace = trace_generate(target, Schedule.CANONICAL, length=budget)
    direct, simulated = _min_and_simulation(family, target, trace, rectangle_generalizer(family), seed, budget,
                                            sink, f"rectangle:{target.descriptor}")
    pair = _pair_row(family, target, seed, direct, simulated)
    report = EquivalenceReport(name="rectangle", pairs=[pair])

    if direct.counterexamples:
        first = direct.counterexamples[0]
        report.notes["first_counterexample"] = list(decode_point(first))
        report.notes["first_radial_key"] = radial_key(first)[0]
        report.notes["counterexamples"] = [list(decode_point(c)) for c in direct.counterexamples]
        report.extra_checks["first_counterexample_on_radius_2"] = radial_key(first)[0] == 4
    else:
        report.extra_checks["first_counterexample_on_radius_2"] = False
    report.extra_checks["mincegis_exact"] = pair.direct.identified
    logger.info(f"矩形演示: 第一个最小反例 {report.notes.get('first_counterexample')}，{report.conclusion}")
    return report


DEMOS = {
    "theorem1": demo_theorem1,
    "lemma1": demo_lemma1,
    "lemma2": demo_lemma2,
    "gold": demo_gold,
    "rectangle": demo_rectangle,
}
