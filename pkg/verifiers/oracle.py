"""
三种反例验证器：任意反例 check、最小反例 mincheck、历史有界反例 hcheck

全部在族的见证上界 [0, B] 内做精确的子集查询
"""
from typing import Iterable

from core.errors import UniverseMismatchError
from core.language import Language
from core.trace import TraceEntry, smpl
from utils import logger
from verifiers.strategy import FIRST_FOUND, CexStrategy
from verifiers.verdict import BOTTOM, Verdict


def difference(candidate: Language, target: Language) -> frozenset:
    """(候选 \\ 目标) ∩ [0, B]"""
    if candidate.universe_bound != target.universe_bound:
        raise UniverseMismatchError(
            f"全集上界不一致: {candidate.descriptor} 为 {candidate.universe_bound}，"
            f"{target.descriptor} 为 {target.universe_bound}"
        )
    return candidate.member_set - target.member_set


def check(candidate: Language, target: Language, strategy: CexStrategy = FIRST_FOUND) -> Verdict:
    """
    CHECK：⊥ 当且仅当 候选 ⊆ 目标，否则按策略选一个反例
    Args:
        candidate: 候选语言
        target: 目标语言
        strategy: 反例选择策略

    Returns:
        Verdict
    """
    diff = difference(candidate, target)
    if not diff:
        logger.debug(f"CHECK {candidate.descriptor} ⊆ {target.descriptor}: ⊥")
        return BOTTOM
    example = strategy.select(diff)
    logger.debug(f"CHECK {candidate.descriptor} 对 {target.descriptor}: 反例 {example} ({strategy.describe()})")
    return Verdict.refuting(example, candidate, target)


def mincheck(candidate: Language, target: Language) -> Verdict:
    """
    MINCHECK：差集在候选语言序下的最小元，部分序按族的决胜规则取其一
    """
    diff = difference(candidate, target)
    if not diff:
        logger.debug(f"MINCHECK {candidate.descriptor} ⊆ {target.descriptor}: ⊥")
        return BOTTOM
    example = min(diff, key=candidate.order_key)
    logger.debug(f"MINCHECK {candidate.descriptor} 对 {target.descriptor}: 最小反例 {example}")
    return Verdict.refuting(example, candidate, target)


def hcheck(candidate: Language, target: Language, history: Iterable[TraceEntry]) -> Verdict:
    """
    HCHECK：只返回小于历史中最大正例的反例，多个时取最小的；历史为空时恒为 ⊥
    Args:
        candidate: 候选语言
        target: 目标语言
        history: 引擎已经消费的迹前缀，⊥ 不参与比较

    Returns:
        Verdict
    """
    diff = difference(candidate, target)
    seen = smpl(history)
    if not diff or not seen:
        return BOTTOM
    ceiling = max(seen)
    eligible = [m for m in diff if m < ceiling]
    if not eligible:
        logger.debug(f"HCHECK {candidate.descriptor}: 反例都不小于历史最大值 {ceiling}，返回 ⊥")
        return BOTTOM
    example = min(eligible)
    logger.debug(f"HCHECK {candidate.descriptor} 对 {target.descriptor}: 反例 {example} < {ceiling}")
    return Verdict.refuting(example, candidate, target)
