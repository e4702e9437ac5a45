"""
任意反例验证器的选择策略，实现定义里的不确定性
"""
import random
from dataclasses import dataclass, field
from enum import Enum

from core.errors import ConfigError, StrategyInfeasibleError


class StrategyKind(str, Enum):
    FIRST_FOUND = "first-found"
    SEEDED_RANDOM = "seeded-random"
    ADVERSARIAL_MAX = "adversarial-max"
    CONSISTENT_AVOIDING = "consistent-avoiding"


@dataclass(frozen=True)
class CexStrategy:
    """
    只从真实差集 (候选 \\ 目标) ∩ [0, B] 中选；
    consistent-avoiding 额外避开 avoid 里的元素，让两个目标得到同样的回答
    """
    kind: StrategyKind = StrategyKind.FIRST_FOUND
    seed: int = 0
    avoid: frozenset = field(default_factory=frozenset)

    def select(self, difference: frozenset) -> int:
        """
        从非空差集中选一个反例
        Args:
            difference: 候选与目标的差集

        Returns:
            选中的反例
        """
        if self.kind == StrategyKind.FIRST_FOUND:
            return min(difference)
        if self.kind == StrategyKind.ADVERSARIAL_MAX:
            return max(difference)
        if self.kind == StrategyKind.SEEDED_RANDOM:
            ordered = sorted(difference)
            # 只依赖输入和种子，重放时回答一致
            rng = random.Random(f"{self.seed}:{len(ordered)}:{ordered[0]}:{ordered[-1]}:{sum(ordered)}")
            return rng.choice(ordered)
        allowed = difference - self.avoid
        if not allowed:
            raise StrategyInfeasibleError(
                f"差集 {sorted(difference)} 全部落在回避集合 {sorted(self.avoid)} 内"
            )
        return min(allowed)

    def describe(self) -> str:
        if self.kind == StrategyKind.SEEDED_RANDOM:
            return f"{self.kind.value}:{self.seed}"
        if self.kind == StrategyKind.CONSISTENT_AVOIDING:
            return f"{self.kind.value}:{','.join(str(a) for a in sorted(self.avoid))}"
        return self.kind.value

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "CexStrategy":
        """
        解析命令行写法：first-found / adversarial-max / seeded-random / consistent-avoiding:54,60
        """
        name, _, tail = text.partition(":")
        try:
            kind = StrategyKind(name)
        except ValueError:
            raise ConfigError(f"未知的反例策略: {text!r}") from None
        avoid = frozenset()
        if kind == StrategyKind.CONSISTENT_AVOIDING and tail:
            try:
                avoid = frozenset(int(part) for part in tail.split(",") if part)
            except ValueError:
                raise ConfigError(f"回避集合必须是逗号分隔的自然数: {tail!r}") from None
        return cls(kind=kind, seed=seed, avoid=avoid)


FIRST_FOUND = CexStrategy()
