"""
迹：正例的呈现序列，元素取自 N ∪ {⊥}，⊥ 用 None 表示
"""
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from core.errors import EmptyLanguageError
from core.language import Language, as_example

TraceEntry = int | None


class Schedule(str, Enum):
    CANONICAL = "canonical"
    SEEDED_RANDOM = "seeded-random"
    PADDED_SEEDED = "padded-seeded"


@dataclass(frozen=True)
class Trace:
    """
    target_hint 只供harness记账，引擎看不到
    """
    entries: tuple
    target_hint: str | None = None

    def __post_init__(self):
        for entry in self.entries:
            if entry is not None:
                as_example(entry)

    def __len__(self):
        return len(self.entries)

    def prefix(self, k: int) -> tuple:
        """τ[k]：前k个元素"""
        return self.entries[:max(k, 0)]

    def entry_at(self, n: int) -> TraceEntry:
        """τ(n)，下标从1开始；超出迹长度读作 ⊥"""
        if 1 <= n <= len(self.entries):
            return self.entries[n - 1]
        return None


def smpl(prefix: Iterable[TraceEntry]) -> frozenset:
    """SMPL(σ) = range(σ) − {⊥}"""
    return frozenset(entry for entry in prefix if entry is not None)


def fairness_horizon(language: Language, schedule: Schedule) -> int | None:
    """
    [0, B] 内的每个成员在这么多个元素内必然出现；seeded-random 不保证公平
    """
    size = len(language.member_set)
    if schedule == Schedule.CANONICAL:
        return size
    if schedule == Schedule.PADDED_SEEDED:
        return 2 * size
    return None


def trace_generate(language: Language, schedule: Schedule | str, seed: int = 0, length: int = 0) -> Trace:
    """
    生成迹
    Args:
        language: 目标语言
        schedule: canonical 升序枚举后重复最大成员；seeded-random 独立均匀抽样；
            padded-seeded 每轮一个随机排列，每个成员后按种子随机插入至多一个 ⊥
        seed: 随机种子，相同种子得到相同的迹
        length: 迹长度

    Returns:
        Trace
    """
    schedule = Schedule(schedule)
    members = language.members
    if schedule == Schedule.CANONICAL and not members:
        raise EmptyLanguageError(f"语言 {language.descriptor} 为空，无法规范枚举")
    if length <= 0:
        return Trace((), language.descriptor)

    entries: list[TraceEntry] = []
    if schedule == Schedule.CANONICAL:
        entries.extend(members[:length])
        entries.extend([members[-1]] * (length - len(entries)))
    elif not members:
        entries = [None] * length
    elif schedule == Schedule.SEEDED_RANDOM:
        rng = random.Random(seed)
        entries = [rng.choice(members) for _ in range(length)]
    else:
        rng = random.Random(seed)
        while len(entries) < length:
            round_members = list(members)
            rng.shuffle(round_members)
            for member in round_members:
                entries.append(member)
                if rng.random() < 1 / 3:
                    entries.append(None)
        entries = entries[:length]
    return Trace(tuple(entries), language.descriptor)
