"""
语言：有界全集 [0, B] 上可判定的成员谓词，附带元素序
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterable

from core.errors import InvalidExampleError


def natural_key(example: int) -> int:
    """自然数的自然序"""
    return example


def as_example(value) -> int:
    """
    校验并返回一个样例（自然数）
    Args:
        value: 待校验的值

    Returns:
        int
    """
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidExampleError(f"样例必须是自然数，实际为 {value!r}")
    return value


@lru_cache(maxsize=64)
def ordered_universe(universe_bound: int, order_key: Callable[[int], Any]) -> tuple[int, ...]:
    """按给定序排列的全集 [0, B]，序必须是全序（部分序先经过决胜规则）"""
    return tuple(sorted(range(universe_bound + 1), key=order_key))


@dataclass(frozen=True, eq=False)
class Language:
    """
    语言只在 [0, universe_bound] 上被检查；support 非空时表示已知的显式成员集合，
    省去对全集的扫描
    """
    membership: Callable[[int], bool]
    universe_bound: int
    descriptor: str
    order_key: Callable[[int], Any] = natural_key
    support: frozenset | None = None

    def contains(self, example: int) -> bool:
        if self.support is not None:
            return example in self.support
        return bool(self.membership(example))

    @cached_property
    def member_set(self) -> frozenset:
        if self.support is not None:
            return frozenset(e for e in self.support if 0 <= e <= self.universe_bound)
        return frozenset(n for n in range(self.universe_bound + 1) if self.membership(n))

    @cached_property
    def members(self) -> tuple[int, ...]:
        return tuple(sorted(self.member_set))

    def is_empty(self) -> bool:
        return not self.member_set

    def same_as(self, other: "Language") -> bool:
        """[0, B] 上的语义相等"""
        return self.member_set == other.member_set

    def subset_of(self, other: "Language") -> bool:
        return self.member_set <= other.member_set

    def intersect_singleton(self, k: int) -> "Language":
        """{k} ∩ self，保留本语言的序"""
        as_example(k)
        kept = frozenset([k]) if k <= self.universe_bound and self.contains(k) else frozenset()
        return Language(
            membership=kept.__contains__,
            universe_bound=self.universe_bound,
            descriptor=f"{self.descriptor} ∩ {{{k}}}",
            order_key=self.order_key,
            support=kept,
        )

    @classmethod
    def finite(cls, members: Iterable[int], universe_bound: int, descriptor: str,
               order_key: Callable[[int], Any] = natural_key) -> "Language":
        kept = frozenset(as_example(m) for m in members)
        return cls(
            membership=kept.__contains__,
            universe_bound=universe_bound,
            descriptor=descriptor,
            order_key=order_key,
            support=kept,
        )

    @classmethod
    def singleton(cls, k: int, universe_bound: int,
                  order_key: Callable[[int], Any] = natural_key) -> "Language":
        return cls.finite([k], universe_bound, f"{{{k}}}", order_key)

    def __repr__(self):
        return f"Language({self.descriptor}, B={self.universe_bound})"
