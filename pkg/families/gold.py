"""
Gold族：V* 建模为 [0, B]，以及去掉一个点的 V* − {i}
"""
import config
from core.errors import IndexOutOfRangeError
from core.family import IndexedFamily
from core.language import Language

GOLD_FULL = "full"


class GoldFamily(IndexedFamily):
    name = "gold"

    def __init__(self, universe_bound: int = config.GOLD_UNIVERSE_BOUND):
        super().__init__()
        if universe_bound < 0:
            raise IndexOutOfRangeError(f"全集上界必须是自然数，实际为 {universe_bound}")
        self.universe_bound = universe_bound

    def is_representable(self, index) -> bool:
        if index == GOLD_FULL:
            return True
        return (isinstance(index, tuple) and len(index) == 2 and index[0] == "minus"
                and isinstance(index[1], int) and 0 <= index[1] <= self.universe_bound)

    def template(self, index, n: int) -> int:
        if not 0 <= n <= self.universe_bound:
            return 0
        return int(index == GOLD_FULL or n != index[1])

    def make_language(self, index) -> Language:
        return Language(
            membership=lambda n: self.template(index, n) == 1,
            universe_bound=self.universe_bound,
            descriptor=self.describe_index(index),
        )

    @staticmethod
    def minus_index(i: int) -> tuple:
        return "minus", i

    def gold_language(self, variant) -> Language:
        """
        Args:
            variant: "full" 或被去掉的点 i（<= B）

        Returns:
            Language
        """
        if variant == GOLD_FULL:
            return self.language(GOLD_FULL)
        index = self.minus_index(variant)
        if not self.is_representable(index):
            raise IndexOutOfRangeError(f"Gold族下标 {variant!r} 超出范围 [0, {self.universe_bound}]")
        return self.language(index)

    def describe_index(self, index) -> str:
        return "V*" if index == GOLD_FULL else f"V*-{{{index[1]}}}"
