"""
链族 L_i = {n | n <= i}，L_0 ⊂ L_1 ⊂ ...；额外带一个顶元素 ℕ（整个全集）
"""
import config
from core.errors import IndexOutOfRangeError
from core.family import IndexedFamily
from core.language import Language

CHAIN_TOP = "top"


class ChainFamily(IndexedFamily):
    name = "chain"

    def __init__(self, max_index: int = config.CHAIN_MAX_INDEX):
        super().__init__()
        if max_index < 0:
            raise IndexOutOfRangeError(f"链族上限必须是自然数，实际为 {max_index}")
        self.max_index = max_index
        self.universe_bound = max_index + 2

    def is_representable(self, index) -> bool:
        if index == CHAIN_TOP:
            return True
        return isinstance(index, int) and not isinstance(index, bool) and 0 <= index <= self.max_index

    def template(self, index, n: int) -> int:
        if index == CHAIN_TOP:
            return int(0 <= n <= self.universe_bound)
        return int(0 <= n <= index)

    def make_language(self, index) -> Language:
        return Language(
            membership=lambda n: self.template(index, n) == 1,
            universe_bound=self.universe_bound,
            descriptor=self.describe_index(index),
        )

    def chain_language(self, i: int) -> Language:
        """
        L_i
        Args:
            i: 下标，不超过 max_index

        Returns:
            Language
        """
        if not self.is_representable(i) or i == CHAIN_TOP:
            raise IndexOutOfRangeError(f"链族下标 {i} 超出范围 [0, {self.max_index}]")
        return self.language(i)

    def top_language(self) -> Language:
        return self.language(CHAIN_TOP)

    def describe_index(self, index) -> str:
        return "ℕ" if index == CHAIN_TOP else f"L_{index}"
