"""
索引语言族：TEMPLATE(i, n) = P_i(n)
"""
from abc import ABC, abstractmethod
from typing import Any, Hashable

from core.errors import EngineFaultError
from core.language import Language, natural_key, ordered_universe
from core.program import Program


class IndexedFamily(ABC):
    """
    子类给出 template / make_language / is_representable；
    universe_bound 是见证上界：族内任意两个不同成员在某个 <= B 的元素上不同
    """
    name: str = "family"
    universe_bound: int = 0

    def __init__(self):
        self._languages: dict[Hashable, Language] = {}

    @abstractmethod
    def template(self, index: Hashable, n: int) -> int:
        """TEMPLATE(i, n) ∈ {0, 1}"""

    @abstractmethod
    def make_language(self, index: Hashable) -> Language:
        """下标对应的语言"""

    @abstractmethod
    def is_representable(self, index: Hashable) -> bool:
        """下标是否属于本族可表示的程序集合"""

    def order_key(self, example: int) -> Any:
        return natural_key(example)

    def describe_index(self, index: Hashable) -> str:
        return f"{self.name}[{index}]"

    def describe_example(self, code: int) -> list | None:
        """配对编码的族给出解码后的元组，便于阅读日志"""
        return None

    def program(self, index: Hashable, aux: tuple = ()) -> Program:
        return Program(family=self.name, index=index, aux=aux)

    def language(self, index: Hashable) -> Language:
        cached = self._languages.get(index)
        if cached is None:
            cached = self.make_language(index)
            self._languages[index] = cached
        return cached

    def language_of(self, program: Program) -> Language:
        """L(P)，探测程序取与单点集的交"""
        self.ensure_representable(program)
        base = self.language(program.index)
        if program.restrict is None:
            return base
        return base.intersect_singleton(program.restrict)

    def ensure_representable(self, program: Program):
        if program.family != self.name or not self.is_representable(program.index):
            raise EngineFaultError(f"程序 {program} 不属于族 {self.name} 的可表示集合")

    def describe(self, program: Program) -> str:
        text = self.describe_index(program.index)
        if program.restrict is not None:
            text = f"{text} ∩ {{{program.restrict}}}"
        return text

    def equivalent(self, first: Program, second: Program) -> bool:
        """语义相等：在 [0, B] 上成员关系一致"""
        return self.language_of(first).same_as(self.language_of(second))

    def ordered_universe(self) -> tuple[int, ...]:
        return ordered_universe(self.universe_bound, self.order_key)
