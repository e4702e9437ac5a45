"""
候选程序：族标识 + 下标（自然数或结构化参数）+ 引擎持有的有界辅助状态
"""
from dataclasses import dataclass, replace
from typing import Hashable


@dataclass(frozen=True)
class Program:
    """
    restrict 不为 None 时表示 L(P) ∩ {restrict}，即最小反例模拟里的探测程序
    """
    family: str
    index: Hashable
    aux: tuple = ()
    restrict: int | None = None

    @property
    def is_probe(self) -> bool:
        return self.restrict is not None

    def restricted_to(self, k: int) -> "Program":
        return replace(self, restrict=k)
