"""
引擎运行记录：每次验证器调用（含探测）一条 IterationRecord，整次运行一个 EngineRun
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from core.family import IndexedFamily
from core.program import Program
from core.trace import TraceEntry
from verifiers.verdict import Verdict


class EngineVariant(str, Enum):
    CEGIS = "cegis"
    MINCEGIS = "mincegis"
    HCEGIS = "hcegis"
    SIMULATED_MINCEGIS = "simulated-mincegis"


class Event(str, Enum):
    CONJECTURE = "conjecture"
    PROBE = "probe"
    REPLAY = "replay"
    FREEZE = "freeze"


@dataclass(frozen=True)
class IterationRecord:
    """
    第 iteration 次迭代对 candidate 的查询结果；replay / freeze 记录不查询验证器，verdict 为 None
    """
    iteration: int
    trace_entry: TraceEntry
    candidate: str
    verdict: Verdict | None
    event: Event
    program: Program | None = None
    note: dict[str, Any] = field(default_factory=dict)

    @property
    def is_query(self) -> bool:
        return self.verdict is not None


@dataclass
class EngineRun:
    """
    conjectures[0] 是初始猜测，conjectures[n] 是第 n 次迭代之后的猜测；
    settled 表示最后一次验证器回答针对的就是最终程序且为 ⊥
    """
    variant: EngineVariant
    family: IndexedFamily
    initial: Program
    budget: int
    records: list[IterationRecord] = field(default_factory=list)
    conjectures: list[Program] = field(default_factory=list)
    halted: bool = False
    settled: bool = False
    state: Any = None

    @property
    def final(self) -> Program:
        return self.conjectures[-1] if self.conjectures else self.initial

    @property
    def iterations(self) -> int:
        return max(len(self.conjectures) - 1, 0)

    @property
    def queries(self) -> int:
        return sum(1 for record in self.records if record.is_query)

    @property
    def counterexamples(self) -> list[int]:
        return [record.verdict.counterexample for record in self.records
                if record.is_query and record.verdict.refutes]

    def describe(self, program: Program) -> str:
        return self.family.describe(program)
