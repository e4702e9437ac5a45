"""
验证器的回答：⊥（没有反例）或一个反例 e，且 e ∈ L_候选、e ∉ L_目标
"""
from dataclasses import dataclass

from core.errors import UnsoundVerdictError
from core.language import Language


@dataclass(frozen=True)
class Verdict:
    counterexample: int | None = None

    @property
    def is_bottom(self) -> bool:
        return self.counterexample is None

    @property
    def refutes(self) -> bool:
        return self.counterexample is not None

    @classmethod
    def refuting(cls, example: int, candidate: Language, target: Language) -> "Verdict":
        """构造反例回答，同时检查可靠性"""
        if not candidate.contains(example) or target.contains(example):
            raise UnsoundVerdictError(
                f"反例 {example} 不在 {candidate.descriptor} \\ {target.descriptor} 中"
            )
        return cls(example)

    def label(self) -> str:
        return "bottom" if self.is_bottom else "counterexample"


BOTTOM = Verdict()
