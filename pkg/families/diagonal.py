"""
对角族 𝓛 = 𝓛^fin ∪ 𝓛^diag，元素是配对编码 <j, n>

fin：有限集合，j ∈ {0, 1}，至少有一个 <1, k>
diag：{<0, n> | n ∈ base(i)}，base(i) = {n | n >= i}，在全集上界处截断
"""
from typing import Iterable

import config
from core.errors import IndexOutOfRangeError, InvalidFamilyMemberError
from core.family import IndexedFamily
from core.language import Language
from core.pairing import pair_decode, pair_encode

DIAG = "diag"
FIN = "fin"


class DiagonalFamily(IndexedFamily):
    name = "diagonal"

    def __init__(self, universe_bound: int = config.DIAG_UNIVERSE_BOUND):
        super().__init__()
        if universe_bound < 0:
            raise IndexOutOfRangeError(f"全集上界必须是自然数，实际为 {universe_bound}")
        self.universe_bound = universe_bound
        # <0, n> <= B 的最大 n，也是 diag 下标的上限
        cap = -1
        while pair_encode(0, cap + 1) <= universe_bound:
            cap += 1
        self.diag_cap = cap

    def is_representable(self, index) -> bool:
        if not isinstance(index, tuple) or len(index) != 2:
            return False
        kind, payload = index
        if kind == DIAG:
            return isinstance(payload, int) and 0 <= payload <= self.diag_cap
        if kind == FIN:
            return self._fin_problem(payload) is None
        return False

    def _fin_problem(self, codes) -> str | None:
        if not isinstance(codes, tuple) or not codes:
            return "fin成员必须是非空有限集合"
        has_one = False
        for code in codes:
            if not isinstance(code, int) or not 0 <= code <= self.universe_bound:
                return f"编码 {code!r} 超出全集 [0, {self.universe_bound}]"
            j, _ = pair_decode(code)
            if j not in (0, 1):
                return f"编码 {code} 解码为 <{j}, ·>，第一分量必须是0或1"
            has_one = has_one or j == 1
        if not has_one:
            return "fin成员至少要有一个 <1, k> 形式的元素"
        return None

    def template(self, index, n: int) -> int:
        kind, payload = index
        if not 0 <= n <= self.universe_bound:
            return 0
        if kind == FIN:
            return int(n in payload)
        j, m = pair_decode(n)
        return int(j == 0 and m >= payload)

    def make_language(self, index) -> Language:
        kind, payload = index
        if kind == FIN:
            return Language.finite(payload, self.universe_bound, self.describe_index(index))
        return Language(
            membership=lambda n: self.template(index, n) == 1,
            universe_bound=self.universe_bound,
            descriptor=self.describe_index(index),
        )

    def diag_index(self, i: int) -> tuple:
        if not isinstance(i, int) or not 0 <= i <= self.diag_cap:
            raise IndexOutOfRangeError(f"diag下标 {i!r} 超出范围 [0, {self.diag_cap}]")
        return DIAG, i

    def fin_index(self, codes: Iterable[int]) -> tuple:
        index = (FIN, tuple(sorted(set(codes))))
        problem = self._fin_problem(index[1])
        if problem is not None:
            raise InvalidFamilyMemberError(problem)
        return index

    def diag_language(self, i: int) -> Language:
        """
        L^diag_i = {<0, n> | n >= i}
        Args:
            i: 下标，等于基础语言的最小元

        Returns:
            Language
        """
        return self.language(self.diag_index(i))

    def fin_language(self, members: Iterable) -> Language:
        """
        有限成员
        Args:
            members: (j, n) 对的集合，j ∈ {0, 1}，至少一个 j = 1

        Returns:
            Language
        """
        codes = []
        for pair in members:
            j, n = pair
            if j not in (0, 1):
                raise InvalidFamilyMemberError(f"成员 ({j}, {n}) 的第一分量必须是0或1")
            codes.append(pair_encode(j, n))
        return self.language(self.fin_index(codes))

    def describe_index(self, index) -> str:
        kind, payload = index
        if kind == DIAG:
            return f"diag_{payload}"
        pairs = ",".join(f"<{j},{n}>" for j, n in (pair_decode(c) for c in payload))
        return f"fin{{{pairs}}}"

    def describe_example(self, code: int) -> list:
        return list(pair_decode(code))
