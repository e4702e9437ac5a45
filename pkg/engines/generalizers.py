"""
归纳泛化器 F：(上一个程序, 迹元素, 验证器回答) -> 下一个程序

同一个实验里三种引擎共用同一个 F，只替换验证器
"""
from abc import ABC, abstractmethod
from typing import Callable

import config
from core.errors import ConfigError, EngineFaultError, InconsistentOracleError, ProbeOverflowError
from core.language import Language
from core.pairing import decode_point, pair_decode
from core.program import Program
from core.trace import TraceEntry
from families.chain import CHAIN_TOP, ChainFamily
from families.diagonal import DIAG, DiagonalFamily
from families.gold import GOLD_FULL, GoldFamily
from families.rectangle import RectangleFamily
from verifiers.verdict import Verdict

ProbeOracle = Callable[[Language], Verdict]

FROZEN = ("frozen",)


class Generalizer(ABC):
    """
    step 必须是确定的纯函数，只看三个参数（以及引擎给的探测入口）
    """
    name = "generalizer"
    # 需要历史有界验证器做辅助探测
    needs_probe = False

    def __init__(self, family):
        self.family = family

    @property
    @abstractmethod
    def initial(self) -> Program:
        """P_0"""

    @abstractmethod
    def step(self, previous: Program, entry: TraceEntry, verdict: Verdict,
             probe: ProbeOracle | None = None) -> Program:
        """F(P, τ(n), cex(n))"""

    def is_terminal(self, program: Program) -> bool:
        """终止程序之后 F 恒等，引擎可以停下"""
        return False


class ChainGeneralizer(Generalizer):
    """
    没有反例就猜下一个 L_{j+1}，到上限后停在 ℕ；一旦有反例就冻结在前一个猜测上
    """
    name = "chain"

    def __init__(self, family: ChainFamily, initial: str = "bottom"):
        super().__init__(family)
        if initial not in ("bottom", "top"):
            raise ConfigError(f"链族初始猜测只能是 bottom 或 top，实际为 {initial!r}")
        self._initial_index = 0 if initial == "bottom" else CHAIN_TOP

    @property
    def initial(self) -> Program:
        return self.family.program(self._initial_index)

    def is_terminal(self, program: Program) -> bool:
        return program.aux == FROZEN

    def step(self, previous, entry, verdict, probe=None):
        if self.is_terminal(previous):
            return previous
        index = previous.index
        if verdict.refutes:
            if index == CHAIN_TOP:
                frozen_at = self.family.max_index
            else:
                frozen_at = max(index - 1, 0)
            return self.family.program(frozen_at, FROZEN)
        if index == CHAIN_TOP or index >= self.family.max_index:
            return self.family.program(CHAIN_TOP)
        return self.family.program(index + 1)


class RectangleGeneralizer(Generalizer):
    """
    从全平面矩形出发；正例撑大内部包围盒（存在 aux 里），
    反例收紧绝对值最大的那个坐标轴上的一条边，且不切到包围盒（平局先x轴）；
    空矩形用倒置的边界表示
    """
    name = "rectangle"

    def __init__(self, family: RectangleFamily):
        super().__init__(family)

    @property
    def initial(self) -> Program:
        return self.family.program(self.family.universal_index)

    @staticmethod
    def _grow(hull: tuple, x: int, y: int) -> tuple:
        if not hull:
            return x, x, y, y
        min_x, max_x, min_y, max_y = hull
        return min(min_x, x), max(max_x, x), min(min_y, y), max(max_y, y)

    def step(self, previous, entry, verdict, probe=None):
        hull = previous.aux
        bounds = list(previous.index)
        if entry is not None:
            hull = self._grow(hull, *decode_point(entry))
            # 外边界始终盖住包围盒，之前切多了的边由正例放回
            bounds = [min(bounds[0], hull[0]), max(bounds[1], hull[1]),
                      min(bounds[2], hull[2]), max(bounds[3], hull[3])]
        if verdict.refutes:
            xc, yc = decode_point(verdict.counterexample)
            if hull and hull[0] <= xc <= hull[1] and hull[2] <= yc <= hull[3]:
                raise InconsistentOracleError(f"反例 ({xc}, {yc}) 落在正例包围盒 {hull} 内")
            # (|坐标|, 轴序号, 边界下标, 新值)
            moves = []
            for axis, coordinate in enumerate((xc, yc)):
                low_slot, high_slot = 2 * axis, 2 * axis + 1
                if hull:
                    low, high = hull[2 * axis], hull[2 * axis + 1]
                    if coordinate > high:
                        moves.append((abs(coordinate), axis, high_slot, coordinate - 1))
                    elif coordinate < low:
                        moves.append((abs(coordinate), axis, low_slot, coordinate + 1))
                elif coordinate >= 0:
                    moves.append((abs(coordinate), axis, high_slot, coordinate - 1))
                else:
                    moves.append((abs(coordinate), axis, low_slot, coordinate + 1))
            moves.sort(key=lambda move: (-move[0], move[1]))
            _, _, slot, value = moves[0]
            bounds[slot] = value
        return self.family.program(tuple(bounds), hull)


class DiagGeneralizer(Generalizer):
    """
    对角族上的 HCEGIS 学习器

    A模式（还没见过 <1,·>）：猜 diag_j，j 是见过的 <0, j> 里最小的；
    B模式：记录见过的最大编码 x_max，对每个 x' < x_max 用单点语言 {x'} 做 HCHECK 探测，
    ⊥ 当且仅当 x' 属于目标，猜恢复出来的有限集合；x_max 变大时重新恢复
    """
    name = "diag"
    needs_probe = True

    def __init__(self, family: DiagonalFamily, probe_cap: int = config.DIAG_PROBE_CAP):
        super().__init__(family)
        self.probe_cap = probe_cap

    @property
    def initial(self) -> Program:
        return self.family.program((DIAG, 0), ("A", None))

    def _mode_a(self, min_j):
        return self.family.program((DIAG, min_j), ("A", min_j))

    def _recover(self, x_max: int, probe: ProbeOracle | None) -> Program:
        if probe is None:
            raise EngineFaultError("diag 学习器需要历史有界验证器的探测入口（只能配合 hcegis 使用）")
        if x_max > self.probe_cap:
            raise ProbeOverflowError(f"恢复 x_max={x_max} 需要的探测次数超过上限 {self.probe_cap}")
        bound = self.family.universe_bound
        recovered = [x_max]
        for candidate in range(x_max):
            if probe(Language.singleton(candidate, bound)).is_bottom:
                recovered.append(candidate)
        return self.family.program(self.family.fin_index(recovered), ("B", x_max))

    def step(self, previous, entry, verdict, probe=None):
        if entry is None:
            return previous
        mode, state = previous.aux
        if mode == "A":
            j, n = pair_decode(entry)
            if j == 0:
                return self._mode_a(n if state is None else min(state, n))
            return self._recover(entry, probe)
        if entry > state:
            return self._recover(entry, probe)
        return previous


class DiagCegisGeneralizer(Generalizer):
    """
    对角族上的任意反例学习器：A模式猜 diag_j，j 取见过的最小 <0, j>，同时记住见过的每个 <0, n>；
    见到 <1,·> 之后猜这些元素加上此后出现的元素组成的有限集合
    """
    name = "diag-cegis"

    def __init__(self, family: DiagonalFamily):
        super().__init__(family)

    @property
    def initial(self) -> Program:
        return self.family.program((DIAG, 0), ("A", ()))

    def step(self, previous, entry, verdict, probe=None):
        if entry is None:
            return previous
        mode, seen = previous.aux
        if mode == "A":
            j, n = pair_decode(entry)
            if j == 0:
                seen = tuple(sorted(set(seen) | {entry}))
                min_j = min(pair_decode(code)[1] for code in seen)
                return self.family.program((DIAG, min_j), ("A", seen))
            return self.family.program(self.family.fin_index(seen + (entry,)), ("B", None))
        if entry in previous.index[1]:
            return previous
        return self.family.program(self.family.fin_index(previous.index[1] + (entry,)), ("B", None))


class GoldGeneralizer(Generalizer):
    """
    先猜 V*，拿到反例 x_i 就猜 V* − {x_i} 并冻结
    """
    name = "gold"

    def __init__(self, family: GoldFamily):
        super().__init__(family)

    @property
    def initial(self) -> Program:
        return self.family.program(GOLD_FULL)

    def is_terminal(self, program: Program) -> bool:
        return program.aux == FROZEN

    def step(self, previous, entry, verdict, probe=None):
        if self.is_terminal(previous):
            if verdict.refutes and verdict.counterexample != previous.index[1]:
                raise InconsistentOracleError(
                    f"冻结在 V*-{{{previous.index[1]}}} 后又收到反例 {verdict.counterexample}"
                )
            return previous
        if verdict.refutes:
            return self.family.program(self.family.minus_index(verdict.counterexample), FROZEN)
        return previous


def chain_generalizer(family: ChainFamily | None = None, initial: str = "bottom") -> ChainGeneralizer:
    return ChainGeneralizer(family or ChainFamily(), initial)


def rectangle_generalizer(family: RectangleFamily | None = None) -> RectangleGeneralizer:
    return RectangleGeneralizer(family or RectangleFamily())


def diag_generalizer(family: DiagonalFamily | None = None,
                     probe_cap: int = config.DIAG_PROBE_CAP) -> DiagGeneralizer:
    return DiagGeneralizer(family or DiagonalFamily(), probe_cap)


def diag_cegis_generalizer(family: DiagonalFamily | None = None) -> DiagCegisGeneralizer:
    return DiagCegisGeneralizer(family or DiagonalFamily())


def gold_generalizer(family: GoldFamily | None = None) -> GoldGeneralizer:
    return GoldGeneralizer(family or GoldFamily())


GENERALIZERS = {
    "chain": (ChainFamily, ChainGeneralizer),
    "rectangle": (RectangleFamily, RectangleGeneralizer),
    "diag": (DiagonalFamily, DiagGeneralizer),
    "diag-cegis": (DiagonalFamily, DiagCegisGeneralizer),
    "gold": (GoldFamily, GoldGeneralizer),
}


def default_generalizer_name(family_name: str, variant: str) -> str:
    if family_name == "diagonal":
        return "diag" if variant == "hcegis" else "diag-cegis"
    return family_name


def build_generalizer(name: str, family, initial: str = "bottom") -> Generalizer:
    """
    按名字构造泛化器并检查与族是否匹配
    Args:
        name: chain / rectangle / diag / diag-cegis / gold
        family: 已构造的族
        initial: 只对链族有意义，bottom 表示 L_0，top 表示 ℕ

    Returns:
        Generalizer
    """
    if name not in GENERALIZERS:
        raise ConfigError(f"未知的泛化器: {name!r}，可选 {', '.join(GENERALIZERS)}")
    family_type, generalizer_type = GENERALIZERS[name]
    if not isinstance(family, family_type):
        raise ConfigError(f"泛化器 {name} 不能用于族 {family.name}")
    if generalizer_type is ChainGeneralizer:
        return ChainGeneralizer(family, initial)
    return generalizer_type(family)
