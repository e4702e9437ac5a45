import json

from core.errors import ConfigError
from core.pairing import pair_encode
from families.chain import CHAIN_TOP, ChainFamily
from families.diagonal import DiagonalFamily
from families.gold import GOLD_FULL, GoldFamily
from families.rectangle import RectangleFamily, radial_key

FAMILY_NAMES = ("chain", "rectangle", "diagonal", "gold")


def build_family(name: str, universe_bound: int | None = None):
    """
    按名字构造族
    Args:
        name: chain / rectangle / diagonal / gold
        universe_bound: 覆盖默认规模；链族是全集上界（下标上限 = 上界 - 2），
            矩形族是网格半径，其余两族是编码上界

    Returns:
        IndexedFamily
    """
    if name == "chain":
        return ChainFamily() if universe_bound is None else ChainFamily(universe_bound - 2)
    if name == "rectangle":
        return RectangleFamily() if universe_bound is None else RectangleFamily(universe_bound)
    if name == "diagonal":
        return DiagonalFamily() if universe_bound is None else DiagonalFamily(universe_bound)
    if name == "gold":
        return GoldFamily() if universe_bound is None else GoldFamily(universe_bound)
    raise ConfigError(f"未知的族: {name!r}，可选 {', '.join(FAMILY_NAMES)}")


def _ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ConfigError(f"目标 {text!r} 不是逗号分隔的整数") from None


def parse_target(family, text: str):
    """
    命令行目标写法 -> 族下标
    chain: "5" 或 "top"；rectangle: "-1,1,-1,1" 或 "universal"；
    diagonal: "3" 表示 diag_3，JSON 数组 [[0,2],[1,7]] 表示 fin；gold: "full" 或去掉的点 i
    """
    text = str(text).strip()
    if isinstance(family, ChainFamily):
        index = CHAIN_TOP if text in (CHAIN_TOP, "ℕ") else _ints(text)[0]
    elif isinstance(family, RectangleFamily):
        if text == "universal":
            index = family.universal_index
        else:
            index = tuple(_ints(text))
            if len(index) != 4 or index[0] > index[1] or index[2] > index[3]:
                raise ConfigError(f"矩形目标必须是 α_x,β_x,α_y,β_y 且边界不倒置，实际为 {text!r}")
    elif isinstance(family, DiagonalFamily):
        if text.startswith("["):
            try:
                pairs = json.loads(text)
                codes = [pair_encode(int(j), int(n)) for j, n in pairs]
            except (ValueError, TypeError) as e:
                raise ConfigError(f"fin 目标必须是 [[j, n], ...] 形式的 JSON 数组: {e}") from None
            index = family.fin_index(codes)
        else:
            index = family.diag_index(_ints(text.removeprefix("diag:"))[0])
    elif isinstance(family, GoldFamily):
        index = GOLD_FULL if text == GOLD_FULL else family.minus_index(_ints(text)[0])
    else:
        raise ConfigError(f"不支持的族 {family.name}")
    if not family.is_representable(index):
        raise ConfigError(f"目标 {text!r} 不在族 {family.name} 的可表示范围内")
    return index


__all__ = [
    "CHAIN_TOP", "ChainFamily", "DiagonalFamily", "FAMILY_NAMES", "GOLD_FULL", "GoldFamily",
    "RectangleFamily", "build_family", "parse_target", "radial_key",
]
