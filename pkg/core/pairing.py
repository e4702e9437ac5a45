"""
Cantor配对函数，以及把有符号整数对折叠到自然数上的zigzag编码
"""
import math

import config
from core.errors import InputTooLargeError, InvalidExampleError


def _require_natural(value, name):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidExampleError(f"{name} 必须是自然数，实际为 {value!r}")


def pair_encode(n1: int, n2: int) -> int:
    """
    Cantor配对 <n1, n2> = (n1+n2)(n1+n2+1)/2 + n2，对两个参数都严格单调
    Args:
        n1: 第一个分量
        n2: 第二个分量

    Returns:
        编码后的自然数
    """
    _require_natural(n1, "n1")
    _require_natural(n2, "n2")
    s = n1 + n2
    code = s * (s + 1) // 2 + n2
    if code > config.MAX_NATURAL:
        raise InputTooLargeError(f"配对 ({n1}, {n2}) 的编码 {code} 超出宿主自然数范围")
    return code


def pair_decode(code: int) -> tuple[int, int]:
    """
    pair_encode的逆
    Args:
        code: 编码

    Returns:
        (n1, n2)
    """
    _require_natural(code, "code")
    w = (math.isqrt(8 * code + 1) - 1) // 2
    n2 = code - w * (w + 1) // 2
    return w - n2, n2


def zigzag_encode(value: int) -> int:
    """0->0, -1->1, 1->2, -2->3, ..."""
    return 2 * value if value >= 0 else -2 * value - 1


def zigzag_decode(value: int) -> int:
    return value // 2 if value % 2 == 0 else -(value + 1) // 2


def encode_point(x: int, y: int) -> int:
    """把 Z×Z 上的点编码为自然数"""
    return pair_encode(zigzag_encode(x), zigzag_encode(y))


def decode_point(code: int) -> tuple[int, int]:
    a, b = pair_decode(code)
    return zigzag_decode(a), zigzag_decode(b)
