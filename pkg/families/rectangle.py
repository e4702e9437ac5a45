"""
Z×Z 上的轴对齐矩形族，点经zigzag再Cantor配对编码为自然数；元素序为径向序
"""
import config
from core.errors import InvalidRectangleError
from core.family import IndexedFamily
from core.language import Language
from core.pairing import decode_point, encode_point


def radial_key(code: int) -> tuple[int, int, int]:
    """x²+y²，同半径按 (x, y) 字典序决胜"""
    x, y = decode_point(code)
    return x * x + y * y, x, y


class RectangleFamily(IndexedFamily):
    """
    下标是 (α_x, β_x, α_y, β_y)；边界倒置的下标表示空矩形，只会由泛化器产生
    """
    name = "rectangle"

    def __init__(self, grid_bound: int = config.RECT_GRID_BOUND):
        super().__init__()
        if grid_bound < 0:
            raise InvalidRectangleError(f"网格半径必须是自然数，实际为 {grid_bound}")
        self.grid_bound = grid_bound
        self.universe_bound = encode_point(grid_bound, grid_bound)
        self.universal_index = (-grid_bound, grid_bound, -grid_bound, grid_bound)

    def order_key(self, example: int):
        return radial_key(example)

    def on_grid(self, value: int) -> bool:
        return -self.grid_bound <= value <= self.grid_bound

    def is_representable(self, index) -> bool:
        if not isinstance(index, tuple) or len(index) != 4:
            return False
        return all(isinstance(v, int) and self.on_grid(v) for v in index)

    def template(self, index, n: int) -> int:
        ax, bx, ay, by = index
        x, y = decode_point(n)
        return int(ax <= x <= bx and ay <= y <= by)

    def make_language(self, index) -> Language:
        ax, bx, ay, by = index
        support = frozenset(
            encode_point(x, y) for x in range(ax, bx + 1) for y in range(ay, by + 1)
        )
        return Language(
            membership=lambda n: self.template(index, n) == 1,
            universe_bound=self.universe_bound,
            descriptor=self.describe_index(index),
            order_key=self.order_key,
            support=support,
        )

    def rectangle_language(self, ax: int, bx: int, ay: int, by: int) -> Language:
        """
        矩形语言
        Args:
            ax, bx: x方向边界 α_x <= β_x
            ay, by: y方向边界 α_y <= β_y

        Returns:
            Language
        """
        if ax > bx or ay > by:
            raise InvalidRectangleError(f"矩形边界倒置: ({ax}, {bx}, {ay}, {by})")
        if not all(self.on_grid(v) for v in (ax, bx, ay, by)):
            raise InvalidRectangleError(f"矩形 ({ax}, {bx}, {ay}, {by}) 超出网格 ±{self.grid_bound}")
        return self.language((ax, bx, ay, by))

    def universal_language(self) -> Language:
        return self.language(self.universal_index)

    def describe_index(self, index) -> str:
        ax, bx, ay, by = index
        if index == self.universal_index:
            return f"rect[universal ±{self.grid_bound}]"
        return f"rect[{ax}..{bx}]x[{ay}..{by}]"

    def describe_example(self, code: int) -> list:
        return list(decode_point(code))
