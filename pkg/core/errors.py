"""
实验室统一异常层次，所有业务异常都继承 CegisLabError
"""


class CegisLabError(Exception):
    """所有实验室异常的基类"""
    pass


class InputTooLargeError(CegisLabError):
    """配对编码超出宿主自然数范围"""
    pass


class InvalidExampleError(CegisLabError):
    """样例不是自然数"""
    pass


class EmptyLanguageError(CegisLabError):
    """对空语言请求规范枚举"""
    pass


class IndexOutOfRangeError(CegisLabError):
    """族下标超出上限"""
    pass


class InvalidRectangleError(CegisLabError):
    """矩形边界倒置或超出网格"""
    pass


class InvalidFamilyMemberError(CegisLabError):
    """构造的语言不满足族定义"""
    pass


class UniverseMismatchError(CegisLabError):
    """候选语言与目标语言的全集上界不一致"""
    pass


class StrategyInfeasibleError(CegisLabError):
    """回避集合吃掉了全部反例，策略无法给出一致的回答"""
    pass


class UnsoundVerdictError(CegisLabError):
    """反例不在 候选 \\ 目标 中"""
    pass


class EngineFaultError(CegisLabError):
    """泛化器给出了族无法表示的程序"""
    pass


class InconsistentOracleError(CegisLabError):
    """验证器回答与已知事实矛盾（可靠验证器下不会发生）"""
    pass


class ProbeOverflowError(CegisLabError):
    """单步探测次数超过上限"""
    pass


class ConfigError(CegisLabError):
    """配置或命令行参数无效"""
    pass
