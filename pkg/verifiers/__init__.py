from verifiers.oracle import check, difference, hcheck, mincheck
from verifiers.strategy import FIRST_FOUND, CexStrategy, StrategyKind
from verifiers.verdict import BOTTOM, Verdict

__all__ = [
    "BOTTOM", "FIRST_FOUND", "CexStrategy", "StrategyKind", "Verdict",
    "check", "difference", "hcheck", "mincheck",
]
