from harness.demos import (
    DEMOS, demo_gold, demo_lemma1, demo_lemma2, demo_rectangle, demo_theorem1, indistinguishability_demo,
)
from harness.report import EquivalenceReport, SeparationReport, write_report
from harness.verdict import RunStatus, RunVerdict, convergence_verdict, default_budget, default_window

__all__ = [
    "DEMOS", "EquivalenceReport", "RunStatus", "RunVerdict", "SeparationReport", "convergence_verdict",
    "default_budget", "default_window", "demo_gold", "demo_lemma1", "demo_lemma2", "demo_rectangle",
    "demo_theorem1", "indistinguishability_demo", "write_report",
]
