from engines.cegis import run_engine
from engines.generalizers import (
    GENERALIZERS, Generalizer, build_generalizer, chain_generalizer, default_generalizer_name,
    diag_cegis_generalizer, diag_generalizer, gold_generalizer, rectangle_generalizer,
)
from engines.records import EngineRun, EngineVariant, Event, IterationRecord
from engines.simulation import LCE_BOTTOM, LceMap, SimState, Undefined, simulate_min_via_arbitrary, t_lce_replay

__all__ = [
    "GENERALIZERS", "LCE_BOTTOM", "EngineRun", "EngineVariant", "Event", "Generalizer", "IterationRecord",
    "LceMap", "SimState", "Undefined", "build_generalizer", "chain_generalizer", "default_generalizer_name",
    "diag_cegis_generalizer", "diag_generalizer", "gold_generalizer", "rectangle_generalizer",
    "run_engine", "simulate_min_via_arbitrary", "t_lce_replay",
]
