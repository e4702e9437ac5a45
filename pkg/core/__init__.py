from core.errors import CegisLabError
from core.family import IndexedFamily
from core.language import Language, as_example, natural_key
from core.pairing import pair_decode, pair_encode
from core.program import Program
from core.trace import Schedule, Trace, smpl, trace_generate

__all__ = [
    "CegisLabError", "IndexedFamily", "Language", "Program", "Schedule", "Trace",
    "as_example", "natural_key", "pair_decode", "pair_encode", "smpl", "trace_generate",
]
