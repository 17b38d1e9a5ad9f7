from .groups import FiniteGroup, GModule, GroupError, ModuleError, check_generators, gmodule_check
from .linalg import ModuleBasis, kernel_mod, snf, solve_mod, span_mod
from .ring import QuotRing, RingElem

__all__ = [
    "FiniteGroup", "GModule", "GroupError", "ModuleError", "ModuleBasis", "QuotRing",
    "RingElem", "check_generators", "gmodule_check", "kernel_mod", "snf", "solve_mod",
    "span_mod",
]
