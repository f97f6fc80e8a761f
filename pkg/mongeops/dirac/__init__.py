# mongeops/dirac/__init__.py
from .reduce import (
    CLOSED,
    SYMBOLIC,
    AmbientLocalOperator,
    Comparison,
    ReductionResult,
    admissible_axes,
    compare,
    dirac_reduce_closed,
    dirac_reduce_symbolic,
)

__all__ = [
    "AmbientLocalOperator",
    "CLOSED",
    "Comparison",
    "ReductionResult",
    "SYMBOLIC",
    "admissible_axes",
    "compare",
    "dirac_reduce_closed",
    "dirac_reduce_symbolic",
]
