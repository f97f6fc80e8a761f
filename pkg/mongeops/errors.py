# mongeops/errors.py
"""Error types shared by the library and the command line.

Every error carries the process exit code the CLI uses for it:
2 for bad input or usage, 1 for a mathematical failure.
"""
from typing import Iterable, Optional, Sequence, Tuple


class MongeopsError(Exception):
    exit_code = 2

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


# ------------------ Input errors (exit 2) ------------------

class InputError(MongeopsError):
    exit_code = 2


class ParseError(InputError):
    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)
        self.text = text
        self.position = position


class UndeclaredIdentifier(InputError):
    def __init__(self, name: str):
        super().__init__(f"undeclared identifier {name!r}")
        self.name = name


class DimensionMismatch(InputError):
    pass


class UnknownEntry(InputError):
    def __init__(self, name: str):
        super().__init__(f"no catalog entry named {name!r}")
        self.name = name


class SingularTransform(InputError):
    pass


# ------------------ Mathematical failures (exit 1) ------------------

class MathFailure(MongeopsError):
    exit_code = 1


class NotMonge(MathFailure):
    def __init__(self, triples: Iterable[Tuple[int, int, int]]):
        self.triples = list(triples)
        shown = ", ".join(str(t) for t in self.triples[:5])
        super().__init__(f"metric is not a Monge metric; cyclic condition fails at {shown}")


class DegenerateMetric(MathFailure):
    def __init__(self, message: str = "metric is degenerate (det g is identically zero)"):
        super().__init__(message)


class NoOperator(MathFailure):
    pass


class SymbolNotComputable(MathFailure):
    def __init__(self, message: str, charpoly=None):
        super().__init__(message)
        self.charpoly = charpoly


class InadmissibleAxis(MathFailure):
    pass


class InadmissibleExpression(MathFailure):
    pass


class ZeroRadicand(MathFailure):
    def __init__(self, message: str = "radicand is identically zero"):
        super().__init__(message)


def abort(error_cls, *args):
    """Raise ``error_cls(*args)``."""
    raise error_cls(*args)


def first_lines(items: Sequence[str], limit: int = 3) -> str:
    shown = "; ".join(items[:limit])
    if len(items) > limit:
        shown += f"; ... ({len(items) - limit} more)"
    return shown
