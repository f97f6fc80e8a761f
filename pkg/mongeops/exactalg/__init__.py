# mongeops/exactalg/__init__.py
"""Exact arithmetic: contexts, normalized rational functions, parsing and printing."""
from .context import Context, Parameter, Ratio, Root
from .matrix import det, inverse, rank
from .parser import parse_expr
from .printer import print_poly, print_ratio
from .squares import perfect_square, split_square

__all__ = [
    "Context",
    "Parameter",
    "Ratio",
    "Root",
    "det",
    "inverse",
    "parse_expr",
    "perfect_square",
    "print_poly",
    "print_ratio",
    "rank",
    "split_square",
]
