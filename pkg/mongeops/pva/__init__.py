# mongeops/pva/__init__.py
"""λ-bracket engine: an independent check of Hamiltonianity through the Jacobi identity."""
from .bracket import (
    BracketTable,
    SkewReport,
    UpperData,
    bracket_with_generator,
    check_skew,
    master_bracket,
    operator_to_bracket,
)
from .jacobi import JacobiReport, jacobi_coefficients, jacobi_residuals, jacobi_terms
from .jets import JetSpace
from .lambdas import LAM, MU, LambdaExpr, Term, VElement, label_name, normalize_nonlocal, to_basis

__all__ = [
    "BracketTable",
    "JacobiReport",
    "JetSpace",
    "LAM",
    "LambdaExpr",
    "MU",
    "SkewReport",
    "Term",
    "UpperData",
    "VElement",
    "bracket_with_generator",
    "check_skew",
    "jacobi_coefficients",
    "jacobi_residuals",
    "jacobi_terms",
    "label_name",
    "master_bracket",
    "normalize_nonlocal",
    "operator_to_bracket",
    "to_basis",
]
