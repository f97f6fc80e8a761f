# mongeops/pva/jacobi.py
"""Jacobi identity for the potential brackets.

For generators the identity reads

    {v^i_λ {v^j_μ v^k}} - {v^j_μ {v^i_λ v^k}} - {{v^i_λ v^j}_{λ+μ} v^k} = 0,

and the last bracket is rewritten by skew-symmetry as
{v^k_x {v^i_λ v^j}} with x = -λ-μ-∂.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Optional, Tuple

import sympy

from .. import config
from ..errors import InputError, MathFailure, abort
from .bracket import BracketTable, bracket_with_generator, check_skew, operator_to_bracket
from .lambdas import LAM, MU, X, Label, LambdaExpr, VElement, label_name, negate, normalize_nonlocal

log = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def _nested(table: BracketTable, outer: int, param, inner: LambdaExpr) -> LambdaExpr:
    out: LambdaExpr = []
    for term in inner:
        out.extend(bracket_with_generator(table, outer, param, term))
    return out


def jacobi_terms(table: BracketTable, i: int, j: int, k: int) -> LambdaExpr:
    first = _nested(table, i, LAM, table.entry(j, k, MU))
    second = _nested(table, j, MU, table.entry(i, k, LAM))
    third = []
    for term in _nested(table, k, X, table.entry(i, j, LAM)):
        third.append(term.substitute({X: -LAM - MU - sympy.Add(*term.d_symbols())}))
    return first + negate(second) + third


@dataclass
class JacobiReport:
    elements: Dict[Triple, VElement] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(e.is_zero() for e in self.elements.values())

    def residuals(self) -> Dict[str, sympy.Expr]:
        """Every nonvanishing coefficient, keyed by index triple, label and jet monomial."""
        out = {}
        for (i, j, k), element in sorted(self.elements.items()):
            for (label, monomial), coeff in element.residuals().items():
                out[f"({i + 1},{j + 1},{k + 1}) {label_name(label)} [{monomial}]"] = coeff
        return out

    def coefficient(self, triple: Triple, label: Label) -> sympy.Expr:
        """Coefficient of a basis label for a 1-based index triple."""
        element = self.elements[tuple(x - 1 for x in triple)]
        return element[label]


def jacobi_coefficients(table: BracketTable, triple: Triple, min_degree: Optional[int] = None) -> VElement:
    """Basis decomposition of the Jacobi expression for a 0-based triple."""
    return normalize_nonlocal(jacobi_terms(table, *triple), table.space, min_degree)


def jacobi_residuals(op, min_degree: Optional[int] = None, triples=None) -> JacobiReport:
    table = op if isinstance(op, BracketTable) else operator_to_bracket(op)
    data = table.data
    if len(data.tails) > 1:
        abort(InputError, "the Jacobi check handles at most one nonlocal tail")
    skew = check_skew(table)
    if not skew.passed:
        raise MathFailure(f"bracket is not skew-symmetric: {skew.failures()[0]}")
    if min_degree is None:
        min_degree = config.JACOBI_MIN_DEGREE

    report = JacobiReport()
    for triple in triples or product(range(data.n), repeat=3):
        element = jacobi_coefficients(table, triple, min_degree)
        report.elements[tuple(triple)] = element
        status = "PASS" if element.is_zero() else f"FAIL at {[label_name(l) for l in element.labels()]}"
        log.info(f"[JACOBI] triple {tuple(x + 1 for x in triple)} {status}")
    return report
