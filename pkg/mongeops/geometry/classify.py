# mongeops/geometry/classify.py
"""Normal-form walk for 2-component Monge metrics.

Every such metric is a quadratic form in e = p dq - q dp, dp and dq,

    g = a e^2 + 2b e dp + 2c e dq + alpha dp^2 + 2beta dp dq + gamma dq^2,

and the class is read off the six constants.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..errors import DimensionMismatch, NotMonge, abort
from ..exactalg import Ratio
from .connection import is_monge
from .types import MongeMetric

log = logging.getLogger(__name__)

WKI_CLASS = "a≠0 nondegenerate (WKI class)"
A_DEGENERATE_CLASS = "a≠0 degenerate (local class)"
NONLOCAL_CLASS = "a=0 γ≠0 (nonlocal class)"
MONGE_AMPERE_CLASS = "a=0 γ=0 (Monge-Ampère local class)"
CONSTANT_CLASS = "constant (constant class)"


@dataclass
class Classification:
    label: str
    constants: Dict[str, Ratio]
    translation: Optional[Tuple[Ratio, Ratio]] = None
    local: bool = field(default=False)


def _coefficient(entry: Ratio, exponents) -> Ratio:
    """Coefficient of p^i q^j in a polynomial entry."""
    ctx = entry.ctx
    n = ctx.n
    total = ctx.zero
    for monom, coeff in entry.num.iterterms():
        if tuple(monom[:n]) == tuple(exponents):
            rest = (0,) * n + tuple(monom[n:])
            total = total + Ratio(ctx, ctx.ring.term_new(rest, coeff))
    return total


def normal_constants(metric: MongeMetric) -> Dict[str, Ratio]:
    g = metric.g
    return {
        "a": _coefficient(g[0][0], (0, 2)),
        "b": -_coefficient(g[0][0], (0, 1)) / 2,
        "c": _coefficient(g[1][1], (1, 0)) / 2,
        "alpha": _coefficient(g[0][0], (0, 0)),
        "beta": _coefficient(g[0][1], (0, 0)),
        "gamma": _coefficient(g[1][1], (0, 0)),
    }


def det_q3(k: Dict[str, Ratio]) -> Ratio:
    """Determinant of [[a, b, c], [b, alpha, beta], [c, beta, gamma]]."""
    a, b, c = k["a"], k["b"], k["c"]
    alpha, beta, gamma = k["alpha"], k["beta"], k["gamma"]
    return a * alpha * gamma - a * beta * beta - b * b * gamma + 2 * b * c * beta - alpha * c * c


def classify2(metric: MongeMetric) -> Classification:
    if metric.n != 2:
        abort(DimensionMismatch, "classify2 needs a 2-component metric")
    ok, violations = is_monge(metric)
    if not ok:
        raise NotMonge(violations)
    k = normal_constants(metric)
    a, b, c = k["a"], k["b"], k["c"]
    nondegenerate = not det_q3(k).is_zero()

    if not a.is_zero():
        # p -> p + c/a, q -> q - b/a kills b and c
        translation = (-c / a, b / a)
        if nondegenerate:
            result = Classification(WKI_CLASS, k, translation)
        else:
            result = Classification(A_DEGENERATE_CLASS, k, translation, local=True)
    elif not (b.is_zero() and c.is_zero()):
        if nondegenerate:
            result = Classification(NONLOCAL_CLASS, k)
        else:
            result = Classification(MONGE_AMPERE_CLASS, k, local=True)
    else:
        result = Classification(CONSTANT_CLASS, k, local=True)
    log.info(f"[CLASSIFY2] {result.label}")
    return result
