# mongeops/geometry/conditions.py
"""Hamiltonian conditions for third-order operators, in upper and lower index form.

Conditions linear in a tail are divided by sqrt(R) and checked as identities of
rational functions; conditions quadratic in the tails use rho*rho*R.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from ..errors import ZeroRadicand
from ..exactalg import Ratio, print_ratio
from .types import OperatorData, WForm, _sum

log = logging.getLogger(__name__)

RESIDUAL_PREVIEW = 240

UPPER_STATEMENTS = {
    1: "g^{ij} = g^{ji}",
    2: "g^{ij}_{,k} = c^{ij}_k + c^{ji}_k",
    3: "c^{ij}_s g^{sk} + c^{kj}_s g^{si} = 0",
    4: "c^{ij}_s g^{sk} + c^{jk}_s g^{si} + c^{ki}_s g^{sj} = 0",
    5: "g^{is} w^k_s + g^{ks} w^i_s = 0",
    6: "g^{ks} w^j_{s,l} + g^{js}_{,l} w^k_s - c^{jk}_s w^s_l + c^{kj}_s w^s_l = 0",
    7: "g^{ks} c^{ij}_{s,l} + c^{kj}_s g^{si}_{,l} + c^{ki}_s c^{sj}_l - c^{ik}_s c^{sj}_l + g^{ks} w^i_s w^j_l = 0",
}

LOWER_STATEMENTS = {
    1: "g_{ij,k} + c_{ijk} + c_{jik} = 0",
    2: "c_{ijk} + c_{ikj} = 0",
    3: "g_{ij,k} + g_{jk,i} + g_{ki,j} = 0",
    4: "w_{ij} + w_{ji} = 0",
    5: "w_{ij,l} = c^s_{ij} w_{sl}",
    6: "c_{nml,k} + c^s_{ml} c_{snk} + w_{ml} w_{nk} = 0",
}


@dataclass
class ConditionResult:
    number: int
    statement: str
    passed: bool
    index: Optional[Tuple[int, ...]] = None      # 1-based, plus tail number where relevant
    residual: Optional[str] = None


@dataclass
class ConditionReport:
    form: str
    results: List[ConditionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_failure(self) -> Optional[ConditionResult]:
        return next((r for r in self.results if not r.passed), None)

    def failing_numbers(self) -> List[int]:
        return [r.number for r in self.results if not r.passed]


def _first_nonzero(residuals: Iterable[Tuple[Tuple[int, ...], Callable[[], Ratio]]]):
    for index, compute in residuals:
        value = compute()
        if not value.is_zero():
            return index, value
    return None


def _record(report: ConditionReport, number: int, statements: Dict[int, str], found) -> None:
    if found is None:
        report.results.append(ConditionResult(number, statements[number], True))
        log.debug(f"[CHECK] {report.form} condition {number} PASS")
        return
    index, value = found
    text = print_ratio(value)
    if len(text) > RESIDUAL_PREVIEW:
        text = text[:RESIDUAL_PREVIEW] + " ..."
    report.results.append(ConditionResult(number, statements[number], False, tuple(i + 1 for i in index), text))
    log.info(f"[CHECK] {report.form} condition {number} FAIL at {tuple(i + 1 for i in index)}")


def _checked_tails(op: OperatorData) -> List[WForm]:
    for w in op.tails:
        if not w.is_zero() and w.radicand.is_zero():
            raise ZeroRadicand()
    return list(op.tails)


def _log_derivative_half(w: WForm, k: int) -> Ratio:
    """R_{,k} / (2R)"""
    return w.radicand.diff(k) / (2 * w.radicand)


# ------------------ Upper-index form ------------------

def check_conditions_upper(op: OperatorData) -> ConditionReport:
    ctx, n = op.ctx, op.n
    tails = _checked_tails(op)
    ginv = op.metric.inverse
    dginv = op.metric.d_inverse
    c = op.connection.upper
    dc = {}

    def c_diff(i, j, s, l):
        key = (i, j, s, l)
        if key not in dc:
            dc[key] = c[i][j][s].diff(l)
        return dc[key]

    rng = range(n)
    report = ConditionReport("upper")

    _record(report, 1, UPPER_STATEMENTS, _first_nonzero(
        ((i, j), (lambda i=i, j=j: ginv[i][j] - ginv[j][i])) for i, j in product(rng, rng)
    ))
    _record(report, 2, UPPER_STATEMENTS, _first_nonzero(
        ((i, j, k), (lambda i=i, j=j, k=k: dginv[k][i][j] - c[i][j][k] - c[j][i][k]))
        for i, j, k in product(rng, rng, rng)
    ))
    _record(report, 3, UPPER_STATEMENTS, _first_nonzero(
        ((i, j, k), (lambda i=i, j=j, k=k: _sum(ctx, (
            c[i][j][s] * ginv[s][k] + c[k][j][s] * ginv[s][i] for s in rng))))
        for i, j, k in product(rng, rng, rng)
    ))
    _record(report, 4, UPPER_STATEMENTS, _first_nonzero(
        ((i, j, k), (lambda i=i, j=j, k=k: _sum(ctx, (
            c[i][j][s] * ginv[s][k] + c[j][k][s] * ginv[s][i] + c[k][i][s] * ginv[s][j] for s in rng))))
        for i, j, k in product(rng, rng, rng)
    ))

    uppers = [w.upper(op.metric) for w in tails]

    def cond5():
        for a, (w, W) in enumerate(zip(tails, uppers)):
            for i, k in product(rng, rng):
                yield (i, k, a), (lambda i=i, k=k, W=W: _sum(ctx, (
                    ginv[i][s] * W[k][s] + ginv[k][s] * W[i][s] for s in rng)))

    def cond6():
        for a, (w, W) in enumerate(zip(tails, uppers)):
            if w.is_zero():
                continue
            half = [_log_derivative_half(w, l) for l in rng]
            dW = [[[W[j][s].diff(l) + W[j][s] * half[l] for l in rng] for s in rng] for j in rng]
            for j, k, l in product(rng, rng, rng):
                yield (j, k, l, a), (lambda j=j, k=k, l=l, W=W, dW=dW: _sum(ctx, (
                    ginv[k][s] * dW[j][s][l]
                    + dginv[l][j][s] * W[k][s]
                    - c[j][k][s] * W[s][l]
                    + c[k][j][s] * W[s][l]
                    for s in rng)))

    _record(report, 5, UPPER_STATEMENTS, _first_nonzero(cond5()))
    _record(report, 6, UPPER_STATEMENTS, _first_nonzero(cond6()))

    def cond7(i, j, k, l):
        total = _sum(ctx, (
            ginv[k][s] * c_diff(i, j, s, l)
            + c[k][j][s] * dginv[l][s][i]
            + c[k][i][s] * c[s][j][l]
            - c[i][k][s] * c[s][j][l]
            for s in rng))
        for w, W in zip(tails, uppers):
            if w.is_zero():
                continue
            total = total + _sum(ctx, (ginv[k][s] * W[i][s] for s in rng)) * W[j][l] * w.radicand
        return total

    _record(report, 7, UPPER_STATEMENTS, _first_nonzero(
        ((i, j, k, l), (lambda i=i, j=j, k=k, l=l: cond7(i, j, k, l)))
        for i, j, k, l in product(rng, rng, rng, rng)
    ))
    return report


# ------------------ Lower-index form ------------------

def check_conditions_lower(op: OperatorData) -> ConditionReport:
    ctx, n = op.ctx, op.n
    tails = _checked_tails(op)
    g = op.metric
    d = g.d
    cl = op.connection.lower
    cm = op.connection.mixed
    rng = range(n)
    report = ConditionReport("lower")

    _record(report, 1, LOWER_STATEMENTS, _first_nonzero(
        ((i, j, k), (lambda i=i, j=j, k=k: d[k][i][j] + cl[i][j][k] + cl[j][i][k]))
        for i, j, k in product(rng, rng, rng)
    ))
    _record(report, 2, LOWER_STATEMENTS, _first_nonzero(
        ((i, j, k), (lambda i=i, j=j, k=k: cl[i][j][k] + cl[i][k][j]))
        for i, j, k in product(rng, rng, rng)
    ))
    _record(report, 3, LOWER_STATEMENTS, _first_nonzero(
        ((i, j, k), (lambda i=i, j=j, k=k: d[k][i][j] + d[i][j][k] + d[j][k][i]))
        for i, j, k in product(rng, rng, rng)
    ))
    _record(report, 4, LOWER_STATEMENTS, _first_nonzero(
        ((i, j, a), (lambda i=i, j=j, w=w: w.rho[i][j] + w.rho[j][i]))
        for a, w in enumerate(tails) for i, j in product(rng, rng)
    ))

    def cond5():
        for a, w in enumerate(tails):
            if w.is_zero():
                continue
            half = [_log_derivative_half(w, l) for l in rng]
            for i, j, l in product(rng, rng, rng):
                yield (i, j, l, a), (lambda i=i, j=j, l=l, w=w, half=half: (
                    w.rho[i][j].diff(l) + w.rho[i][j] * half[l]
                    - _sum(ctx, (cm[s][i][j] * w.rho[s][l] for s in rng))))

    _record(report, 5, LOWER_STATEMENTS, _first_nonzero(cond5()))

    residual = curvature_residual(op)
    _record(report, 6, LOWER_STATEMENTS, _first_nonzero(
        (index, (lambda value=value: value)) for index, value in residual.items()
    ))
    return report


# ------------------ Curvature ------------------

def curvature_residual(op: OperatorData) -> Dict[Tuple[int, int, int, int], Ratio]:
    """Residual c_{nml,k} + c^s_{ml} c_{snk} + sum over tails of w_{ml} w_{nk}, keyed by (n, m, l, k)."""
    ctx, n = op.ctx, op.n
    cl = op.connection.lower
    cm = op.connection.mixed
    rng = range(n)
    tails = [w for w in _checked_tails(op) if not w.is_zero()]
    out = {}
    for a, m, l, k in product(rng, rng, rng, rng):
        value = cl[a][m][l].diff(k) + _sum(ctx, (cm[s][m][l] * cl[s][a][k] for s in rng))
        for w in tails:
            value = value + w.product(m, l, a, k)
        out[(a, m, l, k)] = value
    return out


@dataclass
class CurvatureReport:
    residual: Dict[Tuple[int, int, int, int], Ratio]
    riemann: Dict[Tuple[int, int, int, int], Ratio]

    @property
    def vanishes(self) -> bool:
        return all(v.is_zero() for v in self.residual.values())

    def component(self, i: int, j: int, k: int, l: int) -> Ratio:
        """R_{ijkl} with 1-based indices."""
        return self.riemann[(i - 1, j - 1, k - 1, l - 1)]


def curvature_check(op: OperatorData) -> CurvatureReport:
    """Verify the curvature identity and return R_{ijkl} = sum(w_{il} w_{jk} - w_{ik} w_{jl})."""
    ctx, n = op.ctx, op.n
    rng = range(n)
    tails = [w for w in _checked_tails(op) if not w.is_zero()]
    riemann = {}
    for i, j, k, l in product(rng, rng, rng, rng):
        riemann[(i, j, k, l)] = _sum(ctx, (w.product(i, l, j, k) - w.product(i, k, j, l) for w in tails))
    return CurvatureReport(curvature_residual(op), riemann)
