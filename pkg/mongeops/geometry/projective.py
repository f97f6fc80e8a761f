# mongeops/geometry/projective.py
"""Action of projective transformations u -> l^i(u)/l(u) on operators.

M acts on homogeneous coordinates (u^1, ..., u^n, 1); its last row is l.
In new coordinates the metric and the tails are

    g~ = (J^{-T} g J^{-1}) / l^4,    w~ = (J^{-T} w J^{-1}) / l^2,

evaluated at u(u~), where J = du~/du.  Writing m(u~) = 1/l(u), the last
component of M^{-1}(u~, 1), the factors become m^4 and m^2.
"""
import logging
from typing import Sequence

from ..errors import InputError, MathFailure, SingularTransform, abort
from ..exactalg import Ratio, det, inverse
from ..exactalg.matrix import as_matrix
from .conditions import check_conditions_lower
from .connection import derive_c
from .types import MongeMetric, OperatorData, WForm, _sum

log = logging.getLogger(__name__)


def _congruence(ctx, jinv, a, factor):
    """factor * sum_ab jinv[a][i] a[a][b] jinv[b][j]"""
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(factor * _sum(ctx, (
                jinv[x][i] * a[x][y] * jinv[y][j]
                for x in range(n) for y in range(n)
                if not a[x][y].is_zero()
            )))
        out.append(row)
    return out


def projective_transform(op: OperatorData, M: Sequence[Sequence[Ratio]], verify: bool = True) -> OperatorData:
    ctx, n = op.ctx, op.n
    M = as_matrix(M)
    if len(M) != n + 1 or any(len(row) != n + 1 for row in M):
        abort(InputError, f"projective matrix must be {n + 1}x{n + 1}")
    if any(not e.is_constant() for row in M for e in row):
        abort(InputError, "projective matrix entries must be free of coordinates")
    if det(M).is_zero():
        abort(SingularTransform, "projective matrix is singular")
    if derive_c(op.metric) != op.connection:
        abort(InputError, "projective_transform needs the connection determined by the metric")

    minv = inverse(M)
    homogeneous = list(ctx.gens[:n]) + [ctx.ring.one]
    column = [_sum(ctx, (minv[a][b] * Ratio(ctx, homogeneous[b]) for b in range(n + 1))) for a in range(n + 1)]
    m = column[n]
    if m.is_zero():
        abort(SingularTransform, "denominator form vanishes identically")
    old = [column[a] / m for a in range(n)]
    values = {k: old[k] for k in range(n)}
    jinv = as_matrix([[old[a].diff(i) for i in range(n)] for a in range(n)])

    def pull(a):
        return as_matrix([[e.substitute(values) for e in row] for row in a])

    m2 = m * m
    g_new = _congruence(ctx, jinv, pull(op.metric.g), m2 * m2)
    for row in g_new:
        for e in row:
            if not e.is_poly() or e.degree() > 2:
                raise MathFailure(f"transformed metric entry {e} is not a quadratic polynomial")
    metric = MongeMetric(ctx, g_new)
    tails = []
    for w in op.tails:
        if w.is_zero():
            tails.append(WForm.zero(ctx, n))
            continue
        rho = _congruence(ctx, jinv, pull(w.rho), m2)
        tails.append(WForm(rho, w.radicand.substitute(values)))
    result = OperatorData(metric, derive_c(metric), tails)

    if verify and check_conditions_lower(op).passed:
        report = check_conditions_lower(result)
        if not report.passed:
            raise MathFailure(
                f"transformed operator fails condition {report.first_failure.number}; weight convention violated"
            )
    log.info(f"[PROJECTIVE] transformed operator with denominator form {m}")
    return result
