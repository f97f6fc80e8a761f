# mongeops/dirac/reduce.py
"""Dirac reduction of a local (n+1)-component operator to a coordinate hyperplane.

The reduced operator lives on u^a = 0 and carries one nonlocal tail,

    g_{ij} = G_{ij},  c_{ijk} = C_{ijk},  w_{ij} = C^a_{ij} / sqrt(G^{aa}),

all restricted to the hyperplane.  The symbolic path recomputes the same data
from the upper-index formulas of the constrained bracket and serves as an
independent check.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..errors import DimensionMismatch, InadmissibleAxis, MathFailure, abort
from ..exactalg import Context, Ratio
from ..exactalg.matrix import as_matrix, det, inverse
from ..geometry.conditions import check_conditions_lower
from ..geometry.connection import derive_c
from ..geometry.types import Connection, MongeMetric, OperatorData, WForm, _sum

log = logging.getLogger(__name__)

CLOSED = "closed-form"
SYMBOLIC = "symbolic"


class AmbientLocalOperator:
    """Local Hamiltonian operator in n+1 components with connection determined by G."""

    def __init__(self, metric: MongeMetric, connection: Optional[Connection] = None):
        connection = connection or derive_c(metric)
        op = OperatorData(metric, connection)
        report = check_conditions_lower(op)
        if not report.passed:
            raise MathFailure(f"ambient operator fails condition {report.first_failure.number}")
        self.operator = op

    @property
    def ctx(self) -> Context:
        return self.operator.ctx

    @property
    def n(self) -> int:
        return self.operator.n

    @property
    def metric(self) -> MongeMetric:
        return self.operator.metric

    @property
    def connection(self) -> Connection:
        return self.operator.connection


@dataclass
class ReductionResult:
    operator: OperatorData
    provenance: str
    axis: int

    @property
    def tail(self) -> WForm:
        return self.operator.tails[0]


class _Hyperplane:
    """Index bookkeeping and restriction to u^axis = 0."""

    def __init__(self, ambient: AmbientLocalOperator, axis: int):
        ctx = ambient.ctx
        if not 0 <= axis < ambient.n:
            abort(DimensionMismatch, f"axis {axis + 1} is out of range 1..{ambient.n}")
        if ambient.n < 2:
            abort(DimensionMismatch, "reduction needs at least two components")
        self.ambient = ambient
        self.axis = axis
        self.others: List[int] = [k for k in range(ambient.n) if k != axis]
        self.reduced = Context(
            [c for k, c in enumerate(ctx.coordinates) if k != axis], ctx.parameters, ctx.roots
        )
        self.ginv = ambient.metric.inverse
        self.g00 = self.restrict(self.ginv[axis][axis])
        if self.g00.is_zero():
            raise InadmissibleAxis(f"G^{{aa}} vanishes identically on u{axis + 1} = 0")
        G = ambient.metric.g
        if det([[self.restrict(G[i][j]) for j in self.others] for i in self.others]).is_zero():
            raise InadmissibleAxis(f"restricted metric is degenerate on u{axis + 1} = 0")

    def restrict(self, value: Ratio) -> Ratio:
        ctx = self.ambient.ctx
        return ctx.transfer(value.substitute({self.axis: ctx.zero}), self.reduced)

    def finish(self, metric: MongeMetric, connection: Connection, rho, provenance: str) -> ReductionResult:
        n = metric.n
        rho = as_matrix(rho)
        if all(e.is_zero() for row in rho for e in row):
            tail = WForm.zero(self.reduced, n)
        else:
            tail = WForm(rho, self.g00.inverse())
        op = OperatorData(metric, connection, [tail])
        report = check_conditions_lower(op)
        if not report.passed:
            raise MathFailure(
                f"{provenance} reduction fails condition {report.first_failure.number}"
            )
        log.info(f"[DIRAC] {provenance} reduction along u{self.axis + 1}: "
                 f"{'local' if tail.is_zero() else 'nonlocal'} result")
        return ReductionResult(op, provenance, self.axis)


def dirac_reduce_closed(ambient: AmbientLocalOperator, axis: int) -> ReductionResult:
    h = _Hyperplane(ambient, axis)
    G = ambient.metric.g
    idx = h.others
    metric = MongeMetric(h.reduced, [[h.restrict(G[i][j]) for j in idx] for i in idx])
    lower = ambient.connection.lower
    c = [[[h.restrict(lower[i][j][k]) for k in idx] for j in idx] for i in idx]
    connection = Connection.from_lower(metric, c)
    mixed = ambient.connection.mixed
    rho = [[h.restrict(mixed[axis][i][j]) for j in idx] for i in idx]
    return h.finish(metric, connection, rho, CLOSED)


def dirac_reduce_symbolic(ambient: AmbientLocalOperator, axis: int) -> ReductionResult:
    h = _Hyperplane(ambient, axis)
    ctx = ambient.ctx
    a, idx = axis, h.others
    Gi = h.ginv
    C = ambient.connection.upper
    G00 = Gi[a][a]
    dG00 = [G00.diff(k) for k in range(ambient.n)]

    # g^{ij} = G^{ij} - G^{i0} G^{0j} / G^{00}
    upper = [[h.restrict(Gi[i][j] - Gi[i][a] * Gi[a][j] / G00) for j in idx] for i in idx]
    g_lower = inverse(as_matrix(upper))
    for row in g_lower:
        for e in row:
            if not e.is_poly() or e.degree() > 2:
                raise MathFailure(f"reduced metric entry {e} is not a quadratic polynomial")
    metric = MongeMetric(h.reduced, g_lower)

    def c_upper(i, j, k):
        value = (
            C[i][j][k]
            - (Gi[i][a] * C[a][j][k] + C[i][a][k] * Gi[a][j]) / G00
            + Gi[i][a] * Gi[a][j] * dG00[k] / (2 * G00 * G00)
        )
        return h.restrict(value)

    connection = Connection(metric, [[[c_upper(i, j, k) for k in idx] for j in idx] for i in idx])

    # w^i_k sqrt(G^{00}) = C^{i0}_k - G^{i0} G^{00}_{,k} / (2 G^{00})
    V = [[h.restrict(C[i][a][k] - Gi[i][a] * dG00[k] / (2 * G00)) for k in idx] for i in idx]
    m = len(idx)
    rho = [[_sum(h.reduced, (g_lower[i][s] * V[s][k] for s in range(m))) for k in range(m)] for i in range(m)]
    return h.finish(metric, connection, rho, SYMBOLIC)


@dataclass
class Comparison:
    metric: bool
    connection: bool
    tail: bool

    @property
    def equal(self) -> bool:
        return self.metric and self.connection and self.tail


def compare(first: ReductionResult, second: ReductionResult) -> Comparison:
    a, b = first.operator, second.operator
    ta, tb = a.tails[0], b.tails[0]
    if ta.is_zero() or tb.is_zero():
        tails = ta.is_zero() and tb.is_zero()
    else:
        tails = ta.same_up_to_sign(tb)
    return Comparison(a.metric == b.metric, a.connection == b.connection, tails)


def admissible_axes(ambient: AmbientLocalOperator) -> Sequence[int]:
    axes = []
    for axis in range(ambient.n):
        try:
            _Hyperplane(ambient, axis)
        except InadmissibleAxis:
            continue
        axes.append(axis)
    return axes
