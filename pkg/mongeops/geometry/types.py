# mongeops/geometry/types.py
"""Value types of the geometric core: metrics, connections, w-forms and operators."""
import logging
from functools import cached_property
from typing import List, Sequence, Tuple

from ..errors import DegenerateMetric, DimensionMismatch, InputError, abort
from ..exactalg import Context, Ratio
from ..exactalg.matrix import Matrix, as_matrix, det, inverse, is_skew, is_symmetric

log = logging.getLogger(__name__)

Tensor3 = Tuple[Tuple[Tuple[Ratio, ...], ...], ...]


def _tensor3(ctx, n, fn) -> Tensor3:
    return tuple(tuple(tuple(fn(i, j, k) for k in range(n)) for j in range(n)) for i in range(n))


class MongeMetric:
    """Symmetric n×n matrix g_{ij}(u) with polynomial entries of degree at most 2.

    The cyclic Monge condition is not enforced here; see ``is_monge``.
    """

    def __init__(self, ctx: Context, g: Sequence[Sequence[Ratio]]):
        g = as_matrix(g)
        n = ctx.n
        if len(g) != n or any(len(row) != n for row in g):
            abort(DimensionMismatch, f"metric must be {n}x{n} for coordinates {list(ctx.coordinates)}")
        if not is_symmetric(g):
            abort(InputError, "metric matrix is not symmetric")
        for row in g:
            for entry in row:
                if not entry.is_poly():
                    abort(InputError, f"metric entry {entry} is not a polynomial")
                if entry.degree() > 2:
                    abort(InputError, f"metric entry {entry} has degree above 2")
        self.ctx = ctx
        self.g: Matrix = g
        if self.det.is_zero():
            raise DegenerateMetric()

    @property
    def n(self) -> int:
        return self.ctx.n

    @cached_property
    def det(self) -> Ratio:
        return det(self.g)

    @cached_property
    def inverse(self) -> Matrix:
        return inverse(self.g, self.det)

    @cached_property
    def d(self) -> Tuple[Matrix, ...]:
        """d[k][i][j] = g_{ij,k}"""
        return tuple(as_matrix([[e.diff(k) for e in row] for row in self.g]) for k in range(self.n))

    @cached_property
    def d_inverse(self) -> Tuple[Matrix, ...]:
        """d_inverse[k][i][j] = g^{ij}_{,k}"""
        return tuple(as_matrix([[e.diff(k) for e in row] for row in self.inverse]) for k in range(self.n))

    def __eq__(self, other):
        return isinstance(other, MongeMetric) and self.ctx == other.ctx and self.g == other.g

    def __hash__(self):
        return hash(self.g)

    def __repr__(self):
        return f"MongeMetric({[[str(e) for e in row] for row in self.g]})"


class Connection:
    """Coefficients c^{ij}_k with lowered forms derived on demand.

    upper[i][j][k] = c^{ij}_k, mixed[i][j][k] = c^i_{jk}, lower[i][j][k] = c_{ijk}.
    """

    def __init__(self, metric: MongeMetric, upper: Sequence, lower: Sequence = None):
        n = metric.n
        if len(upper) != n or any(len(a) != n or any(len(b) != n for b in a) for a in upper):
            abort(DimensionMismatch, f"connection must be {n}x{n}x{n}")
        self.metric = metric
        self.upper: Tensor3 = tuple(tuple(tuple(c) for c in a) for a in upper)
        if lower is not None:
            self.__dict__["lower"] = tuple(tuple(tuple(c) for c in a) for a in lower)

    @classmethod
    def from_lower(cls, metric: MongeMetric, lower: Sequence) -> "Connection":
        ctx, n, ginv = metric.ctx, metric.n, metric.inverse
        # M[i][a][k] = g^{aj} c_{ijk}; c^{ab}_k = g^{bi} M[i][a][k]
        m = _tensor3(ctx, n, lambda i, a, k: _sum(ctx, (ginv[a][j] * lower[i][j][k] for j in range(n))))
        upper = _tensor3(ctx, n, lambda a, b, k: _sum(ctx, (ginv[b][i] * m[i][a][k] for i in range(n))))
        return cls(metric, upper, lower)

    @property
    def n(self) -> int:
        return self.metric.n

    @cached_property
    def mixed(self) -> Tensor3:
        g, ctx, n = self.metric.g, self.metric.ctx, self.n
        return _tensor3(ctx, n, lambda i, j, k: _sum(ctx, (g[j][s] * self.upper[s][i][k] for s in range(n))))

    @cached_property
    def lower(self) -> Tensor3:
        g, ctx, n = self.metric.g, self.metric.ctx, self.n
        return _tensor3(ctx, n, lambda i, j, k: _sum(ctx, (g[i][s] * self.mixed[s][j][k] for s in range(n))))

    def __eq__(self, other):
        return isinstance(other, Connection) and self.upper == other.upper

    def __hash__(self):
        return hash(self.upper)


class WForm:
    """Skew 2-form w_{ij} = rho_{ij} * sqrt(R)."""

    def __init__(self, rho: Sequence[Sequence[Ratio]], radicand: Ratio):
        rho = as_matrix(rho)
        if not is_skew(rho):
            abort(InputError, "tail matrix is not skew-symmetric")
        ctx = radicand.ctx
        if all(e.is_zero() for row in rho for e in row):
            radicand = ctx.one
        self.rho: Matrix = rho
        self.radicand: Ratio = radicand

    @classmethod
    def zero(cls, ctx: Context, n: int) -> "WForm":
        return cls(tuple(tuple(ctx.zero for _ in range(n)) for _ in range(n)), ctx.one)

    @property
    def n(self) -> int:
        return len(self.rho)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rho for e in row)

    def negated(self) -> "WForm":
        return WForm(tuple(tuple(-e for e in row) for row in self.rho), self.radicand)

    def product(self, i: int, j: int, k: int, l: int) -> Ratio:
        """w_{ij} w_{kl} as a Ratio"""
        return self.rho[i][j] * self.rho[k][l] * self.radicand

    def upper(self, metric: MongeMetric) -> Matrix:
        """W^i_j = g^{is} rho_{sj}; the upper form is W * sqrt(R)."""
        ctx, n, ginv = metric.ctx, metric.n, metric.inverse
        return as_matrix([[_sum(ctx, (ginv[i][s] * self.rho[s][j] for s in range(n))) for j in range(n)] for i in range(n)])

    def same_up_to_sign(self, other: "WForm") -> bool:
        n = self.n
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return all(
            self.product(a, b, c, d) == other.product(a, b, c, d)
            for (a, b) in pairs for (c, d) in pairs
        )

    def __eq__(self, other):
        return isinstance(other, WForm) and self.rho == other.rho and self.radicand == other.radicand

    def __hash__(self):
        return hash((self.rho, self.radicand))

    def __repr__(self):
        return f"WForm(rho={[[str(e) for e in row] for row in self.rho]}, R={self.radicand})"


class OperatorData:
    def __init__(self, metric: MongeMetric, connection: Connection, tails: Sequence[WForm] = ()):
        n = metric.n
        if connection.n != n:
            abort(DimensionMismatch, "connection and metric disagree on n")
        for w in tails:
            if w.n != n:
                abort(DimensionMismatch, "tail and metric disagree on n")
            if w.radicand.ctx != metric.ctx:
                abort(DimensionMismatch, "tail and metric use different contexts")
        self.metric = metric
        self.connection = connection
        self.tails: Tuple[WForm, ...] = tuple(tails)

    @property
    def ctx(self) -> Context:
        return self.metric.ctx

    @property
    def n(self) -> int:
        return self.metric.n

    @property
    def nonzero_tails(self) -> List[WForm]:
        return [w for w in self.tails if not w.is_zero()]

    def with_tails(self, tails: Sequence[WForm]) -> "OperatorData":
        return OperatorData(self.metric, self.connection, tails)


def _sum(ctx, items) -> Ratio:
    acc = ctx.zero
    for x in items:
        if not x.is_zero():
            acc = acc + x
    return acc
