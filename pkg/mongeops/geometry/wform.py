# mongeops/geometry/wform.py
"""Reconstruction of the tail 2-form from the metric, and the linear system it satisfies."""
import logging
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from .. import config
from ..errors import MathFailure, NoOperator, NotMonge
from ..exactalg import Ratio, rank, split_square
from .conditions import check_conditions_lower, curvature_residual
from .connection import derive_c, is_monge
from .types import MongeMetric, OperatorData, WForm, _sum

log = logging.getLogger(__name__)


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _fix_sign(rho) -> bool:
    """True when the first nonzero rho_{ij} (i<j) already has a positive leading coefficient."""
    n = len(rho)
    for i, j in _pairs(n):
        if not rho[i][j].is_zero():
            return rho[i][j].num.LC > 0
    return True


def derive_w(metric: MongeMetric) -> WForm:
    """The 2-form w with w_{nk} w_{ml} = -(c_{nml,k} + c^s_{ml} c_{snk}).

    Returns the zero form for local operators and raises NoOperator when the
    curvature-type tensor is not the square of a single 2-form.
    """
    ok, violations = is_monge(metric)
    if not ok:
        raise NotMonge(violations)
    ctx, n = metric.ctx, metric.n
    connection = derive_c(metric)
    local = OperatorData(metric, connection)
    K = {key: -value for key, value in curvature_residual(local).items()}

    if all(v.is_zero() for v in K.values()):
        log.info("[DERIVE_W] curvature term vanishes; operator is local")
        return WForm.zero(ctx, n)

    pairs = _pairs(n)

    # K_{(nk)(ml)} is stored under (n, m, l, k)
    def entry(p, q):
        (a, k), (m, l) = p, q
        return K[(a, m, l, k)]

    pivot = next((p for p in pairs if not entry(p, p).is_zero()), None)
    if pivot is None:
        raise NoOperator("curvature term has no nonzero diagonal entry w_{ij}^2; no tail 2-form exists")
    log.debug(f"[DERIVE_W] pivot pair {pivot}")

    r0 = entry(pivot, pivot)
    scale, radicand = split_square(r0)
    rho = [[ctx.zero] * n for _ in range(n)]
    for q in pairs:
        value = entry(pivot, q) / r0 * scale
        rho[q[0]][q[1]] = value
        rho[q[1]][q[0]] = -value
    if not _fix_sign(rho):
        rho = [[-e for e in row] for row in rho]
    w = WForm(rho, radicand)

    for a, m, l, k in product(range(n), repeat=4):
        if K[(a, m, l, k)] != w.product(m, l, a, k):
            raise NoOperator(
                f"curvature term is not a square of a 2-form (mismatch at {(a + 1, m + 1, l + 1, k + 1)})"
            )
    report = check_conditions_lower(OperatorData(metric, connection, [w]))
    if not report.passed:
        failed = report.first_failure
        raise NoOperator(f"reconstructed 2-form fails condition {failed.number} ({failed.statement})")
    return w


# ------------------ Linear system for w ------------------

@dataclass
class WSystem:
    unknowns: List[Tuple[int, int]]
    rows: List[List[Ratio]]
    kernel_dimension: int
    samples: List[int]

    @property
    def trivial(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def contains(self, w: WForm) -> bool:
        """True when rho lies in the kernel identically (the sqrt(R) factor is common)."""
        vector = [w.rho[i][j] for i, j in self.unknowns]
        ctx = w.radicand.ctx
        return all(_sum(ctx, (a * x for a, x in zip(row, vector))).is_zero() for row in self.rows)


def _system_rows(metric: MongeMetric) -> Tuple[List[Tuple[int, int]], List[List[Ratio]]]:
    ctx, n = metric.ctx, metric.n
    cm = derive_c(metric).mixed
    rng = range(n)
    unknowns = _pairs(n)
    position = {p: k for k, p in enumerate(unknowns)}

    # A[p][i][j][k] = c^p_{ij,k} - c^q_{ij} c^p_{qk}
    A = {}
    for p, i, j, k in product(rng, repeat=4):
        A[(p, i, j, k)] = cm[p][i][j].diff(k) - _sum(ctx, (cm[q][i][j] * cm[p][q][k] for q in rng))

    def add(row, p, s, coeff):
        if p == s or coeff.is_zero():
            return
        if p < s:
            row[position[(p, s)]] = row[position[(p, s)]] + coeff
        else:
            row[position[(s, p)]] = row[position[(s, p)]] - coeff

    rows = []
    for i, j, k, s in product(rng, repeat=4):
        if k >= s:
            continue
        row = [ctx.zero] * len(unknowns)
        for p in rng:
            add(row, p, s, A[(p, i, j, k)])
            add(row, p, k, -A[(p, i, j, s)])
        if any(not e.is_zero() for e in row):
            rows.append(row)
    return unknowns, rows


def _random_point(rng: random.Random, n: int) -> Tuple[Fraction, ...]:
    bound = config.SAMPLE_BOUND
    return tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n))


def w_constraint_system(metric: MongeMetric, seed: Optional[int] = None) -> WSystem:
    """Build (c^p_{ij,k} - c^q_{ij} c^p_{qk}) w_{ps} = (c^p_{ij,s} - c^q_{ij} c^p_{qs}) w_{pk}.

    The kernel dimension is evaluated at random rational points (parameters kept
    symbolic) and the majority over three points is reported.
    """
    unknowns, rows = _system_rows(metric)
    ctx, n = metric.ctx, metric.n
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    samples: List[int] = []
    failures = 0
    while len(samples) < config.RANK_POINTS:
        point = _random_point(rng, n)
        try:
            if metric.det.at_point(point).is_zero():
                raise ZeroDivisionError("det g vanishes at the sample point")
            evaluated = [[e.at_point(point) for e in row] for row in rows]
        except ZeroDivisionError:
            failures += 1
            log.debug(f"[WSYSTEM] resampling, point {point} is singular")
            if failures >= config.RESAMPLE_LIMIT:
                raise MathFailure(f"no regular sample point found after {failures} attempts")
            continue
        samples.append(len(unknowns) - rank(evaluated))
    dimension = Counter(samples).most_common(1)[0][0]
    log.info(f"[WSYSTEM] kernel dimensions at sample points {samples}, reporting {dimension}")
    return WSystem(unknowns, rows, dimension, samples)
