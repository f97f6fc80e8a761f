# mongeops/geometry/connection.py
import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import List, Sequence, Tuple, Union

from ..errors import DegenerateMetric, NotMonge
from ..exactalg import Ratio, det
from ..exactalg.matrix import as_matrix
from .types import Connection, MongeMetric

log = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def is_monge(g: Union[MongeMetric, Sequence[Sequence[Ratio]]]) -> Tuple[bool, List[Triple]]:
    """Check g_{ij,k} + g_{jk,i} + g_{ki,j} = 0 for every index triple.

    Violations are reported once per multiset, 1-based and in descending order,
    e.g. (2, 2, 1) for g_{22,1} + g_{21,2} + g_{12,2} != 0.
    """
    if isinstance(g, MongeMetric):
        matrix, n = g.g, g.n
    else:
        matrix = as_matrix(g)
        n = len(matrix)
        if det(matrix).is_zero():
            raise DegenerateMetric()
    violations: List[Triple] = []
    for i, j, k in combinations_with_replacement(range(n), 3):
        cyclic = matrix[i][j].diff(k) + matrix[j][k].diff(i) + matrix[k][i].diff(j)
        if not cyclic.is_zero():
            violations.append((k + 1, j + 1, i + 1))
    if violations:
        log.debug(f"[MONGE] cyclic condition fails at {violations}")
    return not violations, violations


def lowered_connection(metric: MongeMetric):
    """c_{ijk} = (g_{ik,j} - g_{ij,k}) / 3, polynomial because g is."""
    d, n = metric.d, metric.n
    third = Fraction(1, 3)
    return tuple(
        tuple(tuple((d[j][i][k] - d[k][i][j]) * third for k in range(n)) for j in range(n))
        for i in range(n)
    )


def derive_c(metric: MongeMetric) -> Connection:
    """c^{ij}_k = (1/3) g^{qi} g^{pj} (g_{pk,q} - g_{pq,k}), built by raising c_{ijk}."""
    ok, violations = is_monge(metric)
    if not ok:
        raise NotMonge(violations)
    return Connection.from_lower(metric, lowered_connection(metric))
