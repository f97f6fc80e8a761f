# mongeops/geometry/segre.py
"""Lift of a 3-component Monge metric to a quadratic line complex, and its Segre symbol.

A Monge metric in three components is a quadratic form Q in the six
differentials du^1, du^2, du^3, u^2du^3 - u^3du^2, u^3du^1 - u^1du^3,
u^1du^2 - u^2du^1, defined modulo the Plücker form P.  The Segre symbol of
the pencil Q - tP groups the Jordan blocks of QP^{-1} by eigenvalue.
"""
import logging
import random
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy import Matrix, Poly, Symbol, factor_list, linsolve, sqrt

from .. import config
from ..errors import DimensionMismatch, InputError, MathFailure, NotMonge, SymbolNotComputable, abort
from ..exactalg import Context, Ratio
from .connection import is_monge
from .types import MongeMetric

log = logging.getLogger(__name__)

Group = Tuple[int, ...]

_T = Symbol("t")


def _basis(u1, u2, u3):
    """Coefficient vectors of the six differentials in du^1, du^2, du^3."""
    return [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (0, -u3, u2),
        (u3, 0, -u1),
        (-u2, u1, 0),
    ]


def plucker() -> Matrix:
    P = sympy.zeros(6, 6)
    for i in range(3):
        P[i, i + 3] = 1
        P[i + 3, i] = 1
    return P


@dataclass
class SegreData:
    Q: Matrix
    P: Matrix
    charpoly: sympy.Expr
    groups: Optional[List[Group]] = None

    @property
    def symbol(self) -> Optional[str]:
        return None if self.groups is None else format_segre(self.groups)


# ------------------ Symbols ------------------

def format_segre(groups: Sequence[Group]) -> str:
    parts = []
    for g in sorted(tuple(sorted(g)) for g in groups):
        parts.append(str(g[0]) if len(g) == 1 else "(" + "".join(str(s) for s in g) + ")")
    return "[" + "".join(parts) + "]"


def parse_segre(label: str) -> List[Group]:
    """'[111(12)]' -> [(1,), (1,), (1,), (1, 2)]"""
    m = re.fullmatch(r"\[([0-9()]+)\]", label.strip())
    if not m:
        abort(InputError, f"malformed Segre symbol {label!r}")
    groups = []
    for paren, single in re.findall(r"\(([0-9]+)\)|([0-9])", m.group(1)):
        groups.append(tuple(sorted(int(c) for c in paren)) if paren else (int(single),))
    return groups


def same_segre(a: Sequence[Group], b: Sequence[Group]) -> bool:
    return Counter(tuple(sorted(g)) for g in a) == Counter(tuple(sorted(g)) for g in b)


# ------------------ Lift ------------------

def _coordinate_symbols(ctx: Context):
    return [Symbol(name) for name in ctx.coordinates]


def monge_lift(metric: MongeMetric, rng: Optional[random.Random] = None) -> SegreData:
    """Canonical lift Q (trace-orthogonal to P) plus the Segre symbol when computable."""
    if metric.n != 3:
        abort(DimensionMismatch, "monge_lift needs a 3-component metric")
    ok, violations = is_monge(metric)
    if not ok:
        raise NotMonge(violations)
    ctx = metric.ctx
    u = _coordinate_symbols(ctx)
    E = _basis(*u)
    q = {}
    unknowns = []
    for a in range(6):
        for b in range(a, 6):
            q[(a, b)] = q[(b, a)] = Symbol(f"q_{a}{b}")
            unknowns.append(q[(a, b)])

    equations = []
    for i in range(3):
        for j in range(i, 3):
            lifted = sum(q[(a, b)] * E[a][i] * E[b][j] for a in range(6) for b in range(6))
            target = ctx.to_sympy(metric.g[i][j])
            equations.extend(Poly(sympy.expand(lifted - target), *u).coeffs())

    solutions = linsolve(equations, unknowns)
    if not solutions:
        raise MathFailure("metric has no lift to a quadratic line complex")
    (solution,) = solutions
    free = set().union(*(sympy.sympify(s).free_symbols for s in solution)) & set(unknowns)
    values = [sympy.sympify(s).subs({f: 0 for f in free}) for s in solution]
    lookup = dict(zip(unknowns, values))
    Q0 = Matrix(6, 6, lambda a, b: lookup[q[(a, b)]])

    P = plucker()
    Q = (Q0 - (Q0 * P).trace() / 6 * P).applyfunc(sympy.expand)
    data = SegreData(Q, P, sympy.S.Zero)
    _segre(ctx, data, rng or random.Random(config.DEFAULT_SEED))
    return data


def metric_from_lift(ctx: Context, Q: Matrix) -> List[List[Ratio]]:
    """g_{ij} = sum_ab Q_ab E_a^i E_b^j"""
    E = _basis(*_coordinate_symbols(ctx))
    return [
        [ctx.from_sympy(sympy.expand(sum(Q[a, b] * E[a][i] * E[b][j] for a in range(6) for b in range(6))))
         for j in range(3)]
        for i in range(3)
    ]


# ------------------ Segre symbol ------------------

def _root_values(ctx: Context):
    from ..exactalg import parse_expr
    return {Symbol(r.name): sqrt(ctx.to_sympy(parse_expr(r.radicand, ctx))) for r in ctx.roots}


def _random_parameters(ctx: Context, rng: random.Random):
    bound = config.SAMPLE_BOUND
    values = {}
    for p in ctx.parameters:
        value = Fraction(0)
        while value == 0:
            value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        values[Symbol(p.name)] = sympy.Rational(value.numerator, value.denominator)
    return values


def _jordan_groups(A: Matrix, eigenvalues: List[Tuple[sympy.Expr, int]]) -> List[Group]:
    groups = []
    size = A.shape[0]
    for ev, mult in eigenvalues:
        B = A - ev * sympy.eye(size)
        ranks = [size]
        power = sympy.eye(size)
        for _ in range(mult + 1):
            power = (power * B).applyfunc(sympy.expand)
            ranks.append(power.rank(simplify=True))
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, mult + 2)]
        blocks = []
        for k in range(1, mult + 1):
            blocks.extend([k] * (at_least[k - 1] - at_least[k]))
        if sum(blocks) != mult:
            raise MathFailure(f"Jordan block sizes {blocks} do not add up to multiplicity {mult}")
        groups.append(tuple(sorted(blocks)))
    return groups


def _segre(ctx: Context, data: SegreData, rng: random.Random) -> None:
    roots = _root_values(ctx)
    A = (data.Q * data.P).subs(roots)
    charpoly = sympy.factor(A.charpoly(_T).as_expr())
    data.charpoly = charpoly
    extension = list(roots.values())
    try:
        if extension:
            _, factors = factor_list(charpoly, _T, extension=extension)
        else:
            _, factors = factor_list(charpoly, _T)
    except (sympy.polys.polyerrors.PolynomialError, NotImplementedError) as e:
        raise SymbolNotComputable(f"characteristic polynomial could not be factored: {e}", charpoly)

    eigenvalues = []
    for f, mult in factors:
        if sympy.degree(f, _T) == 0:
            continue
        if sympy.degree(f, _T) > 1:
            log.info(f"[SEGRE] nonlinear factor {f} of the characteristic polynomial")
            raise SymbolNotComputable(
                f"characteristic polynomial {charpoly} does not split into linear factors", charpoly
            )
        p = Poly(f, _T)
        eigenvalues.append((-p.coeff_monomial(1) / p.coeff_monomial(_T), mult))
    log.debug(f"[SEGRE] eigenvalues {eigenvalues}")

    for _ in range(config.RESAMPLE_LIMIT):
        values = _random_parameters(ctx, rng)
        specialized = [(sympy.simplify(ev.subs(values)), m) for ev, m in eigenvalues]
        if len({ev for ev, _ in specialized}) == len(specialized):
            data.groups = _jordan_groups(A.subs(values), specialized)
            log.info(f"[SEGRE] symbol {data.symbol}")
            return
        log.debug(f"[SEGRE] eigenvalues collide at {values}, resampling")
    raise MathFailure(f"eigenvalues collide at every sample after {config.RESAMPLE_LIMIT} attempts")
