# mongeops/pva/bracket.py
"""λ-brackets of the potentials v^i built from operator data.

In potential coordinates the generators bracket as

    {v^a_ν v^l} = g^{la} ν + c^{la}_r v^r_{2x}
                  + sum over tails of W^l_r v^r_{2x} (ν + ∂)^{-1} W^a_s v^s_{2x},

with the inverse acting on the right factor only.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy import Symbol

from ..errors import DimensionMismatch, abort
from ..geometry.types import OperatorData
from .jets import JetSpace
from .lambdas import LAM, NU, X, D, LambdaExpr, Term, VElement, normalize_nonlocal

log = logging.getLogger(__name__)


@dataclass
class UpperData:
    """Operator data with upper indices as sympy expressions in the first jets.

    ``tails`` holds pairs (W, s): W[i][j] = W^i_j and s the radical symbol
    standing for sqrt(R), or None when the tail carries no radical.
    """
    space: JetSpace
    ginv: List[List[sympy.Expr]]
    c: List[List[List[sympy.Expr]]]
    tails: List[Tuple[List[List[sympy.Expr]], Optional[Symbol]]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.space.n

    def __post_init__(self):
        n = self.n
        if len(self.ginv) != n or any(len(r) != n for r in self.ginv):
            abort(DimensionMismatch, f"g^ij must be {n}x{n}")
        if len(self.c) != n or any(len(a) != n or any(len(b) != n for b in a) for a in self.c):
            abort(DimensionMismatch, f"c^ij_k must be {n}x{n}x{n}")
        for W, _ in self.tails:
            if len(W) != n or any(len(r) != n for r in W):
                abort(DimensionMismatch, f"tail must be {n}x{n}")
        self.ginv = [[sympy.sympify(e) for e in row] for row in self.ginv]
        self.c = [[[sympy.sympify(e) for e in b] for b in a] for a in self.c]
        self.tails = [([[sympy.sympify(e) for e in row] for row in W], s) for W, s in self.tails]

    @classmethod
    def from_operator(cls, op: OperatorData) -> "UpperData":
        ctx, n = op.ctx, op.n

        def conv(value):
            return ctx.to_sympy(value, roots_as_sqrt=True)

        space = JetSpace([Symbol(name) for name in ctx.coordinates])
        ginv = [[conv(e) for e in row] for row in op.metric.inverse]
        c = [[[conv(op.connection.upper[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
        tails = []
        for alpha, w in enumerate(op.nonzero_tails):
            W = [[conv(e) for e in row] for row in w.upper(op.metric)]
            s = None
            if not w.radicand.is_one():
                s = space.add_radical(Symbol(f"s{alpha + 1}"), conv(w.radicand))
            tails.append((W, s))
        return cls(space, ginv, c, tails)


class BracketTable:
    """Generator brackets {v^a_ν v^l} as lists of terms in the placeholder ν."""

    def __init__(self, data: UpperData):
        self.data = data
        self.space = data.space
        self._cache: Dict[Tuple[int, int], LambdaExpr] = {}

    def second_jets(self, row: Sequence[sympy.Expr]) -> sympy.Expr:
        return sympy.Add(*(coeff * self.space.jet(r, 2) for r, coeff in enumerate(row)))

    def _build(self, a: int, l: int) -> LambdaExpr:
        data = self.data
        terms: LambdaExpr = []
        if data.ginv[l][a] != 0:
            terms.append(Term((data.ginv[l][a],), NU))
        local = self.second_jets([data.c[l][a][r] for r in range(data.n)])
        if local != 0:
            terms.append(Term((local,), sympy.S.One))
        for W, s in data.tails:
            left = self.second_jets(W[l])
            right = self.second_jets(W[a])
            if s is not None:
                left, right = left * s, right * s
            if left != 0 and right != 0:
                terms.append(Term((left, right), sympy.S.One, ((NU + D(1), 1),)))
        return terms

    def entry(self, a: int, l: int, param: sympy.Expr) -> LambdaExpr:
        """{v^a_param v^l}"""
        if (a, l) not in self._cache:
            self._cache[(a, l)] = self._build(a, l)
        return [t.substitute({NU: param}) for t in self._cache[(a, l)]]


def operator_to_bracket(op) -> BracketTable:
    data = op if isinstance(op, UpperData) else UpperData.from_operator(op)
    return BracketTable(data)


# ------------------ Brackets of jet polynomials ------------------

def bracket_with_generator(table: BracketTable, a: int, param: sympy.Expr, term: Term) -> LambdaExpr:
    """{v^a_param term}, by right Leibniz rule and right sesquilinearity."""
    space = table.space
    out: LambdaExpr = []
    r = term.size
    for t, factor in enumerate(term.factors):
        for b, m in sorted(space.jets_in(factor)):
            partial = space.partial(factor, b, m)
            if partial == 0:
                continue
            for B in table.entry(a, b, param):
                B = B.shifted(r)
                sum_b = sympy.Add(*(D(r + q) for q in range(B.size)))
                moved = term.substitute({D(t): param + D(t) + sum_b})
                factors = list(term.factors)
                factors[t] = partial
                out.append(Term(
                    tuple(factors) + B.factors,
                    moved.poly * B.poly * (param + sum_b) ** m,
                    moved.inverses + B.inverses,
                ))
    return out


def master_bracket(f: sympy.Expr, g: sympy.Expr, table: BracketTable) -> LambdaExpr:
    """{f_λ g} = sum (∂g/∂v^b_m)(λ+∂)^m {v^a_{λ+∂} v^b}_→ (-λ-∂)^l ∂f/∂v^a_l."""
    space = table.space
    out: LambdaExpr = []
    for a, l in sorted(space.jets_in(f)):
        df = space.partial(f, a, l)
        if df == 0:
            continue
        for b, m in sorted(space.jets_in(g)):
            dg = space.partial(g, b, m)
            if dg == 0:
                continue
            for B in table.entry(a, b, NU):
                B = B.shifted(1)
                s = B.size
                d_f = D(s + 1)
                sum_b = sympy.Add(*(D(1 + q) for q in range(s)))
                moved = B.substitute({NU: LAM + d_f})
                out.append(Term(
                    (dg,) + B.factors + (df,),
                    moved.poly * (LAM + sum_b + d_f) ** m * (-LAM - d_f) ** l,
                    moved.inverses,
                ))
    return out


def bracket_expansion(terms: LambdaExpr, space: JetSpace) -> VElement:
    return normalize_nonlocal(terms, space)


# ------------------ Skew-symmetry ------------------

@dataclass
class SkewReport:
    local: Dict[Tuple[int, int], VElement]
    nonlocal_: Dict[Tuple[int, int], VElement]

    @property
    def passed(self) -> bool:
        return all(v.is_zero() for v in self.local.values()) and all(v.is_zero() for v in self.nonlocal_.values())

    def failures(self) -> List[str]:
        out = []
        for (i, j), element in sorted(self.local.items()):
            for (label, monomial), coeff in element.residuals().items():
                out.append(f"({i + 1},{j + 1}) {monomial} at {label}: {coeff}")
        for (i, j), element in sorted(self.nonlocal_.items()):
            if not element.is_zero():
                out.append(f"({i + 1},{j + 1}) nonlocal part does not cancel")
        return out


def _skew_terms(table: BracketTable, i: int, j: int, keep) -> LambdaExpr:
    first = [t for t in table.entry(i, j, LAM) if keep(t)]
    second = []
    for t in table.entry(j, i, X):
        if keep(t):
            second.append(t.substitute({X: -LAM - sum(t.d_symbols(), sympy.S.Zero)}))
    return first + second


def check_skew(op) -> SkewReport:
    """{v^i_λ v^j} + {v^j_{-λ-∂} v^i} for every pair, split into local and nonlocal parts."""
    table = op if isinstance(op, BracketTable) else operator_to_bracket(op)
    space = table.space
    n = table.data.n
    local, nonlocal_ = {}, {}
    for i in range(n):
        for j in range(i, n):
            local[(i, j)] = normalize_nonlocal(_skew_terms(table, i, j, lambda t: not t.inverses), space)
            nonlocal_[(i, j)] = normalize_nonlocal(_skew_terms(table, i, j, lambda t: bool(t.inverses)), space)
    report = SkewReport(local, nonlocal_)
    log.info(f"[SKEW] {'PASS' if report.passed else 'FAIL'}")
    return report
