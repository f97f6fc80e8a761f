# mongeops/pva/lambdas.py
"""Symbol calculus for λ-brackets with nonlocal parts.

A :class:`Term` is a product of jet factors F_0 ... F_{r-1} acted on by a
rational symbol Φ(λ, μ, D_0, ..., D_{r-1}) where D_t is the total derivative
applied to F_t alone.  Φ is a polynomial times inverse linear forms
(ν + E)^{-e}, with ν one of ±λ, ±μ, ±(λ+μ) and E a sum of D's.

Expansion writes each inverse as its Taylor series in E and decomposes the
λ, μ dependence in the basis λ^a μ^b (Laurent monomials) and
λ^a (λ+μ)^c with c < 0.  Only labels of total degree at least the
configured minimum are produced.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple

import sympy
from sympy import Symbol, binomial

from .. import config
from ..errors import InadmissibleExpression
from .jets import JetSpace

log = logging.getLogger(__name__)

LAM = Symbol("lambda_")
MU = Symbol("mu_")
NU = Symbol("nu_")    # placeholder for the argument of a generator bracket
X = Symbol("x_")      # placeholder for the argument -λ-μ-∂ of the third Jacobi term

Label = Tuple[int, int, int]     # exponents of λ, μ, λ+μ


def D(t: int) -> Symbol:
    return Symbol(f"D_{t}")


@dataclass(frozen=True)
class Term:
    factors: Tuple[sympy.Expr, ...]
    poly: sympy.Expr
    inverses: Tuple[Tuple[sympy.Expr, int], ...] = ()

    @property
    def size(self) -> int:
        return len(self.factors)

    def d_symbols(self) -> List[Symbol]:
        return [D(t) for t in range(self.size)]

    def substitute(self, mapping: Dict[Symbol, sympy.Expr]) -> "Term":
        return Term(
            self.factors,
            self.poly.xreplace(mapping),
            tuple((form.xreplace(mapping), e) for form, e in self.inverses),
        )

    def scaled(self, factor: sympy.Expr) -> "Term":
        return Term(self.factors, factor * self.poly, self.inverses)

    def shifted(self, offset: int) -> "Term":
        """Renumber D_t -> D_{t+offset}."""
        if offset == 0:
            return self
        return self.substitute({D(t): D(t + offset) for t in range(self.size)})

    def __neg__(self) -> "Term":
        return self.scaled(-1)


LambdaExpr = List[Term]


def negate(terms: Iterable[Term]) -> LambdaExpr:
    return [-t for t in terms]


def apply_shift(terms: Iterable[Term], param: Symbol) -> LambdaExpr:
    """(param + ∂) applied to every term."""
    return [t.scaled(param + sum(t.d_symbols(), sympy.S.Zero)) for t in terms]


# ------------------ Basis of V ------------------

@lru_cache(maxsize=None)
def to_basis(a: int, b: int, c: int) -> Tuple[Tuple[Label, int], ...]:
    """Decompose λ^a μ^b (λ+μ)^c into basis labels (a', b', 0) and (a', 0, c' < 0)."""
    if c >= 0:
        return tuple(((a + k, b + c - k, 0), int(binomial(c, k))) for k in range(c + 1))
    if b == 0:
        return (((a, 0, c), 1),)
    acc: Dict[Label, int] = defaultdict(int)
    if b > 0:
        # μ = (λ+μ) - λ
        parts = [((a, b - 1, c + 1), 1), ((a + 1, b - 1, c), -1)]
    else:
        # 1 = ((λ+μ) - μ) / λ
        parts = [((a - 1, b, c + 1), 1), ((a - 1, b + 1, c), -1)]
    for (x, y, z), sign in parts:
        for label, coeff in to_basis(x, y, z):
            acc[label] += sign * coeff
    return tuple((label, coeff) for label, coeff in acc.items() if coeff)


def label_name(label: Label) -> str:
    a, b, c = label

    def power(base, e):
        if e == 0:
            return ""
        return base if e == 1 else f"{base}^{e}"

    text = power("λ", a) + power("μ", b) + power("(λ+μ)", c)
    return text or "1"


def label_degree(label: Label) -> int:
    return sum(label)


# ------------------ VElement ------------------

@dataclass
class VElement:
    space: JetSpace
    coefficients: Dict[Label, sympy.Expr] = field(default_factory=dict)

    def __getitem__(self, label: Label) -> sympy.Expr:
        return self.coefficients.get(label, sympy.S.Zero)

    def labels(self) -> List[Label]:
        return sorted(self.coefficients, key=lambda l: (-label_degree(l), -l[0], l[2]))

    def is_zero(self) -> bool:
        return not self.coefficients

    def residuals(self) -> Dict[Tuple[Label, sympy.Expr], sympy.Expr]:
        """Coefficient of every basis label and every monomial in the higher jets."""
        out = {}
        for label in self.labels():
            for monomial, coeff in self.space.monomials(self.coefficients[label]).items():
                out[(label, monomial)] = coeff
        return out


# ------------------ Expansion ------------------

_KINDS = {(1, 0): (1, (1, 0, 0)), (-1, 0): (-1, (1, 0, 0)),
          (0, 1): (1, (0, 1, 0)), (0, -1): (-1, (0, 1, 0)),
          (1, 1): (1, (0, 0, 1)), (-1, -1): (-1, (0, 0, 1))}


def _direction(form: sympy.Expr, ds: Sequence[Symbol]):
    """Split ν + E into (sign, label of ν, E)."""
    nu = form.xreplace({d: 0 for d in ds})
    E = sympy.expand(form - nu)
    key = (nu.coeff(LAM), nu.coeff(MU))
    rest = sympy.expand(nu - key[0] * LAM - key[1] * MU)
    if rest != 0 or key not in _KINDS:
        raise InadmissibleExpression(f"inverse of {form} is not along λ, μ or λ+μ")
    sign, unit = _KINDS[key]
    return sign, unit, E


def _compositions(budget: int, parts: int):
    """All k-vectors of length parts with nonnegative entries and sum <= budget."""
    if parts == 0:
        yield ()
        return
    for ks in product(range(budget + 1), repeat=parts):
        if sum(ks) <= budget:
            yield ks


def normalize_nonlocal(terms: Iterable[Term], space: JetSpace, min_degree: int = None) -> VElement:
    """Expand a sum of terms into the basis of V, keeping labels of degree >= min_degree."""
    if min_degree is None:
        min_degree = config.JACOBI_MIN_DEGREE
    raw: Dict[Label, List[sympy.Expr]] = defaultdict(list)
    count = 0
    for term in terms:
        count += 1
        if term.poly == 0:
            continue
        ds = term.d_symbols()
        inverses = [(_direction(form, ds), e) for form, e in term.inverses]
        total_e = sum(e for _, e in inverses)
        poly = sympy.Poly(sympy.expand(term.poly), LAM, MU, *ds)
        applied: Dict[Tuple[int, ...], sympy.Expr] = {}

        def apply(monom):
            if monom not in applied:
                value = sympy.S.One
                for factor, m in zip(term.factors, monom):
                    value *= space.derivative(factor, m)
                applied[monom] = value
            return applied[monom]

        for monom, coeff in poly.terms():
            a, b, d_powers = monom[0], monom[1], monom[2:]
            budget = a + b - total_e - min_degree
            if budget < 0:
                continue
            for ks in _compositions(budget, len(inverses)):
                scalar = coeff
                label = [a, b, 0]
                dpart = sympy.Mul(*(d ** p for d, p in zip(ds, d_powers)))
                for ((sign, unit, E), e), k in zip(inverses, ks):
                    exponent = -e - k
                    scalar *= binomial(-e, k) * sign ** abs(exponent)
                    for slot in range(3):
                        label[slot] += unit[slot] * exponent
                    if k:
                        dpart *= E ** k
                if scalar == 0:
                    continue
                dpoly = sympy.Poly(sympy.expand(dpart), *ds) if ds else None
                d_terms = dpoly.terms() if dpoly is not None else [((), sympy.S.One)]
                jets = sympy.S.Zero
                for dmonom, dcoeff in d_terms:
                    jets += dcoeff * apply(tuple(dmonom))
                if jets == 0:
                    continue
                for basis_label, basis_coeff in to_basis(*label):
                    raw[basis_label].append(scalar * basis_coeff * jets)

    element = VElement(space)
    for label, parts in raw.items():
        if label_degree(label) < min_degree:
            continue
        value = space.normalize(sympy.Add(*parts))
        if value != 0:
            element.coefficients[label] = value
    log.debug(f"[PVA] expanded {count} terms into {len(element.coefficients)} nonzero labels")
    return element
