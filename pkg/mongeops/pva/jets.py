# mongeops/pva/jets.py
"""Jet variables of the potentials v^i and the total derivative.

The first jets v^i_{(1)} are the coordinates u^i themselves, so coefficient
functions of the operator are plain expressions in the coordinate symbols.
Square roots of radicands R(u) enter through radical symbols s with s^2 = R.
"""
import logging
import re
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import sympy
from sympy import Symbol

log = logging.getLogger(__name__)

_JET = re.compile(r"^v(\d+)_(\d+)$")


class JetSpace:
    def __init__(self, coordinates: Sequence[Symbol], radicals: Iterable[Tuple[Symbol, sympy.Expr]] = ()):
        self.coordinates: Tuple[Symbol, ...] = tuple(coordinates)
        self.n = len(self.coordinates)
        self.radicals: Dict[Symbol, sympy.Expr] = {}
        self._derivatives: Dict[Tuple[sympy.Expr, int], sympy.Expr] = {}
        for s, R in radicals:
            self.add_radical(s, R)

    def add_radical(self, s: Symbol, radicand: sympy.Expr) -> Symbol:
        self.radicals[s] = sympy.cancel(radicand)
        self._derivatives.clear()
        return s

    # ------------------ Variables ------------------

    def jet(self, i: int, m: int) -> Symbol:
        """v^i_{(m)} with 0-based component index"""
        if m == 1:
            return self.coordinates[i]
        return Symbol(f"v{i + 1}_{m}")

    def parse_jet(self, symbol: Symbol) -> Optional[Tuple[int, int]]:
        if symbol in self.coordinates:
            return self.coordinates.index(symbol), 1
        found = _JET.match(symbol.name)
        if found:
            return int(found.group(1)) - 1, int(found.group(2))
        return None

    def jets_in(self, expr: sympy.Expr) -> Set[Tuple[int, int]]:
        """Jet variables expr depends on; every coordinate is reported when a radical appears."""
        expr = sympy.sympify(expr)
        found = set()
        for symbol in expr.free_symbols:
            if symbol in self.radicals:
                found.update((i, 1) for i in range(self.n))
                continue
            position = self.parse_jet(symbol)
            if position is not None:
                found.add(position)
        return found

    def higher_jets(self, expr: sympy.Expr) -> List[Symbol]:
        return sorted(
            (s for s in expr.free_symbols if (self.parse_jet(s) or (0, 1))[1] >= 2),
            key=lambda s: s.name,
        )

    # ------------------ Calculus ------------------

    def partial(self, expr: sympy.Expr, i: int, m: int) -> sympy.Expr:
        """d expr / d v^i_{(m)}, with ds/du^i = s R_{,i} / (2R) for each radical s."""
        if m != 1:
            return sympy.diff(expr, self.jet(i, m))
        u = self.coordinates[i]
        result = sympy.diff(expr, u)
        for s, R in self.radicals.items():
            if expr.has(s):
                result += sympy.diff(expr, s) * s * sympy.diff(R, u) / (2 * R)
        return result

    def total_derivative(self, expr: sympy.Expr) -> sympy.Expr:
        expr = sympy.sympify(expr)
        if expr.is_number:
            return sympy.S.Zero
        result = sympy.S.Zero
        for i, m in self.jets_in(expr):
            result += self.jet(i, m + 1) * self.partial(expr, i, m)
        return self.normalize(result)

    def derivative(self, expr: sympy.Expr, times: int) -> sympy.Expr:
        """∂^times expr, cached per expression."""
        expr = sympy.sympify(expr)
        if times == 0:
            return expr
        key = (expr, times)
        if key not in self._derivatives:
            self._derivatives[key] = self.total_derivative(self.derivative(expr, times - 1))
        return self._derivatives[key]

    # ------------------ Normal form ------------------

    def normalize(self, expr: sympy.Expr) -> sympy.Expr:
        """Reduce s^2 -> R, clear radicals from the denominator and cancel."""
        expr = sympy.together(sympy.sympify(expr))
        if not self.radicals or not any(expr.has(s) for s in self.radicals):
            return sympy.cancel(expr)
        num, den = sympy.fraction(expr)
        for s, R in self.radicals.items():
            num = self._reduce(num, s, R)
            den = self._reduce(den, s, R)
            if den.has(s):
                a = den.subs(s, 0)
                b = sympy.expand((den - a) / s)
                conjugate = a - b * s
                num = self._reduce(sympy.expand(num * conjugate), s, R)
                den = sympy.expand(a * a - b * b * R)
        return sympy.cancel(num / den)

    @staticmethod
    def _reduce(p: sympy.Expr, s: Symbol, R: sympy.Expr) -> sympy.Expr:
        p = sympy.expand(p)
        if not p.has(s):
            return p
        poly = sympy.Poly(p, s)
        total = sympy.S.Zero
        for (k,), coeff in poly.terms():
            total += coeff * R ** (k // 2) * s ** (k % 2)
        return sympy.expand(total)

    def is_zero(self, expr: sympy.Expr) -> bool:
        return self.normalize(expr) == 0

    def monomials(self, expr: sympy.Expr) -> Dict[sympy.Expr, sympy.Expr]:
        """Split expr into monomials in the jets of order >= 2 with coefficients in the first jets."""
        expr = self.normalize(expr)
        if expr == 0:
            return {}
        jets = self.higher_jets(expr)
        if not jets:
            return {sympy.S.One: expr}
        num, den = sympy.fraction(expr)
        out = {}
        for monom, coeff in sympy.Poly(num, *jets).terms():
            key = sympy.Mul(*(j ** e for j, e in zip(jets, monom)))
            out[key] = sympy.cancel(coeff / den)
        return out
