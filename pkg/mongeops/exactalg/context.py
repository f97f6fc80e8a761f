# mongeops/exactalg/context.py
"""Coordinates, parameters and square-root symbols sharing one polynomial ring.

A :class:`Context` owns a ``sympy`` sparse polynomial ring over QQ whose
generators are, in order, the coordinates u^1..u^n, the declared parameters
and the root symbols.  Root symbols stand for square roots of coordinate-free
radicands and are reduced with ``r**2 -> radicand`` on every normalization, so
a root symbol never appears squared in a stored polynomial.

:class:`Ratio` is the normalized quotient num/den of two ring elements:
the denominator is free of root symbols, coprime to the numerator and monic
in the ring's lex order, which makes equality syntactic.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Rational, Symbol, sqrt
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, ring

from ..errors import InputError, abort

log = logging.getLogger(__name__)

Number = Union[int, Fraction, Rational]


@dataclass(frozen=True)
class Parameter:
    name: str
    nonzero: bool = False


@dataclass(frozen=True)
class Root:
    name: str
    radicand: str   # expression text in the parameters


class Context:
    def __init__(
        self,
        coordinates: Sequence[str],
        parameters: Iterable[Union[Parameter, str]] = (),
        roots: Iterable[Root] = (),
    ):
        params = [p if isinstance(p, Parameter) else Parameter(p) for p in parameters]
        roots = list(roots)
        names = list(coordinates) + [p.name for p in params] + [r.name for r in roots]
        if len(set(names)) != len(names):
            abort(InputError, f"duplicate names among coordinates, parameters and roots: {names}")
        if not coordinates:
            abort(InputError, "at least one coordinate is required")

        self.coordinates: Tuple[str, ...] = tuple(coordinates)
        self.parameters: Tuple[Parameter, ...] = tuple(params)
        self.roots: Tuple[Root, ...] = tuple(roots)
        self.names: Tuple[str, ...] = tuple(names)
        self.n = len(self.coordinates)

        self.ring, *gens = ring([Symbol(s) for s in names], QQ, lex)
        self.gens: Tuple[PolyElement, ...] = tuple(gens)
        self._index = {s: i for i, s in enumerate(names)}
        self._nonzero = {self._index[p.name] for p in params if p.nonzero}
        self._root_slots: List[Tuple[int, PolyElement]] = []

        # radicands may only mention parameters (and earlier roots)
        from .parser import parse_expr
        for r in roots:
            value = parse_expr(r.radicand, self)
            if not value.is_constant() or not value.is_poly():
                abort(InputError, f"radicand of root {r.name!r} must be a polynomial in the parameters")
            if value.is_zero():
                abort(InputError, f"radicand of root {r.name!r} is zero")
            self._root_slots.append((self._index[r.name], value.num))
            self._nonzero.add(self._index[r.name])

    # ------------------ Generators ------------------

    def index(self, name: str) -> int:
        return self._index[name]

    def has(self, name: str) -> bool:
        return name in self._index

    def coord(self, k: int) -> "Ratio":
        return Ratio(self, self.gens[k])

    def symbol(self, name: str) -> "Ratio":
        return Ratio(self, self.gens[self._index[name]])

    def const(self, value: Number) -> "Ratio":
        return Ratio(self, self.ring.ground_new(QQ.convert(Rational(value))))

    @property
    def zero(self) -> "Ratio":
        return Ratio(self, self.ring.zero)

    @property
    def one(self) -> "Ratio":
        return Ratio(self, self.ring.one)

    def is_coordinate_free(self, p: PolyElement) -> bool:
        return all(not any(m[: self.n]) for m in p.itermonoms())

    def coordinate_degree(self, p: PolyElement) -> int:
        if not p:
            return -1
        return max(sum(m[: self.n]) for m in p.itermonoms())

    def is_provably_nonzero(self, value: "Ratio") -> bool:
        """True for nonzero monomials in parameters declared nonzero (roots included)."""
        if value.is_zero() or not value.is_constant():
            return False
        for p in (value.num, value.den):
            if len(p) != 1:
                return False
            (monom,) = p.itermonoms()
            if any(e and i not in self._nonzero for i, e in enumerate(monom)):
                return False
        return True

    # ------------------ Reduction ------------------

    def reduce_roots(self, p: PolyElement) -> PolyElement:
        if not self._root_slots:
            return p
        if all(m[i] < 2 for m in p.itermonoms() for i, _ in self._root_slots):
            return p
        result = self.ring.zero
        for monom, coeff in p.iterterms():
            mon = list(monom)
            factor = self.ring.one
            for i, radicand in self._root_slots:
                if mon[i] > 1:
                    factor *= radicand ** (mon[i] // 2)
                    mon[i] %= 2
            result += self.ring.term_new(tuple(mon), coeff) * factor
        return result

    def normalize(self, num: PolyElement, den: PolyElement) -> Tuple[PolyElement, PolyElement]:
        if not den:
            raise ZeroDivisionError("zero denominator")
        num = self.reduce_roots(num)
        den = self.reduce_roots(den)
        for i, _radicand in self._root_slots:
            if den.degree(self.gens[i]) > 0:
                conj = den.subs(self.gens[i], 0) - (den - den.subs(self.gens[i], 0))
                num = self.reduce_roots(num * conj)
                den = self.reduce_roots(den * conj)
        if not den:
            raise ZeroDivisionError("denominator vanishes after rationalization")
        if not num:
            return self.ring.zero, self.ring.one
        g = num.gcd(den)
        if g != self.ring.one:
            num = num.exquo(g)
            den = den.exquo(g)
        lc = den.LC
        if lc != 1:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        return num, den

    # ------------------ Transfer and export ------------------

    def transfer(self, value: "Ratio", target: "Context") -> "Ratio":
        """Rewrite ``value`` in ``target``, matching generators by name."""
        positions = [target._index.get(s) for s in self.names]

        def move(p):
            terms = {}
            for monom, coeff in p.iterterms():
                mon = [0] * len(target.names)
                for i, e in enumerate(monom):
                    if e:
                        if positions[i] is None:
                            abort(InputError, f"{self.names[i]!r} is not declared in the target context")
                        mon[positions[i]] = e
                terms[tuple(mon)] = coeff
            return target.ring.from_dict(terms)

        return Ratio(target, move(value.num), move(value.den))

    def to_sympy(self, value: "Ratio", roots_as_sqrt: bool = False):
        expr = value.num.as_expr() / value.den.as_expr()
        if roots_as_sqrt and self.roots:
            from .parser import parse_expr
            expr = expr.xreplace({
                Symbol(r.name): sqrt(self.to_sympy(parse_expr(r.radicand, self)))
                for r in self.roots
            })
        return expr

    def from_sympy(self, expr) -> "Ratio":
        num, den = expr.as_numer_denom()
        return Ratio(self, self.ring.from_expr(num), self.ring.from_expr(den))

    def describe(self) -> Dict[str, object]:
        return {
            "coordinates": list(self.coordinates),
            "parameters": [{"name": p.name, "nonzero": p.nonzero} for p in self.parameters],
            "roots": [{"name": r.name, "sqrt_of": r.radicand} for r in self.roots],
        }

    def __eq__(self, other):
        return (
            isinstance(other, Context)
            and self.names == other.names
            and self.parameters == other.parameters
            and self.roots == other.roots
        )

    def __hash__(self):
        return hash((self.names, self.parameters, self.roots))

    def __repr__(self):
        return f"Context(coordinates={list(self.coordinates)}, parameters={[p.name for p in self.parameters]})"


class Ratio:
    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: Context, num: PolyElement, den: Optional[PolyElement] = None, normalized: bool = False):
        if den is None:
            den = ctx.ring.one
        if not normalized:
            num, den = ctx.normalize(num, den)
        self.ctx = ctx
        self.num = num
        self.den = den

    # ------------------ Predicates ------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == self.ctx.ring.one and self.den == self.ctx.ring.one

    def is_poly(self) -> bool:
        return self.den == self.ctx.ring.one

    def is_constant(self) -> bool:
        return self.ctx.is_coordinate_free(self.num) and self.ctx.is_coordinate_free(self.den)

    def degree(self) -> int:
        """Total degree of the numerator in the coordinates (-1 for zero)."""
        return self.ctx.coordinate_degree(self.num)

    # ------------------ Arithmetic ------------------

    def _coerce(self, other) -> "Ratio":
        if isinstance(other, Ratio):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                abort(InputError, "values from different contexts cannot be combined")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Ratio(self.ctx, self.num + other.num, self.den)
        return Ratio(self.ctx, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Ratio(self.ctx, -self.num, self.den, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return self.ctx.zero
        return Ratio(self.ctx, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Ratio":
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return Ratio(self.ctx, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return Ratio(self.ctx, self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Ratio(self.ctx, self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            other = self.ctx.const(other)
        if not isinstance(other, Ratio):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # ------------------ Calculus and substitution ------------------

    def diff(self, k: int) -> "Ratio":
        """Partial derivative in coordinate ``k`` (0-based)."""
        x = self.ctx.gens[k]
        if self.is_poly():
            return Ratio(self.ctx, self.num.diff(x), normalized=False)
        num = self.num.diff(x) * self.den - self.num * self.den.diff(x)
        return Ratio(self.ctx, num, self.den ** 2)

    def substitute(self, values: Mapping[int, "Ratio"]) -> "Ratio":
        """Replace generator ``i`` by ``values[i]`` for every key (coordinates or parameters)."""
        if not values:
            return self
        if all(v.is_poly() for v in values.values()):
            pairs = [(self.ctx.gens[i], v.num) for i, v in values.items()]
            return Ratio(self.ctx, self.num.compose(pairs), self.den.compose(pairs))
        return self._evaluate(self.num, values) / self._evaluate(self.den, values)

    def _evaluate(self, p: PolyElement, values: Mapping[int, "Ratio"]) -> "Ratio":
        ctx = self.ctx
        total = ctx.zero
        powers: Dict[Tuple[int, int], Ratio] = {}
        for monom, coeff in p.iterterms():
            rest = list(monom)
            term = ctx.one
            for i, v in values.items():
                e = rest[i]
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = v ** e
                    term = term * powers[(i, e)]
                    rest[i] = 0
            total = total + Ratio(ctx, ctx.ring.term_new(tuple(rest), coeff)) * term
        return total

    def at_point(self, point: Sequence[Number]) -> "Ratio":
        """Substitute rational values for all coordinates."""
        pairs = [(self.ctx.gens[i], QQ.convert(Rational(v))) for i, v in enumerate(point)]
        den = self.den.subs(pairs)
        if not den:
            raise ZeroDivisionError("denominator vanishes at the point")
        return Ratio(self.ctx, self.num.subs(pairs), den)

    def __str__(self):
        from .printer import print_ratio
        return print_ratio(self)

    def __repr__(self):
        return f"Ratio({self})"
