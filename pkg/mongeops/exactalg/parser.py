# mongeops/exactalg/parser.py
"""Expression grammar for operator files.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' uint)?
    base   := rational | ident | '(' expr ')' | '-' base

The grammar is built once with pyparsing and produces a small syntax tree;
evaluation against a :class:`Context` happens afterwards so that positions
can be reported for semantic errors too.
"""
import logging
from dataclasses import dataclass
from typing import List, Mapping, Optional, Tuple

from pyparsing import (
    Forward,
    Literal,
    Opt,
    ParseBaseException,
    ParserElement,
    Regex,
    Suppress,
    Word,
    ZeroOrMore,
    alphanums,
    alphas,
    one_of,
)

from ..errors import InputError, ParseError, UndeclaredIdentifier

log = logging.getLogger(__name__)

ParserElement.enable_packrat()


@dataclass(frozen=True)
class Node:
    kind: str            # num | id | neg | pow | chain
    loc: int
    value: object = None
    children: Tuple = ()


@dataclass(frozen=True)
class Op:
    symbol: str
    loc: int


def _num(s, loc, toks):
    return Node("num", loc, int(toks[0]))


def _ident(s, loc, toks):
    return Node("id", loc, toks[0])


def _neg(s, loc, toks):
    return Node("neg", loc, None, (toks[-1],))


def _power(s, loc, toks):
    if len(toks) == 1:
        return toks[0]
    return Node("pow", loc, int(toks[2]), (toks[0],))


def _op(s, loc, toks):
    return Op(toks[0], loc)


def _chain(s, loc, toks):
    if len(toks) == 1:
        return toks[0]
    return Node("chain", loc, None, tuple(toks))


def _build_grammar() -> ParserElement:
    expr = Forward()
    base = Forward()
    integer = Regex(r"\d+")
    ident = Word(alphas + "_", alphanums + "_")
    lpar, rpar = Suppress("("), Suppress(")")

    base <<= (
        integer.copy().set_parse_action(_num)
        | ident.copy().set_parse_action(_ident)
        | (lpar + expr + rpar)
        | (Literal("-") + base).set_parse_action(_neg)
    )
    factor = (base + Opt(Literal("^") + integer)).set_parse_action(_power)
    mulop = one_of("* /").set_parse_action(_op)
    addop = one_of("+ -").set_parse_action(_op)
    term = (factor + ZeroOrMore(mulop + factor)).set_parse_action(_chain)
    expr <<= (term + ZeroOrMore(addop + term)).set_parse_action(_chain)
    return expr


_GRAMMAR = _build_grammar()


def parse_tree(text: str) -> Node:
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as exc:
        raise ParseError(f"syntax error: {exc.msg}", text, exc.loc) from None


def parse_expr(text: str, ctx, bindings: Optional[Mapping[str, object]] = None):
    """Parse ``text`` into a normalized :class:`Ratio` in ``ctx``.

    ``bindings`` supplies extra named values (used for ``det_g`` inside tails).
    """
    if not isinstance(text, str):
        text = str(text)
    if not text.strip():
        raise ParseError("empty expression", text, 0)
    tree = parse_tree(text)
    return _Evaluator(ctx, text, bindings or {}).run(tree)


class _Evaluator:
    def __init__(self, ctx, text: str, bindings: Mapping[str, object]):
        self.ctx = ctx
        self.text = text
        self.bindings = bindings

    def run(self, node: Node):
        kind = node.kind
        if kind == "num":
            return self.ctx.const(node.value)
        if kind == "id":
            name = node.value
            if name in self.bindings:
                return self.bindings[name]
            if not self.ctx.has(name):
                raise UndeclaredIdentifier(name)
            return self.ctx.symbol(name)
        if kind == "neg":
            return -self.run(node.children[0])
        if kind == "pow":
            return self.run(node.children[0]) ** node.value
        if kind == "chain":
            return self._chain(node)
        raise InputError(f"unknown syntax node {kind!r}")

    def _chain(self, node: Node):
        items: List = list(node.children)
        acc = self.run(items[0])
        for op, child in zip(items[1::2], items[2::2]):
            value = self.run(child)
            if op.symbol == "+":
                acc = acc + value
            elif op.symbol == "-":
                acc = acc - value
            elif op.symbol == "*":
                acc = acc * value
            else:
                if value.is_zero():
                    raise ParseError("zero denominator", self.text, op.loc)
                if value.is_constant() and not self.ctx.is_provably_nonzero(value):
                    raise ParseError(
                        "division by a parameter expression that is not declared nonzero",
                        self.text,
                        op.loc,
                    )
                acc = acc / value
        return acc
