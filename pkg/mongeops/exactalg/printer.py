# mongeops/exactalg/printer.py
"""Print Ratios in the expression grammar, so that parsing the output gives the value back."""
from sympy.polys.rings import PolyElement


def _monomial(names, monom) -> str:
    parts = []
    for name, e in zip(names, monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _coefficient(c) -> str:
    c = abs(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def print_poly(p: PolyElement, names) -> str:
    if not p:
        return "0"
    out = []
    for k, (monom, coeff) in enumerate(p.terms()):
        mono = _monomial(names, monom)
        negative = coeff < 0
        if mono and abs(coeff) == 1:
            body = mono
        elif mono:
            body = f"{_coefficient(coeff)}*{mono}"
        else:
            body = _coefficient(coeff)
        if k == 0:
            if negative:
                # "-1*x" keeps unary minus on a bare number
                body = f"-{body}" if not mono or abs(coeff) != 1 else f"-1*{body}"
            out.append(body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def print_ratio(value) -> str:
    names = value.ctx.names
    num = print_poly(value.num, names)
    if value.is_poly():
        return num
    den = print_poly(value.den, names)
    if len(value.num) > 1:
        num = f"({num})"
    if len(value.den) > 1 or _is_product(value.den):
        den = f"({den})"
    return f"{num}/{den}"


def _is_product(p: PolyElement) -> bool:
    (monom, coeff), = p.iterterms()
    return sum(1 for e in monom if e) > 1 or any(e > 1 for e in monom) or coeff != 1
