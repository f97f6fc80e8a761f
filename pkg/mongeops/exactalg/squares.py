# mongeops/exactalg/squares.py
import logging
from typing import Optional, Tuple

from .context import Ratio

log = logging.getLogger(__name__)


def perfect_square(f: Ratio) -> Optional[Tuple[Ratio, Ratio]]:
    """Return (kappa, q) with f = kappa*q^2 and kappa free of coordinates, or None.

    Works on the squarefree decomposition: factors that involve a coordinate
    must all come with even multiplicity, the rest is absorbed into kappa.
    """
    if f.is_zero():
        raise ValueError("perfect_square needs a nonzero polynomial")
    if not f.is_poly():
        raise ValueError("perfect_square needs a polynomial")
    ctx = f.ctx
    coeff, factors = f.num.sqf_list()
    kappa = ctx.ring.ground_new(coeff)
    root = ctx.ring.one
    for factor, mult in factors:
        if ctx.is_coordinate_free(factor):
            kappa *= factor ** mult
        elif mult % 2:
            log.debug(f"[SQUARE] odd multiplicity {mult} for factor {factor}")
            return None
        else:
            root *= factor ** (mult // 2)
    return Ratio(ctx, kappa), Ratio(ctx, root)


def split_square(f: Ratio) -> Tuple[Ratio, Ratio]:
    """Write f = s^2 * r pulling every square factor (numerator and denominator) into s.

    Square parts of the rational content are pulled out too, so 4/(u+1) gives s = 2.
    """
    ctx = f.ctx
    s_num, r_num = _split_poly(ctx, f.num)
    s_den, r_den = _split_poly(ctx, f.den)
    return s_num / s_den, r_num / r_den


def _split_poly(ctx, p):
    from sympy import factorint

    coeff, factors = p.sqf_list()
    s = ctx.ring.one
    r = ctx.ring.one
    for factor, mult in factors:
        s *= factor ** (mult // 2)
        if mult % 2:
            r *= factor
    num, den = int(coeff.numerator), int(coeff.denominator)
    sq_num, rest_num = _integer_square_split(abs(num), factorint)
    sq_den, rest_den = _integer_square_split(den, factorint)
    sign = -1 if num < 0 else 1
    from fractions import Fraction
    s_ratio = Ratio(ctx, s) * Fraction(sq_num, sq_den)
    r_ratio = Ratio(ctx, r) * Fraction(sign * rest_num, rest_den)
    return s_ratio, r_ratio


def _integer_square_split(k: int, factorint):
    square, rest = 1, 1
    for prime, e in factorint(k).items():
        square *= prime ** (e // 2)
        rest *= prime ** (e % 2)
    return square, rest
