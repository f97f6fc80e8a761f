# mongeops/exactalg/matrix.py
"""Dense matrices of Ratio entries as tuples of tuples."""
from typing import List, Sequence, Tuple

from .context import Ratio

Matrix = Tuple[Tuple[Ratio, ...], ...]


def as_matrix(rows: Sequence[Sequence[Ratio]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(ctx, n: int) -> Matrix:
    return tuple(tuple(ctx.one if i == j else ctx.zero for j in range(n)) for i in range(n))


def zeros(ctx, n: int, m: int = None) -> Matrix:
    return tuple(tuple(ctx.zero for _ in range(m if m is not None else n)) for _ in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ctx = a[0][0].ctx
    cols = list(zip(*b))
    return tuple(
        tuple(_dot(ctx, row, col) for col in cols)
        for row in a
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def _dot(ctx, xs, ys) -> Ratio:
    acc = ctx.zero
    for x, y in zip(xs, ys):
        if not x.is_zero() and not y.is_zero():
            acc = acc + x * y
    return acc


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def is_skew(a: Matrix) -> bool:
    n = len(a)
    return all((a[i][j] + a[j][i]).is_zero() for i in range(n) for j in range(i, n))


def det(a: Matrix) -> Ratio:
    n = len(a)
    if n <= 4:
        return _laplace(a, tuple(range(n)), tuple(range(n)), {})
    return _gauss_det(a)


def _laplace(a, rows, cols, memo) -> Ratio:
    key = (rows, cols)
    if key in memo:
        return memo[key]
    if len(rows) == 1:
        value = a[rows[0]][cols[0]]
    else:
        ctx = a[0][0].ctx
        value = ctx.zero
        r, rest = rows[0], rows[1:]
        for k, c in enumerate(cols):
            entry = a[r][c]
            if entry.is_zero():
                continue
            minor = _laplace(a, rest, cols[:k] + cols[k + 1:], memo)
            value = value + entry * minor if k % 2 == 0 else value - entry * minor
    memo[key] = value
    return value


def _gauss_det(a: Matrix) -> Ratio:
    ctx = a[0][0].ctx
    m = [list(r) for r in a]
    n = len(m)
    value = ctx.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if pivot is None:
            return ctx.zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            value = -value
        value = value * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col].is_zero():
                continue
            factor = m[r][col] * inv
            m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return value


def cofactor(a: Matrix, i: int, j: int) -> Ratio:
    n = len(a)
    rows = tuple(r for r in range(n) if r != i)
    cols = tuple(c for c in range(n) if c != j)
    if not rows:
        return a[0][0].ctx.one
    minor = _laplace(a, rows, cols, {}) if n <= 5 else _gauss_det(
        tuple(tuple(a[r][c] for c in cols) for r in rows)
    )
    return minor if (i + j) % 2 == 0 else -minor


def inverse(a: Matrix, determinant: Ratio = None) -> Matrix:
    n = len(a)
    d = det(a) if determinant is None else determinant
    if d.is_zero():
        raise ZeroDivisionError("singular matrix")
    inv_d = d.inverse()
    return tuple(tuple(cofactor(a, j, i) * inv_d for j in range(n)) for i in range(n))


def rank(rows: Sequence[Sequence[Ratio]]) -> int:
    m: List[List[Ratio]] = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    if not m:
        return 0
    width = len(m[0])
    r = 0
    for col in range(width):
        pivot = next((k for k in range(r, len(m)) if not m[k][col].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col].inverse()
        for k in range(r + 1, len(m)):
            if m[k][col].is_zero():
                continue
            factor = m[k][col] * inv
            m[k] = [x - factor * y for x, y in zip(m[k], m[r])]
        r += 1
        if r == len(m):
            break
    return r
