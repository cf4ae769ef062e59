"""Small exact matrix helpers.

Matrices are tuples of row tuples holding Python ints (or Fractions where
noted). Sizes here never exceed 6x6, so nothing clever is needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Sequence

Matrix = tuple


def as_matrix(rows) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(n: int, m: int = None) -> Matrix:
    return tuple((0,) * (n if m is None else m) for _ in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def vecmat(v: Sequence, m: Matrix) -> tuple:
    """Row vector times matrix."""
    return tuple(sum(x * row[j] for x, row in zip(v, m)) for j in range(len(m[0])))


def product(mats: Sequence[Matrix], n: int) -> Matrix:
    return reduce(matmul, mats, identity(n))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def block(a: Matrix, rows: slice, cols: slice) -> Matrix:
    return tuple(tuple(row[cols]) for row in a[rows])


def charpoly(a: Matrix) -> List[int]:
    """Coefficients of det(x I - A), highest degree first.

    Faddeev-LeVerrier; the divisions are exact for integer input.
    """
    n = len(a)
    coeffs = [1]
    m = zeros(n)
    for k in range(1, n + 1):
        m = matmul(a, m)
        c = coeffs[-1]
        m = tuple(tuple(x + (c if i == j else 0) for j, x in enumerate(row)) for i, row in enumerate(m))
        am = matmul(a, m)
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral characteristic polynomial coefficient")
        coeffs.append(-tr // k)
    return coeffs


def divide_root(poly: List[int], root: int):
    """Synthetic division by (x - root); returns (quotient, remainder)."""
    out = []
    acc = 0
    for c in poly:
        acc = acc * root + c
        out.append(acc)
    return out[:-1], out[-1]


def root_multiplicity(poly: List[int], root: int):
    """Multiplicity of ``root`` and the cofactor left after removing it."""
    mult = 0
    while len(poly) > 1:
        q, r = divide_root(poly, root)
        if r != 0:
            break
        poly = q
        mult += 1
    return mult, poly


def rank(a: Matrix) -> int:
    rows = [[Fraction(x) for x in row] for row in a]
    if not rows:
        return 0
    r = 0
    ncols = len(rows[0])
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def nullspace(a: Matrix) -> List[tuple]:
    """Basis of {x : A x = 0} as primitive integer vectors."""
    rows = [[Fraction(x) for x in row] for row in a]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -rows[i][free]
        basis.append(primitive(x))
    return basis


def primitive(v) -> tuple:
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return tuple(x if lead > 0 else -x for x in ints)


def det3(a, b, c) -> int:
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def format_matrix(a: Matrix) -> str:
    width = max(len(str(x)) for row in a for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in a)
