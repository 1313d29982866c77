"""Exact rational and integer linear algebra on tuples of Fractions/ints.

Everything here is pure and allocation-light; vectors are plain tuples so
they hash and compare structurally.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
IntVec = tuple[int, ...]
Mat = tuple[Vec, ...]
IntMat = tuple[IntVec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(coords: Iterable) -> Vec:
    return tuple(frac(c) for c in coords)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def ones_vec(n: int) -> Vec:
    return (ONE,) * n


def unit_vec(n: int, i: int, sign: int = 1) -> IntVec:
    return tuple(sign if j == i else 0 for j in range(n))


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((frac(x) * y for x, y in zip(a, b, strict=True)), ZERO)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(s, a: Sequence) -> Vec:
    s = frac(s)
    return tuple(s * x for x in a)


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Mat:
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def identity_mat(n: int) -> IntMat:
    return tuple(unit_vec(n, i) for i in range(n))


def mat_det(m: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(m)
    a = [[frac(x) for x in row] for row in m]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = ONE / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def mat_inv(m: Sequence[Sequence]) -> Mat:
    """Inverse by Gauss-Jordan; raises ZeroDivisionError on singular input."""
    n = len(m)
    a = [[frac(x) for x in row] + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = ONE / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def int_rank(rows: Sequence[Sequence[int]], stop_at: int | None = None) -> int:
    """Rank of an integer matrix via fraction-free elimination.

    Stops early once `stop_at` independent rows are found.
    """
    work = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while work and col < ncols:
        piv = next((i for i, r in enumerate(work) if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[0], work[piv] = work[piv], work[0]
        pivot = work[0]
        rank += 1
        if stop_at is not None and rank >= stop_at:
            return rank
        pv = pivot[col]
        reduced = []
        for r in work[1:]:
            if r[col] != 0:
                r = [pv * x - r[col] * y for x, y in zip(r, pivot)]
                g = 0
                for x in r:
                    g = gcd(g, x)
                if g > 1:
                    r = [x // g for x in r]
            if any(r):
                reduced.append(r)
        work = reduced
        col += 1
    return rank


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of the given rational points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    diffs = [vsub(vec(p), vec(base)) for p in points[1:]]
    # clear denominators row-wise so integer elimination applies
    int_rows = []
    for d in diffs:
        mult = 1
        for x in d:
            mult = mult * x.denominator // gcd(mult, x.denominator)
        int_rows.append(tuple(int(x * mult) for x in d))
    if not int_rows:
        return 0
    return int_rank(int_rows)


def primitive_normal(a: Sequence, c) -> tuple[IntVec, Fraction]:
    """Scale the inequality <a,x> <= c by a positive rational so the normal
    becomes a primitive integer vector."""
    a = vec(a)
    c = frac(c)
    if is_zero(a):
        raise ValueError("zero normal")
    mult = 1
    for x in a:
        mult = mult * x.denominator // gcd(mult, x.denominator)
    ints = [int(x * mult) for x in a]
    g = 0
    for x in ints:
        g = gcd(g, x)
    scale = Fraction(mult, g)
    return tuple(x // g for x in ints), c * scale


def primitive_vector(a: Sequence[int]) -> IntVec:
    g = 0
    for x in a:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector")
    return tuple(x // g for x in a)


def hnf_row(a: Sequence[Sequence[int]]) -> tuple[IntMat, IntMat]:
    """Row-style Hermite normal form H = U @ A with U unimodular.

    Pivots are positive, entries above each pivot reduced to [0, pivot).
    H is the canonical representative of {U A : U in GL_n(Z)}.
    """
    n = len(a)
    m = len(a[0]) if n else 0
    h = [list(row) for row in a]
    u = [list(row) for row in identity_mat(n)]
    r = 0
    for col in range(m):
        if r >= n:
            break
        # gcd-reduce rows r.. on this column
        while True:
            live = [i for i in range(r, n) if h[i][col] != 0]
            if not live:
                break
            piv = min(live, key=lambda i: abs(h[i][col]))
            if piv != r:
                h[r], h[piv] = h[piv], h[r]
                u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, n):
                if h[i][col] != 0:
                    q = h[i][col] // h[r][col]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][col] != 0:
                        done = False
            if done:
                break
        if h[r][col] == 0:
            continue
        if h[r][col] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][col] // h[r][col]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return tuple(tuple(row) for row in h), tuple(tuple(row) for row in u)


def int_mat_det(m: Sequence[Sequence[int]]) -> int:
    """Integer determinant via Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
