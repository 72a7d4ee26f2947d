"""Exact dense linear algebra over any exact field (Fraction or RatFun).

Matrices are lists of row lists.  Entries need ``+ - * /``, a truthiness test
for zero, and exact arithmetic; both ``fractions.Fraction`` and
:class:`~linfty.scalars.RatFun` qualify.  Elimination uses plain exact
division with deterministic pivoting (topmost row, leftmost column), so
results are bit-reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list[list[entry]]


def copy_matrix(m: Matrix) -> Matrix:
    return [list(row) for row in m]


def zeros(nrows: int, ncols: int, zero=Fraction(0)) -> Matrix:
    return [[zero for _ in range(ncols)] for _ in range(nrows)]


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, zero=Fraction(0)) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in matmul")
    out = []
    for row in a:
        new = []
        for j in range(len(b[0]) if b else 0):
            acc = zero
            for k, x in enumerate(row):
                if x:
                    acc = acc + x * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def mat_vec(a: Matrix, v: Sequence, zero=Fraction(0)) -> list:
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    m = copy_matrix(m)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix, ncols: int | None = None, one=Fraction(1), zero=Fraction(0)) -> list[list]:
    """Deterministic kernel basis: one vector per free column, that column 1."""
    if not m:
        return [] if not ncols else [
            [one if i == j else zero for i in range(ncols)] for j in range(ncols)
        ]
    ncols = len(m[0])
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, pc in enumerate(pivots):
            v = red[r][free]
            if v:
                vec[pc] = -v
        basis.append(vec)
    return basis


def solve(m: Matrix, rhs: Sequence, zero=Fraction(0)) -> list | None:
    """One exact solution of m x = rhs with free variables set to zero.

    Returns None when the system is inconsistent.
    """
    if not m:
        return [] if not any(rhs) else None
    nrows, ncols = len(m), len(m[0])
    aug = [list(row) + [rhs[i]] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    # a pivot in the rhs column marks inconsistency
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return []
    zero = _zero_like(m)
    aug = [
        list(m[i]) + [_one_like_row(m[i], i == j, zero) for j in range(n)]
        for i in range(n)
    ]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def _zero_like(m: Matrix):
    x = m[0][0]
    return x - x


def _one_like_row(row, is_one: bool, zero):
    if not is_one:
        return zero
    for x in row:
        if x:
            return x / x
    # row may be all zero; any nonzero entry elsewhere would do, but a zero
    # row makes the matrix singular anyway, so return Fraction 1
    return Fraction(1)


def is_invertible(m: Matrix) -> bool:
    n = len(m)
    return n == 0 or (all(len(r) == n for r in m) and rank(m) == n)


def column_space_rref(columns: list[list]) -> tuple[Matrix, list[int]]:
    """RREF of the matrix whose ROWS are the given column vectors.

    Convenient for reducing vectors modulo a span: the pivot positions index
    coordinates eliminated by the span.
    """
    return rref([list(c) for c in columns])


def reduce_mod_span(vec: list, span_rref: Matrix, pivots: list[int]) -> tuple[list, list]:
    """Reduce ``vec`` modulo the row span of an RREF basis.

    Returns (residual, coefficients): ``vec = sum coeff_i * row_i + residual``
    with residual zero at every pivot coordinate.
    """
    v = list(vec)
    coeffs = []
    for row, pc in zip(span_rref, pivots):
        c = v[pc]
        coeffs.append(c)
        if c:
            v = [x - c * y for x, y in zip(v, row)]
    return v, coeffs


def integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Integer basis of {m : sum_i m_i * rows_i = 0}, from the rational kernel."""
    if not rows:
        return []
    ncols = len(rows[0])
    # kernel of transpose: vectors m with m . rows = 0
    mt = [[Fraction(rows[i][j]) for i in range(len(rows))] for j in range(ncols)]
    basis = nullspace(mt, ncols=len(rows))
    out = []
    for vec in basis:
        denlcm = 1
        for x in vec:
            denlcm = denlcm * x.denominator // _gcd(denlcm, x.denominator)
        ints = [int(x * denlcm) for x in vec]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) if a else abs(b)


def hermite_with_transform(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Integer row echelon form H = U @ rows with U unimodular.

    Small-scale routine (euclidean reduction); enough for the 3-column
    exponent lattices used by the diagonal-automorphism solver.
    """
    h = [list(r) for r in rows]
    n = len(h)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if not h:
        return h, u
    ncols = len(h[0])
    r = 0
    for c in range(ncols):
        while True:
            nonzero = [i for i in range(r, n) if h[i][c]]
            if not nonzero:
                break
            i0 = min(nonzero, key=lambda i: abs(h[i][c]))
            h[r], h[i0] = h[i0], h[r]
            u[r], u[i0] = u[i0], u[r]
            done = True
            for i in range(r + 1, n):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if any(h[i][c] for i in range(r, n)):
            if h[r][c] < 0:
                h[r] = [-a for a in h[r]]
                u[r] = [-a for a in u[r]]
            r += 1
            if r == n:
                break
    return h, u
