"""Exact integer and rational linear algebra.

Matrices are immutable tuples of row tuples, vectors are plain tuples.
Integer work (Hermite normal form, saturated kernels, primitivity) stays in
arbitrary precision integers; rational work uses fractions.Fraction. There is
no floating point anywhere in this module: every downstream verdict is an
exact feasibility question and rounding would corrupt it.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

IntVector = tuple
IntMatrix = tuple


def as_matrix(rows) -> tuple:
    """Freeze an iterable of rows into a tuple-of-tuples matrix."""
    return tuple(tuple(row) for row in rows)


def identity(k: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def transpose(mat, ncols: int | None = None) -> tuple:
    """Transpose; ``ncols`` is required when ``mat`` has no rows."""
    if not mat:
        if ncols is None:
            raise ValueError("transpose of an empty matrix needs ncols")
        return tuple(() for _ in range(ncols))
    return tuple(tuple(row[j] for row in mat) for j in range(len(mat[0])))


def unit_vector(dim: int, index: int, sign: int = 1) -> tuple:
    return tuple(sign if j == index else 0 for j in range(dim))


def mat_vec(mat, vec) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, vec)) for row in mat)


def mat_mul(a, b) -> tuple:
    bt = transpose(b) if b else ()
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def is_primitive(vec) -> bool:
    """True iff the gcd of the integer entries is 1. Undefined for zero."""
    if not vec or all(x == 0 for x in vec):
        raise ValueError("primitivity is undefined for the zero vector")
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    return g == 1


def primitive_scale(vec) -> tuple:
    """Scale a nonzero rational vector to a primitive integer vector.

    Returns ``(prim, sigma)`` with ``prim = sigma * vec`` entrywise, ``sigma``
    a positive rational. The positive scale preserves orientation.
    """
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        raise ValueError("cannot scale the zero vector")
    denom_lcm = 1
    for f in fracs:
        denom_lcm = lcm(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints), Fraction(denom_lcm, g)


def _exgcd(a: int, b: int) -> tuple:
    """Extended gcd: returns (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(mat, ncols: int | None = None) -> tuple:
    """Row-style Hermite normal form with transformation matrix.

    Returns ``(H, U)`` where ``H == U @ mat``, ``U`` is unimodular, pivot
    entries are positive, entries above each pivot are reduced into
    ``[0, pivot)`` and zero rows come last. The convention is pinned so that
    every kernel basis derived from it is reproducible bit for bit.
    """
    rows = [list(r) for r in mat]
    nrows = len(rows)
    width = len(rows[0]) if rows else (ncols or 0)
    u = [list(r) for r in identity(nrows)]
    pivot_row = 0
    for col in range(width):
        src = next((i for i in range(pivot_row, nrows) if rows[i][col] != 0), None)
        if src is None:
            continue
        if src != pivot_row:
            rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
            u[pivot_row], u[src] = u[src], u[pivot_row]
        for i in range(pivot_row + 1, nrows):
            if rows[i][col] == 0:
                continue
            a, b = rows[pivot_row][col], rows[i][col]
            g, s, t = _exgcd(a, b)
            p, q = a // g, b // g
            top = [s * x + t * y for x, y in zip(rows[pivot_row], rows[i])]
            bot = [-q * x + p * y for x, y in zip(rows[pivot_row], rows[i])]
            rows[pivot_row], rows[i] = top, bot
            top_u = [s * x + t * y for x, y in zip(u[pivot_row], u[i])]
            bot_u = [-q * x + p * y for x, y in zip(u[pivot_row], u[i])]
            u[pivot_row], u[i] = top_u, bot_u
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-x for x in rows[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        piv = rows[pivot_row][col]
        for i in range(pivot_row):
            q = rows[i][col] // piv
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return as_matrix(rows), as_matrix(u)


def kernel_lattice(mat, ncols: int | None = None) -> tuple:
    """Canonical basis of the saturated integer kernel ``{v : mat @ v = 0}``.

    The basis vectors are returned as rows. They span the full lattice
    ``ker(mat) & Z^ncols`` (saturation: no proper integer multiple of a
    lattice vector lies outside the span). The canonical form is the HNF of
    the raw kernel rows, so equal inputs give identical bases.
    """
    if mat:
        width = len(mat[0])
    else:
        if ncols is None:
            raise ValueError("kernel of an empty matrix needs ncols")
        width = ncols
    mt = transpose(mat, ncols=width)
    h, u = hermite_normal_form(mt, ncols=len(mat))
    kernel_rows = [u[i] for i in range(width) if all(x == 0 for x in h[i])]
    if not kernel_rows:
        return ()
    canon, _ = hermite_normal_form(kernel_rows)
    return canon


def rank(mat) -> int:
    """Exact rank over the rationals."""
    rows = [[Fraction(x) for x in r] for r in mat]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        src = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        piv = rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def det(mat) -> Fraction:
    """Exact determinant of a square matrix over the rationals."""
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in r] for r in mat]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        src = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if src is None:
            return Fraction(0)
        if src != col:
            rows[col], rows[src] = rows[src], rows[col]
            sign = -sign
        piv = rows[col][col]
        result *= piv
        for i in range(col + 1, n):
            if rows[i][col] != 0:
                f = rows[i][col] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return sign * result


def solve_square(mat, rhs) -> tuple | None:
    """Unique rational solution of a square system, or None if singular."""
    n = len(mat)
    rows = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(mat, rhs)]
    for col in range(n):
        src = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if src is None:
            return None
        rows[col], rows[src] = rows[src], rows[col]
        piv = rows[col][col]
        rows[col] = [x / piv for x in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return tuple(rows[i][n] for i in range(n))


def lin_solve(mat, rhs) -> tuple | None:
    """A particular rational solution of a general linear system.

    Free variables are set to zero, so the result is deterministic. Returns
    None when the system is inconsistent.
    """
    if not mat:
        return ()
    ncols = len(mat[0])
    rows = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(mat, rhs)]
    pivots = []
    r = 0
    for col in range(ncols):
        src = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        piv = rows[r][col]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for row_idx, col in pivots:
        solution[col] = rows[row_idx][ncols]
    return tuple(solution)
