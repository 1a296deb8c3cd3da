"""Independent oracles used only by the test suite.

These deliberately re-derive properties by different routes than the library
(row reduction instead of the pinned HNF, full subset enumeration instead of
the truncated simplicity scan, interval analysis instead of elimination), so
agreement is meaningful."""

import itertools
from fractions import Fraction

from corecover import Relation
from corecover.linalg import lin_solve, rank


def is_hnf_shape(matrix) -> bool:
    """Row HNF shape: pivots positive and strictly right-moving, entries
    above each pivot reduced into [0, pivot), zero rows last."""
    last_pivot_col = -1
    seen_zero_row = False
    for row in matrix:
        pivot_col = next((j for j, x in enumerate(row) if x != 0), None)
        if pivot_col is None:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False
        if pivot_col <= last_pivot_col:
            return False
        if row[pivot_col] <= 0:
            return False
        last_pivot_col = pivot_col
    # entries above pivots reduced
    rows = list(matrix)
    for i, row in enumerate(rows):
        pivot_col = next((j for j, x in enumerate(row) if x != 0), None)
        if pivot_col is None:
            continue
        pivot = row[pivot_col]
        for k in range(i):
            if not 0 <= rows[k][pivot_col] < pivot:
                return False
    return True


def row_reduce_lattice_membership(basis, vector) -> bool:
    """Is ``vector`` an integer combination of the basis rows? Decided by a
    direct rational solve plus integrality of the coefficients."""
    if not basis:
        return all(x == 0 for x in vector)
    coeff_cols = [[row[j] for row in basis] for j in range(len(vector))]
    sol = lin_solve(coeff_cols, vector)
    if sol is None:
        return False
    combined = [
        sum(sol[k] * basis[k][j] for k in range(len(basis)))
        for j in range(len(vector))
    ]
    if combined != [Fraction(x) for x in vector]:
        return False
    return all(Fraction(c).denominator == 1 for c in sol)


def brute_force_simple(arr) -> bool:
    """Simplicity by scanning every subset size, not just up to n + 1."""
    for size in range(2, arr.d + 1):
        for subset in itertools.combinations(range(arr.d), size):
            mat = [arr.normals[i] for i in subset]
            rhs = [-arr.lifts[i] for i in subset]
            if lin_solve(mat, rhs) is None:
                continue
            codim = rank(mat)
            if codim != size:
                return False
    return True


def extension_exists(poly, var_index, partial_point) -> bool:
    """Can ``partial_point`` (values for all coordinates except var_index)
    be extended to a point of ``poly``? Decided by 1-D interval analysis."""
    values = list(partial_point)
    values.insert(var_index, None)
    lower = None  # (bound, strict)
    upper = None
    for con in poly.constraints:
        a = con.coeffs[var_index]
        rest = con.constant + sum(
            con.coeffs[k] * values[k] for k in range(len(values)) if k != var_index
        )
        if a == 0:
            ok = (
                rest >= 0
                if con.relation is Relation.GE
                else rest > 0 if con.relation is Relation.GT else rest == 0
            )
            if not ok:
                return False
            continue
        bound = Fraction(-rest, a)
        if con.relation is Relation.EQ:
            if lower is None or (bound, False) > lower:
                lower = (bound, False)
            if upper is None or bound < upper[0]:
                upper = (bound, False)
            continue
        strict = con.relation is Relation.GT
        if a > 0:
            if lower is None or (bound, strict) > lower:
                lower = (bound, strict)
        else:
            if upper is None or bound < upper[0] or (bound == upper[0] and strict):
                upper = (bound, strict)
    if lower is None or upper is None:
        return True
    if lower[0] < upper[0]:
        return True
    if lower[0] == upper[0]:
        return not lower[1] and not upper[1]
    return False
