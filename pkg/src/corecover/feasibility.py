"""Exact polyhedral feasibility with checkable certificates.

A polyhedron is a finite system of rational linear constraints
``<a, x> + c {>=, =, >} 0``. Feasibility is decided by Fourier-Motzkin
elimination, with two refinements:

* variables covered by an equality constraint are removed by exact Gaussian
  pivoting instead of inequality pairing (same projection, far fewer rows);
* every derived row carries the multiplier vector that produced it from the
  input constraints, so each verdict ships with a proof object: a rational
  point for feasible systems, a Farkas-style multiplier vector reproducing a
  contradiction for infeasible ones.

Strict inequalities are handled natively: a combined row is strict exactly
when a strict row participates with a positive multiplier. All arithmetic is
integer after clearing denominators; witnesses are reconstructed in exact
rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .errors import GuardError
from .linalg import lin_solve, rank as mat_rank, solve_square, unit_vector


class Relation(Enum):
    GE = ">="
    EQ = "="
    GT = ">"


@dataclass(frozen=True)
class Constraint:
    """The condition ``<coeffs, x> + constant  relation  0``."""

    coeffs: tuple
    relation: Relation
    constant: Fraction

    def evaluate(self, point):
        return sum(a * x for a, x in zip(self.coeffs, point)) + self.constant

    def holds(self, point) -> bool:
        value = self.evaluate(point)
        if self.relation is Relation.GE:
            return value >= 0
        if self.relation is Relation.GT:
            return value > 0
        return value == 0


def ge(coeffs, constant=0) -> Constraint:
    return Constraint(tuple(coeffs), Relation.GE, constant)


def gt(coeffs, constant=0) -> Constraint:
    return Constraint(tuple(coeffs), Relation.GT, constant)


def eq(coeffs, constant=0) -> Constraint:
    return Constraint(tuple(coeffs), Relation.EQ, constant)


@dataclass(frozen=True)
class Polyhedron:
    dim: int
    constraints: tuple

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for c in self.constraints:
            if len(c.coeffs) != self.dim:
                raise ValueError(
                    f"constraint has {len(c.coeffs)} coefficients, ambient dimension is {self.dim}"
                )

    def contains(self, point) -> bool:
        if len(point) != self.dim:
            raise ValueError("point dimension mismatch")
        return all(c.holds(point) for c in self.constraints)

    def intersect(self, other: "Polyhedron") -> "Polyhedron":
        if other.dim != self.dim:
            raise ValueError("ambient dimension mismatch")
        return Polyhedron(self.dim, self.constraints + other.constraints)


@dataclass(frozen=True)
class Certificate:
    """Proof object for a feasibility verdict.

    ``point`` is a rational feasible point (feasible case). ``multipliers``
    is one rational multiplier per constraint of the originating polyhedron
    (infeasible case): nonnegative on inequalities, unrestricted on
    equalities, combining the constraints into ``0 >= positive`` or
    ``0 > 0``.
    """

    feasible: bool
    point: tuple | None = None
    multipliers: tuple | None = None


def verify_certificate(poly: Polyhedron, cert: Certificate) -> bool:
    """Re-check a certificate by exact substitution. Never trusts the solver."""
    if cert.feasible:
        return cert.point is not None and poly.contains(cert.point)
    y = cert.multipliers
    if y is None or len(y) != len(poly.constraints):
        return False
    for mult, con in zip(y, poly.constraints):
        if con.relation is not Relation.EQ and mult < 0:
            return False
    combo = [Fraction(0)] * poly.dim
    total = Fraction(0)
    strict = False
    for mult, con in zip(y, poly.constraints):
        if mult == 0:
            continue
        for j, a in enumerate(con.coeffs):
            combo[j] += mult * a
        total += mult * con.constant
        if con.relation is Relation.GT and mult > 0:
            strict = True
    if any(v != 0 for v in combo):
        return False
    return total < 0 or (total == 0 and strict)


class _Row:
    """Integer constraint row plus its provenance over the input constraints."""

    __slots__ = ("coeffs", "const", "rel", "prov")

    def __init__(self, coeffs, const, rel, prov):
        self.coeffs = coeffs
        self.const = const
        self.rel = rel
        self.prov = prov


def _normalized(coeffs, const, rel, prov):
    g = 0
    for x in coeffs:
        g = gcd(g, abs(x))
    g = gcd(g, abs(const))
    if g > 1:
        coeffs = tuple(x // g for x in coeffs)
        const = const // g
        scale = Fraction(1, g)
        prov = {i: m * scale for i, m in prov.items()}
    if rel is Relation.EQ:
        lead = next((x for x in coeffs if x != 0), const)
        if lead < 0:
            coeffs = tuple(-x for x in coeffs)
            const = -const
            prov = {i: -m for i, m in prov.items()}
    return _Row(coeffs, const, rel, prov)


def _integerize(con: Constraint, index: int) -> _Row:
    scale = 1
    for x in con.coeffs:
        scale = lcm(scale, Fraction(x).denominator)
    scale = lcm(scale, Fraction(con.constant).denominator)
    coeffs = tuple(int(Fraction(x) * scale) for x in con.coeffs)
    const = int(Fraction(con.constant) * scale)
    return _normalized(coeffs, const, con.relation, {index: Fraction(scale)})


def _combine(row_a: _Row, ca: int, row_b: _Row, cb: int, rel: Relation) -> _Row:
    coeffs = tuple(ca * x + cb * y for x, y in zip(row_a.coeffs, row_b.coeffs))
    const = ca * row_a.const + cb * row_b.const
    prov = {i: ca * m for i, m in row_a.prov.items()}
    for i, m in row_b.prov.items():
        prov[i] = prov.get(i, 0) + cb * m
    prov = {i: m for i, m in prov.items() if m != 0}
    return _normalized(coeffs, const, rel, prov)


def _is_trivial(row: _Row) -> bool:
    if any(x != 0 for x in row.coeffs):
        return False
    if row.rel is Relation.GE:
        return row.const >= 0
    if row.rel is Relation.GT:
        return row.const > 0
    return row.const == 0


def _is_contradiction(row: _Row) -> bool:
    return all(x == 0 for x in row.coeffs) and not _is_trivial(row)


def _dedup(rows):
    """Drop trivially true rows and keep only the tightest of parallel rows.

    Only single-row dominance is removed (same coefficient vector, weaker
    bound). One contradiction row is retained if present. Deterministic:
    first-seen order is preserved.
    """
    out = {}
    contradiction = None
    for row in rows:
        if _is_trivial(row):
            continue
        if _is_contradiction(row):
            if contradiction is None:
                contradiction = row
            continue
        if row.rel is Relation.EQ:
            key = (Relation.EQ, row.coeffs, row.const)
            out.setdefault(key, row)
            continue
        key = (Relation.GE, row.coeffs)
        kept = out.get(key)
        if kept is None:
            out[key] = row
        else:
            tighter = row.const < kept.const or (
                row.const == kept.const
                and row.rel is Relation.GT
                and kept.rel is Relation.GE
            )
            if tighter:
                out[key] = row
    result = list(out.values())
    if contradiction is not None:
        result.append(contradiction)
    return result


def _eliminate_column(rows, j):
    """One exact projection step removing variable ``j``.

    If an equality row covers the variable it is used as a Gaussian pivot
    (its multiplier may take either sign); otherwise classical
    Fourier-Motzkin pairing with positive multipliers is applied. Either way
    a point satisfies the output iff it extends to a point of the input.
    """
    pivot = next(
        (r for r in rows if r.rel is Relation.EQ and r.coeffs[j] != 0), None
    )
    if pivot is not None:
        pj = pivot.coeffs[j]
        out = []
        for r in rows:
            if r is pivot:
                continue
            rj = r.coeffs[j]
            if rj == 0:
                out.append(r)
                continue
            a = abs(pj)
            b = -rj if pj > 0 else rj
            out.append(_combine(r, a, pivot, b, r.rel))
        return _dedup(out)
    out = [r for r in rows if r.coeffs[j] == 0]
    pos = [r for r in rows if r.coeffs[j] > 0]
    neg = [r for r in rows if r.coeffs[j] < 0]
    for p in pos:
        for q in neg:
            rel = (
                Relation.GT
                if (p.rel is Relation.GT or q.rel is Relation.GT)
                else Relation.GE
            )
            out.append(_combine(p, -q.coeffs[j], q, p.coeffs[j], rel))
    return _dedup(out)


def _find_contradiction(rows):
    return next((r for r in rows if _is_contradiction(r)), None)


def _infeasible_certificate(row: _Row, ncons: int) -> Certificate:
    sign = 1
    if row.rel is Relation.EQ and row.const > 0:
        sign = -1
    mults = tuple(sign * row.prov.get(i, Fraction(0)) for i in range(ncons))
    return Certificate(False, multipliers=mults)


def _choose_value(rows, j, point):
    """Pick a rational value for variable ``j`` given values of later ones."""
    lower = None  # (value, strict)
    upper = None
    for row in rows:
        a = row.coeffs[j]
        if a == 0:
            continue
        rest = row.const + sum(
            row.coeffs[k] * point[k] for k in range(j + 1, len(row.coeffs))
        )
        bound = Fraction(-rest, a)
        if row.rel is Relation.EQ:
            return bound
        strict = row.rel is Relation.GT
        if a > 0:
            if lower is None or (bound, strict) > lower:
                lower = (bound, strict)
        else:
            if upper is None or (bound, not strict) < (upper[0], not upper[1]):
                upper = (bound, strict)
    if lower is None and upper is None:
        return Fraction(0)
    if upper is None:
        return lower[0] + 1 if lower[1] else lower[0]
    if lower is None:
        return upper[0] - 1 if upper[1] else upper[0]
    if lower[0] == upper[0]:
        return lower[0]
    return (lower[0] + upper[0]) / 2


def is_feasible(poly: Polyhedron) -> Certificate:
    """Exact feasibility of a rational constraint system, with certificate."""
    ncons = len(poly.constraints)
    rows = _dedup(_integerize(c, i) for i, c in enumerate(poly.constraints))
    bad = _find_contradiction(rows)
    if bad is not None:
        return _infeasible_certificate(bad, ncons)
    stages = []
    for j in range(poly.dim):
        stages.append(rows)
        rows = _eliminate_column(rows, j)
        bad = _find_contradiction(rows)
        if bad is not None:
            return _infeasible_certificate(bad, ncons)
    point = [Fraction(0)] * poly.dim
    for j in reversed(range(poly.dim)):
        point[j] = Fraction(_choose_value(stages[j], j, point))
    return Certificate(True, point=tuple(point))


def eliminate(poly: Polyhedron, var_index: int) -> Polyhedron:
    """Exact projection of the polyhedron onto the remaining coordinates.

    A point of the result extends to a point of the input and vice versa.
    Contradictory constant rows produced by the projection are kept, so an
    infeasible input projects to a visibly infeasible output.
    """
    if not 0 <= var_index < poly.dim:
        raise ValueError("variable index out of range")
    rows = _dedup(_integerize(c, i) for i, c in enumerate(poly.constraints))
    rows = _eliminate_column(rows, var_index)
    keep = [k for k in range(poly.dim) if k != var_index]
    cons = tuple(
        Constraint(tuple(r.coeffs[k] for k in keep), r.rel, Fraction(r.const))
        for r in rows
    )
    return Polyhedron(poly.dim - 1, cons)


def affine_dimension(poly: Polyhedron) -> int:
    """Dimension of the affine hull of the solution set; -1 when empty.

    An inequality is an implicit equality exactly when tightening it to a
    strict inequality makes the system infeasible; the affine hull is then
    cut out by the explicit and implicit equalities.
    """
    if not is_feasible(poly).feasible:
        return -1
    eq_rows = [c.coeffs for c in poly.constraints if c.relation is Relation.EQ]
    for idx, con in enumerate(poly.constraints):
        if con.relation is not Relation.GE:
            continue
        tightened = list(poly.constraints)
        tightened[idx] = Constraint(con.coeffs, Relation.GT, con.constant)
        if not is_feasible(Polyhedron(poly.dim, tuple(tightened))).feasible:
            eq_rows.append(con.coeffs)
    return poly.dim - mat_rank(eq_rows)


def recession_cone(poly: Polyhedron) -> Polyhedron:
    cons = tuple(
        Constraint(
            c.coeffs,
            Relation.EQ if c.relation is Relation.EQ else Relation.GE,
            Fraction(0),
        )
        for c in poly.constraints
    )
    return Polyhedron(poly.dim, cons)


def is_bounded(poly: Polyhedron) -> bool:
    """True iff the recession cone is trivial. Empty polyhedra count as bounded."""
    if not is_feasible(poly).feasible:
        return True
    cone = recession_cone(poly)
    for j in range(poly.dim):
        for sign in (1, -1):
            probe = cone.constraints + (
                Constraint(unit_vector(poly.dim, j, sign), Relation.GE, Fraction(-1)),
            )
            if is_feasible(Polyhedron(poly.dim, probe)).feasible:
                return False
    return True


def cone_system(generators, strict: bool, target) -> Polyhedron:
    """The coefficient system for ``target = sum c_i * generators_i``.

    Variables are the coefficients ``c_i``; they are constrained nonnegative
    (strict: positive). Feasibility is exactly cone membership.
    """
    k = len(generators)
    t = len(target)
    for g in generators:
        if len(g) != t:
            raise ValueError("generator dimension mismatch")
    cons = [
        Constraint(
            tuple(Fraction(g[j]) for g in generators),
            Relation.EQ,
            -Fraction(target[j]),
        )
        for j in range(t)
    ]
    sign_rel = Relation.GT if strict else Relation.GE
    cons += [Constraint(unit_vector(k, i), sign_rel, Fraction(0)) for i in range(k)]
    return Polyhedron(k, tuple(cons))


def cone_member(generators, strict: bool, target) -> Certificate:
    """Is ``target`` a nonnegative (strict: positive) combination of the generators?

    The feasible witness is the coefficient vector; the infeasible witness is
    a Farkas multiplier vector over the rows of :func:`cone_system`.
    """
    return is_feasible(cone_system(tuple(generators), strict, tuple(target)))


MAX_ENUM_DIM = 4
MAX_ENUM_CONSTRAINTS = 16


def _check_enum_guard(poly: Polyhedron):
    if poly.dim > MAX_ENUM_DIM or len(poly.constraints) > MAX_ENUM_CONSTRAINTS:
        raise GuardError(
            "enumeration oracle is exponential by design: requires "
            f"dim <= {MAX_ENUM_DIM} and at most {MAX_ENUM_CONSTRAINTS} constraints"
        )


def enumerate_vertices(poly: Polyhedron) -> list:
    """All basic feasible points of a small polyhedron (testing oracle).

    Every ``dim``-subset of constraints with a unique common solution
    contributes that solution when it satisfies the whole system. Guarded to
    stay at desk scale.
    """
    _check_enum_guard(poly)
    points = set()
    cons = poly.constraints
    for subset in itertools.combinations(range(len(cons)), poly.dim):
        mat = [cons[i].coeffs for i in subset]
        rhs = [-cons[i].constant for i in subset]
        x = solve_square(mat, rhs) if poly.dim else ()
        if x is not None and poly.contains(x):
            points.add(tuple(Fraction(v) for v in x))
    return sorted(points)


def feasible_by_enumeration(poly: Polyhedron) -> bool:
    """Brute-force feasibility for closed systems (testing oracle).

    Every nonempty polyhedron has a minimal face which is the full solution
    set of some subsystem turned into equalities, of rank at most ``dim``;
    so scanning all constraint subsets of size up to ``dim`` and testing a
    particular solution of each is exact. Strict inequalities are not
    supported here; the elimination engine covers those with certificates.
    """
    _check_enum_guard(poly)
    if any(c.relation is Relation.GT for c in poly.constraints):
        raise ValueError("enumeration oracle supports closed systems only")
    cons = poly.constraints
    origin = tuple(Fraction(0) for _ in range(poly.dim))
    if poly.contains(origin):
        return True
    for size in range(1, min(poly.dim, len(cons)) + 1):
        for subset in itertools.combinations(range(len(cons)), size):
            mat = [cons[i].coeffs for i in subset]
            rhs = [-cons[i].constant for i in subset]
            sol = lin_solve(mat, rhs)
            if sol is not None and poly.contains(sol):
                return True
    return False
