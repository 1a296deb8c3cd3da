"""Semistability oracles with certificates.

Points of the flat quaternionic space upstream of the quotient are described
only through their support pattern: which of the paired coordinates
``(z_i, w_i)`` vanish. Two independent oracles decide semistability of a
pattern at the moment level ``alpha``:

* numeric: a cone membership / signed solvability condition in the dual of
  the acting torus (for the toric case, ``alpha`` must be a nonnegative
  combination of the support's characters; in general, the relation system
  ``A x = alpha`` must admit a solution with ``x_i <= 0`` where ``z_i = 0``
  and ``x_i >= 0`` where ``w_i = 0``);
* geometric: nonemptiness of the state set, a polyhedron in the arrangement's
  ambient space assembled from oriented half-spaces per coordinate.

That the two agree on every pattern is a theorem; the test suite checks it
exhaustively on fixtures and randomized smooth arrangements. Each verdict
carries the exact feasibility certificate of the system it solved.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .arrangement import Arrangement, TorusData, check_sign_vector
from .feasibility import (
    Certificate,
    Constraint,
    Polyhedron,
    Relation,
    cone_system,
    is_feasible,
)
from .linalg import rank, unit_vector


class Status(Enum):
    """Vanishing status of one coordinate pair: z only, w only, both, neither."""

    Z = "z"        # z_i != 0, w_i == 0
    W = "w"        # z_i == 0, w_i != 0
    ZERO = "0"     # z_i == 0, w_i == 0
    BOTH = "*"     # z_i != 0, w_i != 0


NO_BOTH_ALPHABET = (Status.Z, Status.W, Status.ZERO)
FULL_ALPHABET = (Status.Z, Status.W, Status.ZERO, Status.BOTH)


def check_pattern(pattern, d: int) -> tuple:
    pattern = tuple(pattern)
    if len(pattern) != d:
        raise ValueError(f"pattern has length {len(pattern)}, expected {d}")
    if any(not isinstance(s, Status) for s in pattern):
        raise ValueError("pattern entries must be Status values")
    return pattern


def support_pattern(d: int, support) -> tuple:
    """The toric pattern: Z on the support, ZERO elsewhere (w identically 0)."""
    support = check_support(support, d)
    return tuple(Status.Z if i in support else Status.ZERO for i in range(d))


def check_support(support, d: int) -> frozenset:
    support = frozenset(support)
    if any(not (0 <= i < d) for i in support):
        raise ValueError("support index out of range")
    return support


@dataclass(frozen=True)
class StabilityVerdict:
    """A semistability verdict together with its proof.

    ``system`` is the exact constraint system that was decided and
    ``certificate`` is its feasibility certificate: re-verifying the
    certificate against the system re-proves the verdict.
    """

    semistable: bool
    certificate: Certificate
    system: Polyhedron


def _sign_system(td: TorusData, pattern, strict: bool = False) -> Polyhedron:
    """Solvability system over R^d: ``A x = alpha`` plus per-coordinate signs.

    Status Z forces ``x_i >= 0`` (w_i vanishes), W forces ``x_i <= 0``,
    ZERO forces ``x_i = 0`` and BOTH leaves ``x_i`` free. With ``strict``
    the inequalities become strict (closed-orbit variant).
    """
    cons = [
        Constraint(td.basis[k], Relation.EQ, -td.alpha[k]) for k in range(td.m)
    ]
    ineq = Relation.GT if strict else Relation.GE
    for i, status in enumerate(pattern):
        if status is Status.BOTH:
            continue
        if status is Status.ZERO:
            cons.append(Constraint(unit_vector(td.d, i), Relation.EQ, Fraction(0)))
        elif status is Status.Z:
            cons.append(Constraint(unit_vector(td.d, i), ineq, Fraction(0)))
        else:
            cons.append(Constraint(unit_vector(td.d, i, -1), ineq, Fraction(0)))
    return Polyhedron(td.d, tuple(cons))


def toric_semistable_numeric(td: TorusData, support) -> StabilityVerdict:
    """Cone membership test: is alpha a nonnegative combination of the
    characters indexed by the support?"""
    support = check_support(support, td.d)
    gens = tuple(td.generator(i) for i in sorted(support))
    system = cone_system(gens, False, td.alpha)
    cert = is_feasible(system)
    return StabilityVerdict(cert.feasible, cert, system)


def toric_closed_orbit(td: TorusData, support) -> bool:
    """Strict cone membership; decides closedness of the orbit through a
    semistable point with the given support."""
    support = check_support(support, td.d)
    if not toric_semistable_numeric(td, support).semistable:
        raise ValueError("closed-orbit test requires a semistable support")
    gens = tuple(td.generator(i) for i in sorted(support))
    return is_feasible(cone_system(gens, True, td.alpha)).feasible


def hk_semistable_numeric(td: TorusData, pattern) -> StabilityVerdict:
    """Signed solvability of ``A x = alpha``; the feasible witness is the
    classical sign-constrained solution vector."""
    pattern = check_pattern(pattern, td.d)
    system = _sign_system(td, pattern)
    cert = is_feasible(system)
    return StabilityVerdict(cert.feasible, cert, system)


def hk_closed_orbit(td: TorusData, pattern) -> bool:
    """Strict variant of the signed solvability test.

    No worked example pins this down beyond the implication
    closed-orbit => semistable, which the tests check.
    """
    pattern = check_pattern(pattern, td.d)
    return is_feasible(_sign_system(td, pattern, strict=True)).feasible


def state_set(arr: Arrangement, pattern) -> Polyhedron:
    """The state polyhedron of a pattern.

    Per coordinate: Z keeps the positive closed half-space, W the negative
    one, ZERO the hyperplane itself, BOTH no constraint (the two half-spaces
    cover everything). Each factor is convex, so the state set is a single
    polyhedron.
    """
    pattern = check_pattern(pattern, arr.d)
    cons = []
    for i, status in enumerate(pattern):
        if status is Status.BOTH:
            continue
        u, lift = arr.normals[i], arr.lifts[i]
        if status is Status.Z:
            cons.append(Constraint(u, Relation.GE, lift))
        elif status is Status.W:
            cons.append(Constraint(tuple(-x for x in u), Relation.GE, -lift))
        else:
            cons.append(Constraint(u, Relation.EQ, lift))
    return Polyhedron(arr.n, tuple(cons))


def hk_semistable_geometric(arr: Arrangement, pattern) -> StabilityVerdict:
    """Nonemptiness of the state set, certified."""
    system = state_set(arr, pattern)
    cert = is_feasible(system)
    return StabilityVerdict(cert.feasible, cert, system)


def toric_semistable_geometric(arr: Arrangement, support) -> StabilityVerdict:
    """Nonemptiness of the toric state set (w identically zero)."""
    return hk_semistable_geometric(arr, support_pattern(arr.d, support))


@lru_cache(maxsize=None)
def _cone_contains(td: TorusData, signed_indices) -> bool:
    gens = tuple(
        tuple(sign * x for x in td.generator(i)) for i, sign in signed_indices
    )
    return is_feasible(cone_system(gens, False, td.alpha)).feasible


def chart_active(eps, pattern) -> tuple:
    """Indices contributing to the chart cone: orientation +1 needs a live z,
    orientation -1 a live w."""
    return tuple(
        (i, e)
        for i, (e, status) in enumerate(zip(eps, pattern))
        if (e == 1 and status in (Status.Z, Status.BOTH))
        or (e == -1 and status in (Status.W, Status.BOTH))
    )


def chart_semistable(td: TorusData, eps, pattern) -> bool:
    """Membership of a pattern in the chart of the reoriented arrangement:
    alpha must lie in the cone of the active signed characters."""
    eps = check_sign_vector(eps, td.d)
    pattern = check_pattern(pattern, td.d)
    return _cone_contains(td, chart_active(eps, pattern))


@lru_cache(maxsize=None)
def _realizable_both_set(td: TorusData, both) -> bool:
    if not both:
        return True
    stack = list(td.basis) + [
        unit_vector(td.d, j) for j in range(td.d) if j not in both
    ]
    base = rank(stack)
    for i in both:
        if rank(stack + [unit_vector(td.d, i)]) == base:
            return False
    return True


def pattern_realizable(td: TorusData, pattern) -> bool:
    """Does the pattern occur on the zero level of the complex moment map?

    It does iff some kernel vector of the relation matrix is supported
    exactly on the BOTH coordinates, i.e. the kernel slice with zeros off the
    BOTH set avoids every coordinate hyperplane inside it.
    """
    pattern = check_pattern(pattern, td.d)
    both = tuple(i for i, s in enumerate(pattern) if s is Status.BOTH)
    return _realizable_both_set(td, both)


def reorient_pattern(pattern, eps) -> tuple:
    """Relabel a pattern under reorientation: Z and W swap where the sign is
    -1 (the coordinate pair rotates), ZERO and BOTH are fixed. Involutive."""
    eps = check_sign_vector(eps, len(tuple(pattern)))
    out = []
    for e, status in zip(eps, pattern):
        if e == -1 and status is Status.Z:
            out.append(Status.W)
        elif e == -1 and status is Status.W:
            out.append(Status.Z)
        else:
            out.append(status)
    return tuple(out)


def both_reduction(td: TorusData, pattern) -> tuple:
    """Resolve every BOTH coordinate to Z or W using a solvability witness.

    For a semistable pattern, reading the witness sign at each BOTH
    coordinate yields a BOTH-free pattern that is still semistable and whose
    charts embed into the original pattern's charts.
    """
    pattern = check_pattern(pattern, td.d)
    verdict = hk_semistable_numeric(td, pattern)
    if not verdict.semistable:
        raise ValueError("reduction requires a semistable pattern")
    witness = verdict.certificate.point
    out = []
    for i, status in enumerate(pattern):
        if status is Status.BOTH:
            out.append(Status.Z if witness[i] >= 0 else Status.W)
        else:
            out.append(status)
    return tuple(out)


def full_pattern(eps) -> tuple:
    """The dense pattern of a chart: live z where the sign is +1, live w
    where it is -1."""
    return tuple(Status.Z if e == 1 else Status.W for e in eps)
