"""Oriented rational hyperplane arrangements and their torus data.

An arrangement is a list of oriented hyperplanes ``{<u_i, x> + lift_i = 0}``
in an ``n``-dimensional rational space, with primitive integer normals
``u_i``. It encodes a quotient construction: the normals define a surjection
of lattices whose kernel is the acting subtorus, and the lifts determine the
moment map level. This module builds that torus data, reorients arrangements,
tests smoothness, enumerates chambers, and reconstructs an arrangement from
its quotient data by cutting the affine solution space with coordinate
hyperplanes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .feasibility import Constraint, Polyhedron, Relation
from .linalg import (
    det,
    is_primitive,
    kernel_lattice,
    lin_solve,
    mat_vec,
    primitive_scale,
    rank,
    solve_square,
    transpose,
)


@dataclass(frozen=True)
class Arrangement:
    """``d`` oriented hyperplanes ``<normals[i], x> + lifts[i] = 0`` in Q^n.

    Invariants: every normal is primitive and nonzero, the normals span Q^n,
    and there are at least ``n`` of them. Lifts are arbitrary rationals.
    """

    n: int
    normals: tuple
    lifts: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        normals = tuple(tuple(x for x in row) for row in self.normals)
        lifts = tuple(Fraction(x) for x in self.lifts)
        object.__setattr__(self, "normals", normals)
        object.__setattr__(self, "lifts", lifts)
        if self.n < 1:
            raise ValueError("ambient dimension must be at least 1")
        if len(normals) < self.n:
            raise ValueError("need at least as many hyperplanes as the dimension")
        if len(lifts) != len(normals):
            raise ValueError("lifts length does not match normals")
        for i, u in enumerate(normals):
            if len(u) != self.n:
                raise ValueError(f"normal {i + 1} has wrong length")
            for x in u:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"normal {i + 1} has a non-integer entry")
            if all(x == 0 for x in u):
                raise ValueError(f"normal {i + 1} not primitive")
            if not is_primitive(u):
                raise ValueError(f"normal {i + 1} not primitive")
        if rank(normals) < self.n:
            raise ValueError("normals do not span")

    @property
    def d(self) -> int:
        return len(self.normals)


def check_sign_vector(eps, d: int) -> tuple:
    eps = tuple(eps)
    if len(eps) != d:
        raise ValueError(f"sign vector has length {len(eps)}, expected {d}")
    if any(e not in (1, -1) for e in eps):
        raise ValueError("sign vector entries must be +1 or -1")
    return eps


def all_sign_vectors(d: int):
    """All 2^d sign vectors, lexicographically with +1 before -1."""
    return itertools.product((1, -1), repeat=d)


@dataclass(frozen=True)
class TorusData:
    """Exact sequence data of the quotient encoded by an arrangement.

    ``basis`` holds the pinned canonical basis of the kernel lattice of the
    normal map, one vector of length ``d`` per row; read as a matrix it is
    exactly the ``m x d`` relation matrix whose column ``i`` is the image of
    the ``i``-th coordinate character, and its transpose is the ``d x m``
    embedding matrix of the subtorus. ``alpha`` is the moment map level
    determined by the lifts: ``alpha = basis @ lifts``.

    The basis choice is a convention; everything comparable across different
    bases (stability verdicts, chamber combinatorics) is basis independent
    and is tested as such.
    """

    d: int
    m: int
    basis: tuple
    alpha: tuple
    lifts: tuple

    def __post_init__(self):
        basis = tuple(tuple(row) for row in self.basis)
        alpha = tuple(Fraction(a) for a in self.alpha)
        lifts = tuple(Fraction(x) for x in self.lifts)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "lifts", lifts)
        if len(basis) != self.m or len(alpha) != self.m or len(lifts) != self.d:
            raise ValueError("inconsistent torus data shapes")
        for row in basis:
            if len(row) != self.d:
                raise ValueError("kernel basis vector has wrong length")
        if tuple(mat_vec(basis, lifts)) != alpha:
            raise ValueError("alpha does not equal basis @ lifts")

    @property
    def n(self) -> int:
        return self.d - self.m

    @property
    def A(self) -> tuple:
        """The m x d relation matrix (rows are the kernel basis vectors)."""
        return self.basis

    @property
    def iota_basis(self) -> tuple:
        """The d x m embedding matrix (columns are the kernel basis vectors)."""
        return transpose(self.basis, ncols=self.d)

    def generator(self, i: int) -> tuple:
        """Image of the i-th coordinate character in the dual of the subtorus."""
        return tuple(row[i] for row in self.basis)


@lru_cache(maxsize=None)
def torus_data(arr: Arrangement) -> TorusData:
    """Kernel lattice and moment level of an arrangement.

    Deterministic: the kernel basis follows the pinned Hermite normal form
    convention of :mod:`corecover.linalg`.
    """
    pi = transpose(arr.normals, ncols=arr.n)
    basis = kernel_lattice(pi, ncols=arr.d)
    alpha = tuple(
        sum(row[i] * arr.lifts[i] for i in range(arr.d)) for row in basis
    )
    return TorusData(d=arr.d, m=len(basis), basis=basis, alpha=alpha, lifts=arr.lifts)


def reorient(arr: Arrangement, eps) -> Arrangement:
    """Flip the orientation of hyperplane ``i`` wherever ``eps[i] == -1``.

    The point set of every hyperplane is unchanged and the map is an
    involution; normals and lifts both pick up the sign.
    """
    eps = check_sign_vector(eps, arr.d)
    normals = tuple(
        tuple(e * x for x in u) for e, u in zip(eps, arr.normals)
    )
    lifts = tuple(e * lift for e, lift in zip(eps, arr.lifts))
    return Arrangement(arr.n, normals, lifts, name=arr.name)


@lru_cache(maxsize=None)
def is_regular(arr: Arrangement) -> bool:
    """Every linearly independent n-subset of normals is a lattice basis."""
    for subset in itertools.combinations(range(arr.d), arr.n):
        sub = [arr.normals[i] for i in subset]
        value = det(sub)
        if value != 0 and abs(value) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def is_simple(arr: Arrangement) -> bool:
    """Every k hyperplanes that meet do so in codimension exactly k.

    Subsets are scanned up to size n + 1; a violating larger subset always
    contains a violating subset of size at most n + 1.
    """
    for size in range(2, min(arr.d, arr.n + 1) + 1):
        for subset in itertools.combinations(range(arr.d), size):
            mat = [arr.normals[i] for i in subset]
            rhs = [-arr.lifts[i] for i in subset]
            if lin_solve(mat, rhs) is None:
                continue
            if size > arr.n:
                return False
            if rank(mat) != size:
                return False
    return True


def is_smooth(arr: Arrangement) -> bool:
    return is_regular(arr) and is_simple(arr)


def chamber(arr: Arrangement, eps) -> Polyhedron:
    """The closed region ``{x : eps[i] * (<u_i, x> + lift_i) >= 0 for all i}``."""
    eps = check_sign_vector(eps, arr.d)
    cons = tuple(
        Constraint(
            tuple(e * x for x in u),
            Relation.GE,
            e * lift,
        )
        for e, u, lift in zip(eps, arr.normals, arr.lifts)
    )
    return Polyhedron(arr.n, cons)


@dataclass(frozen=True)
class SolutionSpace:
    """The affine solution plane ``{x in R^d : A x = alpha}``.

    ``particular`` is the lift vector, ``homogeneous_basis`` spans the kernel
    of the relation matrix (rows), and the projection onto
    ``projection_coords`` is bijective on the plane.
    """

    torus: TorusData
    particular: tuple
    homogeneous_basis: tuple
    projection_coords: tuple


def solution_space(td: TorusData) -> SolutionSpace:
    """Parametrize the level set of the relation system.

    The projection coordinates are the lexicographically first subset on
    which the homogeneous part projects bijectively.
    """
    basis = kernel_lattice(td.basis, ncols=td.d)
    nfree = len(basis)
    coords = None
    for subset in itertools.combinations(range(td.d), nfree):
        square = [[row[t] for t in subset] for row in basis]
        if det(square) != 0:
            coords = subset
            break
    if coords is None:
        raise ValueError("degenerate projection: no valid coordinate subset")
    return SolutionSpace(
        torus=td,
        particular=td.lifts,
        homogeneous_basis=basis,
        projection_coords=coords,
    )


def arrangement_from_quotient(td: TorusData) -> Arrangement:
    """Rebuild an arrangement from torus data by cutting the solution plane.

    The coordinate hyperplane ``{x_i = 0}`` meets the solution plane in an
    affine hyperplane; expressed in the projection coordinates centered at
    the lift point it reads ``<u_i, y> + lift_i' = 0`` with a primitive
    integer normal. Different valid projections give arrangements that agree
    up to a unimodular change of coordinates, so all cross-checks are done on
    basis-independent data.
    """
    if td.d <= td.m:
        raise ValueError("quotient reconstruction needs d > m")
    space = solution_space(td)
    basis = space.homogeneous_basis
    coords = space.projection_coords
    nfree = len(coords)
    square = [[row[t] for t in coords] for row in basis]
    normals = []
    lifts = []
    for i in range(td.d):
        col = tuple(row[i] for row in basis)
        w = solve_square(square, col)
        if w is None or all(x == 0 for x in w):
            raise ValueError(
                f"degenerate projection: coordinate {i + 1} is constant on the solution plane"
            )
        prim, sigma = primitive_scale(w)
        normals.append(prim)
        lifts.append(sigma * td.lifts[i])
    return Arrangement(nfree, tuple(normals), tuple(lifts))


def trivial_factors(arr: Arrangement) -> tuple:
    """Indices whose normal lies outside the span of all the others.

    Each such hyperplane splits off a flat factor of the quotient; the core
    is empty exactly when such indices exist (reported, not assumed).
    """
    out = []
    for k in range(arr.d):
        others = [arr.normals[i] for i in range(arr.d) if i != k]
        if rank(others) < arr.n:
            out.append(k)
    return tuple(out)
