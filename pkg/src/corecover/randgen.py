"""Seeded random instances for tests and experiment scripts.

Normals are drawn from unimodular direction families (any independent
n-subset has determinant +-1), so regularity holds by construction and only
simplicity needs rejection sampling. Everything is driven by an explicit
random.Random, so runs are reproducible from a seed.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement, is_smooth
from .feasibility import Constraint, Polyhedron, Relation
from .quotient import core
from .stability import FULL_ALPHABET, NO_BOTH_ALPHABET

# Direction families closed under the pairwise/triplewise unimodularity that
# regularity demands. Signs are drawn separately.
DIRECTIONS = {
    1: ((1,),),
    2: ((1, 0), (0, 1), (1, 1)),
    3: ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)),
}

LIFT_DENOMINATORS = (1, 1, 2, 3)


def random_smooth_arrangement(
    rng,
    n: int | None = None,
    d: int | None = None,
    max_d: int = 8,
    min_d: int | None = None,
    require_core: bool = False,
    max_attempts: int = 20000,
) -> Arrangement:
    """A random smooth arrangement, optionally with nonempty core."""
    for _ in range(max_attempts):
        dim = n if n is not None else rng.choice((1, 2, 3))
        lo = min_d if min_d is not None else (dim + 1 if require_core else dim)
        size = d if d is not None else rng.randint(max(dim, lo), max(max_d, lo))
        normals = tuple(
            tuple(rng.choice((1, -1)) * x for x in rng.choice(DIRECTIONS[dim]))
            for _ in range(size)
        )
        lifts = tuple(
            Fraction(rng.randint(-6, 6), rng.choice(LIFT_DENOMINATORS))
            for _ in range(size)
        )
        try:
            arr = Arrangement(dim, normals, lifts)
        except ValueError:
            continue
        if not is_smooth(arr):
            continue
        if require_core and not core(arr):
            continue
        return arr
    raise RuntimeError("failed to sample a smooth arrangement")


def random_closed_polyhedron(
    rng, max_dim: int = 4, max_constraints: int = 10
) -> Polyhedron:
    """A random system of GE and EQ constraints with small integer data."""
    dim = rng.randint(1, max_dim)
    count = rng.randint(0, max_constraints)
    cons = []
    for _ in range(count):
        coeffs = tuple(rng.randint(-3, 3) for _ in range(dim))
        rel = Relation.EQ if rng.random() < 0.2 else Relation.GE
        cons.append(Constraint(coeffs, rel, Fraction(rng.randint(-4, 4))))
    return Polyhedron(dim, tuple(cons))


def random_pattern(rng, d: int, allow_both: bool = True) -> tuple:
    alphabet = FULL_ALPHABET if allow_both else NO_BOTH_ALPHABET
    return tuple(rng.choice(alphabet) for _ in range(d))


def random_sign_vector(rng, d: int) -> tuple:
    return tuple(rng.choice((1, -1)) for _ in range(d))
