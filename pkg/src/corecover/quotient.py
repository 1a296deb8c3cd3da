"""Global structure of the quotient: core, covering, density, complements.

Each sign vector ``eps`` reorients the arrangement and contributes a chamber
``Delta_eps``. The bounded nonempty full-dimensional chambers index the
compact components of the core; the main verification sweeps every support
pattern and confirms that each semistable one lands in the chart of some
compact-core sign vector, so those charts cover the whole quotient.

Everything is exhaustive and exact, guarded against exponential blowup by a
hyperplane-count limit that can be forced off.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .arrangement import (
    Arrangement,
    all_sign_vectors,
    chamber,
    check_sign_vector,
    is_smooth,
    torus_data,
    trivial_factors,
)
from .errors import GuardError
from .feasibility import Polyhedron, affine_dimension, is_bounded, is_feasible
from .stability import (
    NO_BOTH_ALPHABET,
    FULL_ALPHABET,
    Status,
    chart_semistable,
    full_pattern,
    hk_semistable_numeric,
    pattern_realizable,
    state_set,
)

DEFAULT_MAX_COVER_D = 12
DEFAULT_MAX_COMPLEMENT_D = 9

EMPTY = "empty"
BOUNDED = "bounded"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class CoreComponent:
    """One extended-core stratum: the chamber of a sign vector, classified."""

    eps: tuple
    chamber: Polyhedron
    classification: str
    dimension: int


@dataclass(frozen=True)
class CoverReport:
    """Outcome of the covering sweep.

    ``witness`` maps every semistable pattern to a compact-core sign vector
    whose chart contains it; ``counterexamples`` lists semistable patterns in
    no compact chart (the covering statement predicts none).
    """

    covered: bool
    witness: dict
    counterexamples: tuple


@dataclass(frozen=True)
class ComplementReport:
    """What one dense chart misses, as pattern-level evidence.

    ``excluded_patterns`` are the semistable realizable patterns outside the
    chart. ``all_in_extended_core`` says none of them has a BOTH coordinate.
    ``max_state_dim`` is the largest state-set dimension among the BOTH-free
    excluded patterns (None when BOTH patterns appear: no dimension claim is
    made for those). ``component_breakdown`` groups the BOTH-free excluded
    patterns by the extended-core strata containing them.
    """

    chart_eps: tuple
    excluded_patterns: tuple
    all_in_extended_core: bool
    max_state_dim: int | None
    component_breakdown: dict


@dataclass(frozen=True)
class CoreEmptyReport:
    """Both sides of the empty-core criterion, computed independently."""

    bounded_exists: bool
    trivial_indices: tuple
    agree: bool


def _require_smooth(arr: Arrangement):
    if not is_smooth(arr):
        raise ValueError("arrangement is not smooth")


def _check_guard(arr: Arrangement, force: bool, max_d: int | None, default: int, what: str):
    limit = default if max_d is None else max_d
    if arr.d > limit and not force:
        raise GuardError(
            f"{what} enumerates exponentially many cases for d = {arr.d} > {limit}; "
            "pass force=True to run anyway"
        )


@lru_cache(maxsize=None)
def _extended_core_cached(arr: Arrangement) -> tuple:
    components = []
    for eps in all_sign_vectors(arr.d):
        region = chamber(arr, eps)
        dim = affine_dimension(region)
        if dim < 0:
            kind = EMPTY
        elif is_bounded(region):
            kind = BOUNDED
        else:
            kind = UNBOUNDED
        components.append(CoreComponent(eps, region, kind, dim))
    return tuple(components)


def extended_core(arr: Arrangement, force: bool = False, max_d: int | None = None) -> tuple:
    """All 2^d chamber strata, each classified exactly."""
    _require_smooth(arr)
    _check_guard(arr, force, max_d, DEFAULT_MAX_COVER_D, "extended core")
    return _extended_core_cached(arr)


def core(arr: Arrangement, force: bool = False, max_d: int | None = None) -> tuple:
    """The compact part: bounded nonempty full-dimensional chambers.

    For simple arrangements nonempty chambers are automatically
    full-dimensional; the dimension filter guards the degenerate case anyway.
    """
    return tuple(
        c
        for c in extended_core(arr, force=force, max_d=max_d)
        if c.classification == BOUNDED and c.dimension == arr.n
    )


def theta_cpt(arr: Arrangement, force: bool = False, max_d: int | None = None) -> tuple:
    return tuple(c.eps for c in core(arr, force=force, max_d=max_d))


def core_empty_criterion(arr: Arrangement, force: bool = False, max_d: int | None = None) -> CoreEmptyReport:
    """Compare core emptiness against the split-factor criterion.

    Both sides are computed independently; disagreement is reported, never
    reconciled silently.
    """
    _require_smooth(arr)
    bounded_exists = len(core(arr, force=force, max_d=max_d)) > 0
    trivial = trivial_factors(arr)
    agree = (not bounded_exists) == (len(trivial) > 0)
    return CoreEmptyReport(bounded_exists, trivial, agree)


def verify_covering(arr: Arrangement, force: bool = False, max_d: int | None = None) -> CoverReport:
    """Sweep all BOTH-free patterns and witness each semistable one in a
    compact chart.

    BOTH coordinates are covered by the reduction property (resolving BOTH to
    the witness sign only shrinks charts), so the 3^d sweep decides the full
    statement. Requires a nonempty core.
    """
    _require_smooth(arr)
    _check_guard(arr, force, max_d, DEFAULT_MAX_COVER_D, "covering sweep")
    td = torus_data(arr)
    compact = theta_cpt(arr, force=force, max_d=max_d)
    if not compact:
        raise ValueError("covering theorem hypothesis violated: empty core")
    witness = {}
    counterexamples = []
    for pattern in itertools.product(NO_BOTH_ALPHABET, repeat=arr.d):
        if not hk_semistable_numeric(td, pattern).semistable:
            continue
        for eps in compact:
            if chart_semistable(td, eps, pattern):
                witness[pattern] = eps
                break
        else:
            counterexamples.append(pattern)
    return CoverReport(
        covered=not counterexamples,
        witness=witness,
        counterexamples=tuple(counterexamples),
    )


def adjacency_lemma_check(arr: Arrangement, force: bool = False, max_d: int | None = None) -> bool:
    """Key step of the covering proof, checked exhaustively.

    Whenever a pattern's state set meets a compact chamber, the pattern must
    lie in that chamber's chart; equivalently a pattern outside the chart has
    a state set disjoint from the chamber.
    """
    _require_smooth(arr)
    _check_guard(arr, force, max_d, DEFAULT_MAX_COVER_D, "adjacency sweep")
    td = torus_data(arr)
    compact = core(arr, force=force, max_d=max_d)
    for pattern in itertools.product(NO_BOTH_ALPHABET, repeat=arr.d):
        st = state_set(arr, pattern)
        if not is_feasible(st).feasible:
            continue
        for component in compact:
            if chart_semistable(td, component.eps, pattern):
                continue
            if is_feasible(st.intersect(component.chamber)).feasible:
                return False
    return True


def verify_density(arr: Arrangement, eps) -> bool:
    """Chart density dichotomy for one sign vector.

    The chart's dense pattern is semistable exactly when the chamber is
    nonempty; this function checks the equivalence on the given sign vector.
    """
    _require_smooth(arr)
    eps = check_sign_vector(eps, arr.d)
    td = torus_data(arr)
    chart_side = chart_semistable(td, eps, full_pattern(eps))
    chamber_side = is_feasible(chamber(arr, eps)).feasible
    return chart_side == chamber_side


def _compatible_components(pattern):
    """Extended-core sign vectors whose stratum contains the pattern."""
    choices = []
    for status in pattern:
        if status is Status.Z:
            choices.append((1,))
        elif status is Status.W:
            choices.append((-1,))
        elif status is Status.ZERO:
            choices.append((1, -1))
        else:
            return
    yield from itertools.product(*choices)


def chart_complement(
    arr: Arrangement, eps, force: bool = False, max_d: int | None = None
) -> ComplementReport:
    """Pattern-level description of what one dense chart misses.

    Sweeps the full four-letter alphabet with realizability filtering and
    reports whether every excluded pattern is BOTH-free (hence sits in the
    extended core) and how large the excluded state sets get.
    """
    _require_smooth(arr)
    eps = check_sign_vector(eps, arr.d)
    _check_guard(arr, force, max_d, DEFAULT_MAX_COMPLEMENT_D, "complement sweep")
    if not is_feasible(chamber(arr, eps)).feasible:
        raise ValueError("complement is defined for sign vectors with nonempty chamber")
    td = torus_data(arr)
    excluded = []
    for pattern in itertools.product(FULL_ALPHABET, repeat=arr.d):
        if not pattern_realizable(td, pattern):
            continue
        if not hk_semistable_numeric(td, pattern).semistable:
            continue
        if chart_semistable(td, eps, pattern):
            continue
        excluded.append(pattern)
    both_free = [p for p in excluded if Status.BOTH not in p]
    all_in_core = len(both_free) == len(excluded)
    if not all_in_core:
        max_dim = None
    elif both_free:
        max_dim = max(affine_dimension(state_set(arr, p)) for p in both_free)
    else:
        max_dim = -1
    breakdown = {}
    for pattern in both_free:
        for comp_eps in _compatible_components(pattern):
            breakdown.setdefault(comp_eps, []).append(pattern)
    breakdown = {k: tuple(v) for k, v in sorted(breakdown.items(), reverse=True)}
    return ComplementReport(
        chart_eps=eps,
        excluded_patterns=tuple(excluded),
        all_in_extended_core=all_in_core,
        max_state_dim=max_dim,
        component_breakdown=breakdown,
    )
