"""corecover: exact-arithmetic stability and covering checks for oriented
hyperplane arrangements encoding toric and toric hyperkahler quotients."""

from .arrangement import (
    Arrangement,
    SolutionSpace,
    TorusData,
    all_sign_vectors,
    arrangement_from_quotient,
    chamber,
    is_regular,
    is_simple,
    is_smooth,
    reorient,
    solution_space,
    torus_data,
    trivial_factors,
)
from .errors import GuardError, ParseError
from .feasibility import (
    Certificate,
    Constraint,
    Polyhedron,
    Relation,
    affine_dimension,
    cone_member,
    cone_system,
    eliminate,
    enumerate_vertices,
    eq,
    feasible_by_enumeration,
    ge,
    gt,
    is_bounded,
    is_feasible,
    verify_certificate,
)
from .formats import (
    format_pattern,
    format_rational,
    format_sign_vector,
    parse_arrangement,
    parse_pattern,
    parse_rational,
    parse_sign_vector,
    serialize_arrangement,
)
from .quotient import (
    BOUNDED,
    EMPTY,
    UNBOUNDED,
    ComplementReport,
    CoreComponent,
    CoreEmptyReport,
    CoverReport,
    adjacency_lemma_check,
    chart_complement,
    core,
    core_empty_criterion,
    extended_core,
    theta_cpt,
    verify_covering,
    verify_density,
)
from .render import render_svg
from .stability import (
    FULL_ALPHABET,
    NO_BOTH_ALPHABET,
    StabilityVerdict,
    Status,
    both_reduction,
    chart_semistable,
    full_pattern,
    hk_closed_orbit,
    hk_semistable_geometric,
    hk_semistable_numeric,
    pattern_realizable,
    reorient_pattern,
    state_set,
    support_pattern,
    toric_closed_orbit,
    toric_semistable_geometric,
    toric_semistable_numeric,
)

__all__ = [
    "Arrangement",
    "BOUNDED",
    "Certificate",
    "ComplementReport",
    "Constraint",
    "CoreComponent",
    "CoreEmptyReport",
    "CoverReport",
    "EMPTY",
    "FULL_ALPHABET",
    "GuardError",
    "NO_BOTH_ALPHABET",
    "ParseError",
    "Polyhedron",
    "Relation",
    "SolutionSpace",
    "StabilityVerdict",
    "Status",
    "TorusData",
    "UNBOUNDED",
    "adjacency_lemma_check",
    "affine_dimension",
    "all_sign_vectors",
    "arrangement_from_quotient",
    "both_reduction",
    "chamber",
    "chart_complement",
    "chart_semistable",
    "cone_member",
    "cone_system",
    "core",
    "core_empty_criterion",
    "eliminate",
    "enumerate_vertices",
    "eq",
    "extended_core",
    "feasible_by_enumeration",
    "format_pattern",
    "format_rational",
    "format_sign_vector",
    "full_pattern",
    "ge",
    "gt",
    "hk_closed_orbit",
    "hk_semistable_geometric",
    "hk_semistable_numeric",
    "is_bounded",
    "is_feasible",
    "is_regular",
    "is_simple",
    "is_smooth",
    "parse_arrangement",
    "parse_pattern",
    "parse_rational",
    "parse_sign_vector",
    "pattern_realizable",
    "render_svg",
    "reorient",
    "reorient_pattern",
    "serialize_arrangement",
    "solution_space",
    "state_set",
    "support_pattern",
    "theta_cpt",
    "toric_closed_orbit",
    "toric_semistable_geometric",
    "toric_semistable_numeric",
    "torus_data",
    "trivial_factors",
    "verify_certificate",
    "verify_covering",
    "verify_density",
]
