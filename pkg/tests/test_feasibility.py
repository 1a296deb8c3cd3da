from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from corecover import (
    Constraint,
    GuardError,
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
from util import extension_exists

F = Fraction


def poly(dim, *cons):
    return Polyhedron(dim, tuple(cons))


# hypothesis strategies -----------------------------------------------------

def constraints_strategy(dim, closed=False):
    rels = (Relation.GE, Relation.EQ) if closed else (Relation.GE, Relation.EQ, Relation.GT)
    return st.lists(
        st.tuples(
            st.lists(st.integers(-3, 3), min_size=dim, max_size=dim),
            st.sampled_from(rels),
            st.integers(-4, 4),
        ).map(lambda t: Constraint(tuple(t[0]), t[1], F(t[2]))),
        min_size=0,
        max_size=6,
    )


def polyhedron_strategy(max_dim=3, closed=False):
    return st.integers(1, max_dim).flatmap(
        lambda d: constraints_strategy(d, closed).map(lambda cs: Polyhedron(d, tuple(cs)))
    )


# examples ------------------------------------------------------------------

class TestIsFeasible:
    def test_interval(self):
        p = poly(1, ge((1,)), ge((-1,), 1))
        cert = is_feasible(p)
        assert cert.feasible
        assert verify_certificate(p, cert)
        assert cert.point == (F(1, 2),)

    def test_contradictory_halflines(self):
        p = poly(1, ge((1,), -1), ge((-1,)))
        cert = is_feasible(p)
        assert not cert.feasible
        assert cert.multipliers == (F(1), F(1))
        assert verify_certificate(p, cert)

    def test_strict_point_excluded(self):
        p = poly(1, ge((1,)), ge((-1,)), gt((1,)))
        cert = is_feasible(p)
        assert not cert.feasible
        assert verify_certificate(p, cert)

    def test_strict_open_interval(self):
        p = poly(1, gt((1,)), gt((-1,), 1))
        cert = is_feasible(p)
        assert cert.feasible
        assert 0 < cert.point[0] < 1

    def test_zero_dim(self):
        assert is_feasible(poly(0)).feasible
        bad = poly(0, Constraint((), Relation.GE, F(-1)))
        cert = is_feasible(bad)
        assert not cert.feasible and verify_certificate(bad, cert)


class TestEliminate:
    def test_projection_example(self):
        p = poly(2, ge((1, 1)), ge((0, -1)))
        q = eliminate(p, 1)
        assert q.dim == 1
        assert q.contains((F(0),))
        assert q.contains((F(5),))
        assert not q.contains((F(-1),))

    def test_empty_list(self):
        q = eliminate(poly(3), 0)
        assert q.dim == 2 and q.constraints == ()

    def test_contradiction_retained(self):
        p = poly(1, eq((1,)), ge((1,), -1))
        q = eliminate(p, 0)
        assert q.dim == 0
        assert len(q.constraints) == 1
        assert not q.contains(())

    def test_bad_index(self):
        with pytest.raises(ValueError):
            eliminate(poly(1, ge((1,))), 1)

    def test_strictness_propagates(self):
        # x < y and y <= 3 project to x < 3
        p = poly(2, gt((-1, 1)), ge((0, -1), 3))
        q = eliminate(p, 1)
        assert not q.contains((F(3),))
        assert q.contains((F(2),))
        strict = [c for c in q.constraints if c.relation is Relation.GT]
        assert strict

    @given(polyhedron_strategy(max_dim=3), st.data())
    def test_membership_is_extension(self, p, data):
        idx = data.draw(st.integers(0, p.dim - 1))
        q = eliminate(p, idx)
        point = tuple(
            F(data.draw(st.integers(-4, 4)), data.draw(st.integers(1, 2)))
            for _ in range(p.dim - 1)
        )
        assert q.contains(point) == extension_exists(p, idx, point)


class TestAffineDimension:
    def test_examples(self):
        assert affine_dimension(poly(2)) == 2
        assert affine_dimension(poly(2, eq((1, 0)))) == 1
        assert affine_dimension(poly(1, ge((1,)), ge((-1,), -1))) == -1

    def test_trapezoid(self, hirzebruch):
        from corecover import chamber

        assert affine_dimension(chamber(hirzebruch, (1, 1, 1, 1))) == 2

    def test_implicit_equality(self):
        p = poly(2, ge((1, 0)), ge((-1, 0)), ge((0, 1)))
        assert affine_dimension(p) == 1


class TestIsBounded:
    def test_examples(self, hirzebruch, a2_resolution):
        from corecover import chamber

        assert is_bounded(chamber(hirzebruch, (1, 1, 1, 1)))
        assert not is_bounded(poly(1, ge((1,))))
        assert is_bounded(chamber(a2_resolution, (1, 1, 1)))

    def test_empty_is_bounded(self):
        assert is_bounded(poly(1, ge((1,), -1), ge((-1,))))

    def test_line_unbounded(self):
        assert not is_bounded(poly(2, eq((1, 0))))


class TestConeMember:
    def test_orthant(self):
        cert = cone_member(((1, 0), (0, 1)), False, (3, 2))
        assert cert.feasible
        assert cert.point == (F(3), F(2))

    def test_forced_negative(self):
        system = cone_system(((1, 1), (0, 1)), False, (3, 2))
        cert = is_feasible(system)
        assert not cert.feasible
        assert verify_certificate(system, cert)

    def test_zero_target(self):
        cert = cone_member(((1, 2), (-5, 1)), False, (0, 0))
        assert cert.feasible
        gens = ((1, 2), (-5, 1))
        combined = tuple(
            sum(c * g[j] for c, g in zip(cert.point, gens)) for j in range(2)
        )
        assert combined == (0, 0)
        assert all(c >= 0 for c in cert.point)

    def test_strict_needs_positive(self):
        assert not cone_member(((1,),), True, (0,)).feasible
        assert cone_member(((1,),), False, (0,)).feasible

    def test_no_generators(self):
        assert cone_member((), False, (0, 0)).feasible
        assert not cone_member((), False, (1, 0)).feasible


class TestEnumerateVertices:
    def test_trapezoid(self, hirzebruch):
        from corecover import chamber

        vertices = enumerate_vertices(chamber(hirzebruch, (1, 1, 1, 1)))
        assert vertices == [
            (F(-1), F(-1)),
            (F(-1), F(1)),
            (F(0), F(1)),
            (F(2), F(-1)),
        ]

    def test_interval(self):
        assert enumerate_vertices(poly(1, ge((1,)), ge((-1,), 1))) == [(F(0),), (F(1),)]

    def test_infeasible(self):
        assert enumerate_vertices(poly(1, ge((1,), -1), ge((-1,)))) == []

    def test_guard(self):
        with pytest.raises(GuardError):
            enumerate_vertices(poly(5))
        with pytest.raises(GuardError):
            enumerate_vertices(poly(1, *[ge((1,), k) for k in range(17)]))


class TestCertificates:
    @given(polyhedron_strategy(max_dim=3))
    def test_always_verifiable(self, p):
        cert = is_feasible(p)
        assert verify_certificate(p, cert)

    @given(polyhedron_strategy(max_dim=3, closed=True))
    def test_agrees_with_enumeration(self, p):
        assert is_feasible(p).feasible == feasible_by_enumeration(p)

    def test_enumeration_rejects_strict(self):
        with pytest.raises(ValueError):
            feasible_by_enumeration(poly(1, gt((1,))))


class TestBoundedImpliesFiniteVertices:
    @given(polyhedron_strategy(max_dim=3, closed=True))
    def test_bounded_recession_trivial(self, p):
        from corecover.feasibility import recession_cone

        if not is_feasible(p).feasible or not is_bounded(p):
            return
        cone = recession_cone(p)
        cert = is_feasible(cone)
        assert cert.feasible and all(x == 0 for x in cert.point)
        assert enumerate_vertices(p)
