from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from corecover import Arrangement

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=50,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def hirzebruch():
    """Four lines cutting a trapezoid; the classical smooth 2-D fixture."""
    return Arrangement(2, ((1, 0), (0, 1), (-1, -1), (0, -1)), (1, 1, 1, 1), name="hirzebruch")


@pytest.fixture(scope="session")
def a2_resolution():
    """Three points on a line; resolves the A2 surface singularity."""
    return Arrangement(1, ((-1,), (1,), (1,)), (1, Fraction(-1, 2), 0), name="a2-resolution")


@pytest.fixture(scope="session")
def trivial_product():
    """Two parallel lines plus a transverse one: a split flat factor, empty core."""
    return Arrangement(2, ((1, 0), (1, 0), (0, 1)), (0, -1, 0), name="trivial-product")


@pytest.fixture(scope="session")
def triangle_pair():
    """Same normals as the trapezoid fixture, lifts moved so the bounded
    chambers are two triangles meeting in a point."""
    return Arrangement(2, ((1, 0), (0, 1), (-1, -1), (0, -1)), (1, 1, 1, 3), name="triangle-pair")
