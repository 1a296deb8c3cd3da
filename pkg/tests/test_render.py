import pytest

from corecover import Arrangement, render_svg


class TestRenderPlane:
    def test_byte_deterministic(self, hirzebruch):
        assert render_svg(hirzebruch) == render_svg(hirzebruch)

    def test_trapezoid_content(self, hirzebruch):
        svg = render_svg(hirzebruch)
        assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
        # four hyperplane lines and two shaded chambers
        assert svg.count('stroke-width="1.5"') == 4
        assert svg.count('fill="#c9d7f2"') == 2
        for label in ("H1", "H2", "H3", "H4"):
            assert f">{label}</text>" in svg

    def test_triangle_pair_two_chambers(self, triangle_pair):
        assert render_svg(triangle_pair).count('fill="#c9d7f2"') == 2

    def test_product_no_shading(self, trivial_product):
        assert render_svg(trivial_product).count('fill="#c9d7f2"') == 0

    def test_crossing_pair(self):
        arr = Arrangement(2, ((1, 0), (0, 1)), (0, 0))
        svg = render_svg(arr)
        assert svg.count('stroke-width="1.5"') == 2
        assert svg.count('fill="#c9d7f2"') == 0


class TestRenderLine:
    def test_a2_points(self, a2_resolution):
        svg = render_svg(a2_resolution)
        assert svg.count("<circle") == 3
        assert ">H1</text>" in svg and ">H3</text>" in svg
        assert render_svg(a2_resolution) == svg


class TestRenderErrors:
    def test_dimension_guard(self):
        arr = Arrangement(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))
        with pytest.raises(ValueError, match="n <= 2"):
            render_svg(arr)
