"""
Tests for variety constructions and the construction grammar.
"""

import pytest

from syzygy_python.algebra.fields import FieldSpec
from syzygy_python.algebra.groebner import Ideal
from syzygy_python.algebra.polynomial import Ring
from syzygy_python.algebra.resolution import betti_table, free_resolution
from syzygy_python.core.models import ScrollSpec
from syzygy_python.varieties import (
    ConstructionError,
    UnsupportedConstructionError,
    parse_construction,
)
from syzygy_python.varieties.constructions import (
    general_position_check,
    hyperelliptic_range_ok,
    monomial_curve,
    points_on_rational_normal_curve,
    project_from_span,
    random_points,
    rational_normal_scroll,
    scroll_divisor,
    vanishes_on_parametrization,
    veronese_embed_plane_curve,
)


def _table(ideal):
    return betti_table(free_resolution(ideal))


@pytest.mark.unit
class TestScrolls:
    """Test rational normal scrolls."""

    def test_scroll_spec(self):
        """Test the numerical data of S(1,2)."""
        spec = ScrollSpec((1, 2))
        assert spec.ambient == 4
        assert spec.degree == 3
        assert spec.dimension == 2
        assert spec.codimension == 2
        assert str(spec) == "S(1,2)"

    def test_invalid_scroll_specs(self):
        """Test that degenerate parameters are rejected."""
        with pytest.raises(ValueError, match="all parameters are zero"):
            ScrollSpec((0, 0))
        with pytest.raises(ValueError, match="nondecreasing"):
            ScrollSpec((2, 1))

    def test_cubic_scroll(self, fp, twisted_cubic_table):
        """Test that S(1,2) has the Betti table of a 2x3 determinantal ideal."""
        ideal = rational_normal_scroll(ScrollSpec((1, 2)), fp)
        assert ideal.ring.nvars == 5
        assert len(ideal) == 3
        assert _table(ideal) == twisted_cubic_table

    def test_rational_normal_quartic(self, fp, rnc4_table):
        """Test S(4), the rational normal curve of P^4."""
        ideal = rational_normal_scroll(ScrollSpec((4,)), fp)
        assert len(ideal) == 6
        assert _table(ideal) == rnc4_table


@pytest.mark.unit
class TestParametrizedCurves:
    """Test monomial curves and Veronese images."""

    def test_monomial_twisted_cubic(self, fp, twisted_cubic):
        """Test that M(3,2,1,0) is the twisted cubic."""
        ideal = monomial_curve([3, 2, 1, 0], fp)
        assert ideal.same_ideal(twisted_cubic)

    def test_monomial_rational_quartic(self, fp, rational_quartic_table):
        """Test the smooth rational quartic M(4,3,1,0)."""
        assert _table(monomial_curve([4, 3, 1, 0], fp)) == rational_quartic_table

    def test_monomial_curve_validation(self, fp):
        """Test that exponents must decrease strictly."""
        with pytest.raises(ConstructionError, match="strictly decreasing"):
            monomial_curve([3, 3, 0], fp)
        with pytest.raises(ConstructionError, match="at least two"):
            monomial_curve([3], fp)

    def test_parametrization_check(self, fp, twisted_cubic, ring4):
        """Test vanishing on sampled parameter points."""
        params = Ring(2, fp)
        images = [params.monomial((3 - i, i)) for i in range(4)]
        assert vanishes_on_parametrization(twisted_cubic, images)
        wrong = Ideal(ring4, [ring4.parse("x0*x3 - x1^2")])
        assert not vanishes_on_parametrization(wrong, images)

    def test_veronese_validation(self, fp):
        """Test bad Veronese inputs."""
        with pytest.raises(ConstructionError, match="at least 2"):
            veronese_embed_plane_curve(Ring(3, fp).parse("x0"), 1)
        with pytest.raises(ConstructionError, match="3 variables"):
            veronese_embed_plane_curve(Ring(4, fp).parse("x0"), 2)

    @pytest.mark.integration
    def test_veronese_surface(self, fp, rnc4_table):
        """Test ν_2 of the whole plane, a surface of minimal degree in P^5."""
        ideal = veronese_embed_plane_curve(Ring(3, fp).zero(), 2)
        assert ideal.ring.nvars == 6
        assert len(ideal) == 6
        assert _table(ideal) == rnc4_table


@pytest.mark.unit
class TestPoints:
    """Test point configurations."""

    def test_general_position_check(self, qq):
        """Test collinear and general triples."""
        assert not general_position_check([(1, 0, 0), (0, 1, 0), (1, 1, 0)], qq)
        assert general_position_check([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], qq)

    def test_three_points_in_plane(self, fp, twisted_cubic_table):
        """Test three general points of P^2."""
        config, ideal = random_points(2, 3, 0, fp)
        assert len(config) == 3
        assert config.general
        assert _table(ideal) == twisted_cubic_table

    def test_points_are_seeded(self, fp):
        """Test that the seed determines the points."""
        first, _ = random_points(2, 3, 11, fp)
        second, _ = random_points(2, 3, 11, fp)
        assert first.points == second.points

    def test_degenerate_point_counts(self, fp):
        """Test that d ≤ r and r < 2 are rejected."""
        with pytest.raises(ConstructionError, match="degenerate"):
            random_points(3, 3, 0, fp)
        with pytest.raises(ConstructionError, match="at least 2"):
            random_points(1, 3, 0, fp)

    def test_points_on_conic(self, fp):
        """Test four points on a conic: a complete intersection of two conics."""
        config, ideal = points_on_rational_normal_curve(2, 4, 0, fp)
        assert general_position_check(config.points, fp)
        assert _table(ideal).nonzero() == [(0, 0, 1), (1, 1, 2), (2, 2, 1)]


@pytest.mark.unit
class TestScrollDivisors:
    """Test curves on rational normal surface scrolls."""

    def test_hyperelliptic_range(self):
        """Test the hyperelliptic range filter."""
        assert hyperelliptic_range_ok(1, 1, 0)
        assert hyperelliptic_range_ok(1, 3, 0)
        assert not hyperelliptic_range_ok(1, 5, -3)

    def test_cone_unsupported(self, fp):
        """Test that the cone S(0,b) is not attempted."""
        with pytest.raises(UnsupportedConstructionError):
            scroll_divisor(0, 2, 0, 0, fp)

    def test_invalid_divisor_parameters(self, fp):
        """Test a > b and a class with a fixed component."""
        with pytest.raises(ConstructionError, match="1 ≤ a ≤ b"):
            scroll_divisor(2, 1, 0, 0, fp)
        with pytest.raises(ConstructionError, match="fixed component"):
            scroll_divisor(1, 2, -3, 0, fp)

    @pytest.mark.integration
    def test_elliptic_quartic_on_quadric(self, fp):
        """Test 2H on S(1,1): a complete intersection of two quadrics in P^3."""
        ideal = scroll_divisor(1, 1, 0, 0, fp)
        assert ideal.ring.nvars == 4
        assert ideal.contains(ideal.ring.parse("x0*x3 - x1*x2"))
        assert _table(ideal).nonzero() == [(0, 0, 1), (1, 1, 2), (2, 2, 1)]


@pytest.mark.unit
class TestConstructionGrammar:
    """Test construction specs."""

    def test_scroll_spec_text(self, fp):
        """Test a scroll spec and its provenance."""
        result = parse_construction("S(1,2)", fp, seed=4)
        assert result.ambient == 4
        assert len(result.ideal) == 3
        assert result.provenance() == {"spec": "S(1,2)", "seed": "4", "field": "Fp:32003"}

    def test_projection_from_point_on_curve(self, fp):
        """Test that projecting the twisted cubic from one of its points gives a conic."""
        result = parse_construction("S(3)|proj(1,0,0,0)", fp)
        assert result.ambient == 2
        assert [g.degree for g in result.ideal.generators] == [2]
        assert result.steps == ["S(3)", "proj(1,0,0,0)"]

    def test_projection_from_point_off_curve(self, fp):
        """Test that a general projection of the twisted cubic is a plane cubic."""
        result = parse_construction("S(3)|proj(0,1,0,0)", fp)
        assert [g.degree for g in result.ideal.generators] == [3]

    def test_hyperplane_section(self, fp, twisted_cubic_table):
        """Test cutting the twisted cubic down to three points of P^2."""
        result = parse_construction("M(3,2,1,0)|cut(1,5)", fp)
        assert result.ambient == 2
        assert _table(result.ideal) == twisted_cubic_table

    def test_too_many_hyperplanes(self, fp):
        """Test that a curve cannot be cut by three hyperplanes."""
        with pytest.raises(ConstructionError, match="Cannot cut"):
            parse_construction("S(3)|cut(3,0)", fp)

    def test_unknown_constructions(self, fp):
        """Test unknown bases and operations."""
        with pytest.raises(ConstructionError, match="Unknown construction"):
            parse_construction("Q(1,2)", fp)
        with pytest.raises(ConstructionError, match="Unknown operation"):
            parse_construction("S(3)|spin(1)", fp)
        with pytest.raises(ConstructionError, match="integers"):
            parse_construction("S(a)", fp)
        with pytest.raises(ConstructionError, match="Empty"):
            parse_construction("  ", fp)

    def test_dependent_projection_points(self, fp):
        """Test that dependent centers are rejected."""
        with pytest.raises(ConstructionError, match="dependent"):
            parse_construction("S(4)|proj(1,0,0,0,0;2,0,0,0,0)", fp)

    def test_projection_ambient_too_small(self, fp):
        """Test that projecting a plane conic from a point is rejected."""
        ring = Ring(3, fp)
        conic = Ideal(ring, [ring.parse("x0*x2 - x1^2")])
        with pytest.raises(ConstructionError, match="Ambient too small"):
            project_from_span(conic, [(0, 1, 0)])
        with pytest.raises(ConstructionError, match="Ambient too small"):
            parse_construction("S(2)|proj(0,1,0)", fp)

    def test_projection_image_fills_target(self, fp):
        """Test that a quadric surface projected to P^2 is rejected."""
        with pytest.raises(ConstructionError, match="Ambient too small: the image fills P\\^2"):
            parse_construction("S(1,1)|proj(1,0,0,1)", fp)

    def test_points_spec(self):
        """Test the pts spec over QQ."""
        result = parse_construction("pts(2,3,1)", FieldSpec.rationals())
        assert result.points is not None
        assert len(result.points) == 3
        assert result.seed == 1

    @pytest.mark.integration
    def test_veronese_conic(self, fp):
        """Test that ν_2 of a smooth conic is a rational normal quartic inside a hyperplane."""
        result = parse_construction("nu(2):x0^2+x1^2-x2^2", fp)
        assert result.ambient == 5
        table = _table(result.ideal)
        assert table.get(1, 0) == 1
        assert table.get(1, 1) == 6
