"""
Tests for Gröbner bases and the operations built on them.
"""

import pytest

from syzygy_python.algebra.groebner import (
    Ideal,
    buchberger,
    eliminate,
    intersect,
    is_groebner_basis,
    kernel_of_ring_map,
    normal_form,
    partial_elimination_ideals,
    s_polynomial,
)
from syzygy_python.algebra.polynomial import MonomialOrder, Ring


@pytest.mark.unit
class TestIdeal:
    """Test the Ideal class."""

    def test_generators_must_be_homogeneous(self, ring4):
        """Test that inhomogeneous generators are rejected."""
        with pytest.raises(ValueError, match="homogeneous"):
            Ideal(ring4, [ring4.parse("x0^2 - x1")])

    def test_zero_generators_dropped(self, ring4):
        """Test that zero generators do not count."""
        ideal = Ideal(ring4, [ring4.zero(), ring4.variable(0)])
        assert len(ideal) == 1
        assert Ideal(ring4).is_zero

    def test_groebner_basis_of_twisted_cubic(self, twisted_cubic):
        """Test that the three minors already form a Gröbner basis."""
        basis = twisted_cubic.groebner_basis()
        assert len(basis) == 3
        assert is_groebner_basis(basis)
        assert twisted_cubic.verify_basis()

    def test_membership(self, twisted_cubic, ring4):
        """Test ideal membership through normal forms."""
        assert twisted_cubic.contains(ring4.parse("x1*x3 - x2^2"))
        assert twisted_cubic.contains(ring4.parse("x0*x1*x3 - x0*x2^2"))
        assert not twisted_cubic.contains(ring4.variable(0))

    def test_unit_ideal(self, fp):
        """Test detection of the unit ideal."""
        ring = Ring(2, fp)
        assert Ideal(ring, [ring.one()]).is_unit
        assert not Ideal(ring, ring.gens()).is_unit

    def test_minimal_generators(self, twisted_cubic, ring4):
        """Test that redundant generators are dropped."""
        redundant = Ideal(ring4, list(twisted_cubic.generators) + [ring4.parse("x0^2*x2 - x0*x1^2")])
        assert len(redundant.minimal_generators()) == 3

    def test_quadric_part(self, rational_quartic):
        """Test the ideal generated by the quadrics."""
        assert len(rational_quartic.quadric_part()) == 1

    def test_buchberger_under_lex(self, twisted_cubic):
        """Test that buchberger presents the ideal in the requested order."""
        result = buchberger(twisted_cubic, MonomialOrder.lex())
        assert result.ring.order == MonomialOrder.lex()
        assert result.same_ideal(twisted_cubic.with_ring(result.ring))

    def test_degree_bound(self, rational_quartic):
        """Test that a truncated basis stops at the bound."""
        basis = rational_quartic.groebner_basis(degree_bound=2)
        assert all(g.degree <= 2 for g in basis)
        assert len(basis) == 1

    def test_s_polynomial_cancels_leading_terms(self, twisted_cubic):
        """Test that S-polynomials of basis elements reduce to zero."""
        f, g = twisted_cubic.groebner_basis()[:2]
        s = s_polynomial(f, g)
        assert s.is_zero or s.lm not in (f.lm, g.lm)
        assert normal_form(s, twisted_cubic).is_zero

    def test_s_polynomial_of_zero(self, ring4):
        """Test that the zero polynomial has no S-polynomial."""
        with pytest.raises(ValueError, match="zero polynomial"):
            s_polynomial(ring4.zero(), ring4.variable(0))

    def test_normal_form_is_canonical(self, twisted_cubic, ring4):
        """Test that congruent polynomials share a normal form."""
        left = normal_form(ring4.parse("x1^2"), twisted_cubic)
        right = normal_form(ring4.parse("x0*x2"), twisted_cubic)
        assert left == right
        assert not left.is_zero


@pytest.mark.unit
class TestElimination:
    """Test elimination, kernels and intersections."""

    def test_eliminate_projects_twisted_cubic(self, twisted_cubic):
        """Test that eliminating x0 leaves the plane conic."""
        conic = eliminate(twisted_cubic, 1)
        assert conic.ring.nvars == 3
        assert len(conic) == 1
        assert conic.contains(conic.ring.parse("x0*x2 - x1^2"))

    def test_eliminate_rejects_all_variables(self, twisted_cubic):
        """Test that at least one variable must survive."""
        with pytest.raises(ValueError, match="Cannot eliminate"):
            eliminate(twisted_cubic, 4)

    def test_kernel_of_conic_parametrization(self, fp):
        """Test the kernel of [s^2, st, t^2]."""
        params = Ring(2, fp)
        images = [params.parse("x0^2"), params.parse("x0*x1"), params.parse("x1^2")]
        kernel = kernel_of_ring_map(params, images)
        assert kernel.ring.nvars == 3
        assert len(kernel) == 1
        assert kernel.contains(kernel.ring.parse("x0*x2 - x1^2"))

    def test_kernel_rejects_mixed_degrees(self, fp):
        """Test that images must share a degree."""
        params = Ring(2, fp)
        with pytest.raises(ValueError, match="mixed degrees"):
            kernel_of_ring_map(params, [params.parse("x0"), params.parse("x1^2")])

    def test_intersect(self, fp):
        """Test (x0) ∩ (x1) = (x0*x1)."""
        ring = Ring(2, fp)
        result = intersect(Ideal(ring, [ring.variable(0)]), Ideal(ring, [ring.variable(1)]))
        assert result.same_ideal(Ideal(ring, [ring.parse("x0*x1")]))

    def test_partial_elimination_chain(self, twisted_cubic):
        """Test partial elimination ideals at x0."""
        family = partial_elimination_ideals(twisted_cubic, 0, 1)
        assert len(family.levels) == 2
        assert family.is_chain()
        small = family.levels[0].ring
        assert len(family.levels[0]) == 1
        assert family.levels[1].contains(small.variable(1))
        assert family.levels[1].contains(small.variable(2))
