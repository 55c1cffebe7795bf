"""
Tests for fields and polynomials.
"""

from fractions import Fraction

import numpy as np
import pytest

from syzygy_python.algebra.fields import FieldSpec
from syzygy_python.algebra.polynomial import (
    MonomialOrder,
    PolynomialParseError,
    Ring,
    RingMismatchError,
    monomials_of_degree,
    parse_polynomial,
    poly_arith,
    substitute_linear,
)


@pytest.mark.unit
class TestFieldSpec:
    """Test the FieldSpec class."""

    def test_parse_variants(self):
        """Test parsing the accepted field spellings."""
        assert FieldSpec.parse("qq").is_rational
        assert FieldSpec.parse("QQ").is_rational
        assert FieldSpec.parse("fp").characteristic == 32003
        assert FieldSpec.parse("Fp:101").characteristic == 101

    def test_parse_rejects_unknown(self):
        """Test that unknown fields are rejected."""
        with pytest.raises(ValueError, match="Unknown field"):
            FieldSpec.parse("rr")

    def test_composite_modulus_rejected(self):
        """Test that a composite modulus is rejected."""
        with pytest.raises(ValueError, match="not prime"):
            FieldSpec.prime(32004)

    def test_text_forms(self):
        """Test header and CLI text forms."""
        assert str(FieldSpec.prime(7)) == "Fp:7"
        assert FieldSpec.prime(7).cli_text == "fp:7"
        assert str(FieldSpec.rationals()) == "QQ"

    def test_rational_reduction_mod_p(self):
        """Test that 1/2 maps to the inverse of 2 in F_7."""
        fld = FieldSpec.prime(7)
        assert fld.element(Fraction(1, 2)) == 4
        assert fld.element("-1") == 6

    def test_denominator_divisible_by_p(self):
        """Test that a denominator vanishing mod p is an error."""
        with pytest.raises(ZeroDivisionError):
            FieldSpec.prime(7).element(Fraction(1, 7))

    def test_symmetric_representative(self):
        """Test symmetric representatives used for printing."""
        fld = FieldSpec.prime(7)
        assert fld.symmetric(6) == -1
        assert fld.symmetric(3) == 3

    def test_random_element_is_seeded(self):
        """Test that random elements depend only on the generator seed."""
        fld = FieldSpec.rationals()
        a = [fld.random_element(np.random.default_rng(5), 10) for _ in range(3)]
        b = [fld.random_element(np.random.default_rng(5), 10) for _ in range(3)]
        assert a == b
        assert all(-10 <= x <= 10 for x in a)


@pytest.mark.unit
class TestPolynomial:
    """Test parsing, printing and arithmetic of polynomials."""

    def test_parse_and_print_grevlex(self, ring4):
        """Test that terms print in descending grevlex order."""
        f = ring4.parse("x0*x2 - x1^2")
        assert str(f) == "-x1^2 + x0*x2"
        assert f.is_homogeneous
        assert f.degree == 2

    def test_parse_rational_coefficient(self, qq):
        """Test a fractional coefficient over QQ."""
        f = parse_polynomial("1/2x0 + 3*x1", Ring(2, qq))
        assert f.coeffs[(1, 0)] == Fraction(1, 2)
        assert str(f) == "1/2*x0 + 3*x1"

    def test_prime_field_prints_symmetric(self):
        """Test that F_p coefficients print with symmetric representatives."""
        f = parse_polynomial("32002*x0", Ring(1, FieldSpec.prime()))
        assert str(f) == "-x0"

    def test_cancelling_terms(self, ring4):
        """Test that cancelling terms give the zero polynomial."""
        f = ring4.parse("x0*x1 - x1*x0")
        assert f.is_zero
        assert str(f) == "0"

    def test_unknown_variable(self, ring4):
        """Test that a variable outside the ring is rejected."""
        with pytest.raises(PolynomialParseError, match="Unknown variable x4"):
            ring4.parse("x4 + x0")

    def test_malformed_text(self, ring4):
        """Test malformed polynomial text."""
        with pytest.raises(PolynomialParseError):
            ring4.parse("x0 +")
        with pytest.raises(PolynomialParseError):
            ring4.parse("x0 & x1")
        with pytest.raises(PolynomialParseError):
            ring4.parse("")

    def test_separated_digits_rejected(self, ring4):
        """Test that whitespace never joins two numbers."""
        with pytest.raises(PolynomialParseError, match="Two numbers"):
            ring4.parse("2 3*x0")
        with pytest.raises(PolynomialParseError):
            ring4.parse("x1 2")
        assert ring4.parse("x0 + 3 / 2*x1") == ring4.parse("x0 + 3/2*x1")

    def test_arithmetic(self, ring4):
        """Test sums, products and powers."""
        x0, x1 = ring4.variable(0), ring4.variable(1)
        assert (x0 + x1) ** 2 == ring4.parse("x0^2 + 2*x0*x1 + x1^2")
        assert (x0 - x1) * (x0 + x1) == ring4.parse("x0^2 - x1^2")
        assert poly_arith("scale", x0, 3) == ring4.parse("3*x0")
        assert poly_arith("sub", x0, x0).is_zero

    def test_ring_mismatch(self, ring4, fp):
        """Test that mixing rings raises."""
        other = Ring(3, fp)
        with pytest.raises(RingMismatchError):
            ring4.variable(0) + other.variable(0)

    def test_evaluate(self, ring4):
        """Test evaluation at a point."""
        f = ring4.parse("x0*x2 - x1^2")
        assert f.evaluate([1, 2, 4, 0]) == 0
        assert f.evaluate([1, 1, 2, 0]) == 1

    def test_substitute_linear(self, fp):
        """Test substituting linear forms."""
        ring = Ring(2, fp)
        f = ring.parse("x0*x1")
        g = substitute_linear(f, [ring.parse("x0 + x1"), ring.parse("x0 - x1")])
        assert g == ring.parse("x0^2 - x1^2")
        with pytest.raises(ValueError, match="not a homogeneous linear form"):
            substitute_linear(f, [ring.parse("x0^2"), ring.parse("x1")])

    def test_lex_order_leading_monomial(self, fp):
        """Test leading monomials under lex and grevlex."""
        f_grevlex = parse_polynomial("x0*x2^2 + x1^3", Ring(3, fp))
        f_lex = parse_polynomial("x0*x2^2 + x1^3", Ring(3, fp, MonomialOrder.lex()))
        assert f_grevlex.lm == (0, 3, 0)
        assert f_lex.lm == (1, 0, 2)

    def test_weighted_ring(self, fp):
        """Test homogeneity with respect to weights."""
        ring = Ring(3, fp, MonomialOrder.elimination(1), (1, 1, 2))
        assert ring.parse("x0^2 - x2").is_homogeneous
        assert not ring.parse("x0 - x2").is_homogeneous

    def test_zero_weight_outside_block(self, fp):
        """Test that a zero weight needs the elimination block."""
        with pytest.raises(ValueError, match="elimination block"):
            Ring(2, fp, MonomialOrder.grevlex(), (0, 1))

    def test_monomials_of_degree(self):
        """Test the lex-descending enumeration of monomials."""
        monos = list(monomials_of_degree(3, 2))
        assert len(monos) == 6
        assert monos[0] == (2, 0, 0)
        assert monos[-1] == (0, 0, 2)
