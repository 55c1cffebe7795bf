"""
Sweeps over small families where the tables are known in closed form.
"""

from math import comb

import pytest

from syzygy_python import SyzygyEngine
from syzygy_python.hierarchy.bounds import eligible_tables_e_plus_4
from syzygy_python.hierarchy.diagnostics import points_identity_check, satisfies_N2p


@pytest.fixture
def engine(fast_settings):
    return SyzygyEngine(fast_settings)


@pytest.mark.integration
class TestMinimalDegree:
    """Scrolls and rational normal curves have the Eagon-Northcott linear strand."""

    @pytest.mark.parametrize("spec", ["S(1,2)", "S(3)", "S(4)", "S(2,2)", "S(1,3)"])
    def test_linear_strand(self, engine, spec):
        """β_{p,1} = p·C(e+1, p+1) and nothing outside the first row."""
        result = engine.resolve(engine.construct(spec).ideal)
        e = result.invariants.codimension

        assert result.invariants.degree == e + 1
        assert result.invariants.is_acm
        for i, j, value in result.table.nonzero():
            if i == 0:
                continue
            assert j == 1
            assert value == i * comb(e + 1, i + 1)
        assert result.table.get(e, 1) == e

    @pytest.mark.parametrize("spec", ["S(1,2)", "S(4)", "S(2,2)"])
    def test_extremal_and_vmd(self, engine, spec):
        """Minimal degree attains the level zero bound and is labelled VMD."""
        result = engine.resolve(engine.construct(spec).ideal)
        e = result.invariants.codimension
        report = engine.verify(result.table, e, e + 1)

        assert report.extremal is True
        assert "VMD" in report.labels
        assert report.exit_code() == 0


@pytest.mark.integration
@pytest.mark.slow
class TestPoints:
    """Random points and points on a rational normal curve."""

    @pytest.mark.parametrize("p,d", [(1, 6), (2, 5), (3, 4)])
    def test_few_points_satisfy_N2p(self, engine, p, d):
        """At most 2r+1-p general points of P^3 satisfy N_{2,p}."""
        table = engine.betti(f"pts(3,{d},1)")

        assert satisfies_N2p(table, p)

    @pytest.mark.parametrize("seed", [0, 1])
    def test_seven_points_dichotomy(self, engine, seed):
        """Seven points of P^3 have the generic table, or the special one on a twisted cubic."""
        pair = eligible_tables_e_plus_4(3)

        assert engine.betti(f"pts(3,7,{seed})") == pair.table_generic
        assert engine.betti(f"rnc(3,7,{seed})") == pair.table_special

    def test_seven_points_identity_and_bound(self, engine):
        """Seven general points satisfy the points identity and the bound with m = 3."""
        table = engine.betti("pts(3,7,2)")
        report = engine.verify(table, 3, 7)

        assert points_identity_check(table, 3, 3).holds
        assert not report.violations
