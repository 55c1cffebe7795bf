"""
Tests for the output formats.
"""

import pytest

from syzygy_python.core.models import BettiTable
from syzygy_python.utils.formatting import FormatUtils


@pytest.mark.unit
class TestTableFormats:
    """Test rendering and parsing of Betti tables."""

    def test_grid_layout(self, twisted_cubic_table):
        """Header of homological indices, blanks for zeros, no trailing spaces."""
        assert FormatUtils.render_table(twisted_cubic_table, "grid") == "   0 1 2\n0: 1\n1:   3 2"

    def test_kv_layout(self, twisted_cubic_table):
        """kv lists nonzero cells then length and regularity."""
        assert FormatUtils.render_table(twisted_cubic_table, "kv") == (
            "betti.0.0=1\nbetti.1.1=3\nbetti.2.1=2\nbetti.length=2\nbetti.regularity=1"
        )

    def test_csv_layout(self, twisted_cubic_table):
        """csv has a header and one line per nonzero cell."""
        assert FormatUtils.render_table(twisted_cubic_table, "csv") == "i,j,beta\n0,0,1\n1,1,3\n2,1,2"

    @pytest.mark.parametrize("fmt", ["grid", "csv", "kv"])
    def test_parse_inverts_render(self, rational_quartic_table, fmt):
        """Each format parses back to the same table."""
        text = FormatUtils.render_table(rational_quartic_table, fmt)

        assert FormatUtils.parse_table(text, fmt) == rational_quartic_table

    def test_grid_with_wide_cells(self):
        """Two-digit entries widen every column."""
        table = BettiTable({(0, 0): 1, (1, 1): 10, (2, 1): 16, (2, 2): 14})
        text = FormatUtils.render_table(table, "grid")

        assert text.splitlines()[0] == "    0  1  2"
        assert FormatUtils.parse_table(text, "grid") == table

    def test_csv_skips_comments(self):
        """Comment lines in csv input are ignored."""
        table = FormatUtils.parse_table("# twisted cubic\ni,j,beta\n0,0,1\n1,1,3\n2,1,2\n", "csv")

        assert table.get(2, 1) == 2

    def test_unknown_format(self, twisted_cubic_table):
        """Unknown formats are rejected."""
        with pytest.raises(ValueError, match="Unknown format"):
            FormatUtils.render_table(twisted_cubic_table, "json")


@pytest.mark.unit
class TestReportFormats:
    """Test kv lines, resolutions and bound rows."""

    def test_render_kv_values(self):
        """Booleans print lowercase, lists join with commas, None prints none."""
        text = FormatUtils.render_kv({"a": True, "b": [1, 2], "c": None, "d": 3})

        assert text == "a=true\nb=1,2\nc=none\nd=3"

    def test_resolution_kv(self, twisted_cubic_table, sample_invariants):
        """kv output carries the table, the invariants and the checks."""
        text = FormatUtils.render_resolution(
            twisted_cubic_table, sample_invariants, "kv", {"length": True}
        )

        assert "betti.2.1=2" in text
        assert "hilbert_numerator=1,0,-3,2" in text
        assert "max_p_N2p=all" in text
        assert text.endswith("check.length=true")

    def test_resolution_grid(self, twisted_cubic_table, sample_invariants):
        """grid output adds a one-line invariant summary and check marks."""
        text = FormatUtils.render_resolution(
            twisted_cubic_table, sample_invariants, "grid", {"exact": False}
        )

        lines = text.splitlines()
        assert lines[3] == "dim=1 deg=3 codim=2 reg=1 pd=2 acm=true"
        assert lines[4] == "exact:FAIL"

    def test_bound_rows(self):
        """Bound rows render in all three formats."""
        rows = {"b": {1: 3, 2: 2, 3: 0}}

        assert FormatUtils.render_bound_rows(rows, "kv") == "bound.b.p1=3\nbound.b.p2=2\nbound.b.p3=0"
        assert FormatUtils.render_bound_rows(rows, "csv").splitlines()[1] == "b,1,3"
        assert FormatUtils.render_bound_rows(rows, "grid") == "  1 2 3\nb 3 2 0"
